// Copyright 2026 The q2graph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef Q2G_ERROR_HPP
#define Q2G_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace q2g {

/// Names of the rules an operation can violate. These strings appear verbatim
/// in CLI diagnostics and in service error bodies.
namespace rule {
inline constexpr std::string_view kLoop = "loop";
inline constexpr std::string_view kDuplicateEdge = "duplicate-edge";
inline constexpr std::string_view kNotFound = "not-found";
inline constexpr std::string_view kInvalidSpecialNeighbour = "invalid-special-neighbour";
inline constexpr std::string_view kNonFinitePosition = "non-finite-position";
inline constexpr std::string_view kNonContiguousLabels = "non-contiguous-labels";
inline constexpr std::string_view kDanglingEdge = "dangling-edge";
inline constexpr std::string_view kResourceLimit = "resource-limit";
inline constexpr std::string_view kImpossibleOutcome = "impossible-outcome";
inline constexpr std::string_view kParse = "parse";
inline constexpr std::string_view kValidation = "validation";
inline constexpr std::string_view kJournalIntegrity = "journal-integrity";
inline constexpr std::string_view kIo = "io";
}  // namespace rule

/// Every domain failure carries the name of the rule it violated.
class Error : public std::runtime_error {
 public:
  Error(std::string_view rule_name, const std::string& message)
      : std::runtime_error(message), rule_(rule_name) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

}  // namespace q2g

#endif  // Q2G_ERROR_HPP
