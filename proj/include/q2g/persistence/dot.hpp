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

#ifndef Q2G_PERSISTENCE_DOT_HPP
#define Q2G_PERSISTENCE_DOT_HPP

#include <string>

#include "q2g/graph.hpp"

namespace q2g {

/// Undirected Graphviz text. Nodes ascend by label and carry their canvas
/// position as `pos`; input vertices are drawn as double circles. Edges
/// follow in ascending order. An empty graph renders as "graph G {}".
std::string export_dot(const Graph& g);

}  // namespace q2g

#endif  // Q2G_PERSISTENCE_DOT_HPP
