// Copyright 2026 The loopnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "loopnet/graph.hpp"

namespace loopnet {

/// Writes an undirected DOT graph. Vertices are declared in id order, then
/// every edge once as "a -- b" with (a, b) sorted by vertex id. When
/// header is nonempty it is emitted first as a "//" comment line.
void write_dot(std::ostream& out, const CirculantGraph& g,
               const std::string& header = {});
void write_dot(std::ostream& out, const GgpgGraph& g,
               const std::string& header = {});

struct DotGraph {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Reads the subset of DOT produced by write_dot (node statements, "--"
/// edge statements, "//" comments). Throws std::runtime_error on anything
/// else.
DotGraph parse_dot(std::istream& in);

}  // namespace loopnet
