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
#include "loopnet/dot.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace loopnet {
namespace {

template <class G>
void write_dot_impl(std::ostream& out, const G& g, const std::string& header) {
  if (!header.empty()) out << "// " << header << '\n';
  out << "graph \"" << g.name() << "\" {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << g.vertex_name(v) << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << g.vertex_name(e.a) << " -- " << g.vertex_name(e.b)
        << ";\n";
  }
  out << "}\n";
}

std::string trim(const std::string& s) {
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return s.substr(lo, hi - lo);
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

void write_dot(std::ostream& out, const CirculantGraph& g,
               const std::string& header) {
  write_dot_impl(out, g, header);
}

void write_dot(std::ostream& out, const GgpgGraph& g,
               const std::string& header) {
  write_dot_impl(out, g, header);
}

DotGraph parse_dot(std::istream& in) {
  DotGraph result;
  std::string line;
  bool opened = false;
  bool closed = false;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("dot:" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stmt = trim(line);
    if (stmt.empty() || stmt.rfind("//", 0) == 0) continue;
    if (!opened) {
      if (stmt.rfind("graph", 0) != 0 || stmt.back() != '{') {
        fail("expected 'graph \"name\" {'");
      }
      const auto q1 = stmt.find('"');
      const auto q2 = stmt.rfind('"');
      if (q1 != std::string::npos && q2 > q1) {
        result.name = stmt.substr(q1 + 1, q2 - q1 - 1);
      }
      opened = true;
      continue;
    }
    if (stmt == "}") {
      closed = true;
      continue;
    }
    if (closed) fail("content after closing brace");
    if (stmt.back() != ';') fail("missing ';'");
    const std::string body = trim(stmt.substr(0, stmt.size() - 1));
    const auto dash = body.find("--");
    if (dash == std::string::npos) {
      if (!is_identifier(body)) fail("bad node id '" + body + "'");
      result.vertices.push_back(body);
    } else {
      std::string a = trim(body.substr(0, dash));
      std::string b = trim(body.substr(dash + 2));
      if (!is_identifier(a) || !is_identifier(b)) fail("bad edge statement");
      result.edges.emplace_back(std::move(a), std::move(b));
    }
  }
  if (!opened || !closed) {
    throw std::runtime_error("dot: unterminated graph");
  }
  return result;
}

}  // namespace loopnet
