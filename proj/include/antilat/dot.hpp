// Copyright 2026 The antilat Authors
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

// Graphviz DOT output for congruence lattices and even graphs.

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "antilat/congruence.hpp"
#include "antilat/latin.hpp"

namespace antilat {

  namespace detail {

    inline std::string dot_quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }

  }  // namespace detail

  /// Hasse diagram drawn bottom-up: node i is lattice element i, edges go
  /// from each lower cover to its upper cover.
  inline std::string lattice_to_dot(CongruenceLattice const& lat, std::size_t base = 0) {
    std::ostringstream out;
    out << "digraph congruences {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto const& p     = lat.elements[i].partition;
      std::string label = p.is_identity()    ? "identity"
                          : p.is_universal() ? "universal"
                                             : p.to_string(base);
      out << "  n" << i << " [label=" << detail::dot_quote(label) << "];\n";
    }
    for (auto [lo, hi] : lat.covers) {
      out << "  n" << lo << " -> n" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  inline char const* dot_color(EdgeColor c) noexcept {
    switch (c) {
      case EdgeColor::hh:
        return "red";
      case EdgeColor::vv:
        return "blue";
      case EdgeColor::hv:
        return "green";
      case EdgeColor::vh:
        return "orange";
    }
    return "black";
  }

  /// Undirected graph; a vertex pair carrying several colors is drawn once
  /// with all its colors listed (Graphviz parallel-color syntax).
  inline std::string even_graph_to_dot(EvenGraph const& g, std::size_t base = 0) {
    std::map<std::pair<Element, Element>, std::vector<EdgeColor>> merged;
    for (auto const& e : g.edges) {
      merged[{e.u, e.v}].push_back(e.color);
    }
    std::ostringstream out;
    out << "graph even {\n";
    for (Element v = 0; v < g.order; ++v) {
      out << "  v" << v << " [label=\"" << v + base << "\"];\n";
    }
    for (auto const& [uv, colors] : merged) {
      std::string label, color;
      for (auto c : colors) {
        label += (label.empty() ? "" : ",") + std::string(to_string(c));
        color += (color.empty() ? "" : ":") + std::string(dot_color(c));
      }
      out << "  v" << uv.first << " -- v" << uv.second << " [label=\"" << label
          << "\", color=\"" << color << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace antilat
