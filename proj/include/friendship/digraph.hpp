// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include "friendship/error.hpp"

namespace friendship {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;
using Arc = std::pair<Vertex, Vertex>;
using Row = boost::dynamic_bitset<std::uint64_t>;

/// Loopless simple digraph on the dense vertex set {0, ..., n-1}.
///
/// Arcs are held twice, as out-rows and in-rows, so that both neighbourhoods
/// are a single bitset lookup. Bit v of out_row(u) is set iff (u, v) is an
/// arc; no row ever has its own bit set.
class Digraph {
 public:
  explicit Digraph(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::kInvalidOrder, "order must be >= 1");
    out_.assign(n, Row(n));
    in_.assign(n, Row(n));
  }

  static Digraph from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
    Digraph d(n);
    for (const auto& [u, v] : arcs) d.add_arc(u, v);
    return d;
  }

  std::size_t order() const noexcept { return out_.size(); }

  std::size_t arc_count() const noexcept {
    std::size_t total = 0;
    for (const auto& row : out_) total += row.count();
    return total;
  }

  void add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw Error(ErrorCode::kLoopRejected,
                  "loop at vertex " + std::to_string(u));
    }
    if (out_[u].test(v)) {
      throw Error(ErrorCode::kDuplicateArc, "arc (" + std::to_string(u) +
                                                "," + std::to_string(v) +
                                                ") already present");
    }
    out_[u].set(v);
    in_[v].set(u);
  }

  bool has_arc(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return out_[u].test(v);
  }

  const Row& out_row(Vertex v) const {
    check_vertex(v);
    return out_[v];
  }
  const Row& in_row(Vertex v) const {
    check_vertex(v);
    return in_[v];
  }

  VertexSet out_neighbors(Vertex v) const { return members(out_row(v)); }
  VertexSet in_neighbors(Vertex v) const { return members(in_row(v)); }

  std::size_t out_degree(Vertex v) const { return out_row(v).count(); }
  std::size_t in_degree(Vertex v) const { return in_row(v).count(); }

  std::size_t max_out_degree() const {
    std::size_t best = 0;
    for (const auto& row : out_) best = std::max(best, row.count());
    return best;
  }

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    for (Vertex u = 0; u < order(); ++u) {
      for (auto v = out_[u].find_first(); v != Row::npos;
           v = out_[u].find_next(v)) {
        result.emplace_back(u, v);
      }
    }
    return result;
  }

  static VertexSet members(const Row& row) {
    VertexSet result;
    result.reserve(row.count());
    for (auto v = row.find_first(); v != Row::npos; v = row.find_next(v)) {
      result.push_back(v);
    }
    return result;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= order()) {
      throw Error(ErrorCode::kBadVertex, "vertex " + std::to_string(v) +
                                             " outside [0, " +
                                             std::to_string(order()) + ")");
    }
  }

  std::vector<Row> out_;
  std::vector<Row> in_;
};

inline Digraph reverse(const Digraph& d) {
  Digraph result(d.order());
  for (const auto& [u, v] : d.arcs()) result.add_arc(v, u);
  return result;
}

inline Row common_out_row(const Digraph& d, Vertex u, Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::kSameVertex,
                "pair needs two distinct vertices, got " + std::to_string(u));
  }
  return d.out_row(u) & d.out_row(v);
}

inline VertexSet common_out_neighbors(const Digraph& d, Vertex u, Vertex v) {
  return Digraph::members(common_out_row(d, u, v));
}

inline VertexSet common_in_neighbors(const Digraph& d, Vertex u, Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::kSameVertex,
                "pair needs two distinct vertices, got " + std::to_string(u));
  }
  return Digraph::members(d.in_row(u) & d.in_row(v));
}

// Serialization ------------------------------------------------------------

inline nlohmann::ordered_json to_json_value(const Digraph& d) {
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"n", d.order()}, {"arcs", std::move(arcs)}};
}

/// Compact single-line JSON: {"n":<int>,"arcs":[[u,v],...]}.
inline std::string to_json(const Digraph& d) { return to_json_value(d).dump(); }

namespace detail {

inline std::size_t require_index(const nlohmann::ordered_json& value,
                                 std::string_view what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::kParseError,
                std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

inline nlohmann::ordered_json parse_json_text(std::string_view text) {
  try {
    return nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace detail

inline Digraph digraph_from_json_value(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs")) {
    throw Error(ErrorCode::kParseError,
                "digraph document needs keys \"n\" and \"arcs\"");
  }
  const std::size_t n = detail::require_index(doc.at("n"), "n");
  const auto& arcs = doc.at("arcs");
  if (!arcs.is_array()) {
    throw Error(ErrorCode::kParseError, "\"arcs\" must be an array");
  }
  Digraph d(n);
  for (const auto& arc : arcs) {
    if (!arc.is_array() || arc.size() != 2) {
      throw Error(ErrorCode::kParseError, "each arc must be a pair [u,v]");
    }
    d.add_arc(detail::require_index(arc[0], "arc tail"),
              detail::require_index(arc[1], "arc head"));
  }
  return d;
}

inline Digraph digraph_from_json(std::string_view text) {
  return digraph_from_json_value(detail::parse_json_text(text));
}

/// Graphviz rendering. Every vertex gets a node line so isolated vertices
/// survive; each arc gets exactly one edge line.
inline std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace friendship
