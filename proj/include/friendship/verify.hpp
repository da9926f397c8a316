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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "friendship/digraph.hpp"
#include "friendship/error.hpp"

namespace friendship {

/// The vertex or pair at which a property failed, plus the quantities that
/// violate it.
struct Witness {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::int64_t>> values;
  bool degenerate = false;

  std::optional<std::int64_t> value(const std::string& name) const {
    for (const auto& [key, v] : values) {
      if (key == name) return v;
    }
    return std::nullopt;
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

namespace detail {

inline PropertyReport pass(std::string name) {
  return {std::move(name), true, std::nullopt};
}

inline PropertyReport fail(std::string name, Witness w) {
  return {std::move(name), false, std::move(w)};
}

inline std::int64_t signed_count(std::size_t n) {
  return static_cast<std::int64_t>(n);
}

}  // namespace detail

/// Every unordered pair of distinct vertices has exactly one common
/// out-neighbour. Order 1 is reported as a degenerate failure.
inline PropertyReport is_friendship(const Digraph& d) {
  const std::size_t n = d.order();
  if (n < 2) {
    return detail::fail("friendship",
                        {{}, {{"n", detail::signed_count(n)}}, true});
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto common = (d.out_row(u) & d.out_row(v)).count();
      if (common != 1) {
        return detail::fail(
            "friendship",
            {{u, v}, {{"common_out_neighbors", detail::signed_count(common)}}});
      }
    }
  }
  return detail::pass("friendship");
}

/// Minimum out-degree is at least 2. The witness is the first vertex of
/// minimum out-degree.
inline PropertyReport check_min_outdegree(const Digraph& d) {
  Vertex argmin = 0;
  for (Vertex v = 1; v < d.order(); ++v) {
    if (d.out_degree(v) < d.out_degree(argmin)) argmin = v;
  }
  const auto degree = d.out_degree(argmin);
  if (degree >= 2) return detail::pass("min_outdegree");
  return detail::fail("min_outdegree",
                      {{argmin}, {{"out_degree", detail::signed_count(degree)}}});
}

inline PropertyReport check_degree_balance(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.out_degree(v) != d.in_degree(v)) {
      return detail::fail(
          "degree_balance",
          {{v},
           {{"out_degree", detail::signed_count(d.out_degree(v))},
            {"in_degree", detail::signed_count(d.in_degree(v))}}});
    }
  }
  return detail::pass("degree_balance");
}

/// sum over u in N+(v) of (d-(u) - 1) equals n - 1, at every vertex v.
inline PropertyReport check_sum_identity(const Digraph& d) {
  const auto rhs = detail::signed_count(d.order()) - 1;
  for (Vertex v = 0; v < d.order(); ++v) {
    std::int64_t lhs = 0;
    for (auto u : d.out_neighbors(v)) {
      lhs += detail::signed_count(d.in_degree(u)) - 1;
    }
    if (lhs != rhs) {
      return detail::fail("sum_identity", {{v}, {{"lhs", lhs}, {"rhs", rhs}}});
    }
  }
  return detail::pass("sum_identity");
}

/// A digraph and its reversal are either both friendship digraphs or
/// neither is.
inline PropertyReport check_reversal_friendship(const Digraph& d) {
  const auto forward = is_friendship(d);
  const auto backward = is_friendship(reverse(d));
  if (forward.holds == backward.holds) return detail::pass("reversal_friendship");
  Witness w = forward.holds ? *backward.witness : *forward.witness;
  w.values.emplace_back("forward_holds", forward.holds);
  w.values.emplace_back("reverse_holds", backward.holds);
  return detail::fail("reversal_friendship", std::move(w));
}

/// (d-(u) - 1)(d-(v) - 1) <= n - 2 for every unordered pair.
inline PropertyReport check_product_bound(const Digraph& d) {
  const auto bound = detail::signed_count(d.order()) - 2;
  for (Vertex u = 0; u < d.order(); ++u) {
    const auto du = detail::signed_count(d.in_degree(u)) - 1;
    for (Vertex v = u + 1; v < d.order(); ++v) {
      const auto product = du * (detail::signed_count(d.in_degree(v)) - 1);
      if (product > bound) {
        return detail::fail("product_bound",
                            {{u, v}, {{"product", product}, {"bound", bound}}});
      }
    }
  }
  return detail::pass("product_bound");
}

/// Vertices not joined in both directions have equal out-degree.
inline PropertyReport check_nonadjacent_degree_equality(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (d.has_arc(u, v) && d.has_arc(v, u)) continue;
      if (d.out_degree(u) != d.out_degree(v)) {
        return detail::fail(
            "nonadjacent_degree_equality",
            {{u, v},
             {{"out_degree_u", detail::signed_count(d.out_degree(u))},
              {"out_degree_v", detail::signed_count(d.out_degree(v))}}});
      }
    }
  }
  return detail::pass("nonadjacent_degree_equality");
}

/// The six necessary conditions every friendship digraph satisfies.
inline std::vector<PropertyReport> check_consequences(const Digraph& d) {
  return {check_min_outdegree(d),       check_degree_balance(d),
          check_sum_identity(d),        check_reversal_friendship(d),
          check_product_bound(d),       check_nonadjacent_degree_equality(d)};
}

// Classification ------------------------------------------------------------

struct FancyWheelVerdict {
  Vertex hub = 0;
  std::vector<std::size_t> cycle_lengths;  // ascending
  friend bool operator==(const FancyWheelVerdict&,
                         const FancyWheelVerdict&) = default;
};

struct RegularVerdict {
  std::size_t k = 0;
  friend bool operator==(const RegularVerdict&, const RegularVerdict&) = default;
};

struct NotFriendshipVerdict {
  Witness witness;
  friend bool operator==(const NotFriendshipVerdict&,
                         const NotFriendshipVerdict&) = default;
};

struct Classification {
  std::size_t order = 0;
  std::variant<FancyWheelVerdict, RegularVerdict, NotFriendshipVerdict> verdict;

  bool is_fancy_wheel() const {
    return std::holds_alternative<FancyWheelVerdict>(verdict);
  }
  bool is_regular() const {
    return std::holds_alternative<RegularVerdict>(verdict);
  }
  bool is_friendship() const { return !std::holds_alternative<NotFriendshipVerdict>(verdict); }
};

/// Checks that `hub` is joined both ways to every other vertex and that the
/// remaining vertices split into directed cycles. Returns the cycle lengths
/// in ascending order.
inline std::vector<std::size_t> decompose_wheel(const Digraph& d, Vertex hub) {
  const std::size_t n = d.order();
  if (d.out_degree(hub) != n - 1 || d.in_degree(hub) != n - 1) {
    throw Error(ErrorCode::kNotAWheel,
                "vertex " + std::to_string(hub) +
                    " is not joined both ways to all others");
  }
  if (n < 3) {
    throw Error(ErrorCode::kNotAWheel, "rim is empty");
  }
  auto rim_row = [&](const Row& row) {
    Row r = row;
    r.reset(hub);
    return r;
  };
  std::vector<Vertex> successor(n, hub);
  for (Vertex v = 0; v < n; ++v) {
    if (v == hub) continue;
    const Row out = rim_row(d.out_row(v));
    const Row in = rim_row(d.in_row(v));
    if (out.count() != 1 || in.count() != 1) {
      throw Error(ErrorCode::kNotAWheel,
                  "rim vertex " + std::to_string(v) +
                      " does not have exactly one rim successor and "
                      "predecessor");
    }
    successor[v] = out.find_first();
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> lengths;
  for (Vertex start = 0; start < n; ++start) {
    if (start == hub || seen[start]) continue;
    std::size_t len = 0;
    for (Vertex v = start; !seen[v]; v = successor[v]) {
      seen[v] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

/// Friendship digraphs are fancy wheels (a vertex of out-degree n-1) or
/// k-regular of order k^2-k+1. Anything else that passes the friendship
/// test is reported as a broken internal invariant, never as a verdict.
inline Classification classify(const Digraph& d) {
  const std::size_t n = d.order();
  const auto friendship = is_friendship(d);
  if (!friendship.holds) return {n, NotFriendshipVerdict{*friendship.witness}};

  if (d.max_out_degree() == n - 1) {
    Vertex hub = 0;
    while (d.out_degree(hub) != n - 1) ++hub;
    for (Vertex v = 0; v < n; ++v) {
      if (v != hub && d.out_degree(v) != 2) {
        throw Error(ErrorCode::kInternalInvariantBroken,
                    "non-hub vertex " + std::to_string(v) +
                        " of a wheel has out-degree " +
                        std::to_string(d.out_degree(v)));
      }
    }
    try {
      return {n, FancyWheelVerdict{hub, decompose_wheel(d, hub)}};
    } catch (const Error& e) {
      throw Error(ErrorCode::kInternalInvariantBroken, e.what());
    }
  }

  const std::size_t k = d.out_degree(0);
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) != k || d.in_degree(v) != k) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  "friendship digraph without a hub is not regular at vertex " +
                      std::to_string(v));
    }
  }
  if (k < 2 || n != k * k - k + 1) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                std::to_string(k) + "-regular friendship digraph of order " +
                    std::to_string(n));
  }
  return {n, RegularVerdict{k}};
}

// Serialization ------------------------------------------------------------

inline nlohmann::ordered_json to_json_value(const Witness& w) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  if (w.degenerate) doc["degenerate"] = true;
  if (!w.vertices.empty()) doc["vertices"] = w.vertices;
  for (const auto& [key, value] : w.values) doc[key] = value;
  return doc;
}

/// {"property": <name>, "holds": <bool>, "witness": {...}|null}
inline nlohmann::ordered_json to_json_value(const PropertyReport& report) {
  return {{"property", report.property},
          {"holds", report.holds},
          {"witness", report.witness ? to_json_value(*report.witness)
                                     : nlohmann::ordered_json(nullptr)}};
}

inline nlohmann::ordered_json to_json_value(const Classification& c) {
  nlohmann::ordered_json doc;
  if (const auto* wheel = std::get_if<FancyWheelVerdict>(&c.verdict)) {
    doc["verdict"] = "FancyWheel";
    doc["hub"] = wheel->hub;
    doc["cycle_lengths"] = wheel->cycle_lengths;
  } else if (const auto* regular = std::get_if<RegularVerdict>(&c.verdict)) {
    doc["verdict"] = "Regular";
    doc["k"] = regular->k;
  } else {
    doc["verdict"] = "NotFriendship";
    doc["witness"] =
        to_json_value(std::get<NotFriendshipVerdict>(c.verdict).witness);
  }
  doc["n"] = c.order;
  return doc;
}

}  // namespace friendship
