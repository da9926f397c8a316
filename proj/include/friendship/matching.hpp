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
#include <optional>
#include <utility>
#include <vector>

namespace friendship {

/// Bipartite graph given by left-side adjacency lists. The order of each
/// list is the order in which augmenting paths try candidates.
struct BipartiteGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<std::vector<std::size_t>> adjacency;

  static BipartiteGraph from_edges(
      std::size_t left_count, std::size_t right_count,
      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    BipartiteGraph g{left_count, right_count,
                     std::vector<std::vector<std::size_t>>(left_count)};
    for (const auto& [l, r] : edges) g.adjacency.at(l).push_back(r);
    return g;
  }
};

struct Matching {
  std::vector<std::optional<std::size_t>> left_to_right;
  std::vector<std::optional<std::size_t>> right_to_left;

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& r : left_to_right) total += r.has_value();
    return total;
  }

  /// Matched (left, right) pairs in ascending left order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t l = 0; l < left_to_right.size(); ++l) {
      if (left_to_right[l]) result.emplace_back(l, *left_to_right[l]);
    }
    return result;
  }
};

namespace detail {

inline bool try_augment(const BipartiteGraph& g, std::size_t left,
                        std::vector<char>& visited, Matching& m) {
  // A free candidate wins before any existing match is displaced.
  for (std::size_t right : g.adjacency[left]) {
    if (!visited[right] && !m.right_to_left[right]) {
      visited[right] = 1;
      m.left_to_right[left] = right;
      m.right_to_left[right] = left;
      return true;
    }
  }
  for (std::size_t right : g.adjacency[left]) {
    if (visited[right]) continue;
    visited[right] = 1;
    if (!m.right_to_left[right] ||
        try_augment(g, *m.right_to_left[right], visited, m)) {
      m.left_to_right[left] = right;
      m.right_to_left[right] = left;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Maximum matching by augmenting paths (Kuhn). Left vertices are processed
/// in ascending order and candidates in adjacency order, so the result is a
/// pure function of the input.
inline Matching max_matching(const BipartiteGraph& g) {
  Matching m{std::vector<std::optional<std::size_t>>(g.left_count),
             std::vector<std::optional<std::size_t>>(g.right_count)};
  std::vector<char> visited(g.right_count);
  for (std::size_t left = 0; left < g.left_count; ++left) {
    std::fill(visited.begin(), visited.end(), 0);
    detail::try_augment(g, left, visited, m);
  }
  return m;
}

inline Matching bipartite_max_matching(
    std::size_t left_count, std::size_t right_count,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  auto g = BipartiteGraph::from_edges(left_count, right_count, edges);
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  return max_matching(g);
}

struct Deficiency {
  std::vector<std::size_t> left;       // S, ascending
  std::vector<std::size_t> neighbors;  // N(S), ascending
};

/// For a maximum matching, the left vertices reachable by alternating paths
/// from every unmatched left vertex form a set S with
/// |N(S)| = |S| - (number of unmatched left vertices). Empty when the
/// matching saturates the left side.
inline Deficiency hall_deficiency(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> left_seen(g.left_count), right_seen(g.right_count);
  std::vector<std::size_t> frontier;
  for (std::size_t l = 0; l < g.left_count; ++l) {
    if (!m.left_to_right[l]) {
      left_seen[l] = 1;
      frontier.push_back(l);
    }
  }
  while (!frontier.empty()) {
    const std::size_t l = frontier.back();
    frontier.pop_back();
    for (std::size_t r : g.adjacency[l]) {
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      // r is matched, otherwise the matching would not be maximum.
      const std::size_t next = *m.right_to_left[r];
      if (!left_seen[next]) {
        left_seen[next] = 1;
        frontier.push_back(next);
      }
    }
  }
  Deficiency d;
  for (std::size_t l = 0; l < g.left_count; ++l) {
    if (left_seen[l]) d.left.push_back(l);
  }
  for (std::size_t r = 0; r < g.right_count; ++r) {
    if (right_seen[r]) d.neighbors.push_back(r);
  }
  return d;
}

}  // namespace friendship
