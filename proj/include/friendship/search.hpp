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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "friendship/digraph.hpp"
#include "friendship/error.hpp"
#include "friendship/verify.hpp"

namespace friendship {

inline constexpr std::size_t kMaxSearchOrder = 7;
inline constexpr std::size_t kMaxCanonicalOrder = 8;
inline constexpr std::size_t kMaxMaskOrder = 32;

struct SearchConfig {
  std::size_t n = 0;
  std::optional<std::size_t> max_results;
  bool modulo_iso = false;
  // Lifts the kMaxSearchOrder cap. Every extra vertex multiplies the
  // candidate rows per level by roughly two and adds a level.
  bool allow_large = false;
};

using RowMasks = std::vector<std::uint32_t>;

inline RowMasks to_masks(const Digraph& d) {
  if (d.order() > kMaxMaskOrder) {
    throw Error(ErrorCode::kTooLarge, "order exceeds mask width");
  }
  RowMasks rows(d.order(), 0);
  for (const auto& [u, v] : d.arcs()) rows[u] |= 1U << v;
  return rows;
}

inline Digraph from_masks(const RowMasks& rows) {
  Digraph d(rows.size());
  for (Vertex u = 0; u < rows.size(); ++u) {
    for (Vertex v = 0; v < rows.size(); ++v) {
      if ((rows[u] >> v) & 1U) d.add_arc(u, v);
    }
  }
  return d;
}

/// Canonical form: the lexicographically smallest row-major adjacency bit
/// string over all n! relabellings, packed MSB-first into 64 bits (hence
/// n <= 8). `relabelled` is the digraph written in that labelling.
struct CanonicalForm {
  std::uint64_t code = 0;
  Digraph relabelled{1};
};

inline CanonicalForm canonical_form(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kTooLarge,
                "canonical form limited to order <= " +
                    std::to_string(kMaxCanonicalOrder));
  }
  const RowMasks rows = to_masks(d);
  const unsigned total_bits = static_cast<unsigned>(n * n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::optional<std::uint64_t> best;
  std::vector<std::size_t> best_perm = perm;
  do {
    std::uint64_t code = 0;
    bool worse = false;
    for (std::size_t i = 0; i < n && !worse; ++i) {
      const std::uint32_t row = rows[perm[i]];
      for (std::size_t j = 0; j < n; ++j) {
        code = (code << 1U) | ((row >> perm[j]) & 1U);
      }
      if (best) {
        const unsigned remaining = total_bits - static_cast<unsigned>((i + 1) * n);
        const std::uint64_t best_prefix =
            remaining >= 64 ? 0 : (*best >> remaining);
        if (code > best_prefix) worse = true;
        else if (code < best_prefix) {
          // Strictly better prefix; finish the code without comparisons.
          for (std::size_t r = i + 1; r < n; ++r) {
            const std::uint32_t rest = rows[perm[r]];
            for (std::size_t j = 0; j < n; ++j) {
              code = (code << 1U) | ((rest >> perm[j]) & 1U);
            }
          }
          break;
        }
      }
    }
    if (!worse && (!best || code < *best)) {
      best = code;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  RowMasks relabelled(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((rows[best_perm[i]] >> best_perm[j]) & 1U) relabelled[i] |= 1U << j;
    }
  }
  return {*best, from_masks(relabelled)};
}

inline std::uint64_t canonical_code(const Digraph& d) {
  return canonical_form(d).code;
}

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> degree_profile(
    const Digraph& d) {
  std::vector<std::pair<std::size_t, std::size_t>> profile;
  for (Vertex v = 0; v < d.order(); ++v) {
    profile.emplace_back(d.out_degree(v), d.in_degree(v));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace detail

/// Isomorphism test for order <= 8. Cheap invariants (order, degree
/// profile, friendship) short-circuit before canonical forms are compared.
inline bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() > kMaxCanonicalOrder || b.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kTooLarge,
                "isomorphism test limited to order <= " +
                    std::to_string(kMaxCanonicalOrder));
  }
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  if (detail::degree_profile(a) != detail::degree_profile(b)) return false;
  if (is_friendship(a).holds != is_friendship(b).holds) return false;
  return canonical_code(a) == canonical_code(b);
}

namespace detail {

// Row-by-row backtracking. pair_count[u] for u < v is |row_u & row_v|,
// known exactly once both rows are placed, so it must equal 1.
class FriendshipSearch {
 public:
  FriendshipSearch(std::size_t n, std::function<bool(const RowMasks&)> emit)
      : n_(n), rows_(n, 0), emit_(std::move(emit)) {
    const std::uint32_t full = 1U << n;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      // Out-degree at least 2 is necessary for every vertex.
      if (std::popcount(mask) >= 2) candidates_.push_back(mask);
    }
  }

  void run() { place(0); }

 private:
  // Returns false once the consumer asks to stop.
  bool place(std::size_t v) {
    if (v == n_) return emit_(rows_);
    const std::uint32_t self = 1U << v;
    for (std::uint32_t row : candidates_) {
      if (row & self) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v; ++u) {
        if (std::popcount(rows_[u] & row) != 1) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      rows_[v] = row;
      if (!place(v + 1)) return false;
    }
    rows_[v] = 0;
    return true;
  }

  std::size_t n_;
  RowMasks rows_;
  std::vector<std::uint32_t> candidates_;
  std::function<bool(const RowMasks&)> emit_;
};

inline void check_config(const SearchConfig& config) {
  if (config.n < 2) {
    throw Error(ErrorCode::kInvalidOrder, "search order must be >= 2");
  }
  if (config.n > kMaxSearchOrder && !config.allow_large) {
    throw Error(ErrorCode::kTooLarge,
                "search order " + std::to_string(config.n) + " exceeds " +
                    std::to_string(kMaxSearchOrder) +
                    " without the override flag");
  }
  if (config.modulo_iso && config.n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kTooLarge,
                "isomorphism reduction limited to order <= " +
                    std::to_string(kMaxCanonicalOrder));
  }
  if (config.n >= kMaxMaskOrder) {
    throw Error(ErrorCode::kTooLarge, "order exceeds mask width");
  }
}

}  // namespace detail

/// Streams every labelled friendship digraph of order config.n, in
/// ascending row-mask order, to `visit`. Ignores modulo_iso. Stops early
/// when `visit` returns false or max_results is reached.
inline void for_each_friendship_digraph(
    const SearchConfig& config, const std::function<bool(const Digraph&)>& visit) {
  detail::check_config(config);
  std::size_t emitted = 0;
  detail::FriendshipSearch search(config.n, [&](const RowMasks& rows) {
    if (config.max_results && emitted >= *config.max_results) return false;
    ++emitted;
    if (!visit(from_masks(rows))) return false;
    return !(config.max_results && emitted >= *config.max_results);
  });
  search.run();
}

/// All friendship digraphs of the given order. With modulo_iso, one
/// canonical representative per isomorphism class, sorted by canonical code.
inline std::vector<Digraph> enumerate_friendship_digraphs(
    const SearchConfig& config) {
  detail::check_config(config);
  std::vector<Digraph> results;
  if (!config.modulo_iso) {
    for_each_friendship_digraph(config, [&](const Digraph& d) {
      results.push_back(d);
      return true;
    });
    return results;
  }
  std::map<std::uint64_t, Digraph> classes;
  SearchConfig labelled = config;
  labelled.max_results.reset();
  for_each_friendship_digraph(labelled, [&](const Digraph& d) {
    auto form = canonical_form(d);
    classes.try_emplace(form.code, std::move(form.relabelled));
    return !(config.max_results && classes.size() >= *config.max_results);
  });
  for (auto& [code, d] : classes) results.push_back(std::move(d));
  return results;
}

}  // namespace friendship
