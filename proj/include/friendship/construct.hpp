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
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "friendship/design.hpp"
#include "friendship/digraph.hpp"
#include "friendship/error.hpp"
#include "friendship/matching.hpp"

namespace friendship {

/// Hub at vertex 0, joined both ways to every other vertex; the rim is the
/// given cycles on consecutive index ranges, each oriented i -> i+1.
inline Digraph fancy_wheel(const std::vector<std::size_t>& cycle_lengths) {
  if (cycle_lengths.empty()) {
    throw Error(ErrorCode::kBadCycleLength, "at least one cycle required");
  }
  for (auto len : cycle_lengths) {
    if (len < 2) {
      throw Error(ErrorCode::kBadCycleLength,
                  "cycle length " + std::to_string(len) + " < 2");
    }
  }
  const std::size_t n =
      1 + std::accumulate(cycle_lengths.begin(), cycle_lengths.end(),
                          std::size_t{0});
  Digraph d(n);
  for (Vertex v = 1; v < n; ++v) {
    d.add_arc(0, v);
    d.add_arc(v, 0);
  }
  Vertex start = 1;
  for (auto len : cycle_lengths) {
    for (std::size_t i = 0; i < len; ++i) {
      d.add_arc(start + i, start + (i + 1) % len);
    }
    start += len;
  }
  return d;
}

/// Block index -> representative, with rep[t] outside block t and all
/// representatives distinct.
struct Sdr {
  std::vector<std::size_t> rep;
};

namespace detail {

// Blocks on the left, varieties on the right, edge (t, x) iff x is not in
// block t. Candidates follow `order`.
inline BipartiteGraph complement_graph(const Design& design,
                                       const std::vector<std::size_t>& order) {
  const std::size_t v = design.variety_count();
  BipartiteGraph g{design.block_count(), v,
                   std::vector<std::vector<std::size_t>>(design.block_count())};
  for (std::size_t t = 0; t < design.block_count(); ++t) {
    std::vector<char> inside(v, 0);
    for (auto x : design.block(t)) inside[x] = 1;
    for (auto x : order) {
      if (!inside[x]) g.adjacency[t].push_back(x);
    }
  }
  return g;
}

inline std::vector<std::size_t> candidate_order(
    std::size_t v, std::optional<std::uint64_t> seed) {
  std::vector<std::size_t> order(v);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed) {
    // Explicit Fisher-Yates so the permutation is identical across
    // standard libraries.
    std::mt19937_64 rng(*seed);
    for (std::size_t i = v; i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
  }
  return order;
}

}  // namespace detail

/// System of distinct representatives for the complements V - B_t, found as
/// a perfect matching between blocks and varieties. Without a seed the
/// traversal is ascending on both sides; a seed permutes the candidate
/// variety order.
inline Sdr complement_sdr(const Design& design,
                          std::optional<std::uint64_t> seed = std::nullopt) {
  if (design.block_count() != design.variety_count()) {
    throw Error(ErrorCode::kBlockCountMismatch,
                "need b = v, got b = " + std::to_string(design.block_count()) +
                    ", v = " + std::to_string(design.variety_count()));
  }
  const auto g = detail::complement_graph(
      design, detail::candidate_order(design.variety_count(), seed));
  const auto m = max_matching(g);
  if (m.size() != design.block_count()) {
    auto deficiency = hall_deficiency(g, m);
    const auto covered = deficiency.neighbors.size();
    throw HallViolation(std::move(deficiency.left), covered);
  }
  Sdr sdr;
  sdr.rep.reserve(design.block_count());
  for (const auto& r : m.left_to_right) sdr.rep.push_back(*r);
  return sdr;
}

enum class HallMethod { kExhaustive, kMatching };

/// Minimum of |U(S)| - |S| over one size class of subsets S, where U(S) is
/// the union of the complements indexed by S.
struct HallCase {
  std::string label;
  std::optional<std::int64_t> min_slack;
};

struct HallReport {
  HallMethod method = HallMethod::kMatching;
  bool holds = false;
  std::size_t blocks = 0;
  std::size_t matching_size = 0;
  // Exhaustive mode only.
  std::optional<std::int64_t> min_slack;
  std::vector<std::size_t> argmin;
  std::vector<HallCase> cases;  // |S| = 1, 1 < |S| <= k, |S| > k
  // Failing subset and the size of its complement union.
  std::vector<std::size_t> witness;
  std::size_t witness_union = 0;
};

inline constexpr std::size_t kMaxExhaustiveHall = 20;

namespace detail {

inline std::vector<std::size_t> mask_members(std::uint32_t mask) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U) {
    if (mask & 1U) members.push_back(i);
  }
  return members;
}

inline HallReport hall_exhaustive(const Design& design) {
  const std::size_t b = design.block_count();
  const std::size_t v = design.variety_count();
  HallReport report;
  report.method = HallMethod::kExhaustive;
  report.blocks = b;
  report.holds = true;

  std::vector<std::uint32_t> complement(b, 0);
  for (std::size_t t = 0; t < b; ++t) {
    std::uint32_t mask = (1U << v) - 1U;
    for (auto x : design.block(t)) mask &= ~(1U << x);
    complement[t] = mask;
  }

  // Case split on |S| needs a common block size k.
  std::optional<std::size_t> k;
  if (b > 0 && std::all_of(design.blocks().begin(), design.blocks().end(),
                           [&](const Block& blk) {
                             return blk.size() == design.block(0).size();
                           })) {
    k = design.block(0).size();
    report.cases = {{"|S|=1", std::nullopt},
                    {"1<|S|<=k", std::nullopt},
                    {"|S|>k", std::nullopt}};
  }

  const std::uint32_t limit = 1U << b;
  std::vector<std::uint32_t> unions(limit, 0);
  std::optional<std::uint32_t> first_violation;
  std::uint32_t argmin = 0;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    unions[mask] = unions[mask & (mask - 1)] |
                   complement[static_cast<std::size_t>(std::countr_zero(mask))];
    const int size = std::popcount(mask);
    const std::int64_t slack = std::popcount(unions[mask]) - size;
    if (!report.min_slack || slack < *report.min_slack) {
      report.min_slack = slack;
      argmin = mask;
    }
    if (slack < 0 && !first_violation) first_violation = mask;
    if (k) {
      auto& c = report.cases[size == 1                               ? 0
                             : static_cast<std::size_t>(size) <= *k ? 1
                                                                     : 2];
      if (!c.min_slack || slack < *c.min_slack) c.min_slack = slack;
    }
  }
  if (report.min_slack) report.argmin = mask_members(argmin);
  if (first_violation) {
    report.holds = false;
    report.witness = mask_members(*first_violation);
    report.witness_union =
        static_cast<std::size_t>(std::popcount(unions[*first_violation]));
  }
  const auto g = complement_graph(design, candidate_order(v, std::nullopt));
  report.matching_size = max_matching(g).size();
  return report;
}

}  // namespace detail

/// Hall's condition for the complement family {V - B_t}. Exhaustive mode
/// walks every nonempty block subset (b, v <= 20) and records the minimum
/// slack overall and per size class; matching mode decides the condition
/// from the size of a maximum matching and, on failure, extracts a
/// deficient subset from the alternating forest.
inline HallReport check_hall_condition(const Design& design, bool exhaustive) {
  if (exhaustive) {
    if (design.variety_count() > kMaxExhaustiveHall ||
        design.block_count() > kMaxExhaustiveHall) {
      throw Error(ErrorCode::kTooLarge,
                  "exhaustive Hall check is limited to v, b <= " +
                      std::to_string(kMaxExhaustiveHall));
    }
    return detail::hall_exhaustive(design);
  }
  HallReport report;
  report.method = HallMethod::kMatching;
  report.blocks = design.block_count();
  const auto g = detail::complement_graph(
      design, detail::candidate_order(design.variety_count(), std::nullopt));
  const auto m = max_matching(g);
  report.matching_size = m.size();
  report.holds = m.size() == design.block_count();
  if (!report.holds) {
    auto deficiency = hall_deficiency(g, m);
    report.witness = std::move(deficiency.left);
    report.witness_union = deficiency.neighbors.size();
  }
  return report;
}

inline nlohmann::ordered_json to_json_value(const HallReport& report) {
  nlohmann::ordered_json doc = {
      {"method",
       report.method == HallMethod::kExhaustive ? "exhaustive" : "matching"},
      {"holds", report.holds},
      {"blocks", report.blocks},
      {"matching_size", report.matching_size},
  };
  if (report.min_slack) {
    doc["min_slack"] = *report.min_slack;
    doc["argmin"] = report.argmin;
  }
  if (!report.cases.empty()) {
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
      cases.push_back({{"case", c.label},
                       {"min_slack", c.min_slack ? nlohmann::ordered_json(*c.min_slack)
                                                 : nlohmann::ordered_json(nullptr)}});
    }
    doc["cases"] = std::move(cases);
  }
  if (report.holds) {
    doc["witness"] = nullptr;
  } else {
    doc["witness"] = {{"blocks", report.witness},
                      {"complement_union", report.witness_union}};
  }
  return doc;
}

/// Regular friendship digraph from a (k^2-k+1, k, 1)-SBIBD: each vertex of
/// block t gets an arc to the block's representative rep[t], so the
/// in-neighbourhood of rep[t] is exactly B_t.
inline Digraph digraph_from_sbibd(const Design& design,
                                  std::optional<std::uint64_t> seed =
                                      std::nullopt) {
  const std::size_t v = design.variety_count();
  const std::size_t k = design.block_count() == 0 ? 0 : design.block(0).size();
  if (k < 2 || v != k * k - k + 1) {
    throw Error(ErrorCode::kNotSbibd,
                "v = " + std::to_string(v) + " is not k^2-k+1 for block size " +
                    std::to_string(k) + " >= 2");
  }
  const auto report = validate_sbibd(design, k, 1);
  if (const auto* failure = report.first_failure()) {
    throw Error(ErrorCode::kNotSbibd,
                "(" + std::to_string(v) + "," + std::to_string(k) +
                    ",1)-SBIBD check '" + failure->name + "' failed");
  }
  const Sdr sdr = complement_sdr(design, seed);
  Digraph d(v);
  for (std::size_t t = 0; t < design.block_count(); ++t) {
    for (auto x : design.block(t)) d.add_arc(x, sdr.rep[t]);
  }
  return d;
}

}  // namespace friendship
