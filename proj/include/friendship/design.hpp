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
#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "friendship/digraph.hpp"
#include "friendship/error.hpp"
#include "friendship/finite_field.hpp"

namespace friendship {

using Block = std::vector<std::size_t>;

/// A variety set {0, ..., v-1} with an indexed family of blocks. Blocks are
/// kept sorted and duplicate-free; nothing here forces design-ness.
class Design {
 public:
  Design(std::size_t v, std::vector<Block> blocks)
      : v_(v), blocks_(std::move(blocks)) {
    for (auto& block : blocks_) {
      std::sort(block.begin(), block.end());
      if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
        throw Error(ErrorCode::kParseError, "block repeats a variety");
      }
      if (!block.empty() && block.back() >= v_) {
        throw Error(ErrorCode::kBadVertex,
                    "variety " + std::to_string(block.back()) +
                        " outside [0, " + std::to_string(v_) + ")");
      }
    }
  }

  std::size_t variety_count() const noexcept { return v_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t t) const { return blocks_.at(t); }

  /// Blocks as a sorted multiset, for order-insensitive comparison.
  std::vector<Block> block_multiset() const {
    auto sorted = blocks_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::size_t v_;
  std::vector<Block> blocks_;
};

struct SbibdCheck {
  std::string name;
  bool holds = true;
  std::vector<std::size_t> witness;  // offending block, variety or pair
  std::int64_t observed = 0;
  std::int64_t expected = 0;
};

struct ValidationReport {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::vector<SbibdCheck> checks;

  bool valid() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const SbibdCheck& c) { return c.holds; });
  }

  const SbibdCheck* first_failure() const {
    for (const auto& c : checks) {
      if (!c.holds) return &c;
    }
    return nullptr;
  }
};

/// Checks b = v, |B| = k for every block, replication r = k for every
/// variety and exactly lambda blocks through every unordered pair. Each
/// refuted condition carries its lexicographically first witness.
inline ValidationReport validate_sbibd(const Design& design, std::size_t k,
                                       std::size_t lambda) {
  const std::size_t v = design.variety_count();
  const std::size_t b = design.block_count();
  ValidationReport report{v, k, lambda, {}};

  SbibdCheck count{"block_count", b == v, {}, static_cast<std::int64_t>(b),
                   static_cast<std::int64_t>(v)};
  report.checks.push_back(count);

  SbibdCheck sizes{"block_size", true, {}, 0, static_cast<std::int64_t>(k)};
  for (std::size_t t = 0; t < b; ++t) {
    if (design.block(t).size() != k) {
      sizes.holds = false;
      sizes.witness = {t};
      sizes.observed = static_cast<std::int64_t>(design.block(t).size());
      break;
    }
  }
  if (sizes.holds) sizes.observed = static_cast<std::int64_t>(k);
  report.checks.push_back(sizes);

  std::vector<std::size_t> replication(v, 0);
  std::vector<std::size_t> pair_count(v * v, 0);
  for (const auto& block : design.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      ++replication[block[i]];
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        ++pair_count[block[i] * v + block[j]];
      }
    }
  }

  SbibdCheck rep{"replication", true, {}, static_cast<std::int64_t>(k),
                 static_cast<std::int64_t>(k)};
  for (std::size_t x = 0; x < v; ++x) {
    if (replication[x] != k) {
      rep = {"replication", false, {x},
             static_cast<std::int64_t>(replication[x]),
             static_cast<std::int64_t>(k)};
      break;
    }
  }
  report.checks.push_back(rep);

  SbibdCheck pairs{"pair_balance", true, {},
                   static_cast<std::int64_t>(lambda),
                   static_cast<std::int64_t>(lambda)};
  for (std::size_t x = 0; x < v && pairs.holds; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) {
      if (pair_count[x * v + y] != lambda) {
        pairs = {"pair_balance", false, {x, y},
                 static_cast<std::int64_t>(pair_count[x * v + y]),
                 static_cast<std::int64_t>(lambda)};
        break;
      }
    }
  }
  report.checks.push_back(pairs);
  return report;
}

/// First pair of distinct blocks (lexicographic) whose intersection size is
/// not `size`, or nullopt if every pair meets in exactly `size` varieties.
inline std::optional<std::array<std::size_t, 3>> find_irregular_block_pair(
    const Design& design, std::size_t size = 1) {
  const auto& blocks = design.blocks();
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    for (std::size_t t = s + 1; t < blocks.size(); ++t) {
      std::vector<std::size_t> common;
      std::set_intersection(blocks[s].begin(), blocks[s].end(),
                            blocks[t].begin(), blocks[t].end(),
                            std::back_inserter(common));
      if (common.size() != size) return std::array{s, t, common.size()};
    }
  }
  return std::nullopt;
}

/// Desarguesian plane PG(2, q). Points and lines are the nonzero triples
/// over GF(q) whose first nonzero coordinate is 1, ordered lexicographically
/// by element index. Block t holds the points incident with line t.
inline Design projective_plane(std::uint64_t q) {
  const FiniteField field = make_field_of_order(q);
  const auto elements = field.elements();

  std::vector<std::array<std::size_t, 3>> normalized;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      for (std::size_t c = 0; c < q; ++c) {
        const std::size_t lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) normalized.push_back({a, b, c});
      }
    }
  }

  std::vector<Block> lines;
  lines.reserve(normalized.size());
  for (const auto& line : normalized) {
    Block incident;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
      const auto& point = normalized[i];
      const auto dot = elements[line[0]] * elements[point[0]] +
                       elements[line[1]] * elements[point[1]] +
                       elements[line[2]] * elements[point[2]];
      if (dot.is_zero()) incident.push_back(i);
    }
    lines.push_back(std::move(incident));
  }
  return Design(normalized.size(), std::move(lines));
}

/// Varieties are the vertices; block t is the in-neighbourhood of vertex t.
inline Design design_from_digraph(const Digraph& d) {
  std::vector<Block> blocks;
  blocks.reserve(d.order());
  for (Vertex t = 0; t < d.order(); ++t) blocks.push_back(d.in_neighbors(t));
  return Design(d.order(), std::move(blocks));
}

// Serialization ------------------------------------------------------------

/// {"v":<int>,"blocks":[[...],...]}; blocks and their elements ascending.
inline nlohmann::ordered_json to_json_value(const Design& design) {
  return {{"v", design.variety_count()}, {"blocks", design.block_multiset()}};
}

inline std::string to_json(const Design& design) {
  return to_json_value(design).dump();
}

inline Design design_from_json_value(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("v") || !doc.contains("blocks")) {
    throw Error(ErrorCode::kParseError,
                "design document needs keys \"v\" and \"blocks\"");
  }
  const std::size_t v = detail::require_index(doc.at("v"), "v");
  const auto& blocks_json = doc.at("blocks");
  if (!blocks_json.is_array()) {
    throw Error(ErrorCode::kParseError, "\"blocks\" must be an array");
  }
  std::vector<Block> blocks;
  for (const auto& block_json : blocks_json) {
    if (!block_json.is_array()) {
      throw Error(ErrorCode::kParseError, "each block must be an array");
    }
    Block block;
    for (const auto& x : block_json) {
      block.push_back(detail::require_index(x, "variety"));
    }
    blocks.push_back(std::move(block));
  }
  return Design(v, std::move(blocks));
}

inline Design design_from_json(std::string_view text) {
  return design_from_json_value(detail::parse_json_text(text));
}

}  // namespace friendship
