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

#include <catch_amalgamated.hpp>

#include <random>

#include "friendship/construct.hpp"
#include "friendship/verify.hpp"
#include "test_support.hpp"

using namespace friendship;
using friendship::testing::bidirected_triangle;
using friendship::testing::circulant;
using friendship::testing::fano_design;

namespace {

const Digraph& fano_digraph() {
  static const Digraph d = digraph_from_sbibd(fano_design());
  return d;
}

}  // namespace

TEST_CASE("is_friendship", "[verify]") {
  CHECK(is_friendship(bidirected_triangle()).holds);
  CHECK(is_friendship(fancy_wheel({4, 3, 2})).holds);

  const auto circ = is_friendship(circulant(7, {1, 2, 3}));
  CHECK_FALSE(circ.holds);
  REQUIRE(circ.witness);
  CHECK(circ.witness->vertices == VertexSet{0, 1});
  CHECK(circ.witness->value("common_out_neighbors") == 2);

  const auto trivial = is_friendship(Digraph(1));
  CHECK_FALSE(trivial.holds);
  CHECK(trivial.witness->degenerate);

  CHECK_FALSE(is_friendship(Digraph(2)).holds);
}

TEST_CASE("min out-degree", "[verify]") {
  CHECK(check_min_outdegree(bidirected_triangle()).holds);
  const auto r = check_min_outdegree(Digraph::from_arcs(2, {{0, 1}}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness->vertices == VertexSet{1});
  CHECK(r.witness->value("out_degree") == 0);
  CHECK(check_min_outdegree(fano_digraph()).holds);
}

TEST_CASE("degree balance", "[verify]") {
  CHECK(check_degree_balance(fancy_wheel({2, 2})).holds);
  const auto r = check_degree_balance(Digraph::from_arcs(2, {{0, 1}}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness->vertices == VertexSet{0});
  CHECK(r.witness->value("out_degree") == 1);
  CHECK(r.witness->value("in_degree") == 0);
  CHECK(check_degree_balance(fano_digraph()).holds);
}

TEST_CASE("sum identity", "[verify]") {
  CHECK(check_sum_identity(bidirected_triangle()).holds);
  CHECK(check_sum_identity(fancy_wheel({4, 3, 2})).holds);
  const auto r = check_sum_identity(Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness->vertices == VertexSet{0});
  CHECK(r.witness->value("lhs") == 0);
  CHECK(r.witness->value("rhs") == 1);
}

TEST_CASE("reversal friendship", "[verify]") {
  CHECK(check_reversal_friendship(fano_digraph()).holds);
  CHECK(is_friendship(reverse(fano_digraph())).holds);
  const auto circ = circulant(7, {1, 2, 3});
  CHECK(check_reversal_friendship(circ).holds);
  CHECK_FALSE(is_friendship(reverse(circ)).holds);
  CHECK(check_reversal_friendship(fancy_wheel({3})).holds);

  // Neither direction is friendship, which is consistent.
  const auto star = Digraph::from_arcs(3, {{1, 0}, {2, 0}, {0, 1}});
  CHECK(check_reversal_friendship(star).holds);
}

TEST_CASE("product bound", "[verify]") {
  CHECK(check_product_bound(bidirected_triangle()).holds);
  CHECK(check_product_bound(fancy_wheel({4, 3, 2})).holds);  // 8 <= 8
  CHECK(check_product_bound(fano_digraph()).holds);          // 4 <= 5
  // Two vertices of in-degree 3 in order 4: 2 * 2 > 2.
  const auto dense = Digraph::from_arcs(
      4, {{0, 2}, {1, 2}, {3, 2}, {0, 3}, {1, 3}, {2, 3}});
  const auto r = check_product_bound(dense);
  CHECK_FALSE(r.holds);
  CHECK(r.witness->vertices == VertexSet{2, 3});
  CHECK(r.witness->value("product") == 4);
  CHECK(r.witness->value("bound") == 2);
}

TEST_CASE("non-adjacent degree equality", "[verify]") {
  CHECK(check_nonadjacent_degree_equality(fano_digraph()).holds);
  CHECK(check_nonadjacent_degree_equality(fancy_wheel({2, 2})).holds);
  const auto r = check_nonadjacent_degree_equality(Digraph::from_arcs(3, {{0, 1}}));
  CHECK_FALSE(r.holds);
  // Lexicographically first failing pair.
  CHECK(r.witness->vertices == VertexSet{0, 1});
  CHECK(r.witness->value("out_degree_u") == 1);
  CHECK(r.witness->value("out_degree_v") == 0);
}

TEST_CASE("classify", "[verify]") {
  const auto wheel = classify(fancy_wheel({4, 3, 2}));
  REQUIRE(wheel.is_fancy_wheel());
  CHECK(std::get<FancyWheelVerdict>(wheel.verdict) ==
        FancyWheelVerdict{0, {2, 3, 4}});

  const auto regular = classify(fano_digraph());
  REQUIRE(regular.is_regular());
  CHECK(std::get<RegularVerdict>(regular.verdict).k == 3);
  CHECK(regular.order == 7);

  const auto circ = classify(circulant(7, {1, 2, 3}));
  REQUIRE_FALSE(circ.is_friendship());
  const auto& w = std::get<NotFriendshipVerdict>(circ.verdict).witness;
  CHECK(w.vertices == VertexSet{0, 1});
  CHECK(w.value("common_out_neighbors") == 2);

  CHECK_FALSE(classify(Digraph(1)).is_friendship());
}

TEST_CASE("wheel decomposition reports non-wheels cleanly", "[verify]") {
  CHECK(decompose_wheel(fancy_wheel({4, 3, 2}), 0) == std::vector<std::size_t>{2, 3, 4});
  // Hub joined to all, but the rim is a path, not cycles.
  auto d = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0},
                                  {1, 2}, {2, 3}});
  CHECK_THROWS_AS(decompose_wheel(d, 0), Error);
  CHECK_THROWS_AS(decompose_wheel(d, 1), Error);
}

TEST_CASE("theorem consequences hold on every friendship input", "[verify][property]") {
  std::vector<Digraph> inputs{bidirected_triangle(), fano_digraph(),
                              digraph_from_sbibd(projective_plane(4)),
                              digraph_from_sbibd(projective_plane(5), 11)};
  for (std::size_t m = 2; m <= 10; ++m) {
    for (const auto& p : friendship::testing::partitions_min2(m)) {
      inputs.push_back(fancy_wheel(p));
    }
  }
  for (const auto& d : inputs) {
    REQUIRE(is_friendship(d).holds);
    for (const auto& r : check_consequences(d)) {
      INFO(r.property << " on order " << d.order());
      CHECK(r.holds);
    }
    const auto c = classify(d);
    const auto cr = classify(reverse(d));
    CHECK(c.is_fancy_wheel() == cr.is_fancy_wheel());
    if (c.is_fancy_wheel()) {
      CHECK(std::get<FancyWheelVerdict>(c.verdict).cycle_lengths ==
            std::get<FancyWheelVerdict>(cr.verdict).cycle_lengths);
    } else {
      CHECK(std::get<RegularVerdict>(c.verdict) == std::get<RegularVerdict>(cr.verdict));
    }
  }
}

TEST_CASE("witness present exactly when a report fails", "[verify][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    Digraph d(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && rng() % 2) d.add_arc(u, v);
    std::vector<PropertyReport> reports{is_friendship(d)};
    for (auto& r : check_consequences(d)) reports.push_back(r);
    for (const auto& r : reports) CHECK(r.holds == !r.witness.has_value());
    const auto c = classify(d);
    CHECK(c.is_friendship() == reports[0].holds);
  }
}

TEST_CASE("report json", "[verify][io]") {
  CHECK(to_json_value(is_friendship(bidirected_triangle())).dump() ==
        R"({"property":"friendship","holds":true,"witness":null})");
  CHECK(to_json_value(is_friendship(circulant(7, {1, 2, 3}))).dump() ==
        R"({"property":"friendship","holds":false,"witness":{"vertices":[0,1],"common_out_neighbors":2}})");
  CHECK(to_json_value(classify(fano_digraph())).dump() ==
        R"({"verdict":"Regular","k":3,"n":7})");
  CHECK(to_json_value(classify(fancy_wheel({4, 3, 2}))).dump() ==
        R"({"verdict":"FancyWheel","hub":0,"cycle_lengths":[2,3,4],"n":10})");
}
