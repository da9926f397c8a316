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

#include <set>

#include "friendship/construct.hpp"
#include "friendship/design.hpp"
#include "friendship/search.hpp"
#include "friendship/verify.hpp"
#include "test_support.hpp"

using namespace friendship;
namespace ft = friendship::testing;

namespace {

std::vector<Digraph> labelled(std::size_t n) {
  return enumerate_friendship_digraphs({n, std::nullopt, false, false});
}

std::vector<Digraph> classes(std::size_t n) {
  return enumerate_friendship_digraphs({n, std::nullopt, true, false});
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("small orders", "[search]") {
  CHECK(labelled(2).empty());
  const auto three = classes(3);
  REQUIRE(three.size() == 1);
  CHECK(ft::brute_force_isomorphic(three.front(), ft::bidirected_triangle()));
  CHECK(ft::brute_force_isomorphic(three.front(), fancy_wheel({2})));

  const auto four = classes(4);
  REQUIRE(four.size() == 1);
  CHECK(ft::brute_force_isomorphic(four.front(), fancy_wheel({3})));
}

TEST_CASE("pruned search equals generate-and-filter", "[search][oracle]") {
  for (std::size_t n = 2; n <= 4; ++n) {
    INFO("n = " << n);
    const auto naive = ft::naive_friendship_arc_sets(n);
    std::set<std::vector<Arc>> pruned;
    for (const auto& d : labelled(n)) pruned.insert(d.arcs());
    CHECK(pruned == naive);
  }
}

TEST_CASE("labelled counts match independent formulas", "[search][oracle]") {
  // Order 3: the complete digraph is a wheel around every vertex.
  CHECK(labelled(3).size() == 1);
  // n >= 4: unique hub, rim is a fixed-point-free permutation of n - 1.
  for (std::size_t n = 4; n <= 6; ++n) {
    CHECK(labelled(n).size() == n * ft::derangements(n - 1));
  }

  // Order 7: wheels plus regular digraphs. Each regular one corresponds to a
  // labelled Fano plane together with a perfect matching of blocks to
  // points outside them.
  std::size_t regular_oracle = 0;
  const auto planes = ft::all_fano_planes();
  CHECK(planes.size() == 30);
  for (const auto& plane : planes) regular_oracle += ft::complement_permanent(plane, 7);

  std::size_t wheels = 0, regular = 0;
  for (const auto& d : labelled(7)) {
    const auto c = classify(d);
    wheels += c.is_fancy_wheel();
    regular += c.is_regular();
  }
  CHECK(wheels == 7 * ft::derangements(6));
  CHECK(regular == regular_oracle);
}

TEST_CASE("isomorphism classes by order", "[search][golden]") {
  // Wheel classes are partitions of n - 1 into parts >= 2.
  CHECK(classes(5).size() == 2);
  CHECK(classes(6).size() == 2);
  const auto seven = classes(7);
  std::size_t wheels = 0, regular = 0;
  for (const auto& d : seven) {
    const auto c = classify(d);
    wheels += c.is_fancy_wheel();
    regular += c.is_regular();
  }
  CHECK(wheels == ft::partitions_min2(6).size());
  CHECK(wheels == 4);
  CHECK(regular == 4);

  // Orbit-stabilizer: class sizes add back up to the labelled count.
  for (std::size_t n = 3; n <= 7; ++n) {
    std::size_t total = 0;
    for (const auto& d : classes(n)) total += factorial(n) / ft::automorphism_count(d);
    CHECK(total == labelled(n).size());
  }
}

TEST_CASE("every search result is a friendship digraph of the right shape", "[search][property]") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto all = labelled(n);
    std::set<std::uint64_t> codes;
    for (const auto& d : all) codes.insert(canonical_code(d));
    for (const auto& d : all) {
      REQUIRE(is_friendship(d).holds);
      const auto c = classify(d);
      if (c.is_regular()) {
        const auto k = std::get<RegularVerdict>(c.verdict).k;
        CHECK(n == k * k - k + 1);
        if (n == 7) {
          CHECK(k == 3);
          CHECK(validate_sbibd(design_from_digraph(d), 3, 1).valid());
        }
      } else {
        CHECK(c.is_fancy_wheel());
      }
      // Closed under reversal.
      CHECK(codes.count(canonical_code(reverse(d))) == 1);
    }
  }
}

TEST_CASE("search limits and config errors", "[search]") {
  CHECK_THROWS_AS(labelled(8), Error);
  CHECK_THROWS_AS(labelled(1), Error);
  CHECK_THROWS_AS(enumerate_friendship_digraphs({9, std::nullopt, true, true}), Error);
  CHECK(enumerate_friendship_digraphs({7, 5, false, false}).size() == 5);
  CHECK(enumerate_friendship_digraphs({7, 3, true, false}).size() == 3);
  // Deterministic order.
  CHECK(labelled(5).front() == labelled(5).front());
  const auto a = labelled(6), b = labelled(6);
  CHECK(a == b);
}

TEST_CASE("is_isomorphic", "[search]") {
  CHECK(is_isomorphic(fancy_wheel({2}), ft::bidirected_triangle()));
  CHECK(is_isomorphic(fancy_wheel({3}), reverse(fancy_wheel({3}))));
  CHECK_FALSE(is_isomorphic(ft::circulant(7, {1, 2, 3}),
                            digraph_from_sbibd(ft::fano_design())));
  CHECK_FALSE(is_isomorphic(fancy_wheel({4, 2}), fancy_wheel({3, 3})));
  CHECK_THROWS_AS(is_isomorphic(fancy_wheel({4, 4}), fancy_wheel({4, 4})), Error);

  // Agrees with brute force on relabelled copies and near misses.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    Digraph a(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && rng() % 2) a.add_arc(u, v);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph b(n);
    for (const auto& [u, v] : a.arcs()) b.add_arc(perm[u], perm[v]);
    CHECK(is_isomorphic(a, b));
    const auto form = canonical_form(a);
    CHECK(ft::brute_force_isomorphic(form.relabelled, a));
    CHECK(canonical_code(form.relabelled) == form.code);

    Digraph c(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && rng() % 2) c.add_arc(u, v);
    CHECK(is_isomorphic(a, c) == ft::brute_force_isomorphic(a, c));
  }
}
