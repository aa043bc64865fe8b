// Copyright 2026 The nilsem Authors
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

#include "fixtures.hpp"
#include "nilsem/errors.hpp"
#include "nilsem/extremal.hpp"
#include "nilsem/partition.hpp"
#include "nilsem/search.hpp"

using namespace nilsem;

namespace {

  std::string word_of(Semigroup const& s, SPartition const& p, Transformation const& f) {
    return word_string(ordered_word(s, p, f), s.degree());
  }

}  // namespace

TEST_CASE("S-partition of the example", "[partition]") {
  auto const s = test::example_s();
  auto const p = s_partition(s);
  CHECK(p.blocks == std::vector<std::vector<Point>>{{4}, {0}, {1, 3, 5}, {2}});
  CHECK(p.ordering == std::vector<Point>{4, 0, 1, 3, 5, 2});
  CHECK(p.base() == 4);
  CHECK(p.trunk_length() == 2);
  CHECK(to_string(p) == "A0={5} A1={1} A2={2,4,6} A3={3}");
  CHECK(partition_violations(s, p).empty());
  CHECK(s_partition(s).blocks == p.blocks);
}

TEST_CASE("word set of the example", "[partition]") {
  auto const            s = test::example_s();
  auto const            p = s_partition(s);
  std::set<std::string> words;
  for (auto const& f : s) {
    words.insert(word_of(s, p, f));
  }
  CHECK(words == std::set<std::string>{"555555", "555551", "551112", "551114", "551116"});
  CHECK(word_of(s, p, Transformation::constant(6, 4)) == "555555");
  CHECK(word_of(s, p, test::tf({5, 1, 2, 1, 5, 1})) == "551112");
  CHECK_THROWS_AS(ordered_word(s, p, Transformation::identity(6)), ArgumentError);
  CHECK_THROWS_AS(ordered_word(s, p, Transformation::identity(5)), DomainMismatch);
}

TEST_CASE("S-partition of constant semigroups", "[partition]") {
  auto const one = Semigroup::closure(1, std::vector{Transformation::constant(1, 0)});
  auto const p1  = s_partition(one);
  CHECK(p1.blocks == std::vector<std::vector<Point>>{{0}});
  CHECK(word_string(ordered_word(one, p1, one[0]), 1) == "1");
  CHECK(p1.trunk_length() == 1);

  auto const c = Semigroup::closure(5, std::vector{Transformation::constant(5, 2)});
  auto const p = s_partition(c);
  CHECK(p.blocks == std::vector<std::vector<Point>>{{2}, {0, 1, 3, 4}});
  CHECK(p.trunk_length() == 5);
}

TEST_CASE("S-partition preconditions", "[partition]") {
  auto const monoid = Semigroup::closure(
      2, std::vector{Transformation::identity(2), Transformation::constant(2, 0)});
  CHECK_THROWS_AS(s_partition(monoid), PreconditionError);
  auto const id = Semigroup::closure(2, std::vector{Transformation::identity(2)});
  CHECK_THROWS_AS(s_partition(id), PreconditionError);
}

TEST_CASE("word strings use separators beyond nine points", "[partition]") {
  CHECK(word_string({4, 0, 1}, 6) == "512");
  CHECK(word_string({9, 0}, 10) == "10.1");
}

TEST_CASE("S-partition invariants on random semigroups", "[partition][property]") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::size_t const n = 1 + seed % 7;
    auto const        s = random_cn(n, seed, 3 + seed % 25);
    auto const        p = s_partition(s);
    INFO("n=" << n << " seed=" << seed);
    CHECK(partition_violations(s, p).empty());
    CHECK(p.blocks.front().size() == 1);

    // Independent check of the defining conditions.
    std::vector<std::size_t> level(n);
    std::size_t              covered = 0;
    for (std::size_t j = 0; j < p.blocks.size(); ++j) {
      REQUIRE_FALSE(p.blocks[j].empty());
      REQUIRE(std::is_sorted(p.blocks[j].begin(), p.blocks[j].end()));
      for (auto x : p.blocks[j]) {
        level[x] = j;
        ++covered;
      }
    }
    REQUIRE(covered == n);
    for (std::size_t j = 1; j < p.blocks.size(); ++j) {
      bool reaches_previous = j == 1;
      for (auto x : p.blocks[j]) {
        for (auto const& f : s) {
          CHECK(level[f[x]] < j);
          reaches_previous = reaches_previous || level[f[x]] == j - 1;
        }
      }
      CHECK(reaches_previous);
    }

    // The first |A0 u A1| letters of every word are the base point.
    for (auto const& f : s) {
      auto const w = ordered_word(s, p, f);
      for (std::size_t i = 0; i < p.trunk_length(); ++i) {
        CHECK(w[i] == p.base());
      }
    }
    CHECK_FALSE(main_lemma_violation(s, p).has_value());
  }
}

TEST_CASE("main lemma on max_null and the example", "[partition]") {
  auto const s = test::example_s();
  CHECK_FALSE(main_lemma_violation(s, s_partition(s)).has_value());
  std::vector<Point> b{0, 1, 2};
  auto const         m = max_null(7, 3, b, 0);
  auto const         p = s_partition(m);
  CHECK(p.blocks.size() == 3);
  CHECK_FALSE(main_lemma_violation(m, p).has_value());
}
