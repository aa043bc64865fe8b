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

#include <map>

#include "fixtures.hpp"
#include "nilsem/errors.hpp"
#include "nilsem/extremal.hpp"
#include "nilsem/search.hpp"
#include "nilsem/treeops.hpp"

using namespace nilsem;
using test::Tuple;

namespace {

  // Every commutative nilpotent subsemigroup of T_n, by breadth-first
  // growth from each idempotent one element at a time. Only for n <= 3.
  std::set<std::set<Tuple>> naive_commutative_nilpotent(int n) {
    auto const                maps = test::all_maps(n);
    std::set<std::set<Tuple>> seen;
    std::vector<std::set<Tuple>> frontier;
    for (auto const& e : maps) {
      if (test::naive_compose(e, e) == e) {
        frontier.push_back({e});
        seen.insert({e});
      }
    }
    while (!frontier.empty()) {
      auto s = std::move(frontier.back());
      frontier.pop_back();
      for (auto const& f : maps) {
        if (s.count(f)) {
          continue;
        }
        auto t = s;
        t.insert(f);
        t = test::naive_closure(std::move(t));
        if (seen.count(t) || !test::naive_commutative(t) || test::naive_nilpotency_index(t) == 0) {
          continue;
        }
        seen.insert(t);
        frontier.push_back(std::move(t));
      }
    }
    return seen;
  }

  std::set<std::set<Tuple>> as_tuple_sets(std::vector<Semigroup> const& v) {
    std::set<std::set<Tuple>> out;
    for (auto const& s : v) {
      out.insert(test::tuples(s));
    }
    return out;
  }

  SearchOptions all_zeros() {
    SearchOptions o;
    o.mode = SearchMode::all_zeros;
    return o;
  }

}  // namespace

TEST_CASE("nilpotent pool sizes", "[search]") {
  CHECK(nilpotent_pool(2, Transformation::constant(2, 0)).size() == 1);
  CHECK(nilpotent_pool(3, Transformation::constant(3, 0)).size() == 3);
  CHECK(nilpotent_pool(4, Transformation::constant(4, 0)).size() == 16);
  CHECK(nilpotent_pool(5, Transformation::constant(5, 0)).size() == 125);
  CHECK_THROWS_AS(nilpotent_pool(3, test::tf({2, 3, 1})), ArgumentError);
  CHECK_THROWS_AS(nilpotent_pool(3, Transformation::constant(2, 0)), DomainMismatch);
}

TEST_CASE("nilpotent pool agrees with filtering T_n", "[search][oracle]") {
  for (int n = 1; n <= 4; ++n) {
    auto const maps = test::all_maps(n);
    for (auto const& e : maps) {
      if (test::naive_compose(e, e) != e) {
        continue;
      }
      std::set<Tuple> expected;
      for (auto const& b : maps) {
        auto p = b;
        for (int k = 1; k < n; ++k) {
          p = test::naive_compose(p, b);
        }
        if (test::naive_compose(b, e) == e && test::naive_compose(e, b) == e && p == e) {
          expected.insert(b);
        }
      }
      std::set<Tuple> got;
      for (auto const& f : nilpotent_pool(n, test::tf(e))) {
        got.insert(test::tuple(f));
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("idempotent representatives cover each conjugacy class once", "[search][oracle]") {
  std::map<std::size_t, std::size_t> partitions{{1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 7}, {6, 11}};
  for (auto [n, count] : partitions) {
    auto const reps = idempotent_representatives(n);
    CHECK(reps.size() == count);
    for (auto const& e : reps) {
      CHECK(e.is_idempotent());
    }
  }
  // Every idempotent of T_4 is a relabelling of exactly one representative.
  auto const reps = idempotent_representatives(4);
  std::vector<Point> perm{0, 1, 2, 3};
  std::vector<std::set<Transformation>> orbits(reps.size());
  do {
    Transformation p(perm);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      orbits[i].insert(conjugate(reps[i], p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::size_t idempotents = 0;
  for (auto const& t : test::all_maps(4)) {
    auto const f = test::tf(t);
    if (!f.is_idempotent()) {
      continue;
    }
    ++idempotents;
    std::size_t hits = 0;
    for (auto const& o : orbits) {
      hits += o.count(f);
    }
    CHECK(hits == 1);
  }
  CHECK(idempotents == 41);
}

TEST_CASE("certify_max in all-zeros mode for n <= 4", "[search]") {
  std::vector<std::size_t> expected{1, 1, 2, 4};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const r = certify_max(n, all_zeros());
    INFO("n=" << n);
    CHECK(r.certified);
    CHECK(r.max_size == expected[n - 1]);
    CHECK(r.max_equals_xi);
    CHECK(r.maximizers_null);
    CHECK(r.maximizers_characterized);
    CHECK(r.xi_bound_violations == 0);
    for (auto const& m : r.maximizers) {
      CHECK(m.size() == r.max_size);
      CHECK(is_commutative(m));
      CHECK(is_null(m));
    }
  }
}

TEST_CASE("n = 2 maximizers are the three singleton idempotents", "[search]") {
  auto const r = certify_max(2, all_zeros());
  CHECK(as_tuple_sets(r.maximizers)
        == std::set<std::set<Tuple>>{{{1, 1}}, {{2, 2}}, {{1, 2}}});
}

TEST_CASE("all-zeros maximizers match the naive oracle", "[search][oracle]") {
  for (int n = 1; n <= 3; ++n) {
    auto const  all  = naive_commutative_nilpotent(n);
    std::size_t best = 0;
    for (auto const& s : all) {
      best = std::max(best, s.size());
    }
    std::set<std::set<Tuple>> maximizers;
    for (auto const& s : all) {
      if (s.size() == best) {
        maximizers.insert(s);
      }
    }
    auto const r = certify_max(n, all_zeros());
    CHECK(r.max_size == best);
    CHECK(as_tuple_sets(r.maximizers) == maximizers);
  }
}

TEST_CASE("rank-1 maximizers for n = 3 and n = 4", "[search]") {
  auto const r3 = certify_max(3);
  CHECK(r3.max_size == 2);
  std::set<std::set<Tuple>> expected;
  for (Point x : {1u, 2u}) {
    std::vector<Point> block{0, x};
    expected.insert(test::tuples(max_null(3, 2, block, 0)));
  }
  CHECK(as_tuple_sets(r3.maximizers) == expected);

  auto const r4 = certify_max(4);
  CHECK(r4.certified);
  CHECK(r4.max_size == 4);
  CHECK(r4.maximizers.size() == 3);
  for (auto t : r4.maximizer_t) {
    CHECK(t == 2);
  }
}

TEST_CASE("n = 5 rank-1 certification", "[search]") {
  SearchOptions o;
  o.budget     = std::chrono::minutes(10);
  auto const r = certify_max(5, o);
  CHECK(r.certified);
  CHECK(r.max_size == 9);
  CHECK(r.maximizers.size() == 6);
  CHECK(r.maximizers_characterized);
  for (auto t : r.maximizer_t) {
    CHECK(t == 3);
  }
  for (auto const& m : r.maximizers) {
    CHECK(nullify(m).size() == m.size());
  }
}

TEST_CASE("reports do not depend on the thread count", "[search]") {
  SearchOptions one, three;
  three.threads = 3;
  auto const a  = certify_max(5, one);
  auto const b  = certify_max(5, three);
  CHECK(a.max_size == b.max_size);
  CHECK(a.maximizers == b.maximizers);
  CHECK(a.certified == b.certified);
  auto const c = certify_max(4, [] {
    auto o    = all_zeros();
    o.threads = 4;
    return o;
  }());
  CHECK(c.maximizers == certify_max(4, all_zeros()).maximizers);
}

TEST_CASE("an exhausted budget is reported, not thrown", "[search]") {
  SearchOptions o;
  o.budget     = std::chrono::milliseconds(0);
  auto const r = certify_max(6, o);
  CHECK_FALSE(r.certified);
  CHECK(r.max_size <= 27);  // may be 0 if no set was examined
  CHECK(r.xi_bound_violations == 0);
  CHECK(to_string(r).find("certified:            no") != std::string::npos);

  // The pool for n = 7 is large enough that building its tables alone
  // outlasts a short budget.
  o.budget        = std::chrono::milliseconds(100);
  auto const t0   = std::chrono::steady_clock::now();
  auto const r7   = certify_max(7, o);
  auto const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK_FALSE(r7.certified);
  CHECK(secs < 5);
}

TEST_CASE("maximizers stay valid under relabelling", "[search][property]") {
  std::mt19937_64 rng(23);
  auto const      r = certify_max(5, all_zeros());
  for (auto const& m : r.maximizers) {
    auto const                  p = test::random_permutation(5, rng);
    std::vector<Transformation> moved;
    for (auto const& f : m) {
      moved.push_back(conjugate(f, p));
    }
    auto const s = Semigroup::from_elements(5, moved);
    CHECK(s.size() == m.size());
    CHECK(is_commutative(s));
    CHECK(is_nilpotent(s));
  }
}

TEST_CASE("random_cn contract", "[search][property]") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto const one = random_cn(1, seed, 10);
    CHECK(one.size() == 1);
    CHECK(one[0] == Transformation::constant(1, 0));
  }
  CHECK(random_cn(6, 42, 20) == random_cn(6, 42, 20));
  CHECK_THROWS_AS(random_cn(0, 1, 1), ArgumentError);

  std::size_t biggest = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::size_t const n = 1 + seed % 7;
    auto const        s = random_cn(n, seed, 1 + seed % 40);
    INFO("n=" << n << " seed=" << seed);
    CHECK(is_commutative(s));
    CHECK(is_nilpotent(s));
    CHECK(zero_of(s) == Transformation::constant(n, 0));
    CHECK(BigInt(s.size()) <= xi(n));
    biggest = std::max(biggest, s.size());
  }
  CHECK(biggest >= 10);
}
