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


#include <gmpxx.h>

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "nilsem/errors.hpp"
#include "nilsem/extremal.hpp"
#include "nilsem/semigroup.hpp"

using namespace nilsem;

namespace {

  // Brute force with GMP: max and largest argmax of t^(n-t).
  std::pair<mpz_class, std::size_t> gmp_xi_alpha(std::size_t n) {
    mpz_class   best = 0, v;
    std::size_t arg  = 0;
    for (std::size_t t = 1; t <= n; ++t) {
      mpz_ui_pow_ui(v.get_mpz_t(), t, n - t);
      if (v >= best) {
        best = v;
        arg  = t;
      }
    }
    return {best, arg};
  }

  std::vector<Point> iota_block(std::size_t t) {
    std::vector<Point> b(t);
    for (Point x = 0; x < t; ++x) {
      b[x] = x;
    }
    return b;
  }

}  // namespace

TEST_CASE("xi and alpha small values", "[extremal]") {
  CHECK(xi(1) == 1);
  CHECK(xi(2) == 1);
  CHECK(xi(3) == 2);
  CHECK(xi(4) == 4);
  CHECK(xi(5) == 9);
  CHECK(xi(6) == 27);
  CHECK(alpha(1) == 1);
  CHECK(alpha(2) == 2);
  CHECK(alpha(6) == 3);
  CHECK_THROWS_AS(xi(0), ArgumentError);
  CHECK_THROWS_AS(alpha(0), ArgumentError);
}

TEST_CASE("xi and alpha agree with GMP brute force", "[extremal][oracle]") {
  for (std::size_t n = 1; n <= 300; ++n) {
    auto const [x, a] = gmp_xi_alpha(n);
    REQUIRE(xi(n).str() == x.get_str());
    REQUIRE(alpha(n) == a);
  }
  for (std::size_t n : {1000u, 2500u, 10000u}) {
    auto const [x, a] = gmp_xi_alpha(n);
    CHECK(xi(n).str() == x.get_str());
    CHECK(alpha(n) == a);
  }
}

TEST_CASE("extremal profile", "[extremal]") {
  auto const p = extremal_profile(6);
  REQUIRE(p.per_t.size() == 6);
  CHECK(p.per_t == std::vector<BigInt>{1, 16, 27, 16, 5, 1});
  CHECK(p.xi == 27);
  CHECK(p.alpha == 3);
  CHECK(p.maximizers == std::vector<std::size_t>{3});
  auto const two = extremal_profile(2);
  CHECK(two.maximizers == std::vector<std::size_t>{1, 2});
  CHECK(two.alpha == 2);
  for (std::size_t n = 1; n <= 40; ++n) {
    auto const q = extremal_profile(n);
    CHECK(q.xi == *std::max_element(q.per_t.begin(), q.per_t.end()));
    CHECK(q.alpha == q.maximizers.back());
    CHECK(q.alpha == alpha(n));
  }
}

TEST_CASE("xi inequalities", "[extremal]") {
  CHECK(check_xi_inequalities(2));
  CHECK(check_xi_inequalities(50));
  CHECK(xi(5) * xi(2) <= xi(6));
  CHECK_THROWS_AS(check_xi_inequalities(1), ArgumentError);
}

TEST_CASE("max_null examples", "[extremal]") {
  std::vector<Point> b12{0, 1};
  auto const         two = max_null(2, 2, b12, 0);
  CHECK(test::tuples(two) == std::set<test::Tuple>{{1, 1}});
  CHECK(max_null(3, 2, b12, 0).size() == 2);

  std::vector<Point> b125{0, 1, 4};
  auto const         s = max_null(6, 3, b125, 4);
  CHECK(s.size() == 27);
  for (auto const& t : test::example_nullified()) {
    CHECK(s.contains(test::tf(t)));
  }
  CHECK(is_null(s));
  CHECK(zero_of(s) == Transformation::constant(6, 4));
}

TEST_CASE("max_null rejects malformed arguments", "[extremal]") {
  std::vector<Point> b{0, 1};
  CHECK_THROWS_AS(max_null(3, 3, b, 0), ArgumentError);
  CHECK_THROWS_AS(max_null(3, 2, b, 2), ArgumentError);
  std::vector<Point> dup{1, 1};
  CHECK_THROWS_AS(max_null(3, 2, dup, 1), ArgumentError);
  std::vector<Point> out{0, 3};
  CHECK_THROWS_AS(max_null(3, 2, out, 0), ArgumentError);
  CHECK_THROWS_AS(max_null(3, 0, std::vector<Point>{}, 0), ArgumentError);
}

TEST_CASE("max_null sizes and nullity for n <= 8", "[extremal][property]") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const p = extremal_profile(n);
    for (std::size_t t = 1; t <= n; ++t) {
      auto const block = iota_block(t);
      auto const s     = max_null(n, t, block, 0);
      REQUIRE(BigInt(s.size()) == p.per_t[t - 1]);
      CHECK(is_null(s));
      CHECK(is_commutative(s));
      CHECK(zero_of(s) == Transformation::constant(n, 0));
      // Independent membership test for a few elements.
      for (auto const& f : s) {
        for (Point x = 0; x < n; ++x) {
          CHECK(f[x] < t);
          if (x < t) {
            CHECK(f[x] == 0);
          }
        }
      }
    }
    CHECK(BigInt(max_null(n, alpha(n), iota_block(alpha(n)), 0).size()) == xi(n));
  }
}

TEST_CASE("match_max_null recognises the construction", "[extremal]") {
  std::vector<Point> b{0, 2, 4};
  auto const         s     = max_null(6, 3, b, 2);
  auto const         shape = match_max_null(s);
  REQUIRE(shape.has_value());
  CHECK(shape->t == 3);
  CHECK(shape->block == b);
  CHECK(shape->base == 2);
  CHECK_FALSE(match_max_null(s, 2).has_value());
  CHECK_FALSE(match_max_null(test::example_s()).has_value());

  auto const c = Semigroup::closure(3, std::vector{Transformation::constant(3, 1)});
  auto const shape3 = match_max_null(c, 3);
  REQUIRE(shape3.has_value());
  CHECK(shape3->block.size() == 3);
}
