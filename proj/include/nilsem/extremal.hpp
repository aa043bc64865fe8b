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

#ifndef NILSEM_EXTREMAL_HPP_
#define NILSEM_EXTREMAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilsem/semigroup.hpp"
#include "nilsem/transform.hpp"

namespace nilsem {

  using BigInt = boost::multiprecision::cpp_int;

  // xi(n) = max { t^(n - t) : 1 <= t <= n }, the largest size of a null
  // subsemigroup of T_n. Exact for every n >= 1; throws ArgumentError for
  // n == 0.
  BigInt xi(std::size_t n);

  // The largest t attaining xi(n).
  std::size_t alpha(std::size_t n);

  struct ExtremalProfile {
    std::size_t n = 0;
    BigInt      xi;
    std::size_t alpha = 0;
    // per_t[t - 1] == t^(n - t)
    std::vector<BigInt> per_t;
    // Every t with t^(n - t) == xi, ascending. alpha is the last entry.
    std::vector<std::size_t> maximizers;
  };

  ExtremalProfile extremal_profile(std::size_t n);

  // xi(1) == xi(2), xi strictly increasing from 2 to max_n, and
  // xi(a) * xi(b) <= xi(a + b - 1) whenever a + b - 1 <= max_n.
  bool check_xi_inequalities(std::size_t max_n);

  // All f in T_n with block * f == {base} and im f inside block. This is a
  // null semigroup of size t^(n - t) where t = |block|, with zero the
  // constant map at base.
  //
  // Throws ArgumentError unless block has t distinct points < n and
  // contains base.
  Semigroup max_null(std::size_t n, std::size_t t, std::span<Point const> block, Point base);

  struct MaxNullShape {
    std::size_t        t = 0;
    std::vector<Point> block;
    Point              base = 0;
  };

  // Recognises the output of max_null: returns its parameters if s equals
  // max_null(n, t, block, base) for some block containing base. When t is
  // not given it is read off the union of images; the single constant map
  // then matches with t == 1 (it also equals the t == n construction).
  std::optional<MaxNullShape> match_max_null(Semigroup const&         s,
                                             std::optional<std::size_t> t = {});

}  // namespace nilsem

#endif  // NILSEM_EXTREMAL_HPP_
