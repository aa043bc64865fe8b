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

#include "nilsem/extremal.hpp"

#include <algorithm>

#include "nilsem/errors.hpp"

namespace nilsem {

  namespace {

    // Refuse to materialise semigroups beyond this many elements.
    constexpr std::size_t max_enumerated_size = std::size_t(1) << 22;

    BigInt term(std::size_t n, std::size_t t) {
      return boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(n - t));
    }

    void require_positive(std::size_t n) {
      if (n == 0) {
        throw ArgumentError("n must be positive");
      }
    }

  }  // namespace

  // (n - t) log t is strictly concave in t, so the comparison
  // (t + 1)^(n - t - 1) >= t^(n - t) holds on an initial segment of
  // 1..n-1 and fails afterwards. alpha is one past the last t where it
  // holds, which a binary search finds with O(log n) exact comparisons.
  std::size_t alpha(std::size_t n) {
    require_positive(n);
    std::size_t lo = 1, hi = n;  // answer in [lo, hi]
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (term(n, mid + 1) >= term(n, mid)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  BigInt xi(std::size_t n) {
    return term(n, alpha(n));
  }

  ExtremalProfile extremal_profile(std::size_t n) {
    require_positive(n);
    ExtremalProfile p;
    p.n = n;
    p.per_t.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) {
      p.per_t.push_back(term(n, t));
    }
    p.xi = *std::max_element(p.per_t.begin(), p.per_t.end());
    for (std::size_t t = 1; t <= n; ++t) {
      if (p.per_t[t - 1] == p.xi) {
        p.maximizers.push_back(t);
      }
    }
    p.alpha = p.maximizers.back();
    return p;
  }

  bool check_xi_inequalities(std::size_t max_n) {
    if (max_n < 2) {
      throw ArgumentError("check_xi_inequalities needs max_n >= 2");
    }
    std::vector<BigInt> table(max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n) {
      table[n] = xi(n);
    }
    if (table[1] != table[2]) {
      return false;
    }
    for (std::size_t n = 2; n < max_n; ++n) {
      if (!(table[n] < table[n + 1])) {
        return false;
      }
    }
    for (std::size_t a = 1; a <= max_n; ++a) {
      for (std::size_t b = 1; a + b - 1 <= max_n; ++b) {
        if (table[a] * table[b] > table[a + b - 1]) {
          return false;
        }
      }
    }
    return true;
  }

  Semigroup max_null(std::size_t n, std::size_t t, std::span<Point const> block, Point base) {
    require_positive(n);
    if (t == 0 || t > n || block.size() != t) {
      throw ArgumentError("block must have exactly t points with 1 <= t <= n");
    }
    std::vector<bool> in_block(n, false);
    for (auto x : block) {
      if (x >= n) {
        throw ArgumentError("block point " + std::to_string(x + 1) + " out of range");
      }
      if (in_block[x]) {
        throw ArgumentError("block has a repeated point " + std::to_string(x + 1));
      }
      in_block[x] = true;
    }
    if (base >= n || !in_block[base]) {
      throw ArgumentError("base point must lie in the block");
    }
    if (term(n, t) > max_enumerated_size) {
      throw ArgumentError("max_null(" + std::to_string(n) + ", " + std::to_string(t)
                          + ") is too large to enumerate");
    }

    std::vector<Point> free_points;
    for (Point x = 0; x < n; ++x) {
      if (!in_block[x]) {
        free_points.push_back(x);
      }
    }
    std::vector<Point> values(block.begin(), block.end());
    std::sort(values.begin(), values.end());

    // Odometer over the choices of block value for each free point.
    std::vector<std::size_t>    digit(free_points.size(), 0);
    std::vector<Transformation> out;
    std::vector<Point>          im(n, base);
    while (true) {
      for (std::size_t i = 0; i < free_points.size(); ++i) {
        im[free_points[i]] = values[digit[i]];
      }
      out.emplace_back(im);
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == t) {
        digit[i++] = 0;
      }
      if (i == digit.size()) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    return Semigroup::from_sorted_unchecked(n, std::move(out));
  }

  std::optional<MaxNullShape> match_max_null(Semigroup const& s, std::optional<std::size_t> t) {
    auto const n    = s.degree();
    auto const zero = zero_of(s);
    if (!zero || zero->rank() != 1) {
      return std::nullopt;
    }
    MaxNullShape shape;
    shape.base = (*zero)[0];

    std::vector<bool> in_union(n, false);
    for (auto const& f : s) {
      for (auto x : f.images()) {
        in_union[x] = true;
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (in_union[x]) {
        shape.block.push_back(x);
      }
    }
    if (t && *t == n && n > 1) {
      // The full block: only the constant map.
      shape.block.resize(n);
      for (Point x = 0; x < n; ++x) {
        shape.block[x] = x;
      }
    }
    shape.t = shape.block.size();
    if (t && *t != shape.t) {
      return std::nullopt;
    }
    if (term(n, shape.t) != s.size()) {
      return std::nullopt;
    }
    for (auto const& f : s) {
      for (auto x : shape.block) {
        if (f[x] != shape.base) {
          return std::nullopt;
        }
      }
    }
    // Every element lies in max_null(n, t, block, base) and the sizes agree.
    return shape;
  }

}  // namespace nilsem
