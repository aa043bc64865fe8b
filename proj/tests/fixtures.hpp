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

// Shared data and naive reference implementations for the tests. The
// helpers here work on plain 1-based vectors and never call into the
// library, so they can serve as oracles.

#ifndef NILSEM_TESTS_FIXTURES_HPP_
#define NILSEM_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nilsem/semigroup.hpp"
#include "nilsem/transform.hpp"

namespace nilsem::test {

  using Tuple = std::vector<int>;  // 1-based images

  inline Transformation tf(Tuple const& t) {
    std::vector<Point> im;
    for (int v : t) {
      im.push_back(static_cast<Point>(v - 1));
    }
    return Transformation(std::move(im));
  }

  inline Tuple tuple(Transformation const& f) {
    Tuple t;
    for (auto x : f.images()) {
      t.push_back(static_cast<int>(x) + 1);
    }
    return t;
  }

  inline std::set<Tuple> tuples(Semigroup const& s) {
    std::set<Tuple> out;
    for (auto const& f : s) {
      out.insert(tuple(f));
    }
    return out;
  }

  // The five-map example on six points.
  inline std::vector<Tuple> example_tuples() {
    return {{5, 5, 5, 5, 5, 5},
            {5, 5, 1, 5, 5, 5},
            {5, 1, 2, 1, 5, 1},
            {5, 1, 4, 1, 5, 1},
            {5, 1, 6, 1, 5, 1}};
  }

  inline std::vector<Transformation> example_maps() {
    std::vector<Transformation> out;
    for (auto const& t : example_tuples()) {
      out.push_back(tf(t));
    }
    return out;
  }

  inline Semigroup example_s() {
    return Semigroup::from_elements(6, example_maps());
  }

  inline std::set<Tuple> example_nullified() {
    return {{5, 5, 5, 5, 5, 5},
            {5, 5, 1, 5, 5, 5},
            {5, 5, 5, 5, 5, 1},
            {5, 5, 1, 5, 5, 1},
            {5, 5, 2, 5, 5, 1}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Naive oracles
  ////////////////////////////////////////////////////////////////////////

  inline Tuple naive_compose(Tuple const& f, Tuple const& g) {
    Tuple h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      h[x] = g[f[x] - 1];
    }
    return h;
  }

  inline std::set<Tuple> naive_closure(std::set<Tuple> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Tuple> v(s.begin(), s.end());
      for (auto const& a : v) {
        for (auto const& b : v) {
          grew |= s.insert(naive_compose(a, b)).second;
        }
      }
    }
    return s;
  }

  inline bool naive_commutative(std::set<Tuple> const& s) {
    for (auto const& a : s) {
      for (auto const& b : s) {
        if (naive_compose(a, b) != naive_compose(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  // Smallest m with S^m a single element z that is a two-sided zero, or 0.
  inline std::size_t naive_nilpotency_index(std::set<Tuple> const& s) {
    std::set<Tuple> power = s;
    for (std::size_t m = 1; m <= s.begin()->size() + 1; ++m) {
      if (power.size() == 1) {
        auto const& z = *power.begin();
        bool        zero = true;
        for (auto const& a : s) {
          zero = zero && naive_compose(a, z) == z && naive_compose(z, a) == z;
        }
        return zero ? m : 0;
      }
      std::set<Tuple> next;
      for (auto const& a : power) {
        for (auto const& b : s) {
          next.insert(naive_compose(a, b));
        }
      }
      power = std::move(next);
    }
    return 0;
  }

  inline std::vector<Tuple> all_maps(int n) {
    std::vector<Tuple> out;
    Tuple              t(n, 1);
    while (true) {
      out.push_back(t);
      int i = n - 1;
      while (i >= 0 && t[i] == n) {
        t[i--] = 1;
      }
      if (i < 0) {
        return out;
      }
      ++t[i];
    }
  }

  inline Transformation random_map(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Point> d(0, static_cast<Point>(n - 1));
    std::vector<Point>                   im(n);
    for (auto& x : im) {
      x = d(rng);
    }
    return Transformation(std::move(im));
  }

  inline Transformation random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Point> im(n);
    for (Point x = 0; x < n; ++x) {
      im[x] = x;
    }
    std::shuffle(im.begin(), im.end(), rng);
    return Transformation(std::move(im));
  }

}  // namespace nilsem::test

#endif  // NILSEM_TESTS_FIXTURES_HPP_
