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

#include "nilsem/transform.hpp"

#include <algorithm>
#include <numeric>

#include "nilsem/errors.hpp"

namespace nilsem {

  Transformation::Transformation(std::vector<Point> images)
      : images_(std::move(images)) {
    if (images_.empty()) {
      throw ArgumentError("a transformation needs at least one point");
    }
    auto const n = images_.size();
    for (auto x : images_) {
      if (x >= n) {
        throw RangeError("image " + std::to_string(x + 1)
                         + " out of range for degree " + std::to_string(n));
      }
    }
  }

  Transformation Transformation::from_one_based(std::span<Point const> images) {
    std::vector<Point> zero_based;
    zero_based.reserve(images.size());
    for (auto x : images) {
      if (x == 0 || x > images.size()) {
        throw RangeError("image " + std::to_string(x)
                         + " out of range 1.." + std::to_string(images.size()));
      }
      zero_based.push_back(x - 1);
    }
    return Transformation(std::move(zero_based));
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point(0));
    return Transformation(std::move(im));
  }

  Transformation Transformation::constant(std::size_t n, Point p) {
    if (p >= n) {
      throw RangeError("constant value " + std::to_string(p + 1)
                       + " out of range 1.." + std::to_string(n));
    }
    return Transformation(std::vector<Point>(n, p));
  }

  std::size_t Transformation::rank() const {
    return image_set().size();
  }

  std::vector<Point> Transformation::image_set() const {
    std::vector<bool> seen(degree(), false);
    for (auto x : images_) {
      seen[x] = true;
    }
    std::vector<Point> out;
    for (Point x = 0; x < degree(); ++x) {
      if (seen[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool Transformation::is_idempotent() const {
    return std::all_of(images_.begin(), images_.end(), [this](Point y) {
      return images_[y] == y;
    });
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw DomainMismatch("cannot compose transformations of degree "
                           + std::to_string(f.degree()) + " and "
                           + std::to_string(g.degree()));
    }
    std::vector<Point> im(f.degree());
    for (Point x = 0; x < f.degree(); ++x) {
      im[x] = g[f[x]];
    }
    return Transformation(std::move(im));
  }

  Transformation power(Transformation const& f, std::size_t m) {
    if (m == 0) {
      throw ArgumentError("power exponent must be positive");
    }
    // Square-and-multiply; composition of powers of one map commutes.
    Transformation result = f;
    Transformation base   = f;
    --m;
    while (m > 0) {
      if (m & 1) {
        result = compose(result, base);
      }
      m >>= 1;
      if (m > 0) {
        base = compose(base, base);
      }
    }
    return result;
  }

  std::string to_string(Transformation const& f) {
    std::string out;
    for (auto x : f.images()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += std::to_string(x + 1);
    }
    return out;
  }

  Transformation conjugate(Transformation const& f, Transformation const& p) {
    if (f.degree() != p.degree()) {
      throw DomainMismatch("conjugating permutation has the wrong degree");
    }
    if (p.rank() != p.degree()) {
      throw ArgumentError("conjugating map is not a permutation");
    }
    // (x p) (p^-1 f p) = (x f) p
    std::vector<Point> im(f.degree());
    for (Point x = 0; x < f.degree(); ++x) {
      im[p[x]] = p[f[x]];
    }
    return Transformation(std::move(im));
  }

}  // namespace nilsem
