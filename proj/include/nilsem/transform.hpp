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

#ifndef NILSEM_TRANSFORM_HPP_
#define NILSEM_TRANSFORM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nilsem {

  // Points of X = {0, ..., n - 1}. All C++ interfaces are 0-based; the text
  // and JSON formats, the CLI and the Python module are 1-based.
  using Point = std::uint32_t;

  // A total map of {0, ..., n - 1} to itself, acting on the right: for
  // transformations f and g, compose(f, g) applies f first and then g.
  //
  // Values are immutable, compare structurally and are ordered
  // lexicographically by their image tuples.
  class Transformation {
   public:
    Transformation() = default;

    // Throws RangeError if some image is >= images.size(), ArgumentError if
    // images is empty.
    explicit Transformation(std::vector<Point> images);
    Transformation(std::initializer_list<Point> images)
        : Transformation(std::vector<Point>(images)) {}

    // Images given in the 1-based external convention.
    static Transformation from_one_based(std::span<Point const> images);
    static Transformation from_one_based(std::initializer_list<Point> images) {
      return from_one_based(std::span<Point const>(images.begin(), images.size()));
    }

    static Transformation identity(std::size_t n);
    // Throws RangeError unless p < n.
    static Transformation constant(std::size_t n, Point p);

    std::size_t degree() const noexcept {
      return images_.size();
    }

    Point operator[](Point x) const noexcept {
      return images_[x];
    }

    std::span<Point const> images() const noexcept {
      return images_;
    }

    // Number of distinct images.
    std::size_t rank() const;
    // Sorted set of images.
    std::vector<Point> image_set() const;
    bool is_idempotent() const;

    friend bool operator==(Transformation const&, Transformation const&) = default;
    friend auto operator<=>(Transformation const&, Transformation const&) = default;

   private:
    std::vector<Point> images_;
  };

  // x -> g[f[x]]. Throws DomainMismatch if the degrees differ.
  Transformation compose(Transformation const& f, Transformation const& g);

  // m-fold composite of f with itself; throws ArgumentError if m == 0.
  Transformation power(Transformation const& f, std::size_t m);

  // Image tuple, 1-based and space separated, e.g. "5 5 1 5 5 5".
  std::string to_string(Transformation const& f);

  // Relabel points by the permutation p: the result is p^-1 f p.
  Transformation conjugate(Transformation const& f, Transformation const& p);

}  // namespace nilsem

template <>
struct std::hash<nilsem::Transformation> {
  std::size_t operator()(nilsem::Transformation const& f) const noexcept {
    std::size_t h = f.degree();
    for (auto x : f.images()) {
      h = h * 0x100000001b3ULL ^ (x + 0x9e3779b97f4a7c15ULL);
    }
    return h;
  }
};

#endif  // NILSEM_TRANSFORM_HPP_
