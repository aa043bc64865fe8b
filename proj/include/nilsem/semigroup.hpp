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

#ifndef NILSEM_SEMIGROUP_HPP_
#define NILSEM_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilsem/transform.hpp"

namespace nilsem {

  // A nonempty, composition-closed set of transformations of a common
  // degree. Elements are stored sorted and deduplicated, so two Semigroup
  // objects are equal iff they hold the same set of maps.
  class Semigroup {
   public:
    using const_iterator = std::vector<Transformation>::const_iterator;

    // Smallest closed superset of gens. Throws ArgumentError if gens is
    // empty, DomainMismatch if some generator does not have degree n.
    static Semigroup closure(std::size_t n, std::span<Transformation const> gens);

    // Wraps an already closed set. Throws ArgumentError if elements is
    // empty or not closed under composition.
    static Semigroup from_elements(std::size_t n, std::vector<Transformation> elements);

    // For constructions that are closed by design (max_null, search
    // states). elements must be nonempty, sorted and deduplicated; nothing
    // is checked.
    static Semigroup from_sorted_unchecked(std::size_t n, std::vector<Transformation> sorted) {
      return Semigroup(n, std::move(sorted));
    }

    std::size_t degree() const noexcept {
      return n_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::vector<Transformation> const& elements() const noexcept {
      return elements_;
    }
    Transformation const& operator[](std::size_t i) const noexcept {
      return elements_[i];
    }
    const_iterator begin() const noexcept {
      return elements_.cbegin();
    }
    const_iterator end() const noexcept {
      return elements_.cend();
    }

    bool contains(Transformation const& f) const;

    friend bool operator==(Semigroup const&, Semigroup const&) = default;
    friend auto operator<=>(Semigroup const&, Semigroup const&) = default;

   private:
    Semigroup(std::size_t n, std::vector<Transformation> sorted)
        : n_(n), elements_(std::move(sorted)) {}

    std::size_t                 n_ = 0;
    std::vector<Transformation> elements_;
  };

  // Returns a pair (f, g) of members whose product compose(f, g) is not a
  // member, or nothing if the set is closed. Does not require sorted input.
  std::optional<std::pair<Transformation, Transformation>>
  find_unclosed_pair(std::span<Transformation const> elements);

  // The element e with compose(e, f) == compose(f, e) == e for all f.
  std::optional<Transformation> zero_of(Semigroup const& s);

  bool is_commutative(Semigroup const& s);

  // Smallest m with S^m = {zero}; nothing if S has no zero or is not
  // nilpotent. Only powers up to S^n are formed: a nilpotent subsemigroup
  // of T_n always has index at most n, since every product of k elements
  // pushes each point at least k layers down the S-partition of the block
  // of the zero containing it, and there are fewer than n such layers.
  std::optional<std::size_t> nilpotency_index(Semigroup const& s);

  bool is_nilpotent(Semigroup const& s);
  // Index at most 2, i.e. every product of two elements is the zero.
  bool is_null(Semigroup const& s);

  // Diagnostic produced by check_structure. Each property carries the
  // witnesses that violate it (empty when it holds).
  struct StructureReport {
    struct Property {
      std::string              name;
      bool                     holds = true;
      std::vector<std::string> witnesses;
    };

    Transformation zero;
    // Every point of im e is fixed by every element.
    Property fixed_zero_image{"points of im(zero) are fixed by every element", true, {}};
    // Each block x e^-1 is invariant and its other points move inside it.
    Property block_descent{"non-root points move within their zero-block", true, {}};
    // For a rank-1 zero and n >= 2 the images do not cover X.
    Property proper_image_union{"union of images is a proper subset of X", true, {}};
    // Union of im f over all elements f, sorted.
    std::vector<Point> image_union;

    bool ok() const noexcept {
      return fixed_zero_image.holds && block_descent.holds
             && proper_image_union.holds;
    }
  };

  // Throws PreconditionError unless s is nilpotent.
  StructureReport check_structure(Semigroup const& s);

  std::string to_string(StructureReport const& report);

}  // namespace nilsem

#endif  // NILSEM_SEMIGROUP_HPP_
