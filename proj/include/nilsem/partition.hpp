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

#ifndef NILSEM_PARTITION_HPP_
#define NILSEM_PARTITION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilsem/semigroup.hpp"
#include "nilsem/transform.hpp"

namespace nilsem {

  // The layered partition A_0, A_1, ..., A_k of X determined by a nilpotent
  // semigroup S whose zero e has rank 1:
  //
  //   A_0 = im e,
  //   A_j = the points outside A_0 u ... u A_(j-1) that every element of S
  //         sends into A_0 u ... u A_(j-1).
  //
  // ordering lists A_0, then A_1, then A_2, ..., ascending inside a block.
  struct SPartition {
    std::size_t                     n = 0;
    std::vector<std::vector<Point>> blocks;
    std::vector<Point>              ordering;
    // block_of[x] is the index j with x in A_j.
    std::vector<std::size_t> block_of;
    // position[x] is the index of x in ordering.
    std::vector<std::size_t> position;

    Point base() const noexcept {
      return ordering.front();
    }
    // |A_0 u A_1|, the length of the trunk of the word tree.
    std::size_t trunk_length() const noexcept {
      return blocks.size() > 1 ? 1 + blocks[1].size() : 1;
    }
  };

  // Throws PreconditionError unless s is nilpotent with a zero of rank 1,
  // InvariantViolation if the layers stall or the result fails its own
  // validation.
  SPartition s_partition(Semigroup const& s);

  // Violations of the defining conditions of p as an S-partition of s;
  // empty when p is valid.
  std::vector<std::string> partition_violations(Semigroup const& s, SPartition const& p);

  // Letter i is the image of the i-th point of p.ordering under f. Throws
  // DomainMismatch on degree mismatch, ArgumentError if f is not in s.
  std::vector<Point> ordered_word(Semigroup const&      s,
                                  SPartition const&     p,
                                  Transformation const& f);

  // For commutative s: if f1 and f2 agree on A_0 u ... u A_(i-1) then
  // (x f1) g == (x f2) g for every x in A_i and g in s. Returns a
  // description of the first counterexample, if any.
  std::optional<std::string> main_lemma_violation(Semigroup const& s, SPartition const& p);

  // "A0={5} A1={1} A2={2,4,6} A3={3}", 1-based.
  std::string to_string(SPartition const& p);

  // Points concatenated, 1-based, with "." between letters once n > 9.
  std::string word_string(std::vector<Point> const& word, std::size_t n);

}  // namespace nilsem

#endif  // NILSEM_PARTITION_HPP_
