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

#ifndef NILSEM_SEARCH_HPP_
#define NILSEM_SEARCH_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nilsem/semigroup.hpp"
#include "nilsem/transform.hpp"

namespace nilsem {

  // All f in T_n with compose(f, e) == compose(e, f) == e and
  // power(f, n) == e, sorted. For e = constant(n, p) these are the maps
  // whose functional graph is a tree rooted at p. Throws ArgumentError
  // unless e is idempotent.
  std::vector<Transformation> nilpotent_pool(std::size_t n, Transformation const& e);

  // One idempotent per conjugacy class: the blocks of the kernel are runs
  // of consecutive points with sizes a partition of n (largest first), and
  // each block is sent to its first point.
  std::vector<Transformation> idempotent_representatives(std::size_t n);

  enum class SearchMode { rank1, all_zeros };

  struct SearchOptions {
    SearchMode                mode    = SearchMode::rank1;
    std::chrono::milliseconds budget  = std::chrono::seconds(60);
    unsigned                  threads = 1;
  };

  struct ZeroClassSummary {
    Transformation           zero;
    std::vector<std::size_t> block_sizes;
    std::size_t              pool_size = 0;
    // Largest commutative subsemigroup found with this zero.
    std::size_t best = 0;
  };

  // Certificate of an exhaustive search for the largest commutative
  // nilpotent subsemigroups of T_n.
  //
  // rank1: the zero is the constant map at point 0 (every rank-1 zero is
  // conjugate to it), maximizers are listed for that zero only.
  // all_zeros: every idempotent up to conjugacy is tried as the zero, and
  // the maximizers found are closed under relabelling points (n <= 6), so
  // the list is every maximizer in T_n.
  struct SearchReport {
    std::size_t            n    = 0;
    SearchMode             mode = SearchMode::rank1;
    std::size_t            max_size = 0;
    std::vector<Semigroup> maximizers;
    std::uint64_t          nodes_explored  = 0;
    double                 elapsed_seconds = 0;
    // The whole search space was exhausted within the budget.
    bool certified = false;

    // Cross-checks, meaningful when certified.
    bool max_equals_xi            = false;
    bool maximizers_null          = false;
    bool maximizers_characterized = false;
    // For each maximizer with a rank-1 zero, the t of its max_null shape
    // (0 for maximizers that do not have one).
    std::vector<std::size_t> maximizer_t;
    // Commutative nilpotent semigroups met during the search that are
    // larger than xi(n). Any nonzero value contradicts the bound.
    std::uint64_t xi_bound_violations = 0;

    std::vector<ZeroClassSummary> zero_classes;
  };

  SearchReport certify_max(std::size_t n, SearchOptions const& options = {});

  // A commutative nilpotent subsemigroup of T_n with zero constant(n, 0),
  // grown from seed by adding random members of the rank-1 nilpotent pool
  // that commute with everything so far. Stops at target_size_hint
  // elements or after too many rejected candidates. Deterministic in
  // (n, seed, target_size_hint).
  Semigroup random_cn(std::size_t n, std::uint64_t seed, std::size_t target_size_hint);

  std::string to_string(SearchMode mode);
  std::string to_string(SearchReport const& report);

}  // namespace nilsem

#endif  // NILSEM_SEARCH_HPP_
