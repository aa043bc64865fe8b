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

#include "nilsem/partition.hpp"

#include <algorithm>
#include <map>

#include "nilsem/errors.hpp"

namespace nilsem {

  namespace {
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  }

  SPartition s_partition(Semigroup const& s) {
    if (!is_nilpotent(s)) {
      throw PreconditionError("S-partition requires a nilpotent semigroup");
    }
    auto const zero = *zero_of(s);
    if (zero.rank() != 1) {
      throw PreconditionError("S-partition requires a zero of rank 1, got rank "
                              + std::to_string(zero.rank()));
    }
    auto const n = s.degree();

    SPartition p;
    p.n = n;
    p.block_of.assign(n, unassigned);
    p.blocks.push_back({zero[0]});
    p.block_of[zero[0]] = 0;
    std::size_t assigned = 1;

    while (assigned < n) {
      auto const         j = p.blocks.size();
      std::vector<Point> layer;
      for (Point x = 0; x < n; ++x) {
        if (p.block_of[x] != unassigned) {
          continue;
        }
        bool lands_below = std::all_of(s.begin(), s.end(), [&](auto const& f) {
          return p.block_of[f[x]] < j;
        });
        if (lands_below) {
          layer.push_back(x);
        }
      }
      if (layer.empty()) {
        throw InvariantViolation("S-partition stalled at layer " + std::to_string(j));
      }
      for (auto x : layer) {
        p.block_of[x] = j;
      }
      assigned += layer.size();
      p.blocks.push_back(std::move(layer));
    }

    p.position.assign(n, 0);
    for (auto const& block : p.blocks) {
      for (auto x : block) {
        p.position[x] = p.ordering.size();
        p.ordering.push_back(x);
      }
    }

    if (auto bad = partition_violations(s, p); !bad.empty()) {
      throw InvariantViolation("computed S-partition is invalid: " + bad.front());
    }
    return p;
  }

  std::vector<std::string> partition_violations(Semigroup const& s, SPartition const& p) {
    std::vector<std::string> out;
    auto const               n = s.degree();
    if (p.n != n || p.block_of.size() != n || p.ordering.size() != n) {
      out.push_back("partition has the wrong degree");
      return out;
    }
    auto const zero = zero_of(s);
    if (!zero) {
      out.push_back("semigroup has no zero");
      return out;
    }
    if (p.blocks.empty() || p.blocks[0] != zero->image_set()) {
      out.push_back("A0 is not the image of the zero");
    }

    std::vector<std::size_t> seen(n, 0);
    for (std::size_t j = 0; j < p.blocks.size(); ++j) {
      if (p.blocks[j].empty()) {
        out.push_back("A" + std::to_string(j) + " is empty");
      }
      for (auto x : p.blocks[j]) {
        if (x >= n) {
          out.push_back("point out of range in A" + std::to_string(j));
          return out;
        }
        ++seen[x];
        if (p.block_of[x] != j) {
          out.push_back("block_of disagrees with A" + std::to_string(j));
        }
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (seen[x] != 1) {
        out.push_back("point " + std::to_string(x + 1) + " is covered "
                      + std::to_string(seen[x]) + " times");
      }
    }
    if (!out.empty()) {
      return out;
    }

    for (Point x = 0; x < n; ++x) {
      auto const j = p.block_of[x];
      if (j == 0) {
        continue;
      }
      // Every element sends x strictly below A_j ...
      std::size_t highest = 0;
      for (auto const& f : s) {
        highest = std::max(highest, p.block_of[f[x]]);
      }
      if (highest >= j) {
        out.push_back("point " + std::to_string(x + 1) + " of A" + std::to_string(j)
                      + " is not sent below its block");
      }
      // ... and x could not have been placed any earlier.
      if (highest + 1 < j) {
        out.push_back("point " + std::to_string(x + 1) + " of A" + std::to_string(j)
                      + " belongs to an earlier block");
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (p.position[p.ordering[i]] != i) {
        out.push_back("ordering and position disagree");
        break;
      }
      if (i > 0 && (p.block_of[p.ordering[i - 1]] > p.block_of[p.ordering[i]]
                    || (p.block_of[p.ordering[i - 1]] == p.block_of[p.ordering[i]]
                        && p.ordering[i - 1] > p.ordering[i]))) {
        out.push_back("ordering is not by block, then ascending");
        break;
      }
    }
    return out;
  }

  std::vector<Point> ordered_word(Semigroup const& s, SPartition const& p, Transformation const& f) {
    if (f.degree() != s.degree() || p.n != s.degree()) {
      throw DomainMismatch("ordered_word: degree mismatch");
    }
    if (!s.contains(f)) {
      throw ArgumentError("ordered_word: (" + to_string(f) + ") is not in the semigroup");
    }
    std::vector<Point> word(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
      word[i] = f[p.ordering[i]];
    }
    return word;
  }

  std::optional<std::string> main_lemma_violation(Semigroup const& s, SPartition const& p) {
    auto const n = s.degree();
    for (std::size_t i = 1; i < p.blocks.size(); ++i) {
      // Points of A_0 u ... u A_(i-1), i.e. a prefix of the ordering.
      std::size_t below = 0;
      while (below < n && p.block_of[p.ordering[below]] < i) {
        ++below;
      }
      std::map<std::vector<Point>, std::vector<std::size_t>> by_restriction;
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<Point> key(below);
        for (std::size_t r = 0; r < below; ++r) {
          key[r] = s[k][p.ordering[r]];
        }
        by_restriction[key].push_back(k);
      }
      for (auto const& [key, group] : by_restriction) {
        auto const& first = s[group.front()];
        for (auto k : group) {
          for (auto x : p.blocks[i]) {
            for (auto const& g : s) {
              if (g[first[x]] != g[s[k][x]]) {
                return "point " + std::to_string(x + 1) + ": (" + to_string(first)
                       + ") and (" + to_string(s[k]) + ") agree below A"
                       + std::to_string(i) + " but differ after (" + to_string(g) + ")";
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::string to_string(SPartition const& p) {
    std::string out;
    for (std::size_t j = 0; j < p.blocks.size(); ++j) {
      if (j) {
        out += ' ';
      }
      out += "A" + std::to_string(j) + "={";
      for (std::size_t i = 0; i < p.blocks[j].size(); ++i) {
        out += (i ? "," : "") + std::to_string(p.blocks[j][i] + 1);
      }
      out += "}";
    }
    return out;
  }

  std::string word_string(std::vector<Point> const& word, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i > 0 && n > 9) {
        out += '.';
      }
      out += std::to_string(word[i] + 1);
    }
    return out;
  }

}  // namespace nilsem
