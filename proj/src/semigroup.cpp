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

#include "nilsem/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "nilsem/errors.hpp"

namespace nilsem {

  namespace {

    void sort_unique(std::vector<Transformation>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    void check_degrees(std::size_t n, std::span<Transformation const> maps) {
      for (auto const& f : maps) {
        if (f.degree() != n) {
          throw DomainMismatch("transformation of degree "
                               + std::to_string(f.degree())
                               + " in a semigroup of degree "
                               + std::to_string(n));
        }
      }
    }

    std::string set_string(std::vector<Point> const& pts) {
      std::string out = "{";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        out += (i ? "," : "") + std::to_string(pts[i] + 1);
      }
      return out + "}";
    }

  }  // namespace

  Semigroup Semigroup::closure(std::size_t n, std::span<Transformation const> gens) {
    if (gens.empty()) {
      throw ArgumentError("closure needs at least one generator");
    }
    check_degrees(n, gens);

    std::vector<Transformation>        elts;
    std::unordered_set<Transformation> seen;
    for (auto const& g : gens) {
      if (seen.insert(g).second) {
        elts.push_back(g);
      }
    }
    // Right Cayley graph traversal: every element is a product of
    // generators, so multiplying each new element by each generator on the
    // right reaches the whole semigroup.
    std::vector<Transformation> uniq_gens = elts;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : uniq_gens) {
        auto p = compose(elts[i], g);
        if (seen.insert(p).second) {
          elts.push_back(std::move(p));
        }
      }
    }
    sort_unique(elts);
    return Semigroup(n, std::move(elts));
  }

  Semigroup Semigroup::from_elements(std::size_t n, std::vector<Transformation> elements) {
    if (elements.empty()) {
      throw ArgumentError("a semigroup must be nonempty");
    }
    check_degrees(n, elements);
    sort_unique(elements);
    if (auto bad = find_unclosed_pair(elements)) {
      throw ArgumentError("set is not closed: (" + to_string(bad->first)
                          + ") * (" + to_string(bad->second)
                          + ") is missing");
    }
    return Semigroup(n, std::move(elements));
  }

  bool Semigroup::contains(Transformation const& f) const {
    return std::binary_search(elements_.begin(), elements_.end(), f);
  }

  std::optional<std::pair<Transformation, Transformation>>
  find_unclosed_pair(std::span<Transformation const> elements) {
    std::unordered_set<Transformation> members(elements.begin(), elements.end());
    for (auto const& f : elements) {
      for (auto const& g : elements) {
        if (!members.contains(compose(f, g))) {
          return std::make_pair(f, g);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Transformation> zero_of(Semigroup const& s) {
    for (auto const& e : s) {
      bool is_zero = std::all_of(s.begin(), s.end(), [&e](auto const& f) {
        return compose(e, f) == e && compose(f, e) == e;
      });
      if (is_zero) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool is_commutative(Semigroup const& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (compose(s[i], s[j]) != compose(s[j], s[i])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::size_t> nilpotency_index(Semigroup const& s) {
    auto const zero = zero_of(s);
    if (!zero) {
      return std::nullopt;
    }
    std::vector<Transformation> current = s.elements();
    for (std::size_t k = 1; k <= s.degree(); ++k) {
      if (current.size() == 1 && current.front() == *zero) {
        return k;
      }
      std::unordered_set<Transformation> next;
      for (auto const& f : current) {
        for (auto const& g : s) {
          next.insert(compose(f, g));
        }
      }
      std::vector<Transformation> next_sorted(next.begin(), next.end());
      std::sort(next_sorted.begin(), next_sorted.end());
      if (next_sorted == current) {
        return std::nullopt;  // S^k = S^(k+1) != {0}
      }
      current = std::move(next_sorted);
    }
    return std::nullopt;
  }

  bool is_nilpotent(Semigroup const& s) {
    return nilpotency_index(s).has_value();
  }

  bool is_null(Semigroup const& s) {
    auto idx = nilpotency_index(s);
    return idx && *idx <= 2;
  }

  StructureReport check_structure(Semigroup const& s) {
    if (!is_nilpotent(s)) {
      throw PreconditionError("check_structure requires a nilpotent semigroup");
    }
    auto const       n = s.degree();
    StructureReport  report;
    report.zero      = *zero_of(s);
    auto const& e    = report.zero;
    auto const  im_e = e.image_set();

    for (auto const& f : s) {
      for (auto x : im_e) {
        if (f[x] != x) {
          report.fixed_zero_image.holds = false;
          report.fixed_zero_image.witnesses.push_back(
              "(" + to_string(f) + ") moves " + std::to_string(x + 1));
        }
      }
      for (Point y = 0; y < n; ++y) {
        if (e[y] == y) {
          continue;  // y is the root of its block
        }
        if (e[f[y]] != e[y] || f[y] == y) {
          report.block_descent.holds = false;
          report.block_descent.witnesses.push_back(
              "(" + to_string(f) + ") sends " + std::to_string(y + 1) + " to "
              + std::to_string(f[y] + 1));
        }
      }
    }

    std::vector<bool> covered(n, false);
    for (auto const& f : s) {
      for (auto x : f.images()) {
        covered[x] = true;
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (covered[x]) {
        report.image_union.push_back(x);
      }
    }
    if (im_e.size() == 1 && n >= 2 && report.image_union.size() == n) {
      report.proper_image_union.holds = false;
      report.proper_image_union.witnesses.push_back("images cover all of X");
    }
    return report;
  }

  std::string to_string(StructureReport const& report) {
    std::string out;
    for (auto const* p : {&report.fixed_zero_image,
                          &report.block_descent,
                          &report.proper_image_union}) {
      out += (p->holds ? "  [ok]   " : "  [FAIL] ") + p->name + "\n";
      for (auto const& w : p->witnesses) {
        out += "           " + w + "\n";
      }
    }
    out += "  image union: " + set_string(report.image_union) + "\n";
    return out;
  }

}  // namespace nilsem
