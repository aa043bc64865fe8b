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

#include "nilsem/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "nilsem/errors.hpp"
#include "nilsem/extremal.hpp"

namespace nilsem {

  using Clock = std::chrono::steady_clock;

  std::vector<Transformation> nilpotent_pool(std::size_t n, Transformation const& e) {
    if (e.degree() != n) {
      throw DomainMismatch("nilpotent_pool: zero has the wrong degree");
    }
    if (!e.is_idempotent()) {
      throw ArgumentError("nilpotent_pool: (" + to_string(e) + ") is not idempotent");
    }
    // f must fix im e pointwise (e f = e) and keep every kernel block of e
    // (f e = e), and may not fix any other point. Enumerate those maps and
    // filter on the defining equations.
    std::vector<std::vector<Point>> choices(n);
    for (Point y = 0; y < n; ++y) {
      if (e[y] == y) {
        choices[y] = {y};
        continue;
      }
      for (Point z = 0; z < n; ++z) {
        if (e[z] == e[y] && z != y) {
          choices[y].push_back(z);
        }
      }
    }
    std::vector<Transformation> pool;
    std::vector<std::size_t>    digit(n, 0);
    std::vector<Point>          im(n);
    while (true) {
      for (Point y = 0; y < n; ++y) {
        im[y] = choices[y][digit[y]];
      }
      Transformation f(im);
      if (compose(f, e) == e && compose(e, f) == e && power(f, n) == e) {
        pool.push_back(std::move(f));
      }
      std::size_t i = 0;
      while (i < n && ++digit[i] == choices[i].size()) {
        digit[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  std::vector<Transformation> idempotent_representatives(std::size_t n) {
    std::vector<Transformation>              out;
    std::vector<std::vector<std::size_t>>    parts;
    std::vector<std::size_t>                 current;
    // Partitions of n into non-increasing parts.
    auto gen = [&](auto&& self, std::size_t left, std::size_t cap) -> void {
      if (left == 0) {
        parts.push_back(current);
        return;
      }
      for (std::size_t k = std::min(left, cap); k >= 1; --k) {
        current.push_back(k);
        self(self, left - k, k);
        current.pop_back();
      }
    };
    gen(gen, n, n);
    for (auto const& p : parts) {
      std::vector<Point> im;
      Point              start = 0;
      for (auto size : p) {
        im.insert(im.end(), size, start);
        start += static_cast<Point>(size);
      }
      out.emplace_back(std::move(im));
    }
    return out;
  }

  namespace {

    using Bits = boost::dynamic_bitset<std::uint64_t>;
    using Index = std::uint32_t;

    struct SharedState {
      Clock::time_point          deadline;
      std::atomic<bool>          aborted{false};
      std::atomic<std::size_t>   best{0};
      std::atomic<std::uint64_t> nodes{0};
      std::atomic<std::uint64_t> violations{0};
      std::uint64_t              xi_n = 0;
    };

    // Commutative subsemigroups of a nilpotent pool (all members share the
    // zero e), explored as closed sets. Each closed set is generated
    // exactly once: a child adds candidate v and closes; v and the earlier
    // siblings are then excluded from the rest of the branch, and a child
    // whose closure meets the excluded set is dropped because its whole
    // subtree belongs to an earlier branch.
    class CommutingSearch {
     public:
      // Builds the commuting and product tables. Stops early and sets
      // shared.aborted if the deadline passes; run() then does nothing.
      CommutingSearch(std::vector<Transformation> pool,
                      Transformation const&       zero,
                      SharedState&                shared)
          : pool_(std::move(pool)) {
        auto const size = pool_.size();
        std::unordered_map<Transformation, Index> index;
        for (Index i = 0; i < size; ++i) {
          index.emplace(pool_[i], i);
        }
        zero_ = index.at(zero);
        commute_.assign(size, Bits(size));
        products_.resize(size);
        for (Index i = 0; i < size; ++i) {
          if ((i & 0x3f) == 0 && Clock::now() > shared.deadline) {
            shared.aborted = true;
            return;
          }
          // Row i receives (i', p) for i' < i from earlier rows first, so
          // every row stays sorted by its first component.
          for (Index j = i; j < size; ++j) {
            auto ij = compose(pool_[i], pool_[j]);
            if (ij != compose(pool_[j], pool_[i])) {
              continue;
            }
            auto it = index.find(ij);
            if (it == index.end()) {
              throw InvariantViolation("product of commuting pool elements left the pool");
            }
            commute_[i].set(j);
            commute_[j].set(i);
            products_[i].emplace_back(j, it->second);
            if (j != i) {
              products_[j].emplace_back(i, it->second);
            }
          }
        }
      }

      std::size_t pool_size() const noexcept {
        return pool_.size();
      }

      // Returns the maximum size found and every closed set of that size.
      std::pair<std::size_t, std::vector<std::vector<Index>>> run(SharedState& shared,
                                                                  unsigned     threads) {
        if (shared.aborted) {
          return {0, {}};
        }
        auto const size = pool_.size();
        State      root;
        root.bits.resize(size);
        add_closed(root, zero_);
        Bits cand = commute_[zero_];
        cand.reset(zero_);
        record(root, shared);

        // Top-level branches are independent once their excluded sets are
        // fixed: branch k excludes the first k candidates.
        std::vector<Index> top;
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
          top.push_back(static_cast<Index>(v));
        }
        std::atomic<std::size_t> next{0};
        std::mutex               merge_mutex;
        std::size_t              best = root.members.size();
        std::vector<std::vector<Index>> found{sorted(root.members)};

        auto worker = [&] {
          Local local;
          while (true) {
            auto k = next.fetch_add(1);
            if (k >= top.size() || shared.aborted) {
              break;
            }
            if (root.members.size() + (top.size() - k) < shared.best.load()) {
              break;
            }
            Bits excluded(size), rest = cand;
            for (std::size_t i = 0; i < k; ++i) {
              excluded.set(top[i]);
              rest.reset(top[i]);
            }
            branch(root, rest, excluded, top[k], shared, local);
          }
          std::lock_guard lock(merge_mutex);
          if (local.best > best) {
            best = local.best;
            found.clear();
          }
          if (local.best == best) {
            for (auto& s : local.found) {
              found.push_back(std::move(s));
            }
          }
        };
        threads = std::max(1u, threads);
        if (threads == 1) {
          worker();
        } else {
          std::vector<std::thread> pool;
          for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
          }
          for (auto& t : pool) {
            t.join();
          }
        }
        std::sort(found.begin(), found.end());
        return {best, std::move(found)};
      }

      Semigroup to_semigroup(std::vector<Index> const& members) const {
        std::vector<Transformation> elts;
        for (auto i : members) {
          elts.push_back(pool_[i]);
        }
        std::sort(elts.begin(), elts.end());
        return Semigroup::from_sorted_unchecked(pool_.front().degree(), std::move(elts));
      }

     private:
      struct State {
        std::vector<Index> members;
        Bits               bits;
      };

      struct Local {
        std::size_t                     best = 0;
        std::vector<std::vector<Index>> found;
      };

      static std::vector<Index> sorted(std::vector<Index> v) {
        std::sort(v.begin(), v.end());
        return v;
      }

      // a and b must commute.
      Index product(Index a, Index b) const noexcept {
        auto const& row = products_[a];
        auto        it  = std::lower_bound(row.begin(), row.end(), std::pair<Index, Index>(b, 0));
        return it->second;
      }

      // Adds v, which commutes with every member, and closes up. Commuting
      // products only need one order, so each new element is multiplied by
      // all members listed before it and by itself.
      void add_closed(State& st, Index v) const {
        auto const start = st.members.size();
        st.members.push_back(v);
        st.bits.set(v);
        for (auto i = start; i < st.members.size(); ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            auto p = product(st.members[i], st.members[j]);
            if (!st.bits.test(p)) {
              st.bits.set(p);
              st.members.push_back(p);
            }
          }
        }
      }

      void record(State const& st, SharedState& shared) const {
        if (st.members.size() > shared.xi_n) {
          ++shared.violations;
        }
        auto seen = shared.best.load();
        while (st.members.size() > seen
               && !shared.best.compare_exchange_weak(seen, st.members.size())) {
        }
      }

      void remember(State const& st, Local& local) const {
        if (st.members.size() > local.best) {
          local.best = st.members.size();
          local.found.clear();
        }
        if (st.members.size() == local.best) {
          local.found.push_back(sorted(st.members));
        }
      }

      void branch(State const& parent, Bits const& cand, Bits const& excluded, Index v,
                  SharedState& shared, Local& local) {
        State child = parent;
        add_closed(child, v);
        if (child.bits.intersects(excluded)) {
          return;
        }
        Bits next = cand;
        next &= commute_[v];
        next -= child.bits;
        dfs(child, std::move(next), excluded, shared, local);
      }

      void dfs(State const& st, Bits cand, Bits excluded, SharedState& shared, Local& local) {
        auto const count = ++shared.nodes;
        if ((count & 0x3ff) == 0 && Clock::now() > shared.deadline) {
          shared.aborted = true;
        }
        if (shared.aborted) {
          return;
        }
        record(st, shared);
        remember(st, local);
        Bits live = cand;
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
          // Ties are explored so that every maximizer is listed.
          if (st.members.size() + live.count() < shared.best.load()) {
            return;
          }
          live.reset(v);
          branch(st, live, excluded, static_cast<Index>(v), shared, local);
          excluded.set(v);
        }
      }

      std::vector<Transformation> pool_;
      Index                       zero_ = 0;
      std::vector<Bits>           commute_;
      // products_[a] lists (b, ab) for the b commuting with a, sorted by b.
      std::vector<std::vector<std::pair<Index, Index>>> products_;
    };

    std::vector<std::size_t> kernel_block_sizes(Transformation const& e) {
      std::vector<std::size_t> sizes(e.degree(), 0);
      for (auto x : e.images()) {
        ++sizes[x];
      }
      std::erase(sizes, 0);
      std::sort(sizes.rbegin(), sizes.rend());
      return sizes;
    }

    std::vector<Semigroup> close_under_relabelling(std::vector<Semigroup> const& found) {
      std::set<Semigroup> out(found.begin(), found.end());
      if (found.empty()) {
        return {};
      }
      auto const         n = found.front().degree();
      std::vector<Point> perm(n);
      std::iota(perm.begin(), perm.end(), Point(0));
      while (std::next_permutation(perm.begin(), perm.end())) {
        Transformation p(perm);
        for (auto const& s : found) {
          std::vector<Transformation> elts;
          for (auto const& f : s) {
            elts.push_back(conjugate(f, p));
          }
          std::sort(elts.begin(), elts.end());
          out.insert(Semigroup::from_sorted_unchecked(n, std::move(elts)));
        }
      }
      return {out.begin(), out.end()};
    }

  }  // namespace

  SearchReport certify_max(std::size_t n, SearchOptions const& options) {
    if (n == 0) {
      throw ArgumentError("certify_max: n must be positive");
    }
    auto const   start = Clock::now();
    SearchReport report;
    report.n    = n;
    report.mode = options.mode;

    auto const xi_n = xi(n);
    SharedState shared;
    shared.deadline = start + options.budget;
    shared.xi_n     = xi_n > std::numeric_limits<std::uint64_t>::max()
                          ? std::numeric_limits<std::uint64_t>::max()
                          : static_cast<std::uint64_t>(xi_n);

    std::vector<Transformation> zeros;
    if (options.mode == SearchMode::rank1) {
      zeros.push_back(Transformation::constant(n, 0));
    } else {
      zeros = idempotent_representatives(n);
    }

    std::vector<Semigroup> maximizers;
    for (auto const& e : zeros) {
      CommutingSearch search(nilpotent_pool(n, e), e, shared);
      shared.best = 0;
      auto [best, found] = search.run(shared, options.threads);

      ZeroClassSummary summary;
      summary.zero        = e;
      summary.block_sizes = kernel_block_sizes(e);
      summary.pool_size   = search.pool_size();
      summary.best        = best;
      report.zero_classes.push_back(std::move(summary));

      if (best > report.max_size) {
        report.max_size = best;
        maximizers.clear();
      }
      if (best == report.max_size) {
        for (auto const& members : found) {
          maximizers.push_back(search.to_semigroup(members));
        }
      }
      if (shared.aborted) {
        break;
      }
    }
    if (options.mode == SearchMode::all_zeros && n <= 6) {
      maximizers = close_under_relabelling(maximizers);
    } else {
      std::sort(maximizers.begin(), maximizers.end());
    }
    report.maximizers          = std::move(maximizers);
    report.nodes_explored      = shared.nodes;
    report.xi_bound_violations = shared.violations;
    report.certified           = !shared.aborted;

    report.max_equals_xi            = BigInt(report.max_size) == xi_n;
    report.maximizers_null          = true;
    report.maximizers_characterized = true;
    auto const a                    = alpha(n);
    for (auto const& s : report.maximizers) {
      report.maximizers_null = report.maximizers_null && is_null(s);
      auto const zero        = zero_of(s);
      if (zero && zero->rank() == 1) {
        auto shape = match_max_null(s, a);
        report.maximizer_t.push_back(shape ? shape->t : 0);
        report.maximizers_characterized = report.maximizers_characterized && shape.has_value();
      } else {
        report.maximizer_t.push_back(0);
        // The only maximizer without a rank-1 zero: {identity} on two points.
        bool ok = n == 2 && s.size() == 1 && s[0] == Transformation::identity(2);
        report.maximizers_characterized = report.maximizers_characterized && ok;
      }
    }
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random commutative nilpotent semigroups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Portable draws: the std distributions differ between standard
    // libraries, which would break seed reproducibility.
    std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
      return static_cast<std::size_t>(rng() % bound);
    }

    double draw_unit(std::mt19937_64& rng) {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    // A map whose functional graph is a tree rooted at 0: points are
    // visited in random order and each is sent to 0 or to a point visited
    // earlier. Every such tree arises this way.
    Transformation random_rooted_tree(std::size_t n, std::mt19937_64& rng) {
      std::vector<Point> order(n - 1);
      std::iota(order.begin(), order.end(), Point(1));
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[draw_below(rng, i)]);
      }
      double const       to_root = 0.05 + 0.85 * draw_unit(rng);
      std::vector<Point> im(n, 0);
      for (std::size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || draw_unit(rng) < to_root) {
          im[order[k]] = 0;
        } else {
          im[order[k]] = order[draw_below(rng, k)];
        }
      }
      return Transformation(std::move(im));
    }

  }  // namespace

  Semigroup random_cn(std::size_t n, std::uint64_t seed, std::size_t target_size_hint) {
    if (n == 0) {
      throw ArgumentError("random_cn: n must be positive");
    }
    auto const zero = Transformation::constant(n, 0);
    auto       s    = Semigroup::closure(n, std::vector<Transformation>{zero});
    if (n == 1) {
      return s;
    }
    std::mt19937_64   rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
    std::size_t       rejections     = 0;
    std::size_t const max_rejections = 64 + 32 * n;
    while (s.size() < target_size_hint && rejections < max_rejections) {
      auto f = random_rooted_tree(n, rng);
      bool commutes = std::all_of(s.begin(), s.end(), [&f](auto const& g) {
        return compose(f, g) == compose(g, f);
      });
      if (s.contains(f) || !commutes) {
        ++rejections;
        continue;
      }
      auto gens = s.elements();
      gens.push_back(f);
      auto grown = Semigroup::closure(n, gens);
      bool in_pool = std::all_of(grown.begin(), grown.end(), [&zero](auto const& g) {
        return compose(g, zero) == zero && compose(zero, g) == zero;
      });
      if (!in_pool || !is_commutative(grown) || !is_nilpotent(grown)) {
        ++rejections;
        continue;
      }
      s = std::move(grown);
    }
    return s;
  }

  std::string to_string(SearchMode mode) {
    return mode == SearchMode::rank1 ? "rank1" : "all";
  }

  std::string to_string(SearchReport const& r) {
    std::ostringstream os;
    auto               yes = [](bool b) { return b ? "yes" : "no"; };
    os << "n:                    " << r.n << "\n"
       << "mode:                 " << to_string(r.mode) << "\n"
       << "certified:            " << yes(r.certified) << "\n"
       << "max size:             " << r.max_size << "\n"
       << "xi(n):                " << xi(r.n) << "\n"
       << "max size == xi(n):    " << yes(r.max_equals_xi) << "\n"
       << "maximizers:           " << r.maximizers.size() << "\n"
       << "maximizers null:      " << yes(r.maximizers_null) << "\n"
       << "maximizers max_null:  " << yes(r.maximizers_characterized) << "\n"
       << "xi bound violations:  " << r.xi_bound_violations << "\n"
       << "nodes explored:       " << r.nodes_explored << "\n"
       << "elapsed (s):          " << r.elapsed_seconds << "\n"
       << "zero classes:\n";
    for (auto const& z : r.zero_classes) {
      os << "  blocks";
      for (auto b : z.block_sizes) {
        os << ' ' << b;
      }
      os << ": pool " << z.pool_size << ", best " << z.best << "\n";
    }
    return os.str();
  }

}  // namespace nilsem
