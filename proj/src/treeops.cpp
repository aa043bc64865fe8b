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

#include "nilsem/treeops.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "nilsem/errors.hpp"

namespace nilsem {

  ////////////////////////////////////////////////////////////////////////
  // WordTree
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> WordTree::leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (nodes_[v].children.empty()) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::vector<Point> WordTree::word(std::size_t node) const {
    std::vector<Point> w;
    for (auto v = node; v != 0; v = nodes_[v].parent) {
      w.push_back(nodes_[v].label);
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::size_t WordTree::linear_level_count() const {
    return std::count(levels_.begin(), levels_.end(), LevelKind::linear);
  }

  std::vector<std::size_t> WordTree::branching_outdegrees() const {
    std::vector<std::size_t> out;
    for (auto const& v : nodes_) {
      if (v.children.size() >= 2) {
        out.push_back(v.children.size());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Transformation> WordTree::leaf_transformations() const {
    std::vector<Transformation> out(sources_.size());
    for (auto leaf : leaves()) {
      auto const w = word(leaf);
      if (w.size() != degree() || !nodes_[leaf].source) {
        throw InvariantViolation("word tree leaf at depth " + std::to_string(w.size())
                                 + " in a tree of degree " + std::to_string(degree()));
      }
      std::vector<Point> im(degree());
      for (std::size_t i = 0; i < degree(); ++i) {
        im[ordering_[i]] = w[i];
      }
      out[*nodes_[leaf].source] = Transformation(std::move(im));
    }
    return out;
  }

  // Breadth-first renumbering from the root. Drops unreachable nodes, sorts
  // children by label position and recomputes parents and depths.
  void WordTree::renumber() {
    std::vector<TreeNode>    fresh;
    std::deque<std::size_t>  queue{0};
    std::vector<std::size_t> old_of;
    while (!queue.empty()) {
      auto const v = queue.front();
      queue.pop_front();
      old_of.push_back(v);
      auto kids = nodes_[v].children;
      std::sort(kids.begin(), kids.end(), [this](auto a, auto b) {
        return position_[nodes_[a].label] < position_[nodes_[b].label];
      });
      nodes_[v].children = kids;
      for (auto c : kids) {
        queue.push_back(c);
      }
    }
    std::vector<std::size_t> new_of(nodes_.size(), TreeNode::no_parent);
    for (std::size_t i = 0; i < old_of.size(); ++i) {
      new_of[old_of[i]] = i;
    }
    fresh.resize(old_of.size());
    for (std::size_t i = 0; i < old_of.size(); ++i) {
      auto const& old = nodes_[old_of[i]];
      auto&       v   = fresh[i];
      v.label         = old.label;
      v.source        = old.children.empty() ? old.source : std::nullopt;
      for (auto c : old.children) {
        v.children.push_back(new_of[c]);
      }
    }
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      for (auto c : fresh[i].children) {
        fresh[c].parent = i;
        fresh[c].depth  = fresh[i].depth + 1;
      }
    }
    nodes_ = std::move(fresh);
  }

  void WordTree::classify() {
    auto const n = degree();
    levels_.assign(n, LevelKind::linear);
    for (auto const& v : nodes_) {
      if (v.children.size() >= 2 && v.depth < n) {
        levels_[v.depth] = LevelKind::branching;
      }
    }
    trunk_length_ = 0;
    std::size_t v = 0;
    while (nodes_[v].children.size() == 1 && nodes_[nodes_[v].children[0]].label == base()) {
      v = nodes_[v].children[0];
      ++trunk_length_;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction and checks
  ////////////////////////////////////////////////////////////////////////

  WordTree build_tree(Semigroup const& s) {
    if (!is_commutative(s)) {
      throw PreconditionError("word trees require a commutative semigroup");
    }
    auto const p = s_partition(s);
    auto const n = s.degree();

    WordTree t;
    t.ordering_ = p.ordering;
    t.position_ = p.position;
    t.sources_  = s.elements();
    t.nodes_.emplace_back();

    for (std::size_t k = 0; k < t.sources_.size(); ++k) {
      auto const  w   = ordered_word(s, p, t.sources_[k]);
      std::size_t cur = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto const& kids = t.nodes_[cur].children;
        auto it = std::find_if(kids.begin(), kids.end(), [&](auto c) {
          return t.nodes_[c].label == w[i];
        });
        if (it != kids.end()) {
          cur = *it;
        } else {
          TreeNode node;
          node.parent = cur;
          node.label  = w[i];
          node.depth  = i + 1;
          t.nodes_.push_back(std::move(node));
          t.nodes_[cur].children.push_back(t.nodes_.size() - 1);
          cur = t.nodes_.size() - 1;
        }
      }
      t.nodes_[cur].source = k;
    }
    t.renumber();
    t.classify();

    if (t.leaves().size() != s.size()) {
      throw InvariantViolation("word tree has " + std::to_string(t.leaves().size())
                               + " leaves for " + std::to_string(s.size()) + " elements");
    }
    if (t.trunk_length() != p.trunk_length()) {
      throw InvariantViolation("trunk has length " + std::to_string(t.trunk_length())
                               + ", expected |A0 u A1| = " + std::to_string(p.trunk_length()));
    }
    for (std::size_t v = 1; v < t.nodes_.size(); ++v) {
      auto const& node = t.nodes_[v];
      // Level node.depth only uses labels x_1, ..., x_(depth - 1).
      if (node.depth > 1 && t.position(node.label) + 1 >= node.depth) {
        throw InvariantViolation("arc label " + std::to_string(node.label + 1)
                                 + " too late in the ordering for level "
                                 + std::to_string(node.depth));
      }
    }
    return t;
  }

  LemmaReport check_branching_lemmas(WordTree const& tree) {
    LemmaReport report;
    auto const& levels = tree.levels();
    for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
      auto const& node = tree.nodes()[v];
      auto const  s    = node.children.size();
      if (s < 2) {
        continue;
      }
      ++report.branchings_checked;
      auto const level = node.depth + 1;

      // Label positions, 1-based to match level numbers; children are
      // already sorted by them.
      std::vector<std::size_t> idx;
      for (auto c : node.children) {
        idx.push_back(tree.position(tree.nodes()[c].label) + 1);
      }
      if (idx.back() >= level) {
        report.violations.push_back(
            {v, level, "largest label x_" + std::to_string(idx.back()) + " is not before the level"});
      }
      for (std::size_t j = 1; j < s; ++j) {
        if (idx[j] <= levels.size() && levels[idx[j] - 1] != LevelKind::linear) {
          report.violations.push_back(
              {v, level, "level " + std::to_string(idx[j]) + " of label x_"
                             + std::to_string(idx[j]) + " is not linear"});
        }
      }
      auto const linear_before = static_cast<std::size_t>(
          std::count(levels.begin(), levels.begin() + (level - 1), LevelKind::linear));
      if (linear_before < s) {
        report.violations.push_back({v, level,
                                     "only " + std::to_string(linear_before)
                                         + " linear levels precede a branching of "
                                         + std::to_string(s) + " arcs"});
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Surgery
  ////////////////////////////////////////////////////////////////////////

  WordTree strip_linear_levels(WordTree const& tree) {
    if (tree.stage() != TreeStage::original) {
      throw ArgumentError("strip_linear_levels expects an original word tree");
    }
    WordTree    out   = tree;
    auto&       nodes = out.nodes_;
    auto const  n     = tree.degree();
    auto const  trunk = tree.trunk_length();
    std::size_t moved = 0;

    // Deepest first, so the depths recorded in the nodes stay valid for the
    // shallower levels still to be contracted.
    for (std::size_t level = n; level > trunk; --level) {
      if (tree.levels()[level - 1] != LevelKind::linear) {
        continue;
      }
      ++moved;
      for (std::size_t u = 0; u < nodes.size(); ++u) {
        if (nodes[u].depth != level - 1 || nodes[u].children.size() != 1) {
          continue;
        }
        auto const c     = nodes[u].children.front();
        nodes[u].children = std::move(nodes[c].children);
        nodes[c].children.clear();
        for (auto g : nodes[u].children) {
          nodes[g].parent = u;
        }
        if (nodes[u].children.empty()) {
          nodes[u].source = nodes[c].source;
        }
        nodes[c].depth = TreeNode::no_parent;  // unreachable from now on
      }
    }

    // Lengthen the trunk by the number of contracted levels.
    std::size_t end = 0;
    for (std::size_t i = 0; i < trunk; ++i) {
      end = nodes[end].children.front();
    }
    auto tail = std::move(nodes[end].children);
    nodes[end].children.clear();
    auto attach = end;
    for (std::size_t i = 0; i < moved; ++i) {
      TreeNode node;
      node.parent = attach;
      node.label  = tree.base();
      nodes.push_back(std::move(node));
      nodes[attach].children = {nodes.size() - 1};
      attach                 = nodes.size() - 1;
    }
    nodes[attach].children = std::move(tail);
    if (attach != end && nodes[attach].children.empty()) {
      nodes[attach].source = nodes[end].source;
    }

    out.stage_ = TreeStage::stripped;
    out.renumber();
    out.classify();
    return out;
  }

  WordTree relabel(WordTree const& tree) {
    WordTree out = tree;
    for (auto& node : out.nodes_) {
      for (std::size_t k = 0; k < node.children.size(); ++k) {
        out.nodes_[node.children[k]].label = out.ordering_[k];
      }
    }
    out.stage_ = TreeStage::relabelled;
    out.renumber();
    out.classify();
    return out;
  }

  Nullification nullify_with_trees(Semigroup const& s) {
    auto original = build_tree(s);
    auto lemmas   = check_branching_lemmas(original);
    if (!lemmas.ok()) {
      throw InvariantViolation("branching lemma fails: " + lemmas.violations.front().what);
    }
    auto const m = original.linear_level_count();
    auto const outdeg = original.branching_outdegrees();
    if (!outdeg.empty() && outdeg.back() > m) {
      throw InvariantViolation("a branching has more arcs than there are linear levels");
    }

    auto stripped   = strip_linear_levels(original);
    auto relabelled = relabel(stripped);
    auto const n    = s.degree();

    auto fail = [](std::string const& what) {
      throw InvariantViolation("nullify: " + what);
    };
    for (auto const* t : {&stripped, &relabelled}) {
      if (t->linear_level_count() != m) {
        fail("number of linear levels changed");
      }
      if (t->trunk_length() != m) {
        fail("trunk does not hold all linear levels");
      }
      if (t->branching_outdegrees() != outdeg) {
        fail("branchings changed");
      }
      if (t->leaves().size() != s.size()) {
        fail("number of leaves changed");
      }
    }

    auto maps = relabelled.leaf_transformations();
    std::sort(maps.begin(), maps.end());
    Semigroup result = [&] {
      try {
        return Semigroup::from_elements(n, maps);
      } catch (ArgumentError const& e) {
        throw InvariantViolation(std::string("nullify: result not closed: ") + e.what());
      }
    }();
    if (result.size() != s.size()) {
      fail("size changed from " + std::to_string(s.size()) + " to "
           + std::to_string(result.size()));
    }
    if (!is_null(result)) {
      fail("result is not null");
    }
    auto const base = original.base();
    if (zero_of(result) != Transformation::constant(n, base)) {
      fail("zero is not the constant map at x_1");
    }
    std::vector<bool> support(n, false);
    for (std::size_t i = 0; i < m; ++i) {
      support[original.ordering()[i]] = true;
    }
    for (auto const& f : result) {
      for (Point x = 0; x < n; ++x) {
        if (!support[f[x]] || (support[x] && f[x] != base)) {
          fail("(" + to_string(f) + ") leaves the support {x_1, ..., x_m}");
        }
      }
    }
    return Nullification{std::move(original), std::move(stripped), std::move(relabelled),
                         std::move(result), m};
  }

  Semigroup nullify(Semigroup const& s) {
    return nullify_with_trees(s).result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(TreeStage stage) {
    switch (stage) {
      case TreeStage::original:
        return "original";
      case TreeStage::stripped:
        return "stripped";
      case TreeStage::relabelled:
        return "relabelled";
    }
    return "unknown";
  }

  std::string export_dot(WordTree const& tree, TreeStage stage) {
    WordTree const* shown = &tree;
    WordTree        stripped, relabelled;
    if (stage != TreeStage::original) {
      stripped = strip_linear_levels(tree);
      shown    = &stripped;
      if (stage == TreeStage::relabelled) {
        relabelled = relabel(stripped);
        shown      = &relabelled;
      }
    }
    auto const n    = shown->degree();
    auto       name = [&](std::size_t v) {
      return v == 0 ? std::string("eps") : word_string(shown->word(v), n);
    };

    std::ostringstream os;
    os << "digraph " << to_string(stage) << " {\n";
    os << "  // levels:";
    for (auto k : shown->levels()) {
      os << (k == LevelKind::linear ? " L" : " B");
    }
    os << "\n  // trunk length: " << shown->trunk_length() << "\n";
    os << "  rankdir=LR;\n";
    for (std::size_t v = 0; v < shown->nodes().size(); ++v) {
      auto const& node = shown->nodes()[v];
      os << "  \"" << name(v) << "\"";
      if (node.children.empty()) {
        os << " [shape=box]";
      }
      os << ";\n";
    }
    for (std::size_t v = 0; v < shown->nodes().size(); ++v) {
      for (auto c : shown->nodes()[v].children) {
        os << "  \"" << name(v) << "\" -> \"" << name(c) << "\" [label=\""
           << shown->nodes()[c].label + 1 << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

  std::string to_string(LemmaReport const& report, WordTree const& tree) {
    std::ostringstream os;
    os << "branchings checked: " << report.branchings_checked << "\n";
    if (report.ok()) {
      os << "branching lemmas: ok\n";
    }
    for (auto const& v : report.violations) {
      os << "violation at vertex " << word_string(tree.word(v.node), tree.degree())
         << " (level " << v.level << "): " << v.what << "\n";
    }
    return os.str();
  }

}  // namespace nilsem
