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

// Word trees of commutative nilpotent semigroups and the nullification
// transform.
//
// Fix the ordering x_1, ..., x_n of the S-partition. Each f in S gives the
// word w_f = (x_1 f)(x_2 f)...(x_n f); the word tree is the trie of these
// words. Level i consists of the arcs from depth i - 1 to depth i. A level
// is linear when every vertex at depth i - 1 has one child, and branching
// otherwise. The trunk is the initial chain of |A_0 u A_1| arcs, all
// labelled x_1.
//
// Nullification contracts every linear level outside the trunk, lengthens
// the trunk by the same number of arcs, and relabels: unary arcs get x_1
// and the s arcs leaving a branching vertex get x_1, ..., x_s in the order
// of their old labels. Reading the leaves back as transformations gives a
// null semigroup with as many elements as S.

#ifndef NILSEM_TREEOPS_HPP_
#define NILSEM_TREEOPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilsem/partition.hpp"
#include "nilsem/semigroup.hpp"
#include "nilsem/transform.hpp"

namespace nilsem {

  enum class LevelKind : std::uint8_t { linear, branching };

  enum class TreeStage : std::uint8_t { original, stripped, relabelled };

  struct TreeNode {
    static constexpr std::size_t no_parent = static_cast<std::size_t>(-1);

    std::size_t parent = no_parent;
    // Label of the arc entering this node; meaningless at the root.
    Point       label = 0;
    std::size_t depth = 0;
    // Sorted by the position of their labels in the ordering.
    std::vector<std::size_t> children;
    // For leaves: index of the source element in sources().
    std::optional<std::size_t> source;
  };

  class WordTree {
   public:
    std::size_t degree() const noexcept {
      return ordering_.size();
    }
    std::vector<Point> const& ordering() const noexcept {
      return ordering_;
    }
    std::size_t position(Point x) const noexcept {
      return position_[x];
    }
    Point base() const noexcept {
      return ordering_.front();
    }
    TreeStage stage() const noexcept {
      return stage_;
    }

    // Node 0 is the root (the empty word).
    std::vector<TreeNode> const& nodes() const noexcept {
      return nodes_;
    }
    std::size_t arc_count() const noexcept {
      return nodes_.size() - 1;
    }
    std::vector<std::size_t> leaves() const;

    // Labels on the path from the root.
    std::vector<Point> word(std::size_t node) const;

    // The source semigroup's elements; leaf.source indexes into this.
    std::vector<Transformation> const& sources() const noexcept {
      return sources_;
    }

    // levels()[i - 1] classifies level i, for i = 1..n.
    std::vector<LevelKind> const& levels() const noexcept {
      return levels_;
    }
    std::size_t trunk_length() const noexcept {
      return trunk_length_;
    }
    std::size_t linear_level_count() const;
    // Outdegrees of all vertices with at least two children, sorted.
    std::vector<std::size_t> branching_outdegrees() const;

    // Leaf words read back as maps via the ordering, indexed like sources().
    std::vector<Transformation> leaf_transformations() const;

   private:
    friend WordTree build_tree(Semigroup const&);
    friend WordTree strip_linear_levels(WordTree const&);
    friend WordTree relabel(WordTree const&);

    void renumber();
    void classify();

    std::vector<Point>          ordering_;
    std::vector<std::size_t>    position_;
    std::vector<TreeNode>       nodes_;
    std::vector<Transformation> sources_;
    std::vector<LevelKind>      levels_;
    std::size_t                 trunk_length_ = 0;
    TreeStage                   stage_        = TreeStage::original;
  };

  // Throws PreconditionError unless s is commutative and nilpotent with a
  // zero of rank 1.
  WordTree build_tree(Semigroup const& s);

  struct LemmaReport {
    struct Violation {
      std::size_t node;
      std::size_t level;
      std::string what;
    };
    std::size_t            branchings_checked = 0;
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // For every vertex u at depth i - 1 with s >= 2 children, with labels
  // x_(i_1), ..., x_(i_s) where i_1 < ... < i_s:
  //   (a) i_s < i and levels i_2, ..., i_s are linear;
  //   (b) at least s of the levels 1..i-1 are linear.
  LemmaReport check_branching_lemmas(WordTree const& tree);

  // Contract the linear levels after the trunk and insert the same number of
  // unary arcs, labelled x_1, right after the trunk. Surviving arcs keep
  // their labels. Expects an original-stage tree.
  WordTree strip_linear_levels(WordTree const& tree);

  // Unary arcs get x_1; the children of a branching vertex get
  // x_1, x_2, ... in ascending order of their current labels.
  WordTree relabel(WordTree const& tree);

  struct Nullification {
    WordTree  original;
    WordTree  stripped;
    WordTree  relabelled;
    Semigroup result;
    // m: number of linear levels, equal in all three trees.
    std::size_t linear_levels = 0;
  };

  // Throws PreconditionError on bad input and InvariantViolation if the
  // result is not a null semigroup of the same size with the expected
  // shape.
  Nullification nullify_with_trees(Semigroup const& s);
  Semigroup     nullify(Semigroup const& s);

  // Graphviz rendering of the given stage of the nullification of tree,
  // which must be an original-stage tree. Vertices are named by their
  // words, the root is "eps".
  std::string export_dot(WordTree const& tree, TreeStage stage);

  std::string to_string(TreeStage stage);
  std::string to_string(LemmaReport const& report, WordTree const& tree);

}  // namespace nilsem

#endif  // NILSEM_TREEOPS_HPP_
