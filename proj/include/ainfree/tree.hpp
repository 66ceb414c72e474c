#pragma once

#include <string>
#include <vector>

namespace ainfree {

/* Plane rooted trees whose internal vertices all have arity >= 2 (counting
   incoming edges only; the root edge is extra). Leaves are inputs. |t| is the
   number of internal vertices; the tree with no internal vertex is Leaf.

   Serialization: "|" for Leaf, "(T1 T2 ... Tk)" for a vertex over k subtrees.
   The serialization doubles as the canonical structural key. */
class PlaneTree {
 public:
  PlaneTree() : leaves_(1), internal_(0) {}  // Leaf
  explicit PlaneTree(std::vector<PlaneTree> children);

  static PlaneTree leaf() { return PlaneTree(); }
  static PlaneTree corolla(int k);  // one vertex, k leaves

  bool is_leaf() const { return kids_.empty(); }
  const std::vector<PlaneTree>& children() const { return kids_; }
  int leaves() const { return leaves_; }
  int internal() const { return internal_; }

  std::string str() const;
  static PlaneTree parse(const std::string& text);

  bool operator==(const PlaneTree& o) const;
  bool operator!=(const PlaneTree& o) const { return !(*this == o); }
  // canonical enumeration order: by |t|, then by serialization
  bool operator<(const PlaneTree& o) const;

 private:
  std::vector<PlaneTree> kids_;
  int leaves_;
  int internal_;
};

PlaneTree graft(std::vector<PlaneTree> children);

/* An internal vertex in the canonical linear order of the tree. The order is
   depth-first preorder: the root-adjacent vertex comes first, then each child
   subtree left to right. h is the 1-based rank; comparable vertices satisfy
   h(ancestor) < h(descendant), and of two incomparable vertices the one
   reached through the earlier child edge has the smaller h. */
struct TreeVertex {
  std::vector<int> path;  // child indices from the root-adjacent vertex
  int arity = 0;
  int h = 0;
  int leaf_lo = 0, leaf_hi = 0;  // covered interval of leaf positions, 1-based
};

// All internal vertices in canonical order (h = position + 1). Empty for Leaf.
std::vector<TreeVertex> canonical_order(const PlaneTree& t);

/* Layers (before, arity, after) that rebuild the tree from its row of leaves:
   layer i groups `arity` adjacent units of the current forest under a new
   vertex, with `before` units to the left and `after` to the right. Layers are
   listed in application order; layer i is built at the vertex with
   h = |t|+1-i, so the last layer is always the root-adjacent vertex. */
struct ForestLayer {
  int before = 0, arity = 0, after = 0;
  bool operator==(const ForestLayer&) const = default;
};
std::vector<ForestLayer> forest_decomposition(const PlaneTree& t);
PlaneTree replay_forest(int leaves, const std::vector<ForestLayer>& layers);

/* One-edge refinement: `parent` has one internal vertex more, and contracting
   the edge below the vertex with rank `upper_h` in `parent` gives back the
   original tree. The sign exponent used by the differential is
   beta = 1 + upper_h. */
struct Contraction {
  PlaneTree parent;
  int upper_h = 0;
  int beta = 0;
};

/* All one-edge refinements of t: for every internal vertex, every proper
   contiguous block of >= 2 children moved under a new vertex (proper: the old
   vertex keeps arity >= 2). */
std::vector<Contraction> contractions(const PlaneTree& t);

// Contract the parent edge of the internal vertex at `path` (path nonempty).
PlaneTree contract_path(const PlaneTree& t, const std::vector<int>& path);

/* Path of the vertex `other` after the vertex at `contracted` is merged into
   its parent. `other` must denote a different internal vertex. */
std::vector<int> rewrite_path_after_contract(const PlaneTree& t,
                                             const std::vector<int>& contracted,
                                             const std::vector<int>& other);

int vertex_rank(const PlaneTree& t, const std::vector<int>& path);

// All trees with the given number of leaves, in canonical order.
const std::vector<PlaneTree>& enumerate_trees(int leaves);

/* Exhaustive check that the two orders of performing a double contraction
   carry opposite signs: for every tree t'' within the leaf bound and every
   unordered pair {e1,e2} of distinct edges,
   (-1)^{beta(t'1,e1)+beta(t'',e2)} + (-1)^{beta(t'2,e2)+beta(t'',e1)} = 0
   where t'1 = t''/e2 and t'2 = t''/e1. Ranks in the contracted trees are
   recomputed from scratch. */
struct CancellationReport {
  bool pass = true;
  long pairs_checked = 0;
  std::string counterexample;  // empty when pass
};
CancellationReport check_double_contraction_cancellation(int max_leaves);

}  // namespace ainfree
