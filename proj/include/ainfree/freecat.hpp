#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ainfree/ancat.hpp"
#include "ainfree/tree.hpp"

namespace ainfree {

/* Basis slot of the free category over a quiver: a plane tree together with a
   generator word whose length equals the tree's leaf count. The slot degree
   is word degree plus the number of internal vertices (the shift tag raises
   degree by |t|). */
struct FreeSlot {
  PlaneTree tree;
  Word word;
};

/* Free category on a differential graded quiver, truncated by a leaf budget
   and an arity budget. The embedded `cat` view dispatches b_1 to the quiver
   differential plus edge contractions and b_k to grafting; slot weight is the
   leaf count, so weight-budgeted word enumeration decides every identity
   below the leaf budget exactly. cat.b keeps a back pointer, so the owner
   must outlive cat; obtain instances through free_category. */
struct FreeCat {
  DGQuiver dq;
  int max_leaves = 1;
  int max_arity = 2;
  std::vector<FreeSlot> slot_data;
  std::map<std::pair<std::string, Word>, int> index;
  AnCat cat;

  int slot_id(const PlaneTree& t, const Word& w) const;

  FreeCat() = default;
  FreeCat(const FreeCat&) = delete;
  FreeCat& operator=(const FreeCat&) = delete;
};

/* Graft k >= 2 elements onto a new root vertex. Term by term the output tree
   is graft(t_1...t_k), the word is the concatenation, and the coefficient
   picks up the Koszul sign of the suspension operators
   s^{|t_1|} (x) ... (x) s^{|t_{k-1}|} (x) s^{|t_k|-|t|} crossing the elements
   to their right (element degree includes the tag). Multilinear; throws
   budget_error past the leaf budget. */
Elem free_bk(const FreeCat& fc, const std::vector<Elem>& xs);

/* Differential: the quiver d applied in each letter slot, where crossing the
   shift tag adds |t| to every slot's sign exponent, plus one term per
   one-edge refinement of the tree with sign (-1)^{1 + h(upper vertex)}.
   Preserves leaf count. */
Elem free_b1(const FreeCat& fc, const Elem& x);

std::shared_ptr<FreeCat> free_category(const DGQuiver& dq, int max_leaves, int max_arity);

}  // namespace ainfree
