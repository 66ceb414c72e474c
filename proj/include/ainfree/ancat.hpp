#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainfree/quiver.hpp"

namespace ainfree {

// A computation stepped outside the configured truncation or leaf budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HomSlot {
  int src = 0, dst = 0;
  int deg = 0;  // degree in the shifted hom module
  std::string label;
};

/* A category truncated at `level`: operations b_n of degree +1 for
   1 <= n <= level, given as one dispatcher over composable slot words of
   length n. Slots index the hom basis; `weight` (default 1 per slot) is the
   budget measure for word enumeration. */
struct AnCat {
  RingSpec ring = RingSpec::integers();
  int level = 1;
  std::vector<std::string> objects;
  std::vector<HomSlot> slots;
  std::function<Elem(const Word&)> b;
  std::function<long(int)> weight;

  int slot_deg(int id) const { return slots.at((size_t)id).deg; }
  long slot_weight(int id) const { return weight ? weight(id) : 1; }
  long word_weight(const Word& w) const;
  std::function<int(int)> deg_fn() const;
  std::vector<int> hom_basis(int src, int dst) const;
  bool word_composable(const Word& w) const;
  std::string print(const Elem& e) const;
  std::string print(const Word& w) const;
};

// View a differential graded quiver as a category at level 1 (b_1 = d).
AnCat a1_category(const DGQuiver& dq);

// b_n wrapped as an operator slot for koszul_apply.
BlockOp op_b(const AnCat& a, int arity);

// All composable words of length k with total weight <= budget, in order.
std::vector<Word> composable_words(const AnCat& a, int k, long budget);

/* The degree sum_{r+n+t=k} (1^r (x) b_n (x) 1^t) b_{r+1+t} evaluated on one
   word; zero for all words iff the level-k identity holds. */
Elem a_infinity_defect(const AnCat& a, const Word& w);

struct IdentityReport {
  int k = 0;
  bool pass = true;
  long instances = 0;
  std::string counterexample;  // first failing word
  std::string defect;          // its nonzero value
};

/* Check the defining identities for k = 1..k_max on every composable word
   within the weight budget. k_max is clamped to the category level. */
std::vector<IdentityReport> check_an_category(const AnCat& a, int k_max, long budget);
bool all_pass(const std::vector<IdentityReport>& reports);

/* Functor data between two truncated categories: an object map and degree-0
   components on words of length 1..level. */
struct AnFunctorData {
  const AnCat* src = nullptr;
  const AnCat* dst = nullptr;
  std::vector<int> obj_map;
  int level = 1;
  std::function<Elem(const Word&)> comp;  // dispatch on word length

  BlockOp op_comp(int arity) const;
};

/* Check sum (f_{i_1} (x) ... (x) f_{i_l}) b_l = sum (1^r (x) b_n (x) 1^t)
   f_{r+1+t} for k = 1..k_max on every composable source word in budget. */
std::vector<IdentityReport> check_an_functor(const AnFunctorData& f, int k_max, long budget);

}  // namespace ainfree
