#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "ainfree/cocat.hpp"
#include "ainfree/sparse.hpp"

namespace ainfree {

// Identity functor of a truncated category, as a cocategory homomorphism.
CocatHom identity_hom(const AnCat& a);

/* Composite f then g; component k is sum_l f_{kl} g_l. The result keeps
   pointers into f.src and g.dst only. */
CocatHom compose_hom(const CocatHom& f, const CocatHom& g);

// Same category with operations above `level` forgotten (they throw).
AnCat restrict_cat(const AnCat& a, int level);
CocatHom restrict_hom(const CocatHom& f, int level);

// Extend by zero operations up to `level`; valid when the identities hold.
AnCat pad_cat(const AnCat& a, int level);

// Multilinear extension of a.b to element arguments.
Elem b_multilinear(const AnCat& a, const std::vector<Elem>& args);

/* The differential of the functor category on one coderivation, by its
   componentwise formula: (rB1)_k = sum_l theta_{kl} b_l
   - (-1)^{deg r} sum_{a+n+t=k} (1^a (x) b_n (x) 1^t) r_{a+1+t}.
   The result owns a copy of r. */
Coderivation coder_B1(const Coderivation& r);

/* B_n of a chain of n >= 1 coderivations: for n >= 2 component k is
   sum_{l=n}^{k+n} theta_{kl} b_l; n = 1 dispatches to coder_B1. The chain is
   copied into the result. */
Coderivation coder_B(std::vector<Coderivation> rs);

/* Composition components. rs is a chain of n coderivations between functors
   A -> B starting at f0, ts a chain of m coderivations between functors
   B -> C starting at g0. Component k of the result:
     m = 0: sum_{l=n}^{n+k} theta_{kl}(rs) g0_l   (zero when n = 0)
     m = 1: sum_{l=n}^{n+k} theta_{kl}(rs) (t1)_l
     m > 1: exact zero.
   comp_f, comp_g name the composite endpoint functors of the result. */
Coderivation M_compose(const CocatHom* f0, std::vector<Coderivation> rs, const CocatHom* g0,
                       std::vector<Coderivation> ts, const CocatHom* comp_f,
                       const CocatHom* comp_g);

struct MIdentityReport {
  bool pass = true;
  long checked = 0;
  std::string detail;  // first failing component
};

/* Verify (1 (x) B + B (x) 1)M = MB on the given rows, componentwise on all
   source objects and composable source words of length <= k_max within the
   weight budget. `composite` returns the composed functor object for indices
   (i, j) with f^i from the rs row and g^j from the ts row; all of them must
   outlive the call. Requires ts.size() <= 1. */
MIdentityReport check_M_functor_identity(
    const CocatHom* f0, std::vector<Coderivation> rs, const CocatHom* g0,
    std::vector<Coderivation> ts, const std::function<const CocatHom*(int, int)>& composite,
    int k_max, long budget);

/* One hom-basis slot of a functor category: the coderivation matrix unit
   sending the source word w (of length k; obj is its source object, or the
   object itself when k = 0) to the target basis slot, all other components
   zero. Slot degree is deg(target) - deg(w). */
struct FuncatSlot {
  int fsrc = 0, fdst = 0;
  int obj = 0;
  Word w;
  int target = 0;
};

/* The functor category over an explicit finite object list, materialized as
   a finite truncated category: hom slots are all coderivation matrix units
   on composable source words within the budget, and the operations are B_1
   and the theta-then-b family. `cat.b` points back to this struct, so the
   owner returned by functor_category must outlive any use of `cat`; the
   listed functors and the two underlying categories are borrowed. */
struct FunctorCat {
  const AnCat* a = nullptr;
  const AnCat* b = nullptr;
  std::vector<const CocatHom*> functors;
  int level = 1;
  long budget = 0;
  std::vector<FuncatSlot> slot_data;
  std::map<std::tuple<int, int, int, Word, int>, int> index;
  AnCat cat;

  FunctorCat() = default;
  FunctorCat(const FunctorCat&) = delete;
  FunctorCat& operator=(const FunctorCat&) = delete;

  int slot_id(int fsrc, int fdst, int obj, const Word& w, int target) const;
  Coderivation slot_coder(int id) const;
  // Homogeneous combination of slots between one functor pair.
  Coderivation elem_coder(int fsrc, int fdst, const Elem& e) const;
  // Read a coderivation's components off on every slot word.
  Elem coder_elem(const Coderivation& r, int fsrc, int fdst) const;
  Elem apply_B1(int fsrc, int fdst, const Elem& e) const;
};

/* Builds the functor category at truncation `level`; every listed functor is
   verified first, and B's operations must reach A's level plus `level`. */
std::shared_ptr<FunctorCat> functor_category(const AnCat& a, const AnCat& b,
                                             std::vector<const CocatHom*> functors, int level,
                                             long budget);

/* A degree-(-1) cycle per object of a category: the shifted strict units of
   a DG category, or any family with i0 b1 = 0 used as units. */
struct UnitData {
  std::vector<Elem> i0;
};

// i0 b1 = 0 and degree -1, per object.
bool check_unit_cycles(const AnCat& b, const UnitData& u);

/* Strictly unital DG category from unshifted data. Slot degrees are the
   shifted ones (unshifted minus one). `mult` maps (x, y) to the composite "x
   then y" on unshifted basis slots; pairs with an identity are implied and
   absent pairs compose to zero. Operations: b1 = d, b2(x (x) y) =
   (-1)^{udeg y} mult(x, y), higher operations zero. */
struct DgCatData {
  RingSpec ring;
  std::vector<std::string> objects;
  std::vector<HomSlot> slots;
  std::vector<int> identity;  // per object, the slot of its identity
  std::map<std::pair<int, int>, Elem> mult;
  std::vector<Elem> diff;  // per slot; empty vector means d = 0
};
AnCat dg_category(DgCatData data, int level);
UnitData dg_units(const DgCatData& data);

// The unit element of a functor object: r0(X) = i0 at Xf, higher components 0.
Elem unit_elem(const FunctorCat& fc, int f_idx, const UnitData& units);

struct UnitCycleReport {
  bool pass = false;
  bool left_member = false, right_member = false;
  std::string left_witness, right_witness;
};

/* For cycles r0 in hom(f,g) and p0 in hom(g,f) of the functor category:
   checks (r0 (x) p0)B_2 - unit_f and (p0 (x) r0)B_2 - unit_g lie in the
   image of B_1, with exact witnesses. Non-cycle inputs throw. */
UnitCycleReport unit_cycle_check(const FunctorCat& fc, int f_idx, int g_idx, const Elem& r0,
                                 const Elem& p0, const Elem& unit_f, const Elem& unit_g);

}  // namespace ainfree
