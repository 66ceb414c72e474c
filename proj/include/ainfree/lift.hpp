#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ainfree/freecat.hpp"
#include "ainfree/funcat.hpp"

namespace ainfree {

/* Data for a functor out of the free category: generator images under the
   arity-1 component and optional components of arity >= 2 on free words
   (null means they all vanish). The generator images must commute with the
   differentials. The result borrows fq and target. */
struct ExtensionProblem {
  const FreeCat* fq = nullptr;
  const AnCat* target = nullptr;
  std::vector<int> obj_map;
  std::vector<Elem> images;
  std::function<Elem(const Word&)> higher;
  int level = 1;
};

/* The unique functor with the prescribed data. On a slice whose root vertex
   has arity n, the arity-1 component is the inverse grafting sign times
     sum_{i_1+...+i_l=n} (f_{i_1} (x) ... (x) f_{i_l}) b_l
     - sum_{r+q+t=n, r+t>0} (1^r (x) b_q (x) 1^t) f_{r+1+t}
   evaluated on the root factors; parts of size 1 recurse into strictly
   smaller slices, so the recursion is well founded. */
CocatHom extend_functor(const ExtensionProblem& p);

// Extension with zero components of arity >= 2.
CocatHom extend_strict(const FreeCat& fq, const AnCat& target, std::vector<int> obj_map,
                       std::vector<Elem> images, int level);

// Arity-1 values at the generator slots, indexed by quiver morphism.
std::vector<Elem> generator_images(const FreeCat& fq, const CocatHom& f);

/* Underlying level-one functor: the same object map, components read at the
   generator slots. a1 must be the level-one view of fq's quiver. */
CocatHom restrict_functor(const FreeCat& fq, const AnCat& a1, const CocatHom& f);

/* Closed form for the arity-1 component of a strict extension on one tree
   slice: drop the shift tag, apply the generator images letterwise, then
   replay the tree's vertex layers with the target operations. Agrees with
   extend_strict slice by slice. */
GradedMap strict_slice_map(const FreeCat& fq, const AnCat& target, const std::vector<int>& obj_map,
                           const std::vector<Elem>& images, const PlaneTree& t);

/* Generator-level transformation data between the restrictions of two
   functors: a 0-component per source object and an arity-1 component per
   quiver generator, homogeneous of the stated degree. */
struct GenData {
  int deg = 0;
  std::function<Elem(int obj)> comp0;
  std::function<Elem(int gen)> comp1;
};

/* Differential of generator-level data between phi and psi, matching the
   generator-level components of the coderivation differential:
     (rB1)_0(X) = r0(X) b1,
     (rB1)_1(x) = (r1 x) b1 + (phi1 x (x) r0) b2
                  + (-1)^{deg r deg x} (r0 (x) psi1 x) b2
                  + (-1)^{deg r + 1} r1(dx).
   The result borrows fq, phi, psi. */
GenData a1_differential(const FreeCat& fq, const CocatHom& phi, const CocatHom& psi,
                        const GenData& r);

/* The 0-component and generator-level arity-1 component of a coderivation,
   read off as an element over the hom slots of fc1 between its functors
   fsrc and fdst. fc1 must be built over the level-one view of fq's quiver. */
Elem restrict_coder(const FunctorCat& fc1, int fsrc, int fdst, const FreeCat& fq,
                    const Coderivation& r);

/* One hom module of a functor category as a finite based complex under the
   category differential; slot_ids lists the global slot id of each row. */
struct HomComplex {
  FiniteComplex cx;
  std::vector<int> slot_ids;
};
HomComplex hom_complex(const FunctorCat& fc, int fsrc, int fdst);

/* Formal combination of coderivations with common endpoints, materialized as
   one coderivation of the stated degree. The terms are copied in. */
Coderivation coder_sum(std::vector<std::pair<Scalar, Coderivation>> terms, int deg);

/* Chain-map data from a finite based complex into the transformations from
   phi to psi, two functors out of the free category: row p prescribes the
   0-component per object, the arity-1 component per generator, and the
   components of arity >= 2 on free words (null compk means they vanish).
   The prescribed rows must satisfy the chain condition at the generator
   level; the arity-1 values on deeper slices are then the unique ones
   making du = uB1 hold. */
struct LiftProblem {
  const FreeCat* fq = nullptr;
  const CocatHom* phi = nullptr;
  const CocatHom* psi = nullptr;
  FiniteComplex source;
  std::function<Elem(int p, int obj)> comp0;
  std::function<Elem(int p, int gen)> comp1;
  std::function<Elem(int p, const Word& w)> compk;
  int level = 1;
};

// One coderivation per basis row of the source complex.
struct ChainLift {
  std::vector<Coderivation> image;
};

/* Solves, slice by slice with memoization, the recursion
   (-1)^{deg p} (row p at the grafted slot) =
     -(p d) u_k + sum_l theta_{kl}(row p) b_l
     - (-1)^{deg p} sum_{r+q+t=k, r+t>0} (1^r (x) b_q (x) 1^t) u_{r+1+t},
   where k is the root arity; grafting the root factors is a signed basis
   bijection, so the left side determines the row's value. Throws if the
   generator-level data is not a chain map or is inhomogeneous. */
ChainLift lift_chain_map(const LiftProblem& p);

struct LiftReport {
  bool pass = true;
  long checked = 0;
  std::string detail;  // first failing component
};

/* du = uB1 on every row, componentwise on all source objects and composable
   free words of length <= k_max within the weight budget. */
LiftReport check_chain_lift(const LiftProblem& p, const ChainLift& u, int k_max, long budget);

/* Degree-(-1) seed for a homotopy: generator-level parts and the components
   of arity >= 2 (null means zero). */
struct HomotopySeed {
  std::function<Elem(int p, int obj)> comp0;
  std::function<Elem(int p, int gen)> comp1;
  std::function<Elem(int p, const Word& w)> compk;
};

/* Rows h with u = dh + hB1 for the chain map prescribed by `p`, built as a
   chain-map lift over the cone of the identity of the source complex: the
   unshifted rows carry u's data, the shifted rows the seed, and the degree
   reduction makes the chain condition on a shifted row read off as the
   homotopy bound. The seed must satisfy dh' + h'B1 = u' at the generator
   level; anything else throws before lifting. */
std::vector<Coderivation> lift_homotopy(const LiftProblem& p, const HomotopySeed& seed);

/* u = dh + hB1 on every row, componentwise on all source objects and
   composable free words of length <= k_max within the weight budget. */
LiftReport check_homotopy(const LiftProblem& p, const std::vector<Coderivation>& u,
                          const std::vector<Coderivation>& h, int k_max, long budget);

/* Exchange identity behind the lifting recursion: for a coderivation r
   between functors phi, psi out of any truncated category,
     - sum [phi (x) (theta(r) then b) (x) psi] b
     + (-1)^{deg r} sum [phi (x) (1 (x) b (x) 1) r (x) psi] b
     = (-1)^{deg r} sum (1 (x) b (x) 1) [phi (x) r (x) psi] b,
   componentwise on all source objects and composable words of length
   <= k_max within the budget. Holds because the target operations square
   to zero. */
LiftReport check_lift_recursion_identity(const Coderivation& r, int k_max, long budget);

/* Equivalence data for the restriction from the transformations between two
   functors out of the free category to their generator-level data. */
struct EquivalenceReport {
  bool pass = false;
  bool section = false;   // every lifted row restricts to the row itself
  bool chain = false;     // du = uB1 for the lift
  bool defect_restricted_zero = false;  // id - (restrict then lift) restricts to zero
  bool homotopy = false;  // id - (restrict then lift) = dh + hB1, row by row
  std::vector<UnitCycleReport> units;  // at (f, f) and (g, g), from the category units
  long checked = 0;
  std::string detail;  // first failure, or the error that aborted the run
};

/* Lifts the identity rows of the generator-level hom complex to a section u
   of the restriction, verifies that u is a chain map and splits the
   restriction, bounds the defect id - (restrict then lift) by a homotopy
   with zero seed, and checks the unit cycles of the endpoint functors.
   `units` are unit cycles of the target; the target's operations must reach
   the free category's arity bound plus `level`, and at least 3 for the unit
   memberships. Errors are reported in `detail`, not thrown. */
EquivalenceReport verify_restriction_equivalence(const FreeCat& fq, const AnCat& target,
                                                 const UnitData& units, const CocatHom& f,
                                                 const CocatHom& g, int level, long budget);

/* The transformation from f to the strict extension of its generator data:
   the chain-map lift, over a one-row complex in degree -1, of the
   generator-level transformation whose 0-component is the unit cycle and
   whose arity-1 part vanishes. `closed` reports that its differential
   vanishes within budget, `unit_component` that the 0-component equals the
   unit cycle at every object; invertibility beyond the 0-component is not
   decided here. The iso borrows fq, target and f and points into the owned
   strict target, so the result must not outlive them. */
struct StrictifyResult {
  std::shared_ptr<CocatHom> strict_target;
  Coderivation iso;
  bool closed = false;
  bool unit_component = false;
};
StrictifyResult strictify_iso(const FreeCat& fq, const AnCat& target, const UnitData& units,
                              const CocatHom& f, int level, long budget);

}  // namespace ainfree
