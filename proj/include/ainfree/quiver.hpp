#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ainfree/scalar.hpp"
#include "ainfree/sparse.hpp"

namespace ainfree {

/* Linear combinations over an indexed basis. Zero coefficients are never
   stored; an empty map is the zero element. */
using Elem = std::map<int, Scalar>;
using Word = std::vector<int>;  // tensor word of basis ids, leftmost first
using WordElem = std::map<Word, Scalar>;

void add_term(Elem& e, int id, const Scalar& c);
void add_scaled(Elem& e, const Elem& other, const Scalar& c);
Elem scaled(const Elem& e, const Scalar& c);
void add_term(WordElem& e, const Word& w, const Scalar& c);
void add_scaled(WordElem& e, const WordElem& other, const Scalar& c);
WordElem scaled(const WordElem& e, const Scalar& c);

long word_deg(const Word& w, const std::function<int(int)>& deg_of);

/* One operator slot of a tensor-product operator op_1 (x) ... (x) op_m.
   Consumes `arity` adjacent factors (0 allowed for emitters); a null act with
   arity 1 is the identity slot. */
struct BlockOp {
  int arity = 1;
  long deg = 0;
  std::function<WordElem(const Word&)> act;  // null: identity, arity must be 1
};

/* Right-operator evaluation of (op_1 (x) ... (x) op_m) on a word: operators
   pass over the input factors to their right, so the total sign exponent is
   sum over i < j of deg(op_i) * deg(input block j). Arities must cover the
   word exactly. */
WordElem koszul_apply(const std::vector<BlockOp>& ops, const Word& w,
                      const std::function<int(int)>& deg_of, RingSpec ring);

/* A graded quiver with a finite morphism basis. Degrees are the degrees in
   the shifted quiver: every operation built on top (d, b_n) has degree +1.
   Morphism names are globally unique. */
struct Morphism {
  std::string name;
  int src = 0, dst = 0;  // object ids
  int sdeg = 0;
};

struct GradedQuiver {
  RingSpec ring = RingSpec::integers();
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;

  int object_id(const std::string& name) const;
  int morphism_id(const std::string& name) const;
  std::vector<int> hom_basis(int src, int dst) const;
  long word_deg(const Word& w) const;
  // nonempty, consecutive endpoints match
  bool word_composable(const Word& w) const;
  void validate() const;
};

/* Shifted differential: degree +1, endpoint-preserving, squares to zero.
   All three are checked by make. */
struct DGQuiver {
  GradedQuiver q;
  std::vector<Elem> diff;  // image of each basis morphism

  const Elem& d_basis(int id) const { return diff[(size_t)id]; }
  Elem d(const Elem& e) const;
  static DGQuiver make(GradedQuiver q, std::vector<Elem> diff);
};

/* A finite based graded module and a degree-homogeneous map between two of
   them; images are given per basis element and checked for homogeneity. */
struct BasedModule {
  RingSpec ring = RingSpec::integers();
  std::vector<long> degrees;
  std::vector<std::string> labels;  // optional, for reports

  size_t size() const { return degrees.size(); }
};

struct GradedMap {
  BasedModule source, target;
  long deg = 0;
  std::vector<Elem> images;

  static GradedMap make(BasedModule source, BasedModule target, long deg,
                        std::vector<Elem> images);
  Elem apply(const Elem& e) const;
  Elem apply_basis(int id) const { return images[(size_t)id]; }
};

GradedMap compose(const GradedMap& f, const GradedMap& g);  // f then g
SparseMatrix matrix_of(const GradedMap& f);

/* A complex is a module with a degree +1 differential squaring to zero. */
struct FiniteComplex {
  BasedModule mod;
  GradedMap d;

  static FiniteComplex make(BasedModule mod, std::vector<Elem> diff);
};

/* Mapping cone of a degree-0 chain map P -> Q: underlying module Q + P[1]
   (the P part written ps, one degree lower), differential
   (q, ps) -> (q d + p alpha, -(p d) s). */
FiniteComplex cone(const GradedMap& alpha, const FiniteComplex& P, const FiniteComplex& Q);

// Exactness over the coefficient ring: every cycle is a boundary.
bool homology_trivial(const FiniteComplex& c);

}  // namespace ainfree
