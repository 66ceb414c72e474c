#pragma once

#include <functional>
#include <vector>

#include "ainfree/ancat.hpp"

namespace ainfree {

/* Pointed cocategory homomorphism between truncated categories: an object map
   and degree-0 components on words of length 1..level (the 0th component
   vanishes). Identified by address: chains of coderivations compare these by
   pointer. */
struct CocatHom {
  const AnCat* src = nullptr;
  const AnCat* dst = nullptr;
  std::vector<int> obj_map;
  int level = 1;
  std::function<Elem(const Word&)> comp;

  AnFunctorData as_functor_data() const;
};

/* (f,g)-coderivation of the stated degree: components r_n for 0 <= n <=
   level; r_0 takes the object of the empty word explicitly. */
struct Coderivation {
  const CocatHom* f = nullptr;
  const CocatHom* g = nullptr;
  int deg = 0;
  int level = 0;
  std::function<Elem(int obj, const Word&)> comp;
};

/* Matrix coefficient f_{kl} on a k-word (k >= 1): the sum over compositions
   k = i_1 + ... + i_l of f_{i_1} (x) ... (x) f_{i_l}, as an l-letter word
   combination in the target. Zero unless 1 <= l <= k. */
WordElem hom_matrix_coeff(const CocatHom& f, const Word& w, int l);

/* The mixed expansion theta_{kl} of a chain of n coderivations
   f0 -r1-> f1 -r2-> ... -rn-> fn evaluated on a k-word (obj names the source
   object when the word is empty): every ordered interleaving of functor
   blocks (>= 1 factors, components of the functor current at that point) and
   the r^i in order (>= 0 factors), with l output letters; Koszul signs from
   the r degrees. Vanishes unless n <= l <= k + n; n = 0 is the matrix
   coefficient of f0, n = 1 the coefficient of r1. */
WordElem theta(const CocatHom* f0, const std::vector<const Coderivation*>& rs,
               int obj, const Word& w, int l);

WordElem coder_matrix_coeff(const Coderivation& r, int obj, const Word& w, int l);

// Total degree of a coderivation chain.
long chain_deg(const std::vector<const Coderivation*>& rs);

}  // namespace ainfree
