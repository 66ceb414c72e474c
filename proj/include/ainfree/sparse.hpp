#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ainfree/scalar.hpp"

namespace ainfree {

/* Row-major sparse matrices over the session ring. Zero entries are never
   stored. Rows act on the left: a vector x of length `rows` maps to x*m of
   length `cols`, so the row space is the image. */
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  RingSpec ring;
  std::map<std::pair<int, int>, Scalar> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c, RingSpec rg) : rows(r), cols(c), ring(rg) {}

  void set(int i, int j, const Scalar& v);
  void add(int i, int j, const Scalar& v);
  Scalar at(int i, int j) const;

  bool operator==(const SparseMatrix& o) const;
};

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b);

std::vector<Scalar> row_times_matrix(const std::vector<Scalar>& x,
                                     const SparseMatrix& m);

/* Whether v lies in the row space of m, i.e. x*m = v is solvable; returns a
   witness x (verified exactly before returning) or nothing. Over Z the solve
   is integral via Hermite elimination; set solve_over_fraction_field to allow
   rational witnesses for an integer matrix. */
std::optional<std::vector<Scalar>> image_membership(
    const SparseMatrix& m, const std::vector<Scalar>& v,
    bool solve_over_fraction_field = false);

// Rank over the fraction field of the ring.
int rank(const SparseMatrix& m);

/* Basis of {x : x*m = 0}. Over Z the rows generate the full kernel lattice
   (they come from the unimodular transform of the Hermite elimination). */
std::vector<std::vector<Scalar>> left_kernel(const SparseMatrix& m);

SparseMatrix to_rationals(const SparseMatrix& m);

}  // namespace ainfree
