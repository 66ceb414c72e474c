#include "ainfree/sparse.hpp"

#include <algorithm>

namespace ainfree {

void SparseMatrix::set(int i, int j, const Scalar& v) {
  if (i < 0 || i >= rows || j < 0 || j >= cols)
    throw std::invalid_argument("matrix index out of range");
  if (v.is_zero())
    entries.erase({i, j});
  else
    entries[{i, j}] = v;
}

void SparseMatrix::add(int i, int j, const Scalar& v) {
  set(i, j, at(i, j) + v);
}

Scalar SparseMatrix::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Scalar::zero(ring) : it->second;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows == o.rows && cols == o.cols && ring == o.ring && entries == o.entries;
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.ring != b.ring) throw std::invalid_argument("mixed rings in mat_mul");
  if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch in mat_mul");
  SparseMatrix c(a.rows, b.cols, a.ring);
  // group b by row for the sparse product
  std::vector<std::vector<std::pair<int, const Scalar*>>> brow(b.rows);
  for (const auto& [ij, v] : b.entries) brow[ij.first].push_back({ij.second, &v});
  for (const auto& [ij, v] : a.entries) {
    for (const auto& [k, w] : brow[ij.second]) c.add(ij.first, k, v * *w);
  }
  return c;
}

std::vector<Scalar> row_times_matrix(const std::vector<Scalar>& x,
                                     const SparseMatrix& m) {
  if ((int)x.size() != m.rows)
    throw std::invalid_argument("dimension mismatch in row_times_matrix");
  std::vector<Scalar> out(m.cols, Scalar::zero(m.ring));
  for (const auto& [ij, v] : m.entries) {
    if (!x[ij.first].is_zero()) out[ij.second] += x[ij.first] * v;
  }
  return out;
}

SparseMatrix to_rationals(const SparseMatrix& m) {
  if (m.ring.kind == RingKind::Q) return m;
  if (m.ring.kind != RingKind::Z)
    throw std::invalid_argument("fraction field lift is only defined over Z");
  SparseMatrix out(m.rows, m.cols, RingSpec::rationals());
  for (const auto& [ij, v] : m.entries)
    out.entries[ij] = Scalar::parse(v.str(), RingSpec::rationals());
  return out;
}

namespace {

using Row = std::map<int, Scalar>;  // sparse row: col -> value

Scalar row_at(const Row& r, int j, RingSpec ring) {
  auto it = r.find(j);
  return it == r.end() ? Scalar::zero(ring) : it->second;
}

// r += c * s
void row_axpy(Row& r, const Scalar& c, const Row& s) {
  if (c.is_zero()) return;
  for (const auto& [j, v] : s) {
    auto it = r.find(j);
    if (it == r.end()) {
      r[j] = c * v;
    } else {
      it->second += c * v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
}

void row_scale(Row& r, const Scalar& c) {
  for (auto& [j, v] : r) v *= c;
}

/* Row echelon elimination with a tracked transform: after run(), trans[i] * m
   equals work[i] for every i, the first `pivots.size()` work rows are the
   echelon rows (pivot columns strictly increasing), and the remaining work
   rows are zero. Over Z the transform stays unimodular (only swaps, negations
   and integer row additions are used, gcd-style). */
struct Elimination {
  RingSpec ring;
  std::vector<Row> work, trans;
  std::vector<std::pair<int, int>> pivots;  // (row index in work, column)

  explicit Elimination(const SparseMatrix& m) : ring(m.ring) {
    work.resize(m.rows);
    trans.resize(m.rows);
    for (const auto& [ij, v] : m.entries) work[ij.first][ij.second] = v;
    for (int i = 0; i < m.rows; ++i) trans[i][i] = Scalar::one(ring);
    run(m.cols);
  }

  void run(int cols) {
    int top = 0;  // rows above `top` are finished echelon rows
    for (int j = 0; j < cols && top < (int)work.size(); ++j) {
      if (ring.kind == RingKind::Z) {
        // gcd-reduce column j among rows top.. until at most one is nonzero
        for (;;) {
          int best = -1;
          for (int i = top; i < (int)work.size(); ++i) {
            if (row_at(work[i], j, ring).is_zero()) continue;
            if (best < 0 || cmpabs(work[i].at(j), work[best].at(j)) < 0) best = i;
          }
          if (best < 0) break;  // column clear
          bool others = false;
          for (int i = top; i < (int)work.size(); ++i) {
            if (i == best || row_at(work[i], j, ring).is_zero()) continue;
            others = true;
            // work[i] -= q * work[best], q = round-to-floor quotient
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), work[i].at(j).zval().get_mpz_t(),
                       work[best].at(j).zval().get_mpz_t());
            Scalar c = -Scalar::parse(q.get_str(), ring);
            row_axpy(work[i], c, work[best]);
            row_axpy(trans[i], c, trans[best]);
          }
          if (!others) {
            settle_pivot(best, j, top);
            break;
          }
        }
      } else {
        int piv = -1;
        for (int i = top; i < (int)work.size(); ++i)
          if (!row_at(work[i], j, ring).is_zero()) {
            piv = i;
            break;
          }
        if (piv < 0) continue;
        Scalar inv = work[piv].at(j).inverse();
        row_scale(work[piv], inv);
        row_scale(trans[piv], inv);
        for (int i = top; i < (int)work.size(); ++i) {
          if (i == piv || row_at(work[i], j, ring).is_zero()) continue;
          Scalar c = -work[i].at(j);
          row_axpy(work[i], c, work[piv]);
          row_axpy(trans[i], c, trans[piv]);
        }
        settle_pivot(piv, j, top);
      }
    }
  }

  static int cmpabs(const Scalar& a, const Scalar& b) {
    return mpz_cmpabs(a.zval().get_mpz_t(), b.zval().get_mpz_t());
  }

  void settle_pivot(int i, int j, int& top) {
    std::swap(work[i], work[top]);
    std::swap(trans[i], trans[top]);
    if (ring.kind == RingKind::Z && work[top].at(j).zval() < 0) {
      Scalar m1 = Scalar::of(-1, ring);
      row_scale(work[top], m1);
      row_scale(trans[top], m1);
    }
    pivots.push_back({top, j});
    ++top;
  }
};

}  // namespace

std::optional<std::vector<Scalar>> image_membership(
    const SparseMatrix& m, const std::vector<Scalar>& v,
    bool solve_over_fraction_field) {
  if ((int)v.size() != m.cols)
    throw std::invalid_argument("dimension mismatch in image_membership");
  if (solve_over_fraction_field && m.ring.kind == RingKind::Z) {
    std::vector<Scalar> vq;
    vq.reserve(v.size());
    for (const auto& s : v) vq.push_back(Scalar::parse(s.str(), RingSpec::rationals()));
    return image_membership(to_rationals(m), vq, false);
  }
  for (const auto& s : v)
    if (s.ring() != m.ring) throw std::invalid_argument("mixed rings in image_membership");

  Elimination e(m);
  Row residual;
  for (int j = 0; j < m.cols; ++j)
    if (!v[j].is_zero()) residual[j] = v[j];
  Row xrow;
  for (const auto& [i, j] : e.pivots) {
    Scalar c = row_at(residual, j, m.ring);
    if (c.is_zero()) continue;
    const Scalar& piv = e.work[i].at(j);
    if (!piv.divides(c)) return std::nullopt;  // only over Z
    Scalar q = piv.div_exact(c);
    row_axpy(residual, -q, e.work[i]);
    row_axpy(xrow, q, e.trans[i]);
  }
  if (!residual.empty()) return std::nullopt;
  std::vector<Scalar> x(m.rows, Scalar::zero(m.ring));
  for (const auto& [i, c] : xrow) x[i] = c;
  if (row_times_matrix(x, m) != v)
    throw std::logic_error("image_membership produced an invalid witness");
  return x;
}

int rank(const SparseMatrix& m) { return (int)Elimination(m).pivots.size(); }

std::vector<std::vector<Scalar>> left_kernel(const SparseMatrix& m) {
  Elimination e(m);
  std::vector<std::vector<Scalar>> out;
  for (int i = (int)e.pivots.size(); i < m.rows; ++i) {
    std::vector<Scalar> x(m.rows, Scalar::zero(m.ring));
    for (const auto& [k, c] : e.trans[i]) x[k] = c;
    std::vector<Scalar> prod = row_times_matrix(x, m);
    if (!std::all_of(prod.begin(), prod.end(),
                     [](const Scalar& s) { return s.is_zero(); }))
      throw std::logic_error("left_kernel produced an invalid kernel row");
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace ainfree
