#include <doctest.h>

#include <random>

#include "ainfree/quiver.hpp"

using namespace ainfree;

namespace {

const RingSpec Z = RingSpec::integers();

// Single-letter substitution op: letter id -> (id + shift) with coefficient c,
// raising the letter degree by `deg` in the given degree table.
BlockOp subst_op(long deg, int shift, long coeff, RingSpec ring) {
  BlockOp op;
  op.arity = 1;
  op.deg = deg;
  op.act = [shift, coeff, ring](const Word& w) {
    WordElem out;
    out.emplace(Word{w[0] + shift}, Scalar::of(coeff, ring));
    return out;
  };
  return op;
}

DGQuiver two_object_quiver() {
  // x: A -> B of sdeg 0, y: A -> B of sdeg 1, dx = y; z: B -> B of sdeg -1, dz = 0.
  GradedQuiver q;
  q.ring = Z;
  q.objects = {"A", "B"};
  q.morphisms = {{"x", 0, 1, 0}, {"y", 0, 1, 1}, {"z", 1, 1, -1}};
  std::vector<Elem> diff(3);
  diff[0] = {{1, Scalar::one(Z)}};
  return DGQuiver::make(std::move(q), std::move(diff));
}

}  // namespace

TEST_CASE("element arithmetic drops cancelled terms") {
  Elem e;
  add_term(e, 3, Scalar::of(2, Z));
  add_term(e, 3, Scalar::of(-2, Z));
  CHECK(e.empty());
  WordElem w;
  add_term(w, {1, 2}, Scalar::one(Z));
  add_term(w, {1, 2}, Scalar::of(-1, Z));
  CHECK(w.empty());
}

TEST_CASE("right-operator sign rule on small words") {
  // degrees: letter i has degree i - 2 (so ids 0..4 give degrees -2..2)
  auto deg = [](int id) { return id - 2; };
  // (d (x) 1)(x (x) y) with deg d = 1, deg y = 1: d passes y, sign -1
  BlockOp d = subst_op(1, 10, 1, Z);
  Word xy = {2, 3};  // deg x = 0, deg y = 1
  WordElem out = koszul_apply({d, BlockOp{}}, xy, deg, Z);
  REQUIRE(out.size() == 1);
  CHECK(out.begin()->first == Word{12, 3});
  CHECK(out.begin()->second == Scalar::of(-1, Z));
  // (1 (x) d)(x (x) y): rightmost operator, no sign
  out = koszul_apply({BlockOp{}, d}, xy, deg, Z);
  CHECK(out.begin()->first == Word{2, 13});
  CHECK(out.begin()->second == Scalar::one(Z));
  // identities do nothing
  out = koszul_apply({BlockOp{}, BlockOp{}}, xy, deg, Z);
  CHECK(out.begin()->first == xy);
  CHECK(out.begin()->second == Scalar::one(Z));
  // arities must cover the word
  CHECK_THROWS(koszul_apply({BlockOp{}}, xy, deg, Z));
}

TEST_CASE("operator tensors compose with the interchange sign") {
  // (f1 (x) ... )(g1 (x) ...) = (-1)^{sum_{i<j} deg g_i deg f_j} (f1g1 (x) ...)
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> degd(-2, 2), coeff(1, 3);
  auto deg = [](int id) { return id; };  // the letter id is its degree
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = 1 + (size_t)(trial % 3);
    std::vector<BlockOp> fs, gs, fg;
    long inter = 0;
    std::vector<long> fdeg, gdeg;
    for (size_t i = 0; i < n; ++i) {
      long df = degd(rng), dg = degd(rng);
      long cf = coeff(rng), cg = coeff(rng);
      fs.push_back(subst_op(df, (int)df, cf, Z));
      gs.push_back(subst_op(dg, (int)dg, cg, Z));
      fg.push_back(subst_op(df + dg, (int)(df + dg), cf * cg, Z));
      fdeg.push_back(df);
      gdeg.push_back(dg);
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) inter += gdeg[i] * fdeg[j];
    Word w;
    for (size_t i = 0; i < n; ++i) w.push_back((int)(2 + 5 * i) % 5 - 2);
    WordElem lhs;
    for (const auto& [mid, c] : koszul_apply(fs, w, deg, Z))
      add_scaled(lhs, koszul_apply(gs, mid, deg, Z), c);
    WordElem rhs = scaled(koszul_apply(fg, w, deg, Z), sign_pow(inter, Z));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("emitter slots consume nothing but carry their degree past the word") {
  auto deg = [](int id) { return id; };
  BlockOp emit;
  emit.arity = 0;
  emit.deg = 3;
  emit.act = [](const Word&) {
    WordElem out;
    out.emplace(Word{99}, Scalar::one(Z));
    return out;
  };
  // (emit (x) 1) on (x) with deg x = 1: emitter passes x, sign (-1)^3
  WordElem out = koszul_apply({emit, BlockOp{}}, {1}, deg, Z);
  REQUIRE(out.size() == 1);
  CHECK(out.begin()->first == Word{99, 1});
  CHECK(out.begin()->second == Scalar::of(-1, Z));
  // (1 (x) emit): no factors to the right of the emitter
  out = koszul_apply({BlockOp{}, emit}, {1}, deg, Z);
  CHECK(out.begin()->first == Word{1, 99});
  CHECK(out.begin()->second == Scalar::one(Z));
}

TEST_CASE("quivers validate names, endpoints, and the differential") {
  DGQuiver dq = two_object_quiver();
  CHECK(dq.q.object_id("B") == 1);
  CHECK(dq.q.morphism_id("z") == 2);
  CHECK(dq.q.hom_basis(0, 1) == std::vector<int>{0, 1});
  CHECK(dq.q.word_composable({0, 2}));   // A->B then B->B
  CHECK_FALSE(dq.q.word_composable({2, 0}));
  CHECK(dq.q.word_deg({0, 1, 2}) == 0);
  CHECK(dq.d({{0, Scalar::of(5, Z)}}) == Elem{{1, Scalar::of(5, Z)}});

  GradedQuiver bad = dq.q;
  bad.morphisms[1].name = "x";  // duplicate
  CHECK_THROWS(DGQuiver::make(bad, std::vector<Elem>(3)));

  // d not squaring to zero: x -> y, y -> w
  GradedQuiver q2;
  q2.objects = {"A"};
  q2.morphisms = {{"x", 0, 0, 0}, {"y", 0, 0, 1}, {"w", 0, 0, 2}};
  std::vector<Elem> dd(3);
  dd[0] = {{1, Scalar::one(Z)}};
  dd[1] = {{2, Scalar::one(Z)}};
  CHECK_THROWS(DGQuiver::make(q2, dd));
  // degree slip
  std::vector<Elem> dslip(3);
  dslip[0] = {{2, Scalar::one(Z)}};
  CHECK_THROWS(DGQuiver::make(q2, dslip));
}

TEST_CASE("graded maps reject inhomogeneous images and compose") {
  BasedModule a{Z, {0, 1}, {"a0", "a1"}};
  BasedModule b{Z, {1, 2}, {"b0", "b1"}};
  std::vector<Elem> good(2);
  good[0] = {{0, Scalar::one(Z)}};
  good[1] = {{1, Scalar::of(2, Z)}};
  GradedMap f = GradedMap::make(a, b, 1, good);
  CHECK(f.apply({{0, Scalar::of(3, Z)}}) == Elem{{0, Scalar::of(3, Z)}});
  std::vector<Elem> badim(2);
  badim[0] = {{1, Scalar::one(Z)}};  // degree 0 + 1 != 2
  CHECK_THROWS(GradedMap::make(a, b, 1, badim));

  std::vector<Elem> gim(2);
  gim[0] = {{0, Scalar::one(Z)}};
  GradedMap g = GradedMap::make(b, a, -1, gim);  // b0 -> a0, b1 -> 0
  GradedMap fg = compose(f, g);
  CHECK(fg.deg == 0);
  CHECK(fg.apply_basis(0) == Elem{{0, Scalar::one(Z)}});
  CHECK(fg.apply_basis(1).empty());
}

TEST_CASE("complexes enforce d squared zero and cones are exact for the identity") {
  // P: k at degree 0 and k at degree 1 with zero differential
  BasedModule pm{Z, {0, 1}, {"u", "v"}};
  FiniteComplex P = FiniteComplex::make(pm, std::vector<Elem>(2));
  std::vector<Elem> idim(2);
  idim[0] = {{0, Scalar::one(Z)}};
  idim[1] = {{1, Scalar::one(Z)}};
  GradedMap id = GradedMap::make(pm, pm, 0, idim);
  FiniteComplex C = cone(id, P, P);
  CHECK(C.mod.size() == 4);
  CHECK(C.mod.degrees == std::vector<long>{0, 1, -1, 0});
  CHECK(homology_trivial(C));
  // P itself has homology
  CHECK_FALSE(homology_trivial(P));

  // cone of a non-chain map is rejected: source has d(q0) = 2 q1, target d = 0
  BasedModule qm{Z, {0, 1}, {}};
  std::vector<Elem> qd(2);
  qd[0] = {{1, Scalar::of(2, Z)}};
  FiniteComplex Q = FiniteComplex::make(qm, qd);
  GradedMap alpha = GradedMap::make(qm, pm, 0, idim);
  CHECK_THROWS(cone(alpha, Q, P));
}

TEST_CASE("cone differential matches the displayed formula for the identity") {
  // d(ps) = (p alpha, -(p d) s); with P having d(u) = 2v, alpha = id
  BasedModule pm{Z, {0, 1}, {"u", "v"}};
  std::vector<Elem> pd(2);
  pd[0] = {{1, Scalar::of(2, Z)}};
  FiniteComplex P = FiniteComplex::make(pm, pd);
  std::vector<Elem> idim(2);
  idim[0] = {{0, Scalar::one(Z)}};
  idim[1] = {{1, Scalar::one(Z)}};
  GradedMap id = GradedMap::make(pm, pm, 0, idim);
  FiniteComplex C = cone(id, P, P);
  // basis: u, v, us, vs
  CHECK(C.d.apply_basis(2) == Elem{{0, Scalar::one(Z)}, {3, Scalar::of(-2, Z)}});
  CHECK(C.d.apply_basis(3) == Elem{{1, Scalar::one(Z)}});
  CHECK(homology_trivial(C));
}

TEST_CASE("randomized differentials keep cones exact") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    // two-step complex k^2 -> k^2 concentrated in degrees 0, 1: any matrix works
    BasedModule pm{Z, {0, 0, 1, 1}, {}};
    std::vector<Elem> pd(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 2; j < 4; ++j) add_term(pd[i], j, Scalar::of(pick(rng) - 1, Z));
    FiniteComplex P = FiniteComplex::make(pm, pd);
    std::vector<Elem> idim(4);
    for (int i = 0; i < 4; ++i) idim[i] = {{i, Scalar::one(Z)}};
    FiniteComplex C = cone(GradedMap::make(pm, pm, 0, idim), P, P);
    CHECK(homology_trivial(C));
  }
}
