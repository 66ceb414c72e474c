/* Acceptance gate: one binary, one pass/fail line per criterion, exact
   arithmetic throughout. Every criterion carries a wall-clock budget; a pass
   outside its budget fails. The exit status is the number of failures. */

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ainfree/funcat.hpp"
#include "ainfree/io.hpp"
#include "ainfree/lift.hpp"
#include "ainfree/tree.hpp"

using namespace ainfree;

namespace {

Scalar S(long v, RingSpec r) { return Scalar::of(v, r); }

/* Deterministic small coefficients, so pseudo-random data is reproducible
   without an RNG dependency. */
int hash_coeff(const Word& w, int salt, int extra) {
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&](unsigned long long x) {
    h ^= x + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  mix((unsigned long long)salt);
  mix((unsigned long long)extra);
  for (int id : w) mix((unsigned long long)(id + 1));
  return (int)(h % 7) - 3;
}

/* One-object toy with slots 1 (identity), e, h, z, v; dh = e, h*v = e and all
   other non-identity products zero. */
DgCatData toy_data(RingSpec ring) {
  DgCatData d;
  d.ring = ring;
  d.objects = {"P"};
  d.slots = {{0, 0, -1, "1"}, {0, 0, -1, "e"}, {0, 0, -2, "h"}, {0, 0, -2, "z"}, {0, 0, 0, "v"}};
  d.identity = {0};
  d.diff.resize(5);
  add_term(d.diff[2], 1, Scalar::one(ring));
  Elem hv;
  add_term(hv, 1, Scalar::one(ring));
  d.mult[{2, 4}] = hv;
  return d;
}

constexpr int ID1 = 0, IDE = 1, IDH = 2, IDZ = 3, IDV = 4;

// single object, one endomorphism generator x, zero differential
DGQuiver single_gen(RingSpec ring, int sdeg) {
  GradedQuiver q;
  q.ring = ring;
  q.objects = {"P"};
  q.morphisms = {{"x", 0, 0, sdeg}};
  return DGQuiver::make(q, {Elem{}});
}

// x of degree -2 with dx = y, y of degree -1 closed
DGQuiver mixed_gen(RingSpec ring) {
  GradedQuiver q;
  q.ring = ring;
  q.objects = {"P"};
  q.morphisms = {{"x", 0, 0, -2}, {"y", 0, 0, -1}};
  std::vector<Elem> diff(2);
  add_term(diff[0], 1, Scalar::one(ring));
  return DGQuiver::make(q, diff);
}

// single object, single endomorphism generator of degree -1, zero differential
DGQuiver loop_quiver(RingSpec ring) {
  GradedQuiver q;
  q.ring = ring;
  q.objects = {"L"};
  q.morphisms = {{"x", 0, 0, -1}};
  return DGQuiver::make(q, {Elem{}});
}

Elem unit_of(const AnCat& a, int id) {
  Elem e;
  add_term(e, id, Scalar::one(a.ring));
  return e;
}

// spread over the slots of one hom module at an exact degree
Elem pseudo_slot_elem(const AnCat& a, int src, int dst, long deg, int salt, int extra) {
  Elem e;
  for (int id : a.hom_basis(src, dst))
    if ((long)a.slot_deg(id) == deg) {
      int c = hash_coeff({id}, salt, extra);
      if (c) add_term(e, id, S(c, a.ring));
    }
  return e;
}

// spread over the hom slots of a functor category at an exact degree
Elem pseudo_fc_elem(const FunctorCat& fc, int fsrc, int fdst, int deg, int salt) {
  Elem e;
  for (size_t id = 0; id < fc.slot_data.size(); ++id) {
    const FuncatSlot& s = fc.slot_data[id];
    if (s.fsrc != fsrc || s.fdst != fdst) continue;
    if (fc.cat.slot_deg((int)id) != deg) continue;
    int c = hash_coeff(s.w, salt, (int)id);
    if (c) add_term(e, (int)id, S(c, fc.cat.ring));
  }
  return e;
}

bool same_on_slots(const FreeCat& fq, const CocatHom& f, const CocatHom& g) {
  for (size_t id = 0; id < fq.slot_data.size(); ++id) {
    Elem a = f.comp({(int)id});
    add_scaled(a, g.comp({(int)id}), S(-1, fq.cat.ring));
    if (!a.empty()) return false;
  }
  return true;
}

CocatHom table_hom(const AnCat& a, const AnCat& b, std::vector<int> obj_map, int level,
                   std::map<Word, Elem> table) {
  CocatHom f;
  f.src = &a;
  f.dst = &b;
  f.obj_map = std::move(obj_map);
  f.level = level;
  auto t = std::make_shared<const std::map<Word, Elem>>(std::move(table));
  f.comp = [t](const Word& w) {
    auto it = t->find(w);
    return it == t->end() ? Elem{} : it->second;
  };
  return f;
}

Coderivation pseudo_coder(const CocatHom* f, const CocatHom* g, int salt, int deg, int level) {
  Coderivation r;
  r.f = f;
  r.g = g;
  r.deg = deg;
  r.level = level;
  const AnCat* bp = f->dst;
  const AnCat* ap = f->src;
  r.comp = [bp, ap, salt, deg](int obj, const Word& w) {
    Elem e;
    long target = word_deg(w, ap->deg_fn()) + deg;
    for (int t = 0; t < (int)bp->slots.size(); ++t)
      if (bp->slot_deg(t) == target) {
        int c = hash_coeff(w, salt, t * 31 + obj);
        if (c) add_term(e, t, S(c, bp->ring));
      }
    return e;
  };
  return r;
}

// u = d xi + xi B1 at the generator level: automatically a chain map
std::function<Elem(int, int)> xi_diff0(FiniteComplex P, const FreeCat* fq, const CocatHom* f,
                                       const CocatHom* g, std::function<Elem(int, int)> x0,
                                       std::function<Elem(int, int)> x1) {
  return [P, fq, f, g, x0, x1](int row, int obj) {
    GenData r;
    r.deg = (int)P.mod.degrees[(size_t)row] - 1;
    r.comp0 = [x0, row](int o) { return x0(row, o); };
    r.comp1 = [x1, row](int gen) { return x1(row, gen); };
    Elem res = a1_differential(*fq, *f, *g, r).comp0(obj);
    for (const auto& [r2, c] : P.d.apply_basis(row)) add_scaled(res, x0(r2, obj), c);
    return res;
  };
}

std::function<Elem(int, int)> xi_diff1(FiniteComplex P, const FreeCat* fq, const CocatHom* f,
                                       const CocatHom* g, std::function<Elem(int, int)> x0,
                                       std::function<Elem(int, int)> x1) {
  return [P, fq, f, g, x0, x1](int row, int gen) {
    GenData r;
    r.deg = (int)P.mod.degrees[(size_t)row] - 1;
    r.comp0 = [x0, row](int o) { return x0(row, o); };
    r.comp1 = [x1, row](int g2) { return x1(row, g2); };
    Elem res = a1_differential(*fq, *f, *g, r).comp1(gen);
    for (const auto& [r2, c] : P.d.apply_basis(row)) add_scaled(res, x1(r2, gen), c);
    return res;
  };
}

/* Rank-4 complex with degrees (-1, 0, 0, 1), d p0 = p1 - p2 and
   d p1 = d p2 = p3. */
FiniteComplex rank4_complex(RingSpec ring) {
  BasedModule mod;
  mod.ring = ring;
  mod.degrees = {-1, 0, 0, 1};
  mod.labels = {"p0", "p1", "p2", "p3"};
  std::vector<Elem> diff(4);
  add_term(diff[0], 1, Scalar::one(ring));
  add_term(diff[0], 2, S(-1, ring));
  add_term(diff[1], 3, Scalar::one(ring));
  add_term(diff[2], 3, Scalar::one(ring));
  return FiniteComplex::make(std::move(mod), std::move(diff));
}

/* Tree counts by the composition recurrence: a tree is a leaf or an ordered
   k >= 2 tuple of smaller trees, so T(1) = 1 and T(n) counts compositions of
   n into k >= 2 parts weighted by the product of the part counts. Independent
   of the enumerator, which builds trees by grafting. */
std::vector<long long> tree_counts_by_recurrence(int nmax) {
  std::vector<long long> T((size_t)nmax + 1, 0);
  T[1] = 1;
  for (int n = 2; n <= nmax; ++n) {
    // F[k][m]: ordered k-tuples of strictly smaller trees with m leaves total
    std::vector<std::vector<long long>> F((size_t)n + 1, std::vector<long long>((size_t)n + 1, 0));
    F[0][0] = 1;
    for (int k = 1; k <= n; ++k)
      for (int m = 1; m <= n; ++m)
        for (int i = 1; i < n && i <= m; ++i) F[(size_t)k][(size_t)m] += T[(size_t)i] * F[(size_t)k - 1][(size_t)(m - i)];
    for (int k = 2; k <= n; ++k) T[(size_t)n] += F[(size_t)k][(size_t)n];
  }
  return T;
}

/* Random presentation: up to 2 objects and 2..4 generators with shifted
   degrees in [-2, 2]. The generators split into two layers and the
   differential maps the first layer into the closed second layer wherever
   endpoints and degrees match, so d^2 = 0 by construction while DGQuiver::make
   still re-verifies it. */
DGQuiver random_quiver(unsigned seed) {
  std::mt19937 rng(seed);
  RingSpec ring = RingSpec::integers();
  GradedQuiver q;
  q.ring = ring;
  int nobj = 1 + (int)(rng() % 2);
  q.objects = {"A", "B"};
  q.objects.resize((size_t)nobj);
  int ngen = 2 + (int)(rng() % 3);
  for (int i = 0; i < ngen; ++i) {
    Morphism m;
    m.name = "g" + std::to_string(i);
    m.src = (int)(rng() % (unsigned)nobj);
    m.dst = (int)(rng() % (unsigned)nobj);
    m.sdeg = (int)(rng() % 5) - 2;
    q.morphisms.push_back(m);
  }
  int split = ngen / 2;
  std::vector<Elem> diff((size_t)ngen);
  for (int i = 0; i < split; ++i)
    for (int j = split; j < ngen; ++j) {
      const Morphism& a = q.morphisms[(size_t)i];
      const Morphism& b = q.morphisms[(size_t)j];
      if (a.src != b.src || a.dst != b.dst || b.sdeg != a.sdeg + 1) continue;
      int c = (int)(rng() % 5) - 2;
      if (c) add_term(diff[(size_t)i], j, S(c, ring));
    }
  return DGQuiver::make(q, diff);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("ainfree_accept_" + name);
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path.string();
}

struct RunOut {
  int rc = -1;
  std::string out;
};

// stdout only; diagnostics on stderr are dropped
RunOut run_cmd(const std::string& cmd) {
  RunOut r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  if (WIFEXITED(st)) r.rc = WEXITSTATUS(st);
  return r;
}

struct Gate {
  int failures = 0;

  void run(int num, const char* what, double budget_s,
           const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = dt <= budget_s;
    std::printf("[C%d] %s: %s (%.2fs)\n", num, what, ok && in_budget ? "PASS" : "FAIL", dt);
    if (!(ok && in_budget)) {
      ++failures;
      if (!ok && !detail.empty()) std::printf("     %s\n", detail.c_str());
      if (ok && !in_budget) std::printf("     exceeded the %.0fs budget\n", budget_s);
    }
  }
};

bool criterion_tree_counts(std::string& detail) {
  const std::vector<long long> frozen = {1, 1, 3, 11, 45, 197, 903};
  std::vector<long long> rec = tree_counts_by_recurrence(7);
  for (int n = 1; n <= 7; ++n) {
    long long enumerated = (long long)enumerate_trees(n).size();
    if (enumerated != frozen[(size_t)n - 1] || rec[(size_t)n] != frozen[(size_t)n - 1]) {
      detail = "mismatch at " + std::to_string(n) + " leaves: enumerated " +
               std::to_string(enumerated) + ", recurrence " + std::to_string(rec[(size_t)n]);
      return false;
    }
  }
  return true;
}

bool criterion_double_contraction(std::string& detail) {
  CancellationReport rep = check_double_contraction_cancellation(6);
  detail = rep.counterexample;
  return rep.pass && rep.pairs_checked > 0;
}

bool criterion_random_quivers(std::string& detail) {
  int with_diff = 0;
  for (unsigned seed : {9u, 81u, 44u}) {
    DGQuiver dq = random_quiver(seed);
    for (size_t g = 0; g < dq.q.morphisms.size(); ++g)
      if (!dq.d_basis((int)g).empty()) {
        ++with_diff;
        break;
      }
    auto fq = free_category(dq, 5, 4);
    auto reps = check_an_category(fq->cat, 4, 5);
    if (!all_pass(reps)) {
      for (const IdentityReport& r : reps)
        if (!r.pass)
          detail = "seed " + std::to_string(seed) + ", k=" + std::to_string(r.k) + ": " +
                   r.counterexample;
      return false;
    }
  }
  if (with_diff == 0) {
    detail = "no sampled quiver has a nonzero differential";
    return false;
  }
  return true;
}

bool criterion_strict_extension(std::string& detail) {
  RingSpec ring = RingSpec::integers();
  DGQuiver dq = mixed_gen(ring);
  auto fq = free_category(dq, 5, 4);
  AnCat a = dg_category(toy_data(ring), 8);
  std::vector<Elem> images{unit_of(a, IDH), unit_of(a, IDE)};
  CocatHom f = extend_strict(*fq, a, {0}, images, 4);

  if (!all_pass(check_an_functor(f.as_functor_data(), 4, 5))) {
    detail = "extension fails the functor identities";
    return false;
  }

  // closed slice form agrees with the recursive extension on every slice
  std::set<std::string> seen;
  for (const FreeSlot& s : fq->slot_data) seen.insert(s.tree.str());
  for (const std::string& key : seen) {
    PlaneTree t = PlaneTree::parse(key);
    GradedMap slice = strict_slice_map(*fq, a, {0}, images, t);
    std::vector<int> rows;
    for (size_t id = 0; id < fq->slot_data.size(); ++id)
      if (fq->slot_data[id].tree == t) rows.push_back((int)id);
    if (rows.size() != slice.images.size()) {
      detail = "slice row count mismatch on " + key;
      return false;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      Elem d = f.comp({rows[i]});
      add_scaled(d, slice.apply_basis((int)i), S(-1, ring));
      if (!d.empty()) {
        detail = "slice value mismatch on " + key;
        return false;
      }
    }
  }

  // restriction after extension returns the generator images
  std::vector<Elem> back = generator_images(*fq, f);
  if (back.size() != images.size()) {
    detail = "restriction returns the wrong number of images";
    return false;
  }
  for (size_t i = 0; i < images.size(); ++i)
    if (!(back[i] == images[i])) {
      detail = "restriction changes a generator image";
      return false;
    }

  // extension after restriction returns the functor
  CocatHom f2 = extend_strict(*fq, a, {0}, back, 4);
  if (!same_on_slots(*fq, f, f2)) {
    detail = "re-extension differs from the original functor";
    return false;
  }

  // the level-one view reads the images off the generator slots
  AnCat a1 = a1_category(dq);
  CocatHom fbar = restrict_functor(*fq, a1, f);
  for (size_t i = 0; i < images.size(); ++i)
    if (!(fbar.comp({(int)i}) == images[i])) {
      detail = "level-one restriction reads the wrong image";
      return false;
    }
  return true;
}

bool criterion_chain_lift(std::string& detail) {
  RingSpec ring = RingSpec::integers();
  DGQuiver dq = mixed_gen(ring);
  auto fq = free_category(dq, 3, 3);
  AnCat a = dg_category(toy_data(ring), 8);
  CocatHom f = extend_strict(*fq, a, {0}, {unit_of(a, IDH), unit_of(a, IDE)}, 3);
  CocatHom g = extend_strict(*fq, a, {0},
                             {scaled(unit_of(a, IDH), S(2, ring)),
                              scaled(unit_of(a, IDE), S(2, ring))},
                             3);

  // chain-map lift over the rank-4 complex
  FiniteComplex P = rank4_complex(ring);
  const AnCat* ap = &a;
  FiniteComplex Pc = P;
  auto x0 = [ap, Pc](int row, int obj) {
    (void)obj;
    return pseudo_slot_elem(*ap, 0, 0, Pc.mod.degrees[(size_t)row] - 1, 21, row);
  };
  const DGQuiver* dqp = &fq->dq;
  auto x1 = [ap, Pc, dqp](int row, int gen) {
    long deg = Pc.mod.degrees[(size_t)row] - 1 + dqp->q.morphisms[(size_t)gen].sdeg;
    return pseudo_slot_elem(*ap, 0, 0, deg, 22, row * 7 + gen);
  };
  LiftProblem lp;
  lp.fq = fq.get();
  lp.phi = &f;
  lp.psi = &g;
  lp.source = P;
  lp.level = 3;
  lp.comp0 = xi_diff0(P, fq.get(), &f, &g, x0, x1);
  lp.comp1 = xi_diff1(P, fq.get(), &f, &g, x0, x1);
  const FreeCat* qp = fq.get();
  lp.compk = [ap, Pc, qp](int row, const Word& w) {
    long deg = Pc.mod.degrees[(size_t)row] + word_deg(w, qp->cat.deg_fn());
    int extra = row;
    for (int id : w) extra = extra * 31 + id;
    return pseudo_slot_elem(*ap, 0, 0, deg, 23, extra);
  };
  ChainLift u = lift_chain_map(lp);
  LiftReport rep = check_chain_lift(lp, u, 3, 3);
  if (!rep.pass || rep.checked <= 0) {
    detail = rep.detail;
    return false;
  }

  // exchange identity behind the lifting recursion, on 20 sampled coderivations
  auto fci = functor_category(fq->cat, a, {&f, &g}, 2, 3);
  const std::vector<std::pair<int, int>> pairs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  int tried = 0;
  for (int salt = 1; salt <= 200 && tried < 20; ++salt) {
    auto [pi, pj] = pairs[(size_t)(salt % 4)];
    int deg = salt % 5 - 2;
    Elem e = pseudo_fc_elem(*fci, pi, pj, deg, salt);
    if (e.empty()) continue;
    ++tried;
    Coderivation r = fci->elem_coder(pi, pj, e);
    LiftReport rrep = check_lift_recursion_identity(r, 3, 3);
    if (!rrep.pass || rrep.checked <= 0) {
      detail = "sample " + std::to_string(tried) + ": " + rrep.detail;
      return false;
    }
  }
  if (tried < 20) {
    detail = "only " + std::to_string(tried) + " nonzero sample coderivations";
    return false;
  }
  return true;
}

bool criterion_equivalence(std::string& detail) {
  RingSpec ring = RingSpec::integers();
  DGQuiver dq = single_gen(ring, -1);
  auto fq = free_category(dq, 3, 3);
  DgCatData td = toy_data(ring);
  AnCat a = dg_category(td, 6);
  UnitData units = dg_units(td);
  int leaf = fq->slot_id(PlaneTree::leaf(), {0});
  ExtensionProblem p;
  p.fq = fq.get();
  p.target = &a;
  p.obj_map = {0};
  p.images = {unit_of(a, IDE)};
  Elem hval = unit_of(a, IDH);
  p.higher = [leaf, hval](const Word& w) { return w == Word{leaf, leaf} ? hval : Elem{}; };
  p.level = 3;
  CocatHom f = extend_functor(p);
  CocatHom g = extend_strict(*fq, a, {0}, {scaled(unit_of(a, IDE), S(2, ring))}, 3);
  EquivalenceReport rep = verify_restriction_equivalence(*fq, a, units, f, g, 1, 3);
  detail = rep.detail;
  if (!rep.pass || !rep.section || !rep.chain || !rep.defect_restricted_zero || !rep.homotopy)
    return false;
  if (rep.units.size() != 2 || rep.checked <= 0) {
    detail = "wrong report shape";
    return false;
  }
  for (const UnitCycleReport& ur : rep.units)
    if (!ur.pass || !ur.left_member || !ur.right_member || ur.left_witness.empty() ||
        ur.right_witness.empty()) {
      detail = "unit cycle membership incomplete";
      return false;
    }
  return true;
}

bool criterion_hom_complexes(std::string& detail) {
  RingSpec ring = RingSpec::integers();
  DGQuiver dq = mixed_gen(ring);
  auto fq = free_category(dq, 3, 3);
  AnCat a = dg_category(toy_data(ring), 8);
  CocatHom f = extend_strict(*fq, a, {0}, {unit_of(a, IDH), unit_of(a, IDE)}, 3);
  CocatHom g = extend_strict(*fq, a, {0},
                             {scaled(unit_of(a, IDH), S(2, ring)),
                              scaled(unit_of(a, IDE), S(2, ring))},
                             3);

  // the generator-level differential squares to zero
  const AnCat* ap = &a;
  const DGQuiver* dqp = &fq->dq;
  for (int deg = -2; deg <= 1; ++deg)
    for (int salt = 31; salt <= 33; ++salt) {
      GenData r;
      r.deg = deg;
      r.comp0 = [ap, deg, salt](int obj) { return pseudo_slot_elem(*ap, 0, 0, deg, salt, obj); };
      r.comp1 = [ap, deg, salt, dqp](int gen) {
        long d = deg + dqp->q.morphisms[(size_t)gen].sdeg;
        return pseudo_slot_elem(*ap, 0, 0, d, salt + 1, gen);
      };
      GenData ddr = a1_differential(*fq, f, g, a1_differential(*fq, f, g, r));
      if (!ddr.comp0(0).empty()) {
        detail = "generator-level differential fails to square to zero on a 0-component";
        return false;
      }
      for (int gen = 0; gen < 2; ++gen)
        if (!ddr.comp1(gen).empty()) {
          detail = "generator-level differential fails to square to zero on a generator";
          return false;
        }
    }

  // the functor-category differential squares to zero on every basis slot
  auto fci = functor_category(fq->cat, a, {&f, &g}, 2, 3);
  for (size_t id = 0; id < fci->slot_data.size(); ++id) {
    const FuncatSlot& s = fci->slot_data[id];
    Elem e;
    add_term(e, (int)id, Scalar::one(a.ring));
    Elem d2 = fci->apply_B1(s.fsrc, s.fdst, fci->apply_B1(s.fsrc, s.fdst, e));
    if (!d2.empty()) {
      detail = "functor-category differential fails to square to zero at slot " +
               std::to_string(id);
      return false;
    }
  }

  // composition is a chain map on every row shape up to two by one
  DGQuiver lq = loop_quiver(ring);
  AnCat l1 = a1_category(lq);
  AnCat a3 = pad_cat(l1, 3);
  DgCatData data = toy_data(ring);
  AnCat b = dg_category(data, 5);
  AnCat c = dg_category(data, 6);

  Elem ex = unit_of(b, IDE);
  Elem zx = unit_of(b, IDZ);
  Elem e2 = scaled(ex, S(2, ring));

  std::vector<CocatHom> fs;
  fs.push_back(table_hom(a3, b, {0}, 3, {{{0}, ex}}));
  fs.push_back(table_hom(a3, b, {0}, 3, {{{0}, e2}}));
  fs.push_back(table_hom(a3, b, {0}, 3, {{{0}, ex}, {{0, 0}, zx}}));
  for (const CocatHom& fr : fs)
    if (!all_pass(check_an_functor(fr.as_functor_data(), 3, 100))) {
      detail = "scaffolding functor fails its identities";
      return false;
    }

  // diagonal rescale compatible with dh = e and h*v = e, plus one 2-component
  std::map<Word, Elem> gs_table, gz_table;
  for (int t : {ID1, IDE, IDH, IDZ, IDV}) {
    Elem img;
    add_term(img, t, S(t == IDE || t == IDH ? 2 : (t == IDZ ? 3 : 1), ring));
    gs_table[{t}] = img;
    Elem idimg;
    add_term(idimg, t, Scalar::one(ring));
    gz_table[{t}] = idimg;
  }
  gz_table[{IDV, IDV}] = zx;
  std::vector<CocatHom> gs;
  gs.push_back(table_hom(b, c, {0}, 5, std::move(gs_table)));
  gs.push_back(table_hom(b, c, {0}, 5, std::move(gz_table)));
  for (const CocatHom& gr : gs)
    if (!all_pass(check_an_functor(gr.as_functor_data(), 5, 5000))) {
      detail = "scaffolding functor fails its identities";
      return false;
    }

  std::vector<std::vector<CocatHom>> comps(fs.size());
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = 0; j < gs.size(); ++j) comps[i].push_back(compose_hom(fs[i], gs[j]));
  auto composite = [&](int i, int j) { return &comps[(size_t)i][(size_t)j]; };

  Coderivation r1 = pseudo_coder(&fs[0], &fs[1], 21, -1, 3);
  Coderivation r2 = pseudo_coder(&fs[1], &fs[2], 22, 0, 3);
  Coderivation t1 = pseudo_coder(&gs[0], &gs[1], 23, -1, 5);

  std::vector<std::pair<std::vector<Coderivation>, std::vector<Coderivation>>> shapes = {
      {{r1}, {}}, {{}, {t1}}, {{r1}, {t1}}, {{r1, r2}, {}}, {{r1, r2}, {t1}}};
  for (const auto& [rrow, trow] : shapes) {
    MIdentityReport mrep = check_M_functor_identity(&fs[0], rrow, &gs[0], trow, composite, 3, 100);
    if (!mrep.pass || mrep.checked <= 0) {
      detail = "rows " + std::to_string(rrow.size()) + " by " + std::to_string(trow.size()) +
               ": " + mrep.detail;
      return false;
    }
  }

  // two rows on the outer side compose to exactly zero
  Coderivation m2 = M_compose(&gs[0], {}, &gs[0], {t1, t1}, composite(0, 0), composite(0, 0));
  for (const Word& w :
       std::vector<Word>{{}, {IDV}, {IDE}, {IDH}, {IDE, IDE}, {IDH, IDV}, {IDE, IDH, IDV}})
    if (!m2.comp(0, w).empty()) {
      detail = "two-row outer composition has a nonzero component";
      return false;
    }
  return true;
}

bool criterion_cli(std::string& detail) {
  const std::string cli = AINFREE_CLI_PATH;
  const std::string fx = AINFREE_FIXTURES;
  auto q = [](const std::string& s) { return "\"" + s + "\""; };

  const std::vector<std::string> cmds = {
      q(cli) + " trees 1",
      q(cli) + " trees 3",
      q(cli) + " trees 4 --contractions",
      q(cli) + " trees --max-leaves 5",
      q(cli) + " verify --mode free --quiver " + q(fx + "/q2.json") + " --level 3",
      q(cli) + " verify --mode an-category --category " + q(fx + "/toy_category.json"),
      q(cli) + " verify --mode equivalence --category " + q(fx + "/toy_category.json"),
      q(cli) + " extend --quiver " + q(fx + "/q1.json") + " --category " +
          q(fx + "/toy_category.json") + " --map " + q(fx + "/xmap.json") + " --level 3",
      q(cli) + " lift --quiver " + q(fx + "/q1.json") + " --category " +
          q(fx + "/toy_category.json") + " --map " + q(fx + "/unit_cycle.json") + " --from " +
          q(fx + "/xmap.json") + " --to " + q(fx + "/xmap.json") + " --level 3",
      q(cli) + " report --quiver " + q(fx + "/q2.json") + " --category " +
          q(fx + "/toy_category.json") + " --level 3",
  };
  for (const std::string& cmd : cmds) {
    RunOut first = run_cmd(cmd);
    RunOut second = run_cmd(cmd);
    if (first.rc != 0 || second.rc != 0) {
      detail = "nonzero exit: " + cmd;
      return false;
    }
    if (first.out.empty() || first.out != second.out) {
      detail = "output differs between runs: " + cmd;
      return false;
    }
  }

  // canonical extension output is pinned byte for byte
  RunOut gold = run_cmd(cmds[7]);
  if (gold.out != slurp(fx + "/golden_extend.json")) {
    detail = "extension output differs from the pinned file";
    return false;
  }

  // a broken product table is a verification failure, not an input error
  Json doc = load_json_file(fx + "/toy_category.json");
  doc["products"].push_back(
      {{"left", "v"}, {"right", "h"}, {"value", Json::array({{{"coeff", "1"}, {"name", "1"}}})}});
  std::string mutated = write_temp("mutated_category.json", canonical_text(doc));
  RunOut broken = run_cmd(q(cli) + " verify --mode an-category --category " + q(mutated));
  if (broken.rc != 1 || broken.out.find("counterexample") == std::string::npos) {
    detail = "mutated category: expected exit 1 with a counterexample, got exit " +
             std::to_string(broken.rc);
    return false;
  }

  // malformed and missing inputs are input errors
  std::string garbled = write_temp("garbled.json", "{ not json\n");
  if (run_cmd(q(cli) + " verify --mode an-category --category " + q(garbled)).rc != 2) {
    detail = "malformed input: expected exit 2";
    return false;
  }
  if (run_cmd(q(cli) + " report --quiver " + q(fx + "/no_such_file.json")).rc != 2) {
    detail = "missing input: expected exit 2";
    return false;
  }

  // generator images that break the chain condition are rejected
  Json bad;
  bad["objects"] = Json::array();
  bad["objects"].push_back({{"from", "P"}, {"to", "P"}});
  bad["objects"].push_back({{"from", "Q"}, {"to", "P"}});
  bad["components"] = Json::array();
  bad["components"].push_back({{"inputs", Json::array({"b"})},
                               {"output", Json::array({{{"coeff", "1"}, {"name", "h"}}})}});
  std::string nonchain = write_temp("nonchain_map.json", canonical_text(bad));
  if (run_cmd(q(cli) + " extend --quiver " + q(fx + "/q2.json") + " --category " +
              q(fx + "/toy_category.json") + " --map " + q(nonchain))
          .rc != 2) {
    detail = "non-chain map: expected exit 2";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "tree counts match the composition recurrence", 1.0, criterion_tree_counts);
  gate.run(2, "double contractions cancel in pairs", 5.0, criterion_double_contraction);
  gate.run(3, "free categories on random quivers satisfy the defining identities", 120.0,
           criterion_random_quivers);
  gate.run(4, "strict extension is a functor, matches its slice form, and round-trips", 30.0,
           criterion_strict_extension);
  gate.run(5, "chain-map lifting and the recursion exchange identity", 60.0, criterion_chain_lift);
  gate.run(6, "restriction to generator level is an equivalence on the unital target", 120.0,
           criterion_equivalence);
  gate.run(7, "hom complexes square to zero and composition is a chain map", 60.0,
           criterion_hom_complexes);
  gate.run(8, "command line determinism and exit codes", 120.0, criterion_cli);
  std::printf("%d of 8 criteria passed\n", 8 - gate.failures);
  return gate.failures;
}
