#include "ainfree/funcat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ainfree {

CocatHom identity_hom(const AnCat& a) {
  CocatHom f;
  f.src = &a;
  f.dst = &a;
  f.obj_map.resize(a.objects.size());
  for (size_t i = 0; i < a.objects.size(); ++i) f.obj_map[i] = (int)i;
  f.level = a.level;
  RingSpec ring = a.ring;
  f.comp = [ring](const Word& w) {
    Elem e;
    if (w.size() == 1) e.emplace(w[0], Scalar::one(ring));
    return e;
  };
  return f;
}

CocatHom compose_hom(const CocatHom& f, const CocatHom& g) {
  if (!f.src || f.dst != g.src) throw std::invalid_argument("functors do not compose");
  CocatHom out;
  out.src = f.src;
  out.dst = g.dst;
  out.obj_map.resize(f.obj_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i)
    out.obj_map[i] = g.obj_map.at((size_t)f.obj_map[i]);
  out.level = std::min(f.level, g.level);
  auto fc = std::make_shared<const CocatHom>(f);
  auto gc = std::make_shared<const CocatHom>(g);
  out.comp = [fc, gc](const Word& w) {
    Elem res;
    for (int l = 1; l <= (int)w.size(); ++l) {
      WordElem mid = hom_matrix_coeff(*fc, w, l);
      if (mid.empty()) continue;
      if (l > gc->level) throw budget_error("composite needs components beyond truncation");
      for (const auto& [mw, c] : mid) add_scaled(res, gc->comp(mw), c);
    }
    return res;
  };
  return out;
}

AnCat restrict_cat(const AnCat& a, int level) {
  if (level < 1 || level > a.level) throw std::invalid_argument("bad restriction level");
  AnCat out = a;
  out.level = level;
  auto inner = a.b;
  out.b = [inner, level](const Word& w) {
    if ((int)w.size() > level) throw budget_error("operation beyond restricted level");
    return inner(w);
  };
  return out;
}

CocatHom restrict_hom(const CocatHom& f, int level) {
  if (level < 1 || level > f.level) throw std::invalid_argument("bad restriction level");
  CocatHom out = f;
  out.level = level;
  auto inner = f.comp;
  out.comp = [inner, level](const Word& w) {
    if ((int)w.size() > level) throw budget_error("component beyond restricted level");
    return inner(w);
  };
  return out;
}

AnCat pad_cat(const AnCat& a, int level) {
  if (level < a.level) throw std::invalid_argument("pad level below current level");
  AnCat out = a;
  out.level = level;
  int orig = a.level;
  auto inner = a.b;
  out.b = [inner, orig, level](const Word& w) {
    if ((int)w.size() <= orig) return inner(w);
    if ((int)w.size() <= level) return Elem{};
    throw budget_error("operation arity beyond level");
  };
  return out;
}

Elem b_multilinear(const AnCat& a, const std::vector<Elem>& args) {
  std::vector<std::pair<Word, Scalar>> partial = {{Word{}, Scalar::one(a.ring)}};
  for (const Elem& e : args) {
    std::vector<std::pair<Word, Scalar>> next;
    for (const auto& [w, c] : partial)
      for (const auto& [id, v] : e) {
        Word t = w;
        t.push_back(id);
        next.push_back({t, c * v});
      }
    partial = std::move(next);
  }
  Elem res;
  for (const auto& [w, c] : partial) add_scaled(res, a.b(w), c);
  return res;
}

Coderivation coder_B1(const Coderivation& r) {
  if (!r.f || !r.g || r.f->src != r.g->src || r.f->dst != r.g->dst)
    throw std::invalid_argument("coderivation endpoints mismatch");
  const AnCat* A = r.f->src;
  const AnCat* B = r.f->dst;
  Coderivation out;
  out.f = r.f;
  out.g = r.g;
  out.deg = r.deg + 1;
  out.level = r.level;
  auto rc = std::make_shared<const Coderivation>(r);
  out.comp = [rc, A, B](int obj, const Word& w) {
    int k = (int)w.size();
    Elem res;
    for (int l = 1; l <= k + 1; ++l) {
      WordElem mid = theta(rc->f, {rc.get()}, obj, w, l);
      if (mid.empty()) continue;
      if (l > B->level) throw budget_error("differential needs operations beyond target level");
      for (const auto& [mw, c] : mid) add_scaled(res, B->b(mw), c);
    }
    Scalar sgn = sign_pow(rc->deg + 1, A->ring);
    for (int n = 1; n <= k; ++n) {
      for (int al = 0; al + n <= k; ++al) {
        std::vector<BlockOp> ops((size_t)al);
        ops.push_back(op_b(*A, n));
        ops.resize((size_t)(k - n + 1), BlockOp{});
        WordElem mid = koszul_apply(ops, w, A->deg_fn(), A->ring);
        for (const auto& [mw, c] : mid) add_scaled(res, rc->comp(obj, mw), sgn * c);
      }
    }
    return res;
  };
  return out;
}

Coderivation coder_B(std::vector<Coderivation> rs) {
  if (rs.empty()) throw std::invalid_argument("empty coderivation chain");
  if (rs.size() == 1) return coder_B1(rs[0]);
  for (size_t i = 0; i + 1 < rs.size(); ++i)
    if (rs[i].g != rs[i + 1].f) throw std::invalid_argument("coderivations do not chain");
  const CocatHom* f0 = rs.front().f;
  const AnCat* B = f0->dst;
  Coderivation out;
  out.f = f0;
  out.g = rs.back().g;
  int lvl = rs.front().level;
  long dsum = 0;
  for (const Coderivation& r : rs) {
    lvl = std::min(lvl, r.level);
    dsum += r.deg;
  }
  out.deg = (int)dsum + 1;
  out.level = lvl;
  int n = (int)rs.size();
  auto owned = std::make_shared<const std::vector<Coderivation>>(std::move(rs));
  out.comp = [owned, f0, B, n](int obj, const Word& w) {
    int k = (int)w.size();
    std::vector<const Coderivation*> ptrs;
    for (const Coderivation& r : *owned) ptrs.push_back(&r);
    Elem res;
    for (int l = n; l <= k + n; ++l) {
      WordElem mid = theta(f0, ptrs, obj, w, l);
      if (mid.empty()) continue;
      if (l > B->level) throw budget_error("differential needs operations beyond target level");
      for (const auto& [mw, c] : mid) add_scaled(res, B->b(mw), c);
    }
    return res;
  };
  return out;
}

Coderivation M_compose(const CocatHom* f0, std::vector<Coderivation> rs, const CocatHom* g0,
                       std::vector<Coderivation> ts, const CocatHom* comp_f,
                       const CocatHom* comp_g) {
  if (!f0 || !g0 || !comp_f || !comp_g) throw std::invalid_argument("missing functor");
  if (!rs.empty() && rs.front().f != f0) throw std::invalid_argument("row must start at f0");
  for (size_t i = 0; i + 1 < rs.size(); ++i)
    if (rs[i].g != rs[i + 1].f) throw std::invalid_argument("coderivations do not chain");
  if (!ts.empty() && ts.front().f != g0) throw std::invalid_argument("tail must start at g0");
  int n = (int)rs.size();
  int m = (int)ts.size();
  Coderivation out;
  out.f = comp_f;
  out.g = comp_g;
  long dsum = 0;
  for (const Coderivation& r : rs) dsum += r.deg;
  for (const Coderivation& t : ts) dsum += t.deg;
  out.deg = (int)dsum;
  int lvl = f0->level;
  for (const Coderivation& r : rs) lvl = std::min(lvl, r.level);
  if (m > 1 || (n == 0 && m == 0)) {
    out.level = std::max(lvl, 0);
    out.comp = [](int, const Word&) { return Elem{}; };
    return out;
  }
  lvl = std::min(lvl, (m == 0 ? g0->level : ts.front().level) - n);
  out.level = std::max(lvl, 0);
  auto rown = std::make_shared<const std::vector<Coderivation>>(std::move(rs));
  if (m == 0) {
    out.comp = [rown, f0, g0, n](int obj, const Word& w) {
      int k = (int)w.size();
      std::vector<const Coderivation*> ptrs;
      for (const Coderivation& r : *rown) ptrs.push_back(&r);
      Elem res;
      for (int l = std::max(n, 1); l <= n + k; ++l) {
        WordElem mid = theta(f0, ptrs, obj, w, l);
        if (mid.empty()) continue;
        if (l > g0->level) throw budget_error("composite needs components beyond truncation");
        for (const auto& [mw, c] : mid) add_scaled(res, g0->comp(mw), c);
      }
      return res;
    };
  } else {
    auto town = std::make_shared<const Coderivation>(std::move(ts.front()));
    out.comp = [rown, town, f0, n](int obj, const Word& w) {
      int k = (int)w.size();
      std::vector<const Coderivation*> ptrs;
      for (const Coderivation& r : *rown) ptrs.push_back(&r);
      Elem res;
      int obj_b = f0->obj_map.at((size_t)obj);
      for (int l = n; l <= n + k; ++l) {
        WordElem mid = theta(f0, ptrs, obj, w, l);
        if (mid.empty()) continue;
        if (l > town->level) throw budget_error("composite needs components beyond truncation");
        for (const auto& [mw, c] : mid) add_scaled(res, town->comp(obj_b, mw), c);
      }
      return res;
    };
  }
  return out;
}

MIdentityReport check_M_functor_identity(
    const CocatHom* f0, std::vector<Coderivation> rs, const CocatHom* g0,
    std::vector<Coderivation> ts, const std::function<const CocatHom*(int, int)>& composite,
    int k_max, long budget) {
  if (!f0 || !g0) throw std::invalid_argument("missing functor");
  const AnCat& A = *f0->src;
  int n = (int)rs.size();
  int m = (int)ts.size();
  if (m > 1) throw std::invalid_argument("tail rows beyond length 1 are not supported");
  const CocatHom* cf = composite(0, 0);
  const CocatHom* cg = composite(n, m);

  std::vector<std::pair<Scalar, Coderivation>> lhs, rhs;

  // (B (x) 1)M: apply B_j to a consecutive block of the first row
  for (int al = 0; al <= n; ++al)
    for (int j = 1; al + j <= n; ++j) {
      std::vector<Coderivation> sub(rs.begin() + al, rs.begin() + al + j);
      Coderivation bj = coder_B(std::move(sub));
      std::vector<Coderivation> row(rs.begin(), rs.begin() + al);
      row.push_back(std::move(bj));
      for (int i = al + j; i < n; ++i) row.push_back(rs[(size_t)i]);
      long cross = 0;
      for (int i = al + j; i < n; ++i) cross += rs[(size_t)i].deg;
      for (const Coderivation& t : ts) cross += t.deg;
      lhs.push_back({sign_pow(cross, A.ring), M_compose(f0, std::move(row), g0, ts, cf, cg)});
    }
  // (1 (x) B)M: the differential hits the tail row
  if (m == 1) {
    std::vector<Coderivation> tb = {coder_B1(ts.front())};
    lhs.push_back({Scalar::one(A.ring), M_compose(f0, rs, g0, std::move(tb), cf, cg)});
  }

  /* MB: split both rows into c aligned bi-blocks, none empty on both sides,
     apply M to each, then B_c; the interchange sign moves each tail block
     over the first-row blocks to its right. */
  std::vector<std::pair<int, int>> parts;
  auto emit_parts = [&]() {
    std::vector<Coderivation> chain;
    int a_pre = 0, x_pre = 0;
    long sign_exp = 0;
    for (const auto& [ni, mi] : parts) {
      const CocatHom* fi = a_pre == 0 ? f0 : rs[(size_t)a_pre - 1].g;
      const CocatHom* gi = x_pre == 0 ? g0 : ts.front().g;
      std::vector<Coderivation> rsub(rs.begin() + a_pre, rs.begin() + a_pre + ni);
      std::vector<Coderivation> tsub;
      if (mi == 1) tsub.push_back(ts.front());
      if (x_pre == 1) {
        long blockdeg = 0;
        for (const Coderivation& r : rsub) blockdeg += r.deg;
        sign_exp += ts.front().deg * blockdeg;
      }
      chain.push_back(M_compose(fi, std::move(rsub), gi, std::move(tsub),
                                composite(a_pre, x_pre), composite(a_pre + ni, x_pre + mi)));
      a_pre += ni;
      x_pre += mi;
    }
    rhs.push_back({sign_pow(sign_exp, A.ring), coder_B(std::move(chain))});
  };
  auto rec = [&](auto&& self, int nrem, int mrem) -> void {
    if (nrem == 0 && mrem == 0) {
      if (!parts.empty()) emit_parts();
      return;
    }
    for (int ni = 0; ni <= nrem; ++ni)
      for (int mi = 0; mi <= mrem; ++mi) {
        if (ni == 0 && mi == 0) continue;
        parts.push_back({ni, mi});
        self(self, nrem - ni, mrem - mi);
        parts.pop_back();
      }
  };
  rec(rec, n, m);

  MIdentityReport rep;
  auto compare_at = [&](int obj, const Word& w) {
    Elem L, R;
    for (const auto& [s, c] : lhs) add_scaled(L, c.comp(obj, w), s);
    for (const auto& [s, c] : rhs) add_scaled(R, c.comp(obj, w), s);
    ++rep.checked;
    if (L != R && rep.pass) {
      rep.pass = false;
      std::ostringstream os;
      os << "component mismatch on " << (w.empty() ? "@" + A.objects.at((size_t)obj) : A.print(w));
      rep.detail = os.str();
    }
  };
  for (int obj = 0; obj < (int)A.objects.size(); ++obj) compare_at(obj, {});
  for (int k = 1; k <= k_max; ++k)
    for (const Word& w : composable_words(A, k, budget))
      compare_at(A.slots[(size_t)w.front()].src, w);
  return rep;
}

int FunctorCat::slot_id(int fsrc, int fdst, int obj, const Word& w, int target) const {
  auto it = index.find(std::make_tuple(fsrc, fdst, obj, w, target));
  if (it == index.end()) throw std::invalid_argument("no such functor-category slot");
  return it->second;
}

Coderivation FunctorCat::slot_coder(int id) const {
  const FuncatSlot& s = slot_data.at((size_t)id);
  Coderivation r;
  r.f = functors.at((size_t)s.fsrc);
  r.g = functors.at((size_t)s.fdst);
  r.deg = cat.slot_deg(id);
  r.level = a->level;
  FuncatSlot key = s;
  RingSpec ring = a->ring;
  r.comp = [key, ring](int obj, const Word& w) {
    Elem e;
    if (w == key.w && (!w.empty() || obj == key.obj)) e.emplace(key.target, Scalar::one(ring));
    return e;
  };
  return r;
}

Coderivation FunctorCat::elem_coder(int fsrc, int fdst, const Elem& e) const {
  Coderivation r;
  r.f = functors.at((size_t)fsrc);
  r.g = functors.at((size_t)fdst);
  r.level = a->level;
  r.deg = 0;
  bool first = true;
  std::map<std::pair<int, Word>, Elem> table;
  for (const auto& [id, c] : e) {
    const FuncatSlot& s = slot_data.at((size_t)id);
    if (s.fsrc != fsrc || s.fdst != fdst) throw std::invalid_argument("slot outside this hom module");
    if (first) {
      r.deg = cat.slot_deg(id);
      first = false;
    } else if (cat.slot_deg(id) != r.deg) {
      throw std::invalid_argument("inhomogeneous coderivation element");
    }
    add_term(table[{s.obj, s.w}], s.target, c);
  }
  auto tbl = std::make_shared<const std::map<std::pair<int, Word>, Elem>>(std::move(table));
  r.comp = [tbl](int obj, const Word& w) {
    auto it = tbl->find({obj, w});
    return it == tbl->end() ? Elem{} : it->second;
  };
  return r;
}

Elem FunctorCat::coder_elem(const Coderivation& r, int fsrc, int fdst) const {
  Elem out;
  const FuncatSlot* prev = nullptr;
  Elem img;
  for (size_t id = 0; id < slot_data.size(); ++id) {
    const FuncatSlot& s = slot_data[id];
    if (s.fsrc != fsrc || s.fdst != fdst) continue;
    if (!prev || prev->obj != s.obj || prev->w != s.w) img = r.comp(s.obj, s.w);
    prev = &s;
    auto it = img.find(s.target);
    if (it != img.end()) add_term(out, (int)id, it->second);
  }
  return out;
}

Elem FunctorCat::apply_B1(int fsrc, int fdst, const Elem& e) const {
  if (e.empty()) return {};
  return coder_elem(coder_B1(elem_coder(fsrc, fdst, e)), fsrc, fdst);
}

std::shared_ptr<FunctorCat> functor_category(const AnCat& a, const AnCat& b,
                                             std::vector<const CocatHom*> functors, int level,
                                             long budget) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  if (b.level < a.level + level)
    throw std::invalid_argument("target level too low for this truncation");
  for (const CocatHom* f : functors) {
    if (!f || f->src != &a || f->dst != &b) throw std::invalid_argument("functor endpoints mismatch");
    if (f->level < a.level) throw std::invalid_argument("functor truncated below source level");
    if (!all_pass(check_an_functor(f->as_functor_data(), a.level, budget)))
      throw std::invalid_argument("listed object fails the functor identities");
  }
  auto fc = std::make_shared<FunctorCat>();
  fc->a = &a;
  fc->b = &b;
  fc->functors = std::move(functors);
  fc->level = level;
  fc->budget = budget;
  fc->cat.ring = a.ring;
  fc->cat.level = level;
  for (size_t i = 0; i < fc->functors.size(); ++i)
    fc->cat.objects.push_back("f" + std::to_string(i));
  auto push_slot = [&](int i, int j, int obj, const Word& w, int target) {
    long wdeg = word_deg(w, a.deg_fn());
    FuncatSlot s{i, j, obj, w, target};
    std::string label = "f" + std::to_string(i) + "->f" + std::to_string(j) + " ";
    if (w.empty())
      label += "@" + a.objects.at((size_t)obj);
    else
      label += a.print(w);
    label += " => " + b.slots.at((size_t)target).label;
    int id = (int)fc->slot_data.size();
    fc->slot_data.push_back(s);
    fc->cat.slots.push_back({i, j, (int)(b.slot_deg(target) - wdeg), label});
    fc->index.emplace(std::make_tuple(i, j, obj, w, target), id);
  };
  int nf = (int)fc->functors.size();
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j) {
      const CocatHom* fi = fc->functors[(size_t)i];
      const CocatHom* fj = fc->functors[(size_t)j];
      for (int obj = 0; obj < (int)a.objects.size(); ++obj)
        for (int t : b.hom_basis(fi->obj_map.at((size_t)obj), fj->obj_map.at((size_t)obj)))
          push_slot(i, j, obj, {}, t);
      for (int k = 1; k <= a.level; ++k)
        for (const Word& w : composable_words(a, k, budget)) {
          int x0 = a.slots.at((size_t)w.front()).src;
          int xk = a.slots.at((size_t)w.back()).dst;
          for (int t : b.hom_basis(fi->obj_map.at((size_t)x0), fj->obj_map.at((size_t)xk)))
            push_slot(i, j, x0, w, t);
        }
    }
  FunctorCat* p = fc.get();
  fc->cat.b = [p](const Word& w) {
    int arity = (int)w.size();
    if (arity < 1 || arity > p->cat.level) throw budget_error("operation arity beyond level");
    std::vector<Coderivation> chain;
    for (int i = 0; i < arity; ++i) {
      if (i && p->slot_data.at((size_t)w[(size_t)i - 1]).fdst !=
                   p->slot_data.at((size_t)w[(size_t)i]).fsrc)
        throw std::invalid_argument("slots do not chain");
      chain.push_back(p->slot_coder(w[(size_t)i]));
    }
    int fs = p->slot_data.at((size_t)w.front()).fsrc;
    int fd = p->slot_data.at((size_t)w.back()).fdst;
    return p->coder_elem(coder_B(std::move(chain)), fs, fd);
  };
  return fc;
}

bool check_unit_cycles(const AnCat& b, const UnitData& u) {
  if (u.i0.size() != b.objects.size()) return false;
  for (size_t o = 0; o < u.i0.size(); ++o) {
    for (const auto& [id, c] : u.i0[o]) {
      const HomSlot& s = b.slots.at((size_t)id);
      if (s.deg != -1 || s.src != (int)o || s.dst != (int)o) return false;
    }
    if (!u.i0[o].empty() && !b_multilinear(b, {u.i0[o]}).empty()) return false;
  }
  return true;
}

AnCat dg_category(DgCatData data, int level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  if (data.identity.size() != data.objects.size())
    throw std::invalid_argument("one identity per object required");
  if (!data.diff.empty() && data.diff.size() != data.slots.size())
    throw std::invalid_argument("differential table size mismatch");
  for (size_t o = 0; o < data.identity.size(); ++o) {
    const HomSlot& s = data.slots.at((size_t)data.identity[o]);
    if (s.src != (int)o || s.dst != (int)o || s.deg != -1)
      throw std::invalid_argument("identity slot must be a degree -1 endomorphism");
  }
  AnCat c;
  c.ring = data.ring;
  c.level = level;
  c.objects = data.objects;
  c.slots = data.slots;
  auto dd = std::make_shared<const DgCatData>(std::move(data));
  c.b = [dd, level](const Word& w) {
    if ((int)w.size() > level) throw budget_error("operation arity beyond level");
    if (w.size() == 1) {
      if (dd->diff.empty()) return Elem{};
      return dd->diff.at((size_t)w[0]);
    }
    if (w.size() == 2) {
      int x = w[0], y = w[1];
      const HomSlot& sx = dd->slots.at((size_t)x);
      const HomSlot& sy = dd->slots.at((size_t)y);
      if (sx.dst != sy.src) throw std::invalid_argument("word not composable");
      Elem prod;
      if (dd->identity.at((size_t)sy.src) == y) {
        prod.emplace(x, Scalar::one(dd->ring));
      } else if (dd->identity.at((size_t)sx.src) == x) {
        prod.emplace(y, Scalar::one(dd->ring));
      } else {
        auto it = dd->mult.find({x, y});
        if (it != dd->mult.end()) prod = it->second;
      }
      return scaled(prod, sign_pow(sy.deg + 1, dd->ring));
    }
    return Elem{};
  };
  return c;
}

UnitData dg_units(const DgCatData& data) {
  UnitData u;
  u.i0.resize(data.objects.size());
  for (size_t o = 0; o < data.objects.size(); ++o)
    u.i0[o].emplace(data.identity.at(o), Scalar::one(data.ring));
  return u;
}

Elem unit_elem(const FunctorCat& fc, int f_idx, const UnitData& units) {
  Elem out;
  for (int obj = 0; obj < (int)fc.a->objects.size(); ++obj) {
    int tobj = fc.functors.at((size_t)f_idx)->obj_map.at((size_t)obj);
    for (const auto& [t, c] : units.i0.at((size_t)tobj))
      add_term(out, fc.slot_id(f_idx, f_idx, obj, {}, t), c);
  }
  return out;
}

namespace {

// im B1 membership of `target` inside the (i,i) endomorphism slots
std::pair<bool, std::string> boundary_membership(const FunctorCat& fc, int i,
                                                 const Elem& target) {
  std::vector<int> ids;
  std::map<int, int> local;
  for (size_t id = 0; id < fc.slot_data.size(); ++id)
    if (fc.slot_data[id].fsrc == i && fc.slot_data[id].fdst == i) {
      local[(int)id] = (int)ids.size();
      ids.push_back((int)id);
    }
  RingSpec ring = fc.cat.ring;
  SparseMatrix m((int)ids.size(), (int)ids.size(), ring);
  for (size_t row = 0; row < ids.size(); ++row) {
    Elem one_slot;
    one_slot.emplace(ids[row], Scalar::one(ring));
    for (const auto& [col_id, c] : fc.apply_B1(i, i, one_slot)) m.set((int)row, local.at(col_id), c);
  }
  std::vector<Scalar> v((size_t)ids.size(), Scalar::zero(ring));
  for (const auto& [id, c] : target) v[(size_t)local.at(id)] = c;
  auto wit = image_membership(m, v);
  if (!wit) return {false, ""};
  std::ostringstream os;
  bool first = true;
  for (size_t row = 0; row < wit->size(); ++row) {
    if ((*wit)[row].is_zero()) continue;
    os << (first ? "" : " + ") << (*wit)[row].str() << "*[" << fc.cat.slots[(size_t)ids[row]].label
       << "]";
    first = false;
  }
  if (first) os << "0";
  return {true, os.str()};
}

}  // namespace

UnitCycleReport unit_cycle_check(const FunctorCat& fc, int f_idx, int g_idx, const Elem& r0,
                                 const Elem& p0, const Elem& unit_f, const Elem& unit_g) {
  if (!fc.apply_B1(f_idx, g_idx, r0).empty()) throw std::invalid_argument("r0 is not a cycle");
  if (!fc.apply_B1(g_idx, f_idx, p0).empty()) throw std::invalid_argument("p0 is not a cycle");
  UnitCycleReport rep;
  Elem left = b_multilinear(fc.cat, {r0, p0});
  add_scaled(left, unit_f, -Scalar::one(fc.cat.ring));
  Elem right = b_multilinear(fc.cat, {p0, r0});
  add_scaled(right, unit_g, -Scalar::one(fc.cat.ring));
  auto [lm, lw] = boundary_membership(fc, f_idx, left);
  auto [rm, rw] = boundary_membership(fc, g_idx, right);
  rep.left_member = lm;
  rep.right_member = rm;
  rep.left_witness = lw;
  rep.right_witness = rw;
  rep.pass = lm && rm;
  return rep;
}

}  // namespace ainfree
