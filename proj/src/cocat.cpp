#include "ainfree/cocat.hpp"

#include <stdexcept>
#include <utility>

namespace ainfree {

AnFunctorData CocatHom::as_functor_data() const {
  AnFunctorData d;
  d.src = src;
  d.dst = dst;
  d.obj_map = obj_map;
  d.level = level;
  d.comp = comp;
  return d;
}

long chain_deg(const std::vector<const Coderivation*>& rs) {
  long t = 0;
  for (const Coderivation* r : rs) t += r->deg;
  return t;
}

namespace {

BlockOp hom_block(const CocatHom* fm, int arity) {
  if (arity < 1 || arity > fm->level) throw budget_error("cocategory component beyond truncation");
  BlockOp op;
  op.arity = arity;
  op.deg = 0;
  auto comp = fm->comp;
  op.act = [comp](const Word& blk) {
    WordElem img;
    for (const auto& [id, c] : comp(blk)) add_term(img, {id}, c);
    return img;
  };
  return op;
}

BlockOp coder_block(const Coderivation* r, int arity, int obj) {
  if (arity > r->level) throw budget_error("coderivation component beyond truncation");
  BlockOp op;
  op.arity = arity;
  op.deg = r->deg;
  auto comp = r->comp;
  op.act = [comp, obj](const Word& blk) {
    WordElem img;
    for (const auto& [id, c] : comp(obj, blk)) add_term(img, {id}, c);
    return img;
  };
  return op;
}

}  // namespace

WordElem theta(const CocatHom* f0, const std::vector<const Coderivation*>& rs,
               int obj, const Word& w, int l) {
  if (!f0 || !f0->src || !f0->dst) throw std::invalid_argument("theta needs a base functor");
  const CocatHom* cur = f0;
  for (const Coderivation* r : rs) {
    if (!r || r->f != cur) throw std::invalid_argument("coderivations do not chain");
    cur = r->g;
  }
  const AnCat& A = *f0->src;
  const int n = (int)rs.size();
  const int k = (int)w.size();
  WordElem out;
  if (l < n || l > k + n) return out;
  auto obj_at = [&](int c) { return c == 0 ? obj : A.slots.at((size_t)w[(size_t)c - 1]).dst; };

  /* Enumerate splittings first (functor slots take >= 1 factors, the r^i in
     order take >= 0), then build the operator row, so a splitting that needs
     a component beyond some truncation level throws instead of being
     silently dropped. */
  std::vector<std::pair<int, int>> prof;  // (coderivation index or -1 for functor, arity)
  auto emit = [&]() {
    std::vector<BlockOp> ops;
    int c = 0, ri = 0;
    for (const auto& [kind, a] : prof) {
      if (kind < 0) {
        ops.push_back(hom_block(ri == 0 ? f0 : rs[(size_t)ri - 1]->g, a));
      } else {
        ops.push_back(coder_block(rs[(size_t)kind], a, obj_at(c)));
        ++ri;
      }
      c += a;
    }
    for (const auto& [tw, tc] : koszul_apply(ops, w, A.deg_fn(), A.ring)) add_term(out, tw, tc);
  };
  auto rec = [&](auto&& self, int s, int c, int ri) -> void {
    if (s == l) {
      if (c == k && ri == n) emit();
      return;
    }
    if (ri < n) {
      for (int a = 0; c + a <= k; ++a) {
        prof.push_back({ri, a});
        self(self, s + 1, c + a, ri + 1);
        prof.pop_back();
      }
    }
    if (l - s - 1 >= n - ri) {
      for (int a = 1; c + a <= k; ++a) {
        prof.push_back({-1, a});
        self(self, s + 1, c + a, ri);
        prof.pop_back();
      }
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

WordElem hom_matrix_coeff(const CocatHom& f, const Word& w, int l) {
  if (w.empty()) throw std::invalid_argument("matrix coefficient needs a nonempty word");
  int obj = f.src->slots.at((size_t)w[0]).src;
  return theta(&f, {}, obj, w, l);
}

WordElem coder_matrix_coeff(const Coderivation& r, int obj, const Word& w, int l) {
  return theta(r.f, {&r}, obj, w, l);
}

}  // namespace ainfree
