#include "ainfree/ancat.hpp"

#include <memory>
#include <sstream>

namespace ainfree {

long AnCat::word_weight(const Word& w) const {
  long t = 0;
  for (int id : w) t += slot_weight(id);
  return t;
}

std::function<int(int)> AnCat::deg_fn() const {
  const std::vector<HomSlot>* s = &slots;
  return [s](int id) { return s->at((size_t)id).deg; };
}

std::vector<int> AnCat::hom_basis(int src, int dst) const {
  std::vector<int> out;
  for (size_t i = 0; i < slots.size(); ++i)
    if (slots[i].src == src && slots[i].dst == dst) out.push_back((int)i);
  return out;
}

bool AnCat::word_composable(const Word& w) const {
  if (w.empty()) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (slots.at((size_t)w[i]).dst != slots.at((size_t)w[i + 1]).src) return false;
  return true;
}

std::string AnCat::print(const Word& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " (x) ";
    out += slots.at((size_t)w[i]).label;
  }
  return out;
}

std::string AnCat::print(const Elem& e) const {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, c] : e) {
    os << (first ? "" : " + ") << c.str() << "*" << slots.at((size_t)id).label;
    first = false;
  }
  return os.str();
}

AnCat a1_category(const DGQuiver& dq) {
  AnCat a;
  a.ring = dq.q.ring;
  a.level = 1;
  a.objects = dq.q.objects;
  for (const Morphism& m : dq.q.morphisms) a.slots.push_back({m.src, m.dst, m.sdeg, m.name});
  auto owner = std::make_shared<const DGQuiver>(dq);
  a.b = [owner](const Word& w) {
    if (w.size() != 1) throw std::invalid_argument("level-1 category has b_1 only");
    return owner->d_basis(w[0]);
  };
  return a;
}

BlockOp op_b(const AnCat& a, int arity) {
  if (arity < 1 || arity > a.level) throw budget_error("operation arity beyond level");
  BlockOp op;
  op.arity = arity;
  op.deg = 1;
  const AnCat* cat = &a;
  op.act = [cat](const Word& blk) {
    WordElem out;
    for (const auto& [id, c] : cat->b(blk)) add_term(out, {id}, c);
    return out;
  };
  return op;
}

std::vector<Word> composable_words(const AnCat& a, int k, long budget) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, long used) -> void {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t id = 0; id < a.slots.size(); ++id) {
      if (!cur.empty() && a.slots[(size_t)cur.back()].dst != a.slots[id].src) continue;
      long w = used + a.slot_weight((int)id);
      if (w > budget) continue;
      cur.push_back((int)id);
      self(self, w);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Elem a_infinity_defect(const AnCat& a, const Word& w) {
  int k = (int)w.size();
  Elem defect;
  for (int n = 1; n <= k; ++n) {
    int l = k - n + 1;
    if (n > a.level || l > a.level) throw budget_error("identity needs operations beyond level");
    for (int r = 0; r + n <= k; ++r) {
      std::vector<BlockOp> ops((size_t)r);
      ops.push_back(op_b(a, n));
      ops.resize((size_t)(k - n + 1), BlockOp{});
      WordElem mid = koszul_apply(ops, w, a.deg_fn(), a.ring);
      for (const auto& [mw, c] : mid) add_scaled(defect, a.b(mw), c);
    }
  }
  return defect;
}

std::vector<IdentityReport> check_an_category(const AnCat& a, int k_max, long budget) {
  std::vector<IdentityReport> out;
  for (int k = 1; k <= k_max && k <= a.level; ++k) {
    IdentityReport rep;
    rep.k = k;
    for (const Word& w : composable_words(a, k, budget)) {
      ++rep.instances;
      Elem defect = a_infinity_defect(a, w);
      if (!defect.empty() && rep.pass) {
        rep.pass = false;
        rep.counterexample = a.print(w);
        rep.defect = a.print(defect);
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const IdentityReport& r : reports)
    if (!r.pass) return false;
  return true;
}

BlockOp AnFunctorData::op_comp(int arity) const {
  if (arity < 1 || arity > level) throw budget_error("functor component beyond level");
  BlockOp op;
  op.arity = arity;
  op.deg = 0;
  auto f = comp;
  op.act = [f](const Word& blk) {
    WordElem out;
    for (const auto& [id, c] : f(blk)) add_term(out, {id}, c);
    return out;
  };
  return op;
}

namespace {

// all compositions of k into l parts, each >= 1
void compositions(int k, int l, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (l == 1) {
    if (k >= 1) {
      cur.push_back(k);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first + l - 1 <= k; ++first) {
    cur.push_back(first);
    compositions(k - first, l - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IdentityReport> check_an_functor(const AnFunctorData& f, int k_max, long budget) {
  const AnCat& A = *f.src;
  const AnCat& B = *f.dst;
  std::vector<IdentityReport> out;
  for (int k = 1; k <= k_max && k <= f.level; ++k) {
    IdentityReport rep;
    rep.k = k;
    for (const Word& w : composable_words(A, k, budget)) {
      ++rep.instances;
      Elem defect;
      // sum over l and compositions k = i_1 + ... + i_l of (f (x) ... (x) f) b_l
      for (int l = 1; l <= k; ++l) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(k, l, cur, comps);
        for (const auto& parts : comps) {
          std::vector<BlockOp> ops;
          for (int p : parts) ops.push_back(f.op_comp(p));
          WordElem mid = koszul_apply(ops, w, A.deg_fn(), A.ring);
          for (const auto& [mw, c] : mid) add_scaled(defect, B.b(mw), c);
        }
      }
      // minus sum over r+n+t=k of (1^r (x) b_n (x) 1^t) f_{r+1+t}
      for (int n = 1; n <= k; ++n) {
        for (int r = 0; r + n <= k; ++r) {
          std::vector<BlockOp> ops((size_t)r);
          ops.push_back(op_b(A, n));
          ops.resize((size_t)(k - n + 1), BlockOp{});
          WordElem mid = koszul_apply(ops, w, A.deg_fn(), A.ring);
          for (const auto& [mw, c] : mid) add_scaled(defect, f.comp(mw), -c);
        }
      }
      if (!defect.empty() && rep.pass) {
        rep.pass = false;
        rep.counterexample = A.print(w);
        rep.defect = B.print(defect);
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace ainfree
