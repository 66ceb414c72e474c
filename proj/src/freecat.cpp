#include "ainfree/freecat.hpp"

#include <stdexcept>

namespace ainfree {

int FreeCat::slot_id(const PlaneTree& t, const Word& w) const {
  auto it = index.find({t.str(), w});
  if (it == index.end()) throw std::invalid_argument("no such free-category slot");
  return it->second;
}

Elem free_bk(const FreeCat& fc, const std::vector<Elem>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("grafting needs at least two inputs");
  RingSpec ring = fc.dq.q.ring;
  std::vector<std::pair<std::vector<int>, Scalar>> combos = {{{}, Scalar::one(ring)}};
  for (const Elem& e : xs) {
    std::vector<std::pair<std::vector<int>, Scalar>> next;
    for (const auto& [ids, c] : combos)
      for (const auto& [id, v] : e) {
        std::vector<int> t = ids;
        t.push_back(id);
        next.push_back({std::move(t), c * v});
      }
    combos = std::move(next);
  }
  Elem res;
  for (const auto& [ids, c] : combos) {
    // suffix element degrees drive the suspension crossing signs
    long exp = 0, suffix = 0;
    std::vector<PlaneTree> trees;
    Word word;
    for (size_t i = ids.size(); i-- > 0;) {
      const FreeSlot& s = fc.slot_data.at((size_t)ids[i]);
      if (i + 1 < ids.size()) exp += (long)s.tree.internal() * suffix;
      suffix += fc.cat.slot_deg(ids[i]);
    }
    for (size_t i = 0; i < ids.size(); ++i) {
      const FreeSlot& s = fc.slot_data.at((size_t)ids[i]);
      if (!word.empty() &&
          fc.dq.q.morphisms.at((size_t)word.back()).dst !=
              fc.dq.q.morphisms.at((size_t)s.word.front()).src)
        throw std::invalid_argument("endpoint mismatch");
      trees.push_back(s.tree);
      word.insert(word.end(), s.word.begin(), s.word.end());
    }
    PlaneTree t = graft(std::move(trees));
    if (t.leaves() > fc.max_leaves) throw budget_error("leaf budget exceeded");
    add_term(res, fc.slot_id(t, word), c * sign_pow(exp, ring));
  }
  return res;
}

Elem free_b1(const FreeCat& fc, const Elem& x) {
  RingSpec ring = fc.dq.q.ring;
  Elem res;
  for (const auto& [id, c] : x) {
    const FreeSlot& s = fc.slot_data.at((size_t)id);
    int n = (int)s.word.size();
    long suffix = 0;
    for (int p = n; p-- > 0;) {
      for (const auto& [m, v] : fc.dq.d_basis(s.word[(size_t)p])) {
        Word w = s.word;
        w[(size_t)p] = m;
        add_term(res, fc.slot_id(s.tree, w),
                 c * v * sign_pow(s.tree.internal() + suffix, ring));
      }
      suffix += fc.dq.q.morphisms.at((size_t)s.word[(size_t)p]).sdeg;
    }
    for (const Contraction& cn : contractions(s.tree))
      add_term(res, fc.slot_id(cn.parent, s.word), c * sign_pow(cn.beta, ring));
  }
  return res;
}

namespace {

void composable_quiver_words(const GradedQuiver& q, int k, Word& cur, std::vector<Word>& out) {
  if ((int)cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (int m = 0; m < (int)q.morphisms.size(); ++m) {
    if (!cur.empty() && q.morphisms.at((size_t)cur.back()).dst != q.morphisms.at((size_t)m).src)
      continue;
    cur.push_back(m);
    composable_quiver_words(q, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::shared_ptr<FreeCat> free_category(const DGQuiver& dq, int max_leaves, int max_arity) {
  if (max_leaves < 1) throw std::invalid_argument("leaf budget must be positive");
  if (max_arity < 2) throw std::invalid_argument("arity budget must be at least two");
  auto fc = std::make_shared<FreeCat>();
  fc->dq = dq;
  fc->max_leaves = max_leaves;
  fc->max_arity = max_arity;
  fc->cat.ring = dq.q.ring;
  fc->cat.level = max_arity;
  fc->cat.objects = dq.q.objects;
  for (int k = 1; k <= max_leaves; ++k) {
    std::vector<Word> words;
    Word cur;
    composable_quiver_words(dq.q, k, cur, words);
    for (const PlaneTree& t : enumerate_trees(k))
      for (const Word& w : words) {
        int id = (int)fc->slot_data.size();
        std::string label = t.str();
        for (int m : w) label += " " + dq.q.morphisms.at((size_t)m).name;
        fc->cat.slots.push_back({dq.q.morphisms.at((size_t)w.front()).src,
                                 dq.q.morphisms.at((size_t)w.back()).dst,
                                 (int)(dq.q.word_deg(w) + t.internal()), std::move(label)});
        fc->slot_data.push_back({t, w});
        fc->index.emplace(std::make_pair(t.str(), w), id);
      }
  }
  FreeCat* p = fc.get();
  fc->cat.weight = [p](int id) { return (long)p->slot_data.at((size_t)id).tree.leaves(); };
  fc->cat.b = [p](const Word& w) {
    if (w.empty() || (int)w.size() > p->max_arity)
      throw budget_error("operation arity beyond level");
    if (w.size() == 1) {
      Elem e;
      e.emplace(w[0], Scalar::one(p->cat.ring));
      return free_b1(*p, e);
    }
    std::vector<Elem> xs;
    for (int id : w) {
      Elem e;
      e.emplace(id, Scalar::one(p->cat.ring));
      xs.push_back(std::move(e));
    }
    return free_bk(*p, xs);
  };
  return fc;
}

}  // namespace ainfree
