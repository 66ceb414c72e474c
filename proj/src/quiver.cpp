#include "ainfree/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ainfree {

void add_term(Elem& e, int id, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(id);
  if (it == e.end()) {
    e.emplace(id, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) e.erase(it);
}

void add_scaled(Elem& e, const Elem& other, const Scalar& c) {
  for (const auto& [id, v] : other) add_term(e, id, v * c);
}

Elem scaled(const Elem& e, const Scalar& c) {
  Elem out;
  add_scaled(out, e, c);
  return out;
}

void add_term(WordElem& e, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) e.erase(it);
}

void add_scaled(WordElem& e, const WordElem& other, const Scalar& c) {
  for (const auto& [w, v] : other) add_term(e, w, v * c);
}

WordElem scaled(const WordElem& e, const Scalar& c) {
  WordElem out;
  add_scaled(out, e, c);
  return out;
}

long word_deg(const Word& w, const std::function<int(int)>& deg_of) {
  long d = 0;
  for (int id : w) d += deg_of(id);
  return d;
}

WordElem koszul_apply(const std::vector<BlockOp>& ops, const Word& w,
                      const std::function<int(int)>& deg_of, RingSpec ring) {
  std::vector<Word> blocks;
  size_t pos = 0;
  for (const BlockOp& op : ops) {
    if (op.arity < 0) throw std::invalid_argument("negative operator arity");
    if (!op.act && op.arity != 1)
      throw std::invalid_argument("identity operator slot must have arity 1");
    if (pos + (size_t)op.arity > w.size())
      throw std::invalid_argument("operator arities exceed the word");
    blocks.emplace_back(w.begin() + (long)pos, w.begin() + (long)pos + op.arity);
    pos += (size_t)op.arity;
  }
  if (pos != w.size()) throw std::invalid_argument("operator arities do not cover the word");

  long sign_exp = 0;
  {
    long suffix = 0;
    for (size_t i = blocks.size(); i-- > 0;) {
      sign_exp += ops[i].deg * suffix;
      suffix += word_deg(blocks[i], deg_of);
    }
  }

  WordElem acc;
  acc.emplace(Word{}, sign_pow(sign_exp, ring));
  for (size_t i = 0; i < ops.size(); ++i) {
    WordElem piece;
    if (!ops[i].act) {
      piece.emplace(blocks[i], Scalar::one(ring));
    } else {
      piece = ops[i].act(blocks[i]);
    }
    WordElem next;
    for (const auto& [aw, ac] : acc) {
      for (const auto& [bw, bc] : piece) {
        Word joined = aw;
        joined.insert(joined.end(), bw.begin(), bw.end());
        add_term(next, joined, ac * bc);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

int GradedQuiver::object_id(const std::string& name) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return (int)i;
  throw std::invalid_argument("unknown object: " + name);
}

int GradedQuiver::morphism_id(const std::string& name) const {
  for (size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].name == name) return (int)i;
  throw std::invalid_argument("unknown morphism: " + name);
}

std::vector<int> GradedQuiver::hom_basis(int src, int dst) const {
  std::vector<int> out;
  for (size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].src == src && morphisms[i].dst == dst) out.push_back((int)i);
  return out;
}

long GradedQuiver::word_deg(const Word& w) const {
  long d = 0;
  for (int id : w) d += morphisms.at((size_t)id).sdeg;
  return d;
}

bool GradedQuiver::word_composable(const Word& w) const {
  if (w.empty()) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (morphisms.at((size_t)w[i]).dst != morphisms.at((size_t)w[i + 1]).src) return false;
  return true;
}

void GradedQuiver::validate() const {
  std::set<std::string> names;
  for (const Morphism& m : morphisms) {
    if (m.src < 0 || m.src >= (int)objects.size() || m.dst < 0 ||
        m.dst >= (int)objects.size())
      throw std::invalid_argument("morphism endpoint out of range: " + m.name);
    if (!names.insert(m.name).second)
      throw std::invalid_argument("duplicate morphism name: " + m.name);
  }
  std::set<std::string> onames(objects.begin(), objects.end());
  if (onames.size() != objects.size())
    throw std::invalid_argument("duplicate object name");
}

Elem DGQuiver::d(const Elem& e) const {
  Elem out;
  for (const auto& [id, c] : e) add_scaled(out, diff[(size_t)id], c);
  return out;
}

DGQuiver DGQuiver::make(GradedQuiver q, std::vector<Elem> diff) {
  q.validate();
  if (diff.size() != q.morphisms.size())
    throw std::invalid_argument("differential must cover every basis morphism");
  for (size_t i = 0; i < diff.size(); ++i) {
    const Morphism& m = q.morphisms[i];
    for (const auto& [id, c] : diff[i]) {
      if (c.ring() != q.ring) throw std::invalid_argument("differential ring mismatch");
      const Morphism& im = q.morphisms.at((size_t)id);
      if (im.src != m.src || im.dst != m.dst)
        throw std::invalid_argument("differential does not preserve endpoints on " + m.name);
      if (im.sdeg != m.sdeg + 1)
        throw std::invalid_argument("differential is not of degree +1 on " + m.name);
    }
  }
  DGQuiver out{std::move(q), std::move(diff)};
  for (size_t i = 0; i < out.diff.size(); ++i)
    if (!out.d(out.diff[i]).empty())
      throw std::invalid_argument("differential does not square to zero on " +
                                  out.q.morphisms[i].name);
  return out;
}

GradedMap GradedMap::make(BasedModule source, BasedModule target, long deg,
                          std::vector<Elem> images) {
  if (source.ring.str() != target.ring.str())
    throw std::invalid_argument("graded map ring mismatch");
  if (images.size() != source.size())
    throw std::invalid_argument("graded map must cover every basis element");
  for (size_t i = 0; i < images.size(); ++i) {
    for (const auto& [id, c] : images[i]) {
      if (id < 0 || (size_t)id >= target.size())
        throw std::invalid_argument("graded map image index out of range");
      if (c.ring() != source.ring) throw std::invalid_argument("graded map ring mismatch");
      if (target.degrees[(size_t)id] != source.degrees[i] + deg)
        throw std::invalid_argument("graded map is not homogeneous of its degree");
    }
  }
  return GradedMap{std::move(source), std::move(target), deg, std::move(images)};
}

Elem GradedMap::apply(const Elem& e) const {
  Elem out;
  for (const auto& [id, c] : e) add_scaled(out, images.at((size_t)id), c);
  return out;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (f.target.degrees != g.source.degrees)
    throw std::invalid_argument("composition module mismatch");
  std::vector<Elem> images;
  images.reserve(f.images.size());
  for (const Elem& im : f.images) images.push_back(g.apply(im));
  return GradedMap::make(f.source, g.target, f.deg + g.deg, std::move(images));
}

SparseMatrix matrix_of(const GradedMap& f) {
  SparseMatrix m((int)f.source.size(), (int)f.target.size(), f.source.ring);
  for (size_t i = 0; i < f.images.size(); ++i)
    for (const auto& [id, c] : f.images[i]) m.set((int)i, id, c);
  return m;
}

FiniteComplex FiniteComplex::make(BasedModule mod, std::vector<Elem> diff) {
  GradedMap d = GradedMap::make(mod, mod, 1, std::move(diff));
  for (size_t i = 0; i < mod.size(); ++i)
    if (!d.apply(d.images[i]).empty())
      throw std::invalid_argument("complex differential does not square to zero");
  return FiniteComplex{std::move(mod), std::move(d)};
}

FiniteComplex cone(const GradedMap& alpha, const FiniteComplex& P, const FiniteComplex& Q) {
  if (alpha.deg != 0) throw std::invalid_argument("cone needs a degree-0 map");
  if (alpha.source.degrees != P.mod.degrees || alpha.target.degrees != Q.mod.degrees)
    throw std::invalid_argument("cone endpoints do not match the complexes");
  for (size_t i = 0; i < P.mod.size(); ++i) {
    Elem lhs = alpha.apply(P.d.images[i]);   // (p d) alpha
    Elem rhs = Q.d.apply(alpha.images[i]);   // (p alpha) d
    add_scaled(lhs, rhs, -Scalar::one(P.mod.ring));
    if (!lhs.empty()) throw std::invalid_argument("cone needs a chain map");
  }
  size_t nq = Q.mod.size(), np = P.mod.size();
  BasedModule mod;
  mod.ring = Q.mod.ring;
  mod.degrees = Q.mod.degrees;
  for (long d : P.mod.degrees) mod.degrees.push_back(d - 1);
  mod.labels.assign(nq + np, "");
  for (size_t i = 0; i < nq; ++i)
    mod.labels[i] = i < Q.mod.labels.size() ? Q.mod.labels[i] : "q" + std::to_string(i);
  for (size_t i = 0; i < np; ++i)
    mod.labels[nq + i] =
        (i < P.mod.labels.size() && !P.mod.labels[i].empty() ? P.mod.labels[i]
                                                             : "p" + std::to_string(i)) +
        " s";
  std::vector<Elem> diff(nq + np);
  for (size_t i = 0; i < nq; ++i) diff[i] = Q.d.images[i];
  for (size_t i = 0; i < np; ++i) {
    Elem im = alpha.images[i];  // lands in the Q block
    for (const auto& [id, c] : P.d.images[i]) add_term(im, (int)nq + id, -c);
    diff[nq + i] = std::move(im);
  }
  return FiniteComplex::make(std::move(mod), std::move(diff));
}

bool homology_trivial(const FiniteComplex& c) {
  SparseMatrix m = matrix_of(c.d);
  for (const std::vector<Scalar>& cycle : left_kernel(m))
    if (!image_membership(m, cycle).has_value()) return false;
  return true;
}

}  // namespace ainfree
