#include "ainfree/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ainfree {

PlaneTree::PlaneTree(std::vector<PlaneTree> children) : kids_(std::move(children)) {
  if (kids_.size() < 2) throw std::invalid_argument("tree vertex needs arity >= 2");
  leaves_ = 0;
  internal_ = 1;
  for (const PlaneTree& c : kids_) {
    leaves_ += c.leaves_;
    internal_ += c.internal_;
  }
}

PlaneTree PlaneTree::corolla(int k) {
  return PlaneTree(std::vector<PlaneTree>(k, PlaneTree()));
}

PlaneTree graft(std::vector<PlaneTree> children) { return PlaneTree(std::move(children)); }

std::string PlaneTree::str() const {
  if (is_leaf()) return "|";
  std::string out = "(";
  for (size_t i = 0; i < kids_.size(); ++i) {
    if (i) out += ' ';
    out += kids_[i].str();
  }
  out += ')';
  return out;
}

namespace {

PlaneTree parse_at(const std::string& s, size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("tree text ends early: " + s);
  if (s[pos] == '|') {
    ++pos;
    return PlaneTree();
  }
  if (s[pos] != '(') throw std::invalid_argument("bad tree text at '" + s.substr(pos) + "'");
  ++pos;
  std::vector<PlaneTree> kids;
  while (true) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos >= s.size()) throw std::invalid_argument("unclosed '(' in tree text: " + s);
    if (s[pos] == ')') {
      ++pos;
      break;
    }
    kids.push_back(parse_at(s, pos));
  }
  return PlaneTree(std::move(kids));
}

}  // namespace

PlaneTree PlaneTree::parse(const std::string& text) {
  size_t pos = 0;
  PlaneTree t = parse_at(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw std::invalid_argument("trailing tree text: " + text);
  return t;
}

bool PlaneTree::operator==(const PlaneTree& o) const {
  return internal_ == o.internal_ && leaves_ == o.leaves_ && kids_ == o.kids_;
}

bool PlaneTree::operator<(const PlaneTree& o) const {
  if (internal_ != o.internal_) return internal_ < o.internal_;
  return str() < o.str();
}

namespace {

void dfs_vertices(const PlaneTree& t, std::vector<int>& path, int& leaf_pos,
                  std::vector<TreeVertex>& out) {
  if (t.is_leaf()) {
    ++leaf_pos;
    return;
  }
  TreeVertex v;
  v.path = path;
  v.arity = (int)t.children().size();
  v.h = (int)out.size() + 1;
  v.leaf_lo = leaf_pos + 1;
  size_t self = out.size();
  out.push_back(v);
  for (size_t i = 0; i < t.children().size(); ++i) {
    path.push_back((int)i);
    dfs_vertices(t.children()[i], path, leaf_pos, out);
    path.pop_back();
  }
  out[self].leaf_hi = leaf_pos;
}

}  // namespace

std::vector<TreeVertex> canonical_order(const PlaneTree& t) {
  std::vector<TreeVertex> out;
  std::vector<int> path;
  int leaf_pos = 0;
  dfs_vertices(t, path, leaf_pos, out);
  return out;
}

std::vector<ForestLayer> forest_decomposition(const PlaneTree& t) {
  std::vector<TreeVertex> verts = canonical_order(t);
  // Units of the growing forest as leaf intervals [lo, hi], left to right.
  std::vector<std::pair<int, int>> units;
  for (int i = 1; i <= t.leaves(); ++i) units.push_back({i, i});
  std::vector<ForestLayer> layers;
  // Descending rank: every vertex strictly above v is built before v.
  for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
    size_t first = 0;
    while (first < units.size() && units[first].first != it->leaf_lo) ++first;
    size_t last = first;
    while (last < units.size() && units[last].second != it->leaf_hi) ++last;
    if (first >= units.size() || last >= units.size() ||
        (int)(last - first + 1) != it->arity)
      throw std::logic_error("forest decomposition lost track of units");
    layers.push_back({(int)first, it->arity, (int)(units.size() - 1 - last)});
    units[first] = {it->leaf_lo, it->leaf_hi};
    units.erase(units.begin() + (long)first + 1, units.begin() + (long)last + 1);
  }
  return layers;
}

PlaneTree replay_forest(int leaves, const std::vector<ForestLayer>& layers) {
  std::vector<PlaneTree> forest(leaves, PlaneTree());
  for (const ForestLayer& l : layers) {
    if (l.before + l.arity + l.after != (int)forest.size())
      throw std::invalid_argument("forest layer does not match forest width");
    std::vector<PlaneTree> block(forest.begin() + l.before,
                                 forest.begin() + l.before + l.arity);
    forest[l.before] = PlaneTree(std::move(block));
    forest.erase(forest.begin() + l.before + 1, forest.begin() + l.before + l.arity);
  }
  if (forest.size() != 1) throw std::invalid_argument("forest layers leave more than one tree");
  return forest[0];
}

namespace {

PlaneTree rebuild_with(const PlaneTree& t, const std::vector<int>& path, size_t at,
                       const std::vector<PlaneTree>& replacement) {
  // Replace the child at path[at..] by `replacement` spliced in its place.
  std::vector<PlaneTree> kids = t.children();
  int idx = path[at];
  if (idx < 0 || idx >= (int)kids.size()) throw std::invalid_argument("bad tree path");
  if (at + 1 == path.size()) {
    kids.erase(kids.begin() + idx);
    kids.insert(kids.begin() + idx, replacement.begin(), replacement.end());
  } else {
    kids[idx] = rebuild_with(kids[idx], path, at + 1, replacement);
  }
  return PlaneTree(std::move(kids));
}

const PlaneTree& subtree_at(const PlaneTree& t, const std::vector<int>& path) {
  const PlaneTree* cur = &t;
  for (int idx : path) {
    if (cur->is_leaf() || idx < 0 || idx >= (int)cur->children().size())
      throw std::invalid_argument("bad tree path");
    cur = &cur->children()[idx];
  }
  return *cur;
}

}  // namespace

PlaneTree contract_path(const PlaneTree& t, const std::vector<int>& path) {
  if (path.empty()) throw std::invalid_argument("root-adjacent vertex has no parent edge");
  const PlaneTree& v = subtree_at(t, path);
  if (v.is_leaf()) throw std::invalid_argument("cannot contract a leaf edge");
  return rebuild_with(t, path, 0, v.children());
}

std::vector<int> rewrite_path_after_contract(const PlaneTree& t,
                                             const std::vector<int>& contracted,
                                             const std::vector<int>& other) {
  if (contracted.empty()) throw std::invalid_argument("root-adjacent vertex has no parent edge");
  if (other == contracted) throw std::invalid_argument("contracted vertex has no image");
  size_t plen = contracted.size();
  // Inside the contracted vertex: its children are spliced at its old index.
  if (other.size() > plen && std::equal(contracted.begin(), contracted.end(), other.begin())) {
    std::vector<int> out(other.begin(), other.begin() + (long)plen - 1);
    out.push_back(contracted.back() + other[plen]);
    out.insert(out.end(), other.begin() + (long)plen + 1, other.end());
    return out;
  }
  // Sibling subtree after the contracted vertex: shifted by arity-1.
  if (other.size() >= plen &&
      std::equal(contracted.begin(), contracted.end() - 1, other.begin()) &&
      other[plen - 1] > contracted.back()) {
    int arity = (int)subtree_at(t, contracted).children().size();
    std::vector<int> out = other;
    out[plen - 1] += arity - 1;
    return out;
  }
  return other;
}

int vertex_rank(const PlaneTree& t, const std::vector<int>& path) {
  for (const TreeVertex& v : canonical_order(t))
    if (v.path == path) return v.h;
  throw std::invalid_argument("path is not an internal vertex");
}

std::vector<Contraction> contractions(const PlaneTree& t) {
  std::vector<Contraction> out;
  for (const TreeVertex& v : canonical_order(t)) {
    const PlaneTree& node = subtree_at(t, v.path);
    int arity = (int)node.children().size();
    for (int len = 2; len <= arity - 1; ++len) {
      for (int start = 0; start + len <= arity; ++start) {
        std::vector<PlaneTree> kids = node.children();
        std::vector<PlaneTree> block(kids.begin() + start, kids.begin() + start + len);
        kids.erase(kids.begin() + start + 1, kids.begin() + start + len);
        kids[start] = PlaneTree(std::move(block));
        PlaneTree parent;
        if (v.path.empty()) {
          parent = PlaneTree(std::move(kids));
        } else {
          parent = rebuild_with(t, v.path, 0, {PlaneTree(std::move(kids))});
        }
        std::vector<int> new_path = v.path;
        new_path.push_back(start);
        Contraction c;
        c.upper_h = vertex_rank(parent, new_path);
        c.parent = std::move(parent);
        c.beta = 1 + c.upper_h;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

const std::vector<PlaneTree>& enumerate_trees(int leaves) {
  static std::map<int, std::vector<PlaneTree>> memo;
  if (leaves < 1) throw std::invalid_argument("tree needs at least one leaf");
  auto it = memo.find(leaves);
  if (it != memo.end()) return it->second;
  std::vector<PlaneTree> out;
  if (leaves == 1) {
    out.push_back(PlaneTree());
  } else {
    // Compositions leaves = n1 + ... + nk, k >= 2, each ni >= 1.
    std::vector<int> parts;
    std::vector<PlaneTree> kids;
    auto rec = [&](auto&& self, int rest) -> void {
      if (rest == 0) {
        if (kids.size() >= 2) out.push_back(PlaneTree(kids));
        return;
      }
      for (int n1 = 1; n1 <= rest; ++n1) {
        if (n1 == rest && kids.empty()) continue;  // arity 1 forbidden
        for (const PlaneTree& c : enumerate_trees(n1)) {
          kids.push_back(c);
          self(self, rest - n1);
          kids.pop_back();
        }
      }
    };
    rec(rec, leaves);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return memo.emplace(leaves, std::move(out)).first->second;
}

CancellationReport check_double_contraction_cancellation(int max_leaves) {
  CancellationReport rep;
  for (int n = 1; n <= max_leaves; ++n) {
    for (const PlaneTree& t2 : enumerate_trees(n)) {
      std::vector<TreeVertex> verts = canonical_order(t2);
      for (size_t a = 0; a < verts.size(); ++a) {
        if (verts[a].path.empty()) continue;  // no parent edge
        for (size_t b = a + 1; b < verts.size(); ++b) {
          if (verts[b].path.empty()) continue;
          // e1 below verts[a], e2 below verts[b], in t2 = t''.
          int beta1_t2 = 1 + verts[a].h;
          int beta2_t2 = 1 + verts[b].h;
          PlaneTree tp1 = contract_path(t2, verts[b].path);  // t'' / e2
          PlaneTree tp2 = contract_path(t2, verts[a].path);  // t'' / e1
          std::vector<int> a_in_tp1 =
              rewrite_path_after_contract(t2, verts[b].path, verts[a].path);
          std::vector<int> b_in_tp2 =
              rewrite_path_after_contract(t2, verts[a].path, verts[b].path);
          int beta1_tp1 = 1 + vertex_rank(tp1, a_in_tp1);
          int beta2_tp2 = 1 + vertex_rank(tp2, b_in_tp2);
          PlaneTree base1 = contract_path(tp1, a_in_tp1);
          PlaneTree base2 = contract_path(tp2, b_in_tp2);
          ++rep.pairs_checked;
          bool same_base = base1 == base2;
          bool cancel = ((beta1_tp1 + beta2_t2) + (beta2_tp2 + beta1_t2)) % 2 == 1;
          if (!same_base || !cancel) {
            rep.pass = false;
            if (rep.counterexample.empty()) {
              std::ostringstream os;
              os << "tree " << t2.str() << " edges below h=" << verts[a].h << ",h="
                 << verts[b].h << ": " << (same_base ? "signs add up" : "bases differ");
              rep.counterexample = os.str();
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace ainfree
