#include "ainfree/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace ainfree {

namespace {

// name -> index over a label list; every name must be unique to be addressable
std::map<std::string, int> name_index(const std::vector<std::string>& names,
                                      const std::string& what) {
  std::map<std::string, int> out;
  for (size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], (int)i).second)
      throw std::invalid_argument("duplicate " + what + " name: " + names[i]);
  return out;
}

std::vector<std::string> slot_labels(const AnCat& a) {
  std::vector<std::string> out;
  for (const HomSlot& s : a.slots) out.push_back(s.label);
  return out;
}

int lookup(const std::map<std::string, int>& ids, const std::string& name,
           const std::string& what) {
  auto it = ids.find(name);
  if (it == ids.end()) throw std::invalid_argument("unknown " + what + " name: " + name);
  return it->second;
}

Scalar coeff_from_json(const Json& v, RingSpec ring) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>(), ring);
  if (v.is_number_integer()) return Scalar::of(v.get<long>(), ring);
  throw std::invalid_argument("coefficient must be an exact string or integer");
}

std::vector<std::string> string_list(const Json& arr, const std::string& what) {
  std::vector<std::string> out;
  if (!arr.is_array()) throw std::invalid_argument(what + " must be an array");
  for (const Json& v : arr) out.push_back(v.get<std::string>());
  return out;
}

// degree homogeneity and endpoints of one loaded combination
void expect_slots(const AnCat& a, const Elem& e, int src, int dst, long deg,
                  const std::string& what) {
  for (const auto& [id, c] : e) {
    (void)c;
    const HomSlot& s = a.slots.at((size_t)id);
    if (s.src != src || s.dst != dst || (long)s.deg != deg)
      throw std::invalid_argument(what + " is not homogeneous of its degree");
  }
}

Json word_to_json(const FreeCat& fq, int slot) {
  const FreeSlot& s = fq.slot_data.at((size_t)slot);
  if (s.tree.is_leaf()) return Json(fq.dq.q.morphisms.at((size_t)s.word[0]).name);
  Json letter;
  letter["tree"] = s.tree.str();
  Json w = Json::array();
  for (int g : s.word) w.push_back(fq.dq.q.morphisms.at((size_t)g).name);
  letter["word"] = w;
  return letter;
}

}  // namespace

Json combination_to_json(const Elem& e, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& [id, c] : e) {
    Json term;
    term["coeff"] = c.str();
    term["name"] = names.at((size_t)id);
    arr.push_back(term);
  }
  return arr;
}

Elem combination_from_json(const Json& arr, const std::map<std::string, int>& ids,
                           RingSpec ring) {
  if (!arr.is_array()) throw std::invalid_argument("combination must be an array of terms");
  Elem e;
  for (const Json& term : arr) {
    int id = lookup(ids, term.at("name").get<std::string>(), "basis");
    add_term(e, id, coeff_from_json(term.at("coeff"), ring));
  }
  return e;
}

DGQuiver quiver_from_json(const Json& doc) {
  GradedQuiver q;
  q.ring = RingSpec::parse(doc.at("ring").get<std::string>());
  q.objects = string_list(doc.at("objects"), "objects");
  std::map<std::string, int> obj = name_index(q.objects, "object");
  std::vector<std::string> names;
  for (const Json& m : doc.at("morphisms")) {
    Morphism mo;
    mo.name = m.at("name").get<std::string>();
    mo.src = lookup(obj, m.at("src").get<std::string>(), "object");
    mo.dst = lookup(obj, m.at("dst").get<std::string>(), "object");
    mo.sdeg = m.at("sdeg").get<int>();
    q.morphisms.push_back(mo);
    names.push_back(mo.name);
  }
  std::map<std::string, int> ids = name_index(names, "morphism");
  std::vector<Elem> diff(q.morphisms.size());
  if (doc.contains("differential"))
    for (const Json& row : doc.at("differential")) {
      int on = lookup(ids, row.at("on").get<std::string>(), "morphism");
      if (!diff[(size_t)on].empty())
        throw std::invalid_argument("duplicate differential row: " + names[(size_t)on]);
      diff[(size_t)on] = combination_from_json(row.at("value"), ids, q.ring);
    }
  return DGQuiver::make(std::move(q), std::move(diff));
}

Json quiver_to_json(const DGQuiver& dq) {
  Json doc;
  doc["ring"] = dq.q.ring.str();
  doc["objects"] = dq.q.objects;
  Json ms = Json::array();
  std::vector<std::string> names;
  for (const Morphism& m : dq.q.morphisms) {
    Json row;
    row["name"] = m.name;
    row["src"] = dq.q.objects.at((size_t)m.src);
    row["dst"] = dq.q.objects.at((size_t)m.dst);
    row["sdeg"] = m.sdeg;
    ms.push_back(row);
    names.push_back(m.name);
  }
  doc["morphisms"] = ms;
  Json rows = Json::array();
  for (size_t i = 0; i < dq.diff.size(); ++i) {
    if (dq.diff[i].empty()) continue;
    Json row;
    row["on"] = names[i];
    row["value"] = combination_to_json(dq.diff[i], names);
    rows.push_back(row);
  }
  doc["differential"] = rows;
  return doc;
}

DgCatData category_from_json(const Json& doc) {
  DgCatData d;
  d.ring = RingSpec::parse(doc.at("ring").get<std::string>());
  d.objects = string_list(doc.at("objects"), "objects");
  std::map<std::string, int> obj = name_index(d.objects, "object");
  std::vector<std::string> names;
  for (const Json& m : doc.at("morphisms")) {
    HomSlot s;
    s.label = m.at("name").get<std::string>();
    s.src = lookup(obj, m.at("src").get<std::string>(), "object");
    s.dst = lookup(obj, m.at("dst").get<std::string>(), "object");
    s.deg = m.at("sdeg").get<int>();
    d.slots.push_back(s);
    names.push_back(s.label);
  }
  std::map<std::string, int> ids = name_index(names, "morphism");
  d.identity.assign(d.objects.size(), -1);
  for (const Json& row : doc.at("identity")) {
    int o = lookup(obj, row.at("object").get<std::string>(), "object");
    d.identity[(size_t)o] = lookup(ids, row.at("name").get<std::string>(), "morphism");
  }
  for (size_t o = 0; o < d.objects.size(); ++o)
    if (d.identity[o] < 0)
      throw std::invalid_argument("object without an identity: " + d.objects[o]);
  std::set<int> idset(d.identity.begin(), d.identity.end());
  if (doc.contains("products"))
    for (const Json& row : doc.at("products")) {
      int l = lookup(ids, row.at("left").get<std::string>(), "morphism");
      int r = lookup(ids, row.at("right").get<std::string>(), "morphism");
      if (idset.count(l) || idset.count(r))
        throw std::invalid_argument("products with an identity are implied");
      if (d.mult.count({l, r}))
        throw std::invalid_argument("duplicate product row: " + names[(size_t)l] + ", " +
                                    names[(size_t)r]);
      d.mult[{l, r}] = combination_from_json(row.at("value"), ids, d.ring);
    }
  if (doc.contains("differential")) {
    d.diff.assign(d.slots.size(), Elem{});
    for (const Json& row : doc.at("differential")) {
      int on = lookup(ids, row.at("on").get<std::string>(), "morphism");
      if (!d.diff[(size_t)on].empty())
        throw std::invalid_argument("duplicate differential row: " + names[(size_t)on]);
      d.diff[(size_t)on] = combination_from_json(row.at("value"), ids, d.ring);
    }
  }
  return d;
}

Json category_to_json(const DgCatData& data) {
  Json doc;
  doc["ring"] = data.ring.str();
  doc["objects"] = data.objects;
  Json ms = Json::array();
  std::vector<std::string> names;
  for (const HomSlot& s : data.slots) {
    Json row;
    row["name"] = s.label;
    row["src"] = data.objects.at((size_t)s.src);
    row["dst"] = data.objects.at((size_t)s.dst);
    row["sdeg"] = s.deg;
    ms.push_back(row);
    names.push_back(s.label);
  }
  doc["morphisms"] = ms;
  Json ident = Json::array();
  for (size_t o = 0; o < data.identity.size(); ++o) {
    Json row;
    row["object"] = data.objects[o];
    row["name"] = names.at((size_t)data.identity[o]);
    ident.push_back(row);
  }
  doc["identity"] = ident;
  Json prods = Json::array();
  for (const auto& [key, value] : data.mult) {
    Json row;
    row["left"] = names.at((size_t)key.first);
    row["right"] = names.at((size_t)key.second);
    row["value"] = combination_to_json(value, names);
    prods.push_back(row);
  }
  doc["products"] = prods;
  Json rows = Json::array();
  for (size_t i = 0; i < data.diff.size(); ++i) {
    if (data.diff[i].empty()) continue;
    Json row;
    row["on"] = names[i];
    row["value"] = combination_to_json(data.diff[i], names);
    rows.push_back(row);
  }
  doc["differential"] = rows;
  return doc;
}

MapData map_from_json(const Json& doc, const DGQuiver& dq, const AnCat& target) {
  if (doc.contains("ring") &&
      RingSpec::parse(doc.at("ring").get<std::string>()) != target.ring)
    throw std::invalid_argument("map ring does not match the target category");
  std::map<std::string, int> tobj = name_index(target.objects, "target object");
  MapData m;
  m.obj_map.assign(dq.q.objects.size(), -1);
  if (doc.contains("objects"))
    for (const Json& row : doc.at("objects")) {
      int from = -1;
      std::string fn = row.at("from").get<std::string>();
      for (size_t i = 0; i < dq.q.objects.size(); ++i)
        if (dq.q.objects[i] == fn) from = (int)i;
      if (from < 0) throw std::invalid_argument("unknown source object name: " + fn);
      m.obj_map[(size_t)from] = lookup(tobj, row.at("to").get<std::string>(), "target object");
    }
  for (size_t i = 0; i < dq.q.objects.size(); ++i) {
    if (m.obj_map[i] >= 0) continue;
    auto it = tobj.find(dq.q.objects[i]);
    if (it == tobj.end())
      throw std::invalid_argument("no target object named " + dq.q.objects[i] +
                                  "; give an explicit object map");
    m.obj_map[i] = it->second;
  }
  std::vector<std::string> gnames;
  for (const Morphism& mo : dq.q.morphisms) gnames.push_back(mo.name);
  std::map<std::string, int> gids = name_index(gnames, "generator");
  std::map<std::string, int> tids = name_index(slot_labels(target), "target morphism");
  m.images.assign(dq.q.morphisms.size(), Elem{});
  if (doc.contains("components"))
    for (const Json& row : doc.at("components")) {
      const Json& inputs = row.at("inputs");
      if (!inputs.is_array() || inputs.size() != 1 || !inputs[0].is_string())
        throw std::invalid_argument("chain-map rows take exactly one generator name");
      int g = lookup(gids, inputs[0].get<std::string>(), "generator");
      if (!m.images[(size_t)g].empty())
        throw std::invalid_argument("duplicate component row: " + gnames[(size_t)g]);
      Elem v = combination_from_json(row.at("output"), tids, target.ring);
      const Morphism& mo = dq.q.morphisms[(size_t)g];
      expect_slots(target, v, m.obj_map[(size_t)mo.src], m.obj_map[(size_t)mo.dst], mo.sdeg,
                   "image of " + mo.name);
      m.images[(size_t)g] = v;
    }
  return m;
}

Json map_to_json(const DGQuiver& dq, const AnCat& target, const MapData& m) {
  Json doc;
  doc["ring"] = target.ring.str();
  Json objs = Json::array();
  for (size_t i = 0; i < dq.q.objects.size(); ++i) {
    Json row;
    row["from"] = dq.q.objects[i];
    row["to"] = target.objects.at((size_t)m.obj_map.at(i));
    objs.push_back(row);
  }
  doc["objects"] = objs;
  std::vector<std::string> tnames = slot_labels(target);
  Json rows = Json::array();
  for (size_t g = 0; g < m.images.size(); ++g) {
    if (m.images[g].empty()) continue;
    Json row;
    row["inputs"] = Json::array({dq.q.morphisms[g].name});
    row["output"] = combination_to_json(m.images[g], tnames);
    rows.push_back(row);
  }
  doc["components"] = rows;
  return doc;
}

Json functor_to_json(const FreeCat& fq, const AnCat& target, const CocatHom& f) {
  Json doc;
  doc["ring"] = target.ring.str();
  doc["level"] = f.level;
  Json objs = Json::array();
  for (size_t i = 0; i < fq.dq.q.objects.size(); ++i) {
    Json row;
    row["from"] = fq.dq.q.objects[i];
    row["to"] = target.objects.at((size_t)f.obj_map.at(i));
    objs.push_back(row);
  }
  doc["objects"] = objs;
  std::vector<std::string> tnames = slot_labels(target);
  Json rows = Json::array();
  for (size_t id = 0; id < fq.slot_data.size(); ++id) {
    Elem v = f.comp({(int)id});
    if (v.empty()) continue;
    Json row;
    row["inputs"] = Json::array({word_to_json(fq, (int)id)});
    row["output"] = combination_to_json(v, tnames);
    rows.push_back(row);
  }
  doc["components"] = rows;
  return doc;
}

TransData transformation_from_json(const Json& doc, const DGQuiver& dq, const AnCat& target) {
  if (doc.contains("ring") &&
      RingSpec::parse(doc.at("ring").get<std::string>()) != target.ring)
    throw std::invalid_argument("transformation ring does not match the target category");
  TransData t;
  t.deg = doc.at("degree").get<int>();
  std::map<std::string, int> obj = name_index(dq.q.objects, "source object");
  std::vector<std::string> gnames;
  for (const Morphism& mo : dq.q.morphisms) gnames.push_back(mo.name);
  std::map<std::string, int> gids = name_index(gnames, "generator");
  std::map<std::string, int> tids = name_index(slot_labels(target), "target morphism");
  t.comp0.assign(dq.q.objects.size(), Elem{});
  t.comp1.assign(dq.q.morphisms.size(), Elem{});
  for (const Json& row : doc.at("components")) {
    Elem v = combination_from_json(row.at("output"), tids, target.ring);
    if (row.contains("at")) {
      int o = lookup(obj, row.at("at").get<std::string>(), "source object");
      if (!t.comp0[(size_t)o].empty())
        throw std::invalid_argument("duplicate component row: " + dq.q.objects[(size_t)o]);
      for (const auto& [id, c] : v) {
        (void)c;
        if ((long)target.slot_deg(id) != (long)t.deg)
          throw std::invalid_argument("0-component is not homogeneous of its degree");
      }
      t.comp0[(size_t)o] = v;
      continue;
    }
    const Json& inputs = row.at("inputs");
    if (!inputs.is_array() || inputs.size() != 1 || !inputs[0].is_string())
      throw std::invalid_argument("transformation rows take one object or one generator name");
    int g = lookup(gids, inputs[0].get<std::string>(), "generator");
    if (!t.comp1[(size_t)g].empty())
      throw std::invalid_argument("duplicate component row: " + gnames[(size_t)g]);
    for (const auto& [id, c] : v) {
      (void)c;
      if ((long)target.slot_deg(id) != t.deg + (long)dq.q.morphisms[(size_t)g].sdeg)
        throw std::invalid_argument("generator component is not homogeneous of its degree");
    }
    t.comp1[(size_t)g] = v;
  }
  return t;
}

Json coderivation_to_json(const FreeCat& fq, const AnCat& target, const Coderivation& r) {
  Json doc;
  doc["ring"] = target.ring.str();
  doc["degree"] = r.deg;
  doc["level"] = r.level;
  std::vector<std::string> tnames = slot_labels(target);
  Json rows = Json::array();
  for (size_t o = 0; o < fq.dq.q.objects.size(); ++o) {
    Elem v = r.comp((int)o, {});
    if (v.empty()) continue;
    Json row;
    row["at"] = fq.dq.q.objects[o];
    row["output"] = combination_to_json(v, tnames);
    rows.push_back(row);
  }
  for (size_t id = 0; id < fq.slot_data.size(); ++id) {
    Elem v = r.comp(0, {(int)id});
    if (v.empty()) continue;
    Json row;
    row["inputs"] = Json::array({word_to_json(fq, (int)id)});
    row["output"] = combination_to_json(v, tnames);
    rows.push_back(row);
  }
  doc["components"] = rows;
  return doc;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw std::invalid_argument("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
}

std::string canonical_text(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ainfree
