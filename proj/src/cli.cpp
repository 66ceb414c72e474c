#include "ainfree/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ainfree/io.hpp"
#include "ainfree/lift.hpp"
#include "ainfree/tree.hpp"

namespace ainfree {

namespace {

const char* pf(bool ok) { return ok ? "pass" : "FAIL"; }

// terms in a printed combination, counted off the " + " separators
int term_count(const std::string& printed) {
  if (printed.empty() || printed == "0") return 0;
  int n = 1;
  for (size_t pos = 0; (pos = printed.find(" + ", pos)) != std::string::npos; pos += 3) ++n;
  return n;
}

void print_tree_section(std::ostream& out, int n, bool contra) {
  const std::vector<PlaneTree>& ts = enumerate_trees(n);
  out << "trees with " << n << (n == 1 ? " leaf: " : " leaves: ") << ts.size() << "\n";
  for (const PlaneTree& t : ts) {
    out << t.str() << "\n";
    if (!contra) continue;
    for (const Contraction& c : contractions(t))
      out << "  contracts from " << c.parent.str() << "  h=" << c.upper_h << " beta=" << c.beta
          << "\n";
  }
}

void print_identity_reports(std::ostream& out, const std::vector<IdentityReport>& rs) {
  for (const IdentityReport& r : rs) {
    out << "identity k=" << r.k << ": " << pf(r.pass) << " (instances " << r.instances << ")\n";
    if (r.pass) continue;
    out << "  counterexample: " << r.counterexample << "\n";
    out << "  defect: " << r.defect << "\n";
  }
}

// slots that generate the category: everything except the identities
std::vector<int> tautological_gens(const DgCatData& data) {
  std::set<int> ids(data.identity.begin(), data.identity.end());
  std::vector<int> out;
  for (size_t i = 0; i < data.slots.size(); ++i)
    if (!ids.count((int)i)) out.push_back((int)i);
  return out;
}

// the category's non-identity generators with its differential, as a quiver
DGQuiver tautological_quiver(const DgCatData& data) {
  std::vector<int> gens = tautological_gens(data);
  std::map<int, int> pos;
  for (size_t i = 0; i < gens.size(); ++i) pos[gens[i]] = (int)i;
  GradedQuiver q;
  q.ring = data.ring;
  q.objects = data.objects;
  std::vector<Elem> diff;
  for (int g : gens) {
    const HomSlot& s = data.slots[(size_t)g];
    q.morphisms.push_back({s.label, s.src, s.dst, s.deg});
    Elem row;
    if ((size_t)g < data.diff.size())
      for (const auto& [id, c] : data.diff[(size_t)g]) {
        auto it = pos.find(id);
        if (it == pos.end())
          throw std::invalid_argument(
              "differential hits an identity slot; give an explicit quiver");
        add_term(row, it->second, c);
      }
    diff.push_back(row);
  }
  return DGQuiver::make(std::move(q), std::move(diff));
}

MapData tautological_map(const DgCatData& data) {
  MapData m;
  m.obj_map.resize(data.objects.size());
  std::iota(m.obj_map.begin(), m.obj_map.end(), 0);
  for (int g : tautological_gens(data)) {
    Elem e;
    add_term(e, g, Scalar::one(data.ring));
    m.images.push_back(e);
  }
  return m;
}

MapData load_map(const std::string& path, const DGQuiver& dq, const AnCat& target) {
  if (path.empty()) return map_from_json(Json::object(), dq, target);
  return map_from_json(load_json_file(path), dq, target);
}

void write_text(std::ostream& out, const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot write " + out_path);
  os << text;
}

int cmd_trees(std::ostream& out, int n, int max_leaves, bool contra) {
  if ((n > 0) == (max_leaves > 0))
    throw std::invalid_argument("give exactly one of the leaf count or --max-leaves");
  if (n > 0) {
    print_tree_section(out, n, contra);
    return 0;
  }
  for (int k = 1; k <= max_leaves; ++k) {
    if (k > 1) out << "\n";
    print_tree_section(out, k, contra);
  }
  return 0;
}

int verify_free(std::ostream& out, const std::string& quiver_path, int leaves, int arity) {
  if (quiver_path.empty()) throw std::invalid_argument("--quiver is required in free mode");
  DGQuiver dq = quiver_from_json(load_json_file(quiver_path));
  auto fq = free_category(dq, leaves, arity);
  out << "free category on " << dq.q.objects.size() << " objects, " << dq.q.morphisms.size()
      << " generators; leaves <= " << leaves << ", arity <= " << arity << "\n";
  std::vector<IdentityReport> rs = check_an_category(fq->cat, arity, leaves);
  print_identity_reports(out, rs);
  bool ok = all_pass(rs);
  out << (ok ? "all identities hold\n" : "FAILED\n");
  return ok ? 0 : 1;
}

int verify_dg(std::ostream& out, const std::string& category_path, int level) {
  if (category_path.empty())
    throw std::invalid_argument("--category is required in an-category mode");
  DgCatData data = category_from_json(load_json_file(category_path));
  AnCat cat = dg_category(data, std::max(3, level));
  out << "category on " << data.objects.size() << " objects, " << data.slots.size()
      << " morphisms; identities up to k=" << level << "\n";
  std::vector<IdentityReport> rs = check_an_category(cat, level, level);
  print_identity_reports(out, rs);
  bool cycles = check_unit_cycles(cat, dg_units(data));
  out << "unit cycles: " << pf(cycles) << "\n";
  bool ok = all_pass(rs) && cycles;
  out << (ok ? "all identities hold\n" : "FAILED\n");
  return ok ? 0 : 1;
}

int verify_equivalence(std::ostream& out, const std::string& quiver_path,
                       const std::string& category_path, const std::string& map_path,
                       const std::string& map2_path, int leaves, int arity) {
  if (category_path.empty())
    throw std::invalid_argument("--category is required in equivalence mode");
  DgCatData data = category_from_json(load_json_file(category_path));
  AnCat target = dg_category(data, std::max(3, arity + 2));
  UnitData units = dg_units(data);
  DGQuiver dq = quiver_path.empty() ? tautological_quiver(data)
                                    : quiver_from_json(load_json_file(quiver_path));
  auto fq = free_category(dq, leaves, arity);
  MapData m1;
  if (!map_path.empty())
    m1 = map_from_json(load_json_file(map_path), dq, target);
  else
    m1 = quiver_path.empty() ? tautological_map(data) : load_map("", dq, target);
  MapData m2 = map2_path.empty() ? m1 : map_from_json(load_json_file(map2_path), dq, target);
  CocatHom f = extend_strict(*fq, target, m1.obj_map, m1.images, arity);
  CocatHom g = extend_strict(*fq, target, m2.obj_map, m2.images, arity);
  out << "transformations from the generator-level data; leaves <= " << leaves << ", arity <= "
      << arity << "\n";
  EquivalenceReport rep = verify_restriction_equivalence(*fq, target, units, f, g, 1, leaves);
  out << "section of the restriction: " << pf(rep.section) << "\n";
  out << "lift is a chain map: " << pf(rep.chain) << "\n";
  out << "defect restricts to zero: " << pf(rep.defect_restricted_zero) << "\n";
  out << "defect bounded by a homotopy: " << pf(rep.homotopy) << "\n";
  for (size_t i = 0; i < rep.units.size(); ++i) {
    const UnitCycleReport& u = rep.units[i];
    out << "unit cycle at " << (i == 0 ? "(f, f)" : "(g, g)") << ": " << pf(u.pass)
        << " (left witness " << term_count(u.left_witness) << " terms, right witness "
        << term_count(u.right_witness) << " terms)\n";
  }
  out << "components checked: " << rep.checked << "\n";
  if (!rep.detail.empty()) out << "first failure: " << rep.detail << "\n";
  out << (rep.pass ? "equivalence verified\n" : "FAILED\n");
  return rep.pass ? 0 : 1;
}

/* Budget defaults: the level in free mode; 2 in equivalence mode, where the
   cost grows quickly with the word bounds and the statement is already
   exercised at weight 2. */
int cmd_verify(std::ostream& out, const std::string& mode, const std::string& quiver_path,
               const std::string& category_path, int level, int leaves, int arity,
               const std::string& map_path, const std::string& map2_path) {
  if (mode == "free")
    return verify_free(out, quiver_path, leaves > 0 ? leaves : level, arity > 0 ? arity : level);
  if (mode == "an-category") return verify_dg(out, category_path, level);
  if (mode == "equivalence")
    return verify_equivalence(out, quiver_path, category_path, map_path, map2_path,
                              leaves > 0 ? leaves : 2, arity > 0 ? arity : 2);
  throw std::invalid_argument("unknown mode: " + mode);
}

int cmd_extend(std::ostream& out, const std::string& quiver_path, const std::string& category_path,
               const std::string& map_path, int level, const std::string& out_path) {
  DGQuiver dq = quiver_from_json(load_json_file(quiver_path));
  DgCatData data = category_from_json(load_json_file(category_path));
  AnCat target = dg_category(data, std::max(3, level));
  MapData m = load_map(map_path, dq, target);
  auto fq = free_category(dq, level, level);
  CocatHom f = extend_strict(*fq, target, m.obj_map, m.images, level);
  write_text(out, out_path, canonical_text(functor_to_json(*fq, target, f)));
  return 0;
}

int cmd_lift(std::ostream& out, std::ostream& err, const std::string& quiver_path,
             const std::string& category_path, const std::string& from_path,
             const std::string& to_path, const std::string& map_path, int level,
             const std::string& out_path) {
  DGQuiver dq = quiver_from_json(load_json_file(quiver_path));
  DgCatData data = category_from_json(load_json_file(category_path));
  AnCat target = dg_category(data, std::max(3, level + 2));
  MapData mf = load_map(from_path, dq, target);
  MapData mt = load_map(to_path, dq, target);
  auto fq = free_category(dq, level, level);
  CocatHom phi = extend_strict(*fq, target, mf.obj_map, mf.images, level);
  CocatHom psi = extend_strict(*fq, target, mt.obj_map, mt.images, level);
  auto td = std::make_shared<TransData>(
      transformation_from_json(load_json_file(map_path), dq, target));
  BasedModule mod;
  mod.ring = dq.q.ring;
  mod.degrees = {(long)td->deg};
  mod.labels = {"u"};
  LiftProblem lp;
  lp.fq = fq.get();
  lp.phi = &phi;
  lp.psi = &psi;
  lp.source = FiniteComplex::make(mod, {Elem{}});
  lp.comp0 = [td](int, int obj) { return td->comp0.at((size_t)obj); };
  lp.comp1 = [td](int, int gen) { return td->comp1.at((size_t)gen); };
  lp.level = level;
  ChainLift u = lift_chain_map(lp);
  LiftReport rep = check_chain_lift(lp, u, level, level);
  write_text(out, out_path, canonical_text(coderivation_to_json(*fq, target, u.image[0])));
  err << "chain condition: " << pf(rep.pass) << " (components " << rep.checked << ")\n";
  if (!rep.pass) err << "first failure: " << rep.detail << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_report(std::ostream& out, const std::string& quiver_path,
               const std::string& category_path, int level, int leaves, int arity) {
  DGQuiver dq = quiver_from_json(load_json_file(quiver_path));
  AnCat a1 = a1_category(dq);
  out << "quiver: " << dq.q.objects.size() << " objects, " << dq.q.morphisms.size()
      << " generators\n";
  for (const std::string& o : dq.q.objects) out << "  object " << o << "\n";
  for (const Morphism& m : dq.q.morphisms)
    out << "  " << m.name << ": " << dq.q.objects[(size_t)m.src] << " -> "
        << dq.q.objects[(size_t)m.dst] << "  degree " << m.sdeg << "\n";
  for (size_t i = 0; i < dq.diff.size(); ++i)
    if (!dq.diff[i].empty())
      out << "  d " << dq.q.morphisms[i].name << " = " << a1.print(dq.diff[i]) << "\n";
  out << "tree counts up to " << leaves << " leaves:";
  for (int k = 1; k <= leaves; ++k) out << " " << enumerate_trees(k).size();
  out << "\n";
  auto fq = free_category(dq, leaves, arity);
  out << "free category slots: " << fq->slot_data.size() << "\n";
  std::vector<IdentityReport> rs = check_an_category(fq->cat, arity, leaves);
  print_identity_reports(out, rs);
  bool ok = all_pass(rs);
  if (!category_path.empty()) {
    DgCatData data = category_from_json(load_json_file(category_path));
    AnCat cat = dg_category(data, std::max(3, level));
    out << "category: " << data.objects.size() << " objects, " << data.slots.size()
        << " morphisms\n";
    std::vector<IdentityReport> rs2 = check_an_category(cat, level, level);
    print_identity_reports(out, rs2);
    bool cycles = check_unit_cycles(cat, dg_units(data));
    out << "unit cycles: " << pf(cycles) << "\n";
    ok = ok && all_pass(rs2) && cycles;
  }
  out << (ok ? "all checks pass\n" : "FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int worker_cap(std::ostream& err) {
  const char* env = std::getenv("AINFREE_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    err << "warning: ignoring invalid AINFREE_THREADS value\n";
    return 1;
  }
  return (int)std::min(v, 64L);
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  (void)worker_cap(err);  // sequential pipeline; the cap is advisory

  CLI::App app{"exact engine for the free category on a differential graded quiver"};
  app.require_subcommand(1);

  int n = 0, max_leaves = 0, level = 3, leaves = 0, arity = 0;
  bool contra = false;
  std::string mode = "free", quiver, category, map1, map2, from_path, to_path, out_path;

  CLI::App* trees = app.add_subcommand("trees", "enumerate plane trees by leaf count");
  CLI::Option* on = trees->add_option("n", n, "exact leaf count")->check(CLI::PositiveNumber);
  trees->add_option("--max-leaves", max_leaves, "cumulative sections for 1..N leaves")
      ->check(CLI::PositiveNumber)
      ->excludes(on);
  trees->add_flag("--contractions", contra, "list the one-edge refinements of each tree");

  CLI::App* verify = app.add_subcommand("verify", "check the defining identities");
  verify->add_option("--mode", mode, "free, an-category, or equivalence")
      ->check(CLI::IsMember({"free", "an-category", "equivalence"}));
  verify->add_option("--quiver", quiver, "quiver file");
  verify->add_option("--category", category, "category file");
  verify->add_option("--level", level, "identity level")->check(CLI::PositiveNumber);
  verify->add_option("--leaves", leaves, "weight budget (default: level)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--arity", arity, "arity bound (default: level)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--map", map1, "chain-map file for the first functor");
  verify->add_option("--map2", map2, "chain-map file for the second functor");

  CLI::App* extend = app.add_subcommand("extend", "extend a chain map to a functor");
  extend->add_option("--quiver", quiver, "quiver file")->required();
  extend->add_option("--category", category, "target category file")->required();
  extend->add_option("--map", map1, "chain-map file (omitted: the zero map)");
  extend->add_option("--level", level, "truncation level")->check(CLI::PositiveNumber);
  extend->add_option("--out", out_path, "write the functor file here instead of stdout");

  CLI::App* lift = app.add_subcommand(
      "lift", "lift generator-level transformation data to a closed coderivation");
  lift->add_option("--quiver", quiver, "quiver file")->required();
  lift->add_option("--category", category, "target category file")->required();
  lift->add_option("--from", from_path, "chain map for the source functor (omitted: zero)");
  lift->add_option("--to", to_path, "chain map for the target functor (omitted: zero)");
  lift->add_option("--map", map1, "transformation file")->required();
  lift->add_option("--level", level, "truncation level")->check(CLI::PositiveNumber);
  lift->add_option("--out", out_path, "write the coderivation file here instead of stdout");

  CLI::App* report = app.add_subcommand("report", "summarize a quiver and its free category");
  report->add_option("--quiver", quiver, "quiver file")->required();
  report->add_option("--category", category, "also check this category");
  report->add_option("--level", level, "identity level")->check(CLI::PositiveNumber);
  report->add_option("--leaves", leaves, "weight budget (default: level)")
      ->check(CLI::PositiveNumber);
  report->add_option("--arity", arity, "arity bound (default: level)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (trees->parsed()) return cmd_trees(out, n, max_leaves, contra);
    if (verify->parsed())
      return cmd_verify(out, mode, quiver, category, level, leaves, arity, map1, map2);
    if (extend->parsed()) return cmd_extend(out, quiver, category, map1, level, out_path);
    if (lift->parsed())
      return cmd_lift(out, err, quiver, category, from_path, to_path, map1, level, out_path);
    if (report->parsed())
      return cmd_report(out, quiver, category, level, leaves > 0 ? leaves : level,
                        arity > 0 ? arity : level);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ainfree
