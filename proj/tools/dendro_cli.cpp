// Command line driver: enumeration, checking and the acceptance suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dendro/autoeq.hpp"
#include "dendro/ncat2.hpp"
#include "dendro/segal.hpp"
#include "dendro/suites.hpp"

using namespace dendro;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FinOperad load_operad(const std::string& spec_arg) {
  const std::string prefix = "builtin:";
  if (spec_arg.rfind(prefix, 0) == 0) {
    std::string name = spec_arg.substr(prefix.size());
    for (Flavour f : {Flavour::symmetric, Flavour::planar})
      for (const auto& [n, p] : bundled_operads(f))
        if (n == name) return p;
    throw std::runtime_error("no bundled operad named " + name);
  }
  if (spec_arg.rfind("free:", 0) == 0) {
    // free:planar:(e e)  or  free:symmetric:(e e)
    std::string rest = spec_arg.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("free operad spec needs flavour:literal");
    Flavour f = rest.substr(0, colon) == "planar" ? Flavour::planar
                                                  : Flavour::symmetric;
    return free_operad(parse_tree(rest.substr(colon + 1)), f);
  }
  return operad_from_json(slurp(spec_arg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics engine for tree and cell index categories"};
  app.require_subcommand(1);

  std::string flavour_str = "symmetric";
  bool ascii = false;
  std::string format = "text";
  app.add_option("--flavour", flavour_str, "symmetric or planar")
      ->check(CLI::IsMember({"symmetric", "planar"}));
  app.add_flag("--ascii", ascii, "write e instead of the Greek letter");
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // hom ------------------------------------------------------------------
  auto* hom = app.add_subcommand("hom", "enumerate morphisms between trees "
                                        "or tables");
  std::string hom_src, hom_tgt;
  bool hom_theta = false, hom_omega0 = false, hom_count_only = false;
  int ambient = 2;
  hom->add_option("source", hom_src)->required();
  hom->add_option("target", hom_tgt)->required();
  hom->add_flag("--theta", hom_theta, "inputs are tables of dimensions");
  hom->add_flag("--omega0", hom_omega0, "collection-level maps only");
  hom->add_flag("--count", hom_count_only, "print the count only");
  hom->add_option("--n", ambient, "ambient dimension for tables");

  // aut ------------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "automorphisms of a tree");
  std::string aut_tree;
  aut->add_option("tree", aut_tree)->required();

  // factor ---------------------------------------------------------------
  auto* factor = app.add_subcommand(
      "factor", "active-inert factorization of a table morphism");
  std::string fac_src, fac_tgt;
  int fac_index = 0;
  factor->add_option("source", fac_src)->required();
  factor->add_option("target", fac_tgt)->required();
  factor->add_option("index", fac_index, "index into the hom enumeration");
  factor->add_option("--n", ambient, "ambient dimension");

  // segal ----------------------------------------------------------------
  auto* segal = app.add_subcommand("segal", "Segal check of a presheaf file");
  std::string segal_file;
  segal->add_option("file", segal_file)->required();

  // rigid ----------------------------------------------------------------
  auto* rigid = app.add_subcommand("rigid", "rigidity and locality of an "
                                            "operad");
  std::string rigid_spec;
  rigid->add_option("operad", rigid_spec,
                    "json file, builtin:<name> or free:<flavour>:<tree>")
      ->required();

  // classify -------------------------------------------------------------
  auto* classify = app.add_subcommand(
      "classify", "classification flags of an operad, or the reference "
                  "family of a functor file");
  std::string classify_spec;
  std::string classify_skeleton;
  classify->add_option("input", classify_spec)->required();
  classify->add_option(
      "--skeleton", classify_skeleton,
      "treat the input as a functor file over the named skeleton "
      "(omega-sigma, omega-default, planar-default, theta2-default)");

  // mirror ---------------------------------------------------------------
  auto* mirror = app.add_subcommand("mirror", "mirror of a planar tree or "
                                              "operad");
  std::string mirror_arg;
  bool mirror_operad_flag = false;
  mirror->add_option("input", mirror_arg)->required();
  mirror->add_flag("--operad", mirror_operad_flag,
                   "input is an operad rather than a tree literal");

  // table ----------------------------------------------------------------
  auto* table = app.add_subcommand("table", "validate a table of dimensions "
                                            "and show its level tree");
  std::string table_lit;
  table->add_option("literal", table_lit)->required();
  table->add_option("--n", ambient, "ambient dimension");

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  std::vector<std::string> verify_suites;
  double budget = 120.0;
  int max_vertices = 3, max_arity = 2, max_columns = 3;
  verify->add_option("suites", verify_suites,
                     "suite names (all when omitted)");
  verify->add_option("--budget", budget, "time budget per suite in seconds");
  verify->add_option("--max-vertices", max_vertices,
                     "vertex bound for the tree corpora");
  verify->add_option("--max-arity", max_arity,
                     "arity bound for the tree corpora");
  verify->add_option("--max-columns", max_columns,
                     "column bound for the table pool");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  Flavour flavour =
      flavour_str == "planar" ? Flavour::planar : Flavour::symmetric;

  try {
    if (*hom) {
      if (hom_theta) {
        DimTable s = parse_table(hom_src, ambient);
        DimTable t = parse_table(hom_tgt, ambient);
        auto homs = hom_tables(s, t);
        if (format == "json") {
          nlohmann::json j;
          j["count"] = homs.size();
          nlohmann::json keys = nlohmann::json::array();
          if (!hom_count_only)
            for (const auto& f : homs) keys.push_back(f.key());
          j["morphisms"] = keys;
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << homs.size() << " morphisms\n";
          if (!hom_count_only)
            for (const auto& f : homs) std::cout << "  " << f.key() << "\n";
        }
      } else {
        PlanarTree s = parse_tree(hom_src);
        PlanarTree t = parse_tree(hom_tgt);
        if (flavour == Flavour::symmetric) {
          s = canonical_form(s);
          t = canonical_form(t);
        }
        auto homs = hom_trees(s, t, flavour,
                              hom_omega0 ? HomRestrict::omega0
                                         : HomRestrict::all);
        if (format == "json") {
          nlohmann::json j;
          j["count"] = homs.size();
          nlohmann::json ms = nlohmann::json::array();
          if (!hom_count_only)
            for (const auto& f : homs)
              ms.push_back(nlohmann::json::parse(omega_mor_to_json(f)));
          j["morphisms"] = ms;
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << homs.size() << " morphisms\n";
          if (!hom_count_only)
            for (const auto& f : homs) std::cout << "  " << f.key() << "\n";
        }
      }
    } else if (*aut) {
      PlanarTree t = canonical_form(parse_tree(aut_tree));
      auto as = tree_automorphisms(t);
      std::cout << as.size() << " automorphisms of " << t.render(ascii)
                << "\n";
      for (const auto& a : as) {
        std::cout << "  (";
        for (size_t i = 0; i < a.size(); ++i)
          std::cout << (i ? " " : "") << a[i];
        std::cout << ")\n";
      }
    } else if (*factor) {
      DimTable s = parse_table(fac_src, ambient);
      DimTable t = parse_table(fac_tgt, ambient);
      auto homs = hom_tables(s, t);
      if (fac_index < 0 || size_t(fac_index) >= homs.size())
        throw std::runtime_error("index out of range; hom has " +
                                 std::to_string(homs.size()) + " morphisms");
      auto fac = factor_active_inert(s, homs[size_t(fac_index)], t);
      std::cout << "morphism: " << homs[size_t(fac_index)].key() << "\n";
      std::cout << "active:   " << fac.active.key() << "\n";
      std::cout << "middle:   " << render_table(fac.middle) << "\n";
      std::cout << "inert:    " << fac.inert.key() << "\n";
    } else if (*segal) {
      auto [sk, X] = presheaf_from_json(slurp(segal_file));
      bool all = true;
      for (int o = 0; o < sk.n_objects(); ++o) {
        auto rep = segal_check_tree(sk, X, o);
        std::cout << sk.object(o).render(ascii) << ": "
                  << (rep.applicable
                          ? (rep.bijective ? "bijective" : "FAILS " + rep.detail)
                          : "not applicable: " + rep.detail)
                  << "\n";
        if (!rep.applicable || !rep.bijective) all = false;
      }
      return all ? 0 : 1;
    } else if (*rigid) {
      FinOperad p = load_operad(rigid_spec);
      bool rig = is_rigid(p);
      bool loc = locality(p, std::nullopt);
      std::cout << "rigid: " << (rig ? "yes" : "no") << "\n";
      std::cout << "local: " << (loc ? "yes" : "no") << "\n";
      return 0;
    } else if (*classify) {
      if (!classify_skeleton.empty()) {
        FunctorData F = functor_from_json(slurp(classify_spec));
        AutoeqClassification cls;
        if (classify_skeleton == "omega-sigma") {
          cls = classify_omega_functor(default_sigma_skeleton(), F);
        } else if (classify_skeleton == "omega-default") {
          cls = classify_omega_functor(default_omega_skeleton(), F);
        } else if (classify_skeleton == "planar-default") {
          cls = classify_planar_functor(default_planar_skeleton(), F);
        } else if (classify_skeleton == "theta2-default") {
          cls = classify_theta_functor(default_theta2_skeleton(), F);
        } else {
          throw std::runtime_error("unknown skeleton " + classify_skeleton);
        }
        using K = AutoeqClassification::Kind;
        std::string verdict =
            cls.kind == K::identity      ? "identity"
            : cls.kind == K::conjugation ? "conjugation"
            : cls.kind == K::reversal    ? "reversal"
            : cls.kind == K::mirror      ? "mirror"
            : cls.kind == K::not_of_form ? "not-of-reference-form"
                                         : "indeterminate";
        std::cout << "verdict: " << verdict << "\n";
        if (cls.kind == K::reversal) {
          std::cout << "delta:";
          for (int d : cls.delta) std::cout << " " << d;
          std::cout << "\n";
        }
        if (!cls.detail.empty()) std::cout << "detail: " << cls.detail << "\n";
        return cls.kind == K::not_of_form ? 1 : 0;
      }
      FinOperad p = load_operad(classify_spec);
      auto rep = classify_operad(p);
      std::cout << "category: " << (rep.is_category ? "yes" : "no") << "\n";
      std::cout << "discrete: " << (rep.is_discrete ? "yes" : "no") << "\n";
      std::cout << "pseudo-corolla: "
                << (rep.is_pseudo_corolla == Tri::yes
                        ? "yes"
                        : rep.is_pseudo_corolla == Tri::no ? "no"
                                                           : "indeterminate")
                << "\n";
      if (rep.corolla_arity)
        std::cout << "corolla arity: " << *rep.corolla_arity << "\n";
      if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    } else if (*mirror) {
      if (mirror_operad_flag) {
        FinOperad p = load_operad(mirror_arg);
        std::cout << operad_to_json(mirror_operad(p)) << "\n";
      } else {
        std::cout << mirror_tree(parse_tree(mirror_arg)).render(ascii) << "\n";
      }
    } else if (*table) {
      DimTable t = parse_table(table_lit, ambient);
      std::cout << "valid, height " << t.height() << "\n";
      std::cout << "level tree: " << table_leveltree(t).render(ascii) << "\n";
      SpineTable sp = spine_table(t);
      std::cout << "spine: ";
      for (size_t i = 0; i < sp.column_dims.size(); ++i) {
        if (i) std::cout << " *_" << sp.glue_dims[i - 1] << " ";
        std::cout << "D" << sp.column_dims[i];
      }
      std::cout << "\n";
    } else if (*verify) {
      if (verify_suites.empty()) verify_suites = suite_names();
      SuiteBounds bounds;
      bounds.time_budget_s = budget;
      bounds.max_vertices = max_vertices;
      bounds.max_arity = max_arity;
      bounds.max_columns = max_columns;
      bool all = true;
      for (const auto& name : verify_suites) {
        SuiteReport rep = run_suite(name, bounds);
        std::cout << (format == "json" ? rep.render_json()
                                       : rep.render_text());
        if (format == "json") std::cout << "\n";
        if (!rep.pass()) all = false;
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
