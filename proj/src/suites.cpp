#include "dendro/suites.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dendro/autoeq.hpp"
#include "dendro/ncat2.hpp"
#include "dendro/segal.hpp"

namespace dendro {

std::string SuiteReport::render_text() const {
  std::ostringstream os;
  os << "suite " << suite << "\n";
  for (const auto& c : checks)
    os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name
       << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  if (aborted) os << "  aborted: " << abort_reason << "\n";
  os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string SuiteReport::render_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["aborted"] = aborted;
  if (aborted) j["abort_reason"] = abort_reason;
  j["result"] = pass() ? "PASS" : "FAIL";
  return j.dump(2);
}

namespace {

struct Runner {
  SuiteReport rep;
  std::chrono::steady_clock::time_point start;
  double budget;

  Runner(const std::string& name, double budget_s)
      : start(std::chrono::steady_clock::now()), budget(budget_s) {
    rep.suite = name;
  }

  bool over_budget() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(now - start).count() > budget;
  }

  // runs one named check unless the budget is gone
  void check(const std::string& name,
             const std::function<std::pair<bool, std::string>()>& body) {
    if (rep.aborted) return;
    if (over_budget()) {
      rep.aborted = true;
      rep.abort_reason = "time budget exceeded before check '" + name +
                         "' (partial report)";
      return;
    }
    auto [ok, detail] = body();
    rep.checks.push_back({name, ok, detail});
  }
};

std::vector<PlanarTree> hom_corpus(const SuiteBounds& b, bool canonical) {
  auto trees = enumerate_trees(b.max_vertices, b.max_arity, canonical);
  trees.push_back(standard_tree(StdTree::corolla, 3));
  std::sort(trees.begin(), trees.end());
  trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
  return trees;
}

OmegaSkeleton nerve_skeleton(Flavour fl) {
  std::vector<PlanarTree> objs{PlanarTree(),
                               standard_tree(StdTree::corolla, 0),
                               standard_tree(StdTree::corolla, 1),
                               parse_tree("((e))"),
                               standard_tree(StdTree::corolla, 2),
                               standard_tree(StdTree::left_comb, 3)};
  if (fl == Flavour::symmetric)
    for (auto& t : objs) t = canonical_form(t);
  std::sort(objs.begin(), objs.end());
  objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
  return OmegaSkeleton(fl, std::move(objs));
}

FinitePresheaf delete_upward(const FinCatView& view, const FinitePresheaf& X,
                             int obj, int victim) {
  std::vector<std::set<int>> dead(size_t(view.n_objects));
  dead[size_t(obj)].insert(victim);
  bool more = true;
  while (more) {
    more = false;
    for (const auto& [key, table] : X.act) {
      auto [s, t, f] = key;
      (void)f;
      for (int y = 0; y < X.card[size_t(t)]; ++y)
        if (dead[size_t(s)].count(table[size_t(y)]) &&
            !dead[size_t(t)].count(y)) {
          dead[size_t(t)].insert(y);
          more = true;
        }
    }
  }
  std::vector<std::vector<int>> remap(size_t(view.n_objects));
  FinitePresheaf Y;
  for (int o = 0; o < view.n_objects; ++o) {
    remap[size_t(o)].assign(size_t(X.card[size_t(o)]), -1);
    int next = 0;
    for (int x = 0; x < X.card[size_t(o)]; ++x)
      if (!dead[size_t(o)].count(x)) remap[size_t(o)][size_t(x)] = next++;
    Y.card.push_back(next);
  }
  for (const auto& [key, table] : X.act) {
    auto [s, t, f] = key;
    std::vector<int> nt;
    for (int y = 0; y < X.card[size_t(t)]; ++y) {
      if (dead[size_t(t)].count(y)) continue;
      nt.push_back(remap[size_t(s)][size_t(table[size_t(y)])]);
    }
    Y.act[{s, t, f}] = std::move(nt);
  }
  return Y;
}

const char* kPseudoCorollaTrivial = R"({
  "schema": "dendro/finoperad-1",
  "flavour": "symmetric",
  "colours": ["a", "b"],
  "operations": [{"name": "p", "inputs": ["a", "a"], "output": "b"}],
  "composition": [],
  "symmetry": [{"op": "p", "perm": [1, 0], "result": "p"}]
})";

const char* kPseudoCorollaSwap = R"({
  "schema": "dendro/finoperad-1",
  "flavour": "symmetric",
  "colours": ["a", "b"],
  "operations": [{"name": "p", "inputs": ["a", "a"], "output": "b"},
                 {"name": "q", "inputs": ["a", "a"], "output": "b"}],
  "composition": [],
  "symmetry": [{"op": "p", "perm": [1, 0], "result": "q"},
               {"op": "q", "perm": [1, 0], "result": "p"}]
})";

const char* kZ2Monoid = R"({
  "schema": "dendro/finoperad-1",
  "flavour": "symmetric",
  "colours": ["x"],
  "operations": [{"name": "s", "inputs": ["x"], "output": "x"}],
  "composition": [{"op": "s", "args": ["s"], "result": "1_x"}],
  "symmetry": []
})";

const char* kArrow = R"({
  "schema": "dendro/finoperad-1",
  "flavour": "symmetric",
  "colours": ["a", "b"],
  "operations": [{"name": "u", "inputs": ["a"], "output": "b"}],
  "composition": [],
  "symmetry": []
})";

const char* kNullary = R"({
  "schema": "dendro/finoperad-1",
  "flavour": "symmetric",
  "colours": ["r"],
  "operations": [{"name": "z", "inputs": [], "output": "r"}],
  "composition": [],
  "symmetry": [{"op": "z", "perm": [], "result": "z"}]
})";

}  // namespace

std::vector<std::pair<std::string, FinOperad>> bundled_operads(Flavour f) {
  std::vector<std::pair<std::string, FinOperad>> out;
  out.push_back({"eta", eta_operad(f)});
  out.push_back({"groupoid-j", j_operad(f)});
  out.push_back({"binary-corolla",
                 free_operad(standard_tree(StdTree::corolla, 2), f)});
  out.push_back({"capped-corolla", free_operad(parse_tree("(e ())"), f)});
  if (f == Flavour::symmetric) {
    out.push_back({"pseudo-corolla-trivial",
                   operad_from_json(kPseudoCorollaTrivial)});
    out.push_back({"pseudo-corolla-swap",
                   operad_from_json(kPseudoCorollaSwap)});
    out.push_back({"z2-monoid", operad_from_json(kZ2Monoid)});
    out.push_back({"free-arrow", operad_from_json(kArrow)});
    out.push_back({"nullary", operad_from_json(kNullary)});
  }
  return out;
}

namespace {

// ------------------------------------------------------------- criterion 1

SuiteReport suite_hom_oracle(const SuiteBounds& b) {
  Runner r("omega-hom-oracle", b.time_budget_s);
  for (Flavour fl : {Flavour::symmetric, Flavour::planar}) {
    auto trees = hom_corpus(b, fl == Flavour::symmetric);
    r.check("hom counts and colour functions match the operad map oracle (" +
                flavour_name(fl) + ")",
            [&]() -> std::pair<bool, std::string> {
              std::vector<FinOperad> frees;
              for (const auto& t : trees) frees.push_back(free_operad(t, fl));
              size_t pairs = 0, morphisms = 0;
              for (size_t i = 0; i < trees.size(); ++i)
                for (size_t j = 0; j < trees.size(); ++j) {
                  auto homs = hom_trees(trees[i], trees[j], fl);
                  auto maps = operad_maps(frees[i], frees[j]);
                  if (homs.size() != maps.size())
                    return {false,
                            "count mismatch at (" + trees[i].render(true) +
                                ", " + trees[j].render(true) + "): " +
                                std::to_string(homs.size()) + " vs " +
                                std::to_string(maps.size())};
                  std::multiset<std::vector<int>> a, bb;
                  for (const auto& f : homs) a.insert(f.edge_map);
                  for (const auto& m : maps) bb.insert(m.colour_map);
                  if (a != bb)
                    return {false, "colour function multisets differ at (" +
                                       trees[i].render(true) + ", " +
                                       trees[j].render(true) + ")"};
                  ++pairs;
                  morphisms += homs.size();
                }
              return {true, std::to_string(pairs) + " pairs, " +
                                std::to_string(morphisms) + " morphisms"};
            });
  }
  return r.rep;
}

// ------------------------------------------------------------- criterion 2

SuiteReport suite_spine(const SuiteBounds& b) {
  Runner r("spine-decomposition", b.time_budget_s);
  for (Flavour fl : {Flavour::symmetric, Flavour::planar}) {
    auto trees = hom_corpus(b, fl == Flavour::symmetric);
    r.check("hom sets biject with compatible families over the corolla "
            "slice (" + flavour_name(fl) + ")",
            [&]() -> std::pair<bool, std::string> {
              size_t pairs = 0;
              for (const auto& s : trees)
                for (const auto& t : trees) {
                  auto rep = check_cone_bijection(s, t, fl);
                  if (!rep.bijective)
                    return {false, "not bijective at (" + s.render(true) +
                                       ", " + t.render(true) + "): " +
                                       rep.detail};
                  ++pairs;
                }
              return {true, std::to_string(pairs) + " pairs"};
            });
  }
  return r.rep;
}

// ------------------------------------------------------------- criterion 3

SuiteReport suite_segal(const SuiteBounds& b) {
  Runner r("segal-soundness", b.time_budget_s);
  for (Flavour fl : {Flavour::symmetric, Flavour::planar}) {
    OmegaSkeleton sk = nerve_skeleton(fl);
    auto view = sk.view();
    for (const auto& [name, p] : bundled_operads(fl)) {
      r.check("nerve of " + name + " (" + flavour_name(fl) +
                  ") is Segal at every object",
              [&, &p = p]() -> std::pair<bool, std::string> {
                auto viol = validate_operad(p);
                if (!viol.empty())
                  return {false, "operad invalid: " + viol[0].detail};
                FinitePresheaf X = nerve_presheaf(p, sk);
                auto pv = validate_presheaf(view, X);
                if (!pv.empty())
                  return {false, "presheaf not functorial: " + pv[0].detail};
                for (int o = 0; o < sk.n_objects(); ++o) {
                  auto rep = segal_check_tree(sk, X, o);
                  if (!rep.applicable)
                    return {false, "not applicable at " +
                                       sk.object(o).render(true) + ": " +
                                       rep.detail};
                  if (!rep.bijective)
                    return {false, "fails at " + sk.object(o).render(true) +
                                       ": " + rep.detail};
                }
                return {true, ""};
              });
    }
  }
  // engineered mutants must fail
  auto make_mutants = [&](Flavour fl)
      -> std::vector<std::pair<std::string, std::pair<OmegaSkeleton,
                                                      FinitePresheaf>>> {
    std::vector<std::pair<std::string,
                          std::pair<OmegaSkeleton, FinitePresheaf>>> out;
    OmegaSkeleton sk = nerve_skeleton(fl);
    auto view = sk.view();
    int l2 = sk.find_object(parse_tree("((e))"));
    FinitePresheaf X = nerve_presheaf(j_operad(fl), sk);
    // deletion of an element not hit by any action from another object
    int victim = -1;
    for (int x = 0; x < X.card[size_t(l2)] && victim < 0; ++x) {
      bool hit = false;
      for (int t = 0; t < sk.n_objects(); ++t) {
        if (t == l2) continue;
        for (int f = 0; f < view.hom_size(l2, t) && !hit; ++f) {
          const auto& table = X.action(l2, t, f);
          for (int y = 0; y < X.card[size_t(t)]; ++y)
            if (table[size_t(y)] == x) hit = true;
        }
      }
      if (!hit) victim = x;
    }
    if (victim >= 0)
      out.push_back({"deleted element (" + flavour_name(fl) + ")",
                     {sk, delete_upward(view, X, l2, victim)}});
    // ghost duplicate
    FinitePresheaf Z = X;
    int ghost = Z.card[size_t(l2)];
    for (auto& [key, table] : Z.act) {
      auto [s, t, f] = key;
      if (t != l2) continue;
      if (s == l2 && f == view.id_index(l2))
        table.push_back(ghost);
      else
        table.push_back(table[0]);
    }
    Z.card[size_t(l2)] += 1;
    out.push_back({"ghost duplicate (" + flavour_name(fl) + ")", {sk, Z}});
    return out;
  };
  int mutants = 0;
  for (Flavour fl : {Flavour::symmetric, Flavour::planar})
    for (auto& [mname, data] : make_mutants(fl)) {
      ++mutants;
      r.check("mutant fails: " + mname,
              [&, &data = data]() -> std::pair<bool, std::string> {
                auto& [sk, X] = data;
                auto pv = validate_presheaf(sk.view(), X);
                if (!pv.empty())
                  return {false, "mutant is not even functorial"};
                int l2 = sk.find_object(parse_tree("((e))"));
                auto rep = segal_check_tree(sk, X, l2);
                if (!rep.applicable) return {false, rep.detail};
                return {!rep.bijective,
                        rep.bijective ? "mutant unexpectedly passes"
                                      : rep.detail};
              });
    }
  r.check("at least three mutants were engineered",
          [&]() -> std::pair<bool, std::string> {
            return {mutants >= 3, std::to_string(mutants) + " mutants"};
          });
  return r.rep;
}

// ------------------------------------------------------------- criterion 4

SuiteReport suite_rigidity(const SuiteBounds& b) {
  Runner r("rigidity-locality", b.time_budget_s);
  std::vector<std::pair<std::string, FinOperad>> corpus =
      bundled_operads(Flavour::symmetric);
  for (const auto& t : hom_corpus(b, true))
    corpus.push_back({"free(" + t.render(true) + ")",
                      free_operad(t, Flavour::symmetric)});
  std::vector<PlanarTree> probes{PlanarTree(),
                                 standard_tree(StdTree::corolla, 1),
                                 standard_tree(StdTree::corolla, 2),
                                 standard_tree(StdTree::left_comb, 3)};
  r.check("rigidity equals locality equals rigidity of every probe hom",
          [&]() -> std::pair<bool, std::string> {
            int rigid_count = 0, nonrigid_count = 0;
            for (const auto& [name, p] : corpus) {
              bool rig = is_rigid(p);
              (rig ? rigid_count : nonrigid_count) += 1;
              if (locality(p, std::nullopt) != rig)
                return {false, "locality disagrees with rigidity for " + name};
              bool hom_rigid = true;
              for (const auto& t : probes)
                if (!is_rigid_category(
                        internal_hom_category(free_operad(t, p.flavour), p)))
                  hom_rigid = false;
              if (hom_rigid != rig)
                return {false,
                        "probe homs disagree with rigidity for " + name};
            }
            return {true, std::to_string(rigid_count) + " rigid, " +
                              std::to_string(nonrigid_count) + " non-rigid"};
          });
  r.check("free operads on trees are rigid, the groupoid is not",
          [&]() -> std::pair<bool, std::string> {
            if (is_rigid(j_operad()))
              return {false, "the two-object groupoid reports rigid"};
            for (const auto& t : hom_corpus(b, true))
              if (!is_rigid(free_operad(t, Flavour::symmetric)))
                return {false, "free operad on " + t.render(true) +
                                   " reports non-rigid"};
            return {true, ""};
          });
  return r.rep;
}

// ------------------------------------------------------------- criterion 5

SuiteReport suite_sigma(const SuiteBounds& b) {
  Runner r("sigma-omega-laws", b.time_budget_s);
  OmegaSkeleton sk = default_sigma_skeleton();
  auto view = sk.view();
  auto sigmas = all_sigmas(sk);
  r.check("every conjugation functor on the skeleton validates",
          [&]() -> std::pair<bool, std::string> {
            for (const auto& sigma : sigmas) {
              auto viol = validate_functor(view, build_F_sigma(sk, sigma));
              if (!viol.empty()) return {false, viol[0].detail};
            }
            return {true, std::to_string(sigmas.size()) + " elements"};
          });
  r.check("extraction retracts construction and reconstruction is exact",
          [&]() -> std::pair<bool, std::string> {
            for (const auto& sigma : sigmas) {
              FunctorData F = build_F_sigma(sk, sigma);
              auto ext = sigma_of_functor(sk, F);
              if (!ext.sigma) return {false, ext.error};
              if (!(*ext.sigma == sigma))
                return {false, "extracted element differs"};
              FunctorData F2 = build_F_sigma(sk, *ext.sigma);
              if (!(F2.obj == F.obj && F2.mor == F.mor))
                return {false, "reconstructed functor differs"};
            }
            return {true, ""};
          });
  r.check("exactly one transformation between any two conjugations",
          [&]() -> std::pair<bool, std::string> {
            std::vector<FunctorData> fs;
            for (const auto& sigma : sigmas)
              fs.push_back(build_F_sigma(sk, sigma));
            for (size_t i = 0; i < fs.size(); ++i)
              for (size_t j = 0; j < fs.size(); ++j) {
                size_t n = enumerate_nat_transfs(view, fs[i], fs[j]).size();
                if (n != 1)
                  return {false, "count " + std::to_string(n) + " at pair (" +
                                     std::to_string(i) + ", " +
                                     std::to_string(j) + ")"};
              }
            return {true, std::to_string(sigmas.size() * sigmas.size()) +
                              " pairs"};
          });
  return r.rep;
}

// ------------------------------------------------------------- criterion 6

SuiteReport suite_planar(const SuiteBounds& b) {
  Runner r("planar-classification", b.time_budget_s);
  r.check("mirror is an involution preserving the isomorphism class",
          [&]() -> std::pair<bool, std::string> {
            auto trees =
                enumerate_trees(b.mirror_vertices, b.mirror_arity, false);
            for (const auto& t : trees) {
              if (!(mirror_tree(mirror_tree(t)) == t))
                return {false, "double mirror moved " + t.render(true)};
              if (!(canonical_form(mirror_tree(t)) == canonical_form(t)))
                return {false, "mirror changed the class of " +
                                   t.render(true)};
            }
            return {true, std::to_string(trees.size()) + " planar trees"};
          });
  OmegaSkeleton sk = default_planar_skeleton();
  auto view = sk.view();
  r.check("mirror signature is the order reversal for arity <= 5",
          [&]() -> std::pair<bool, std::string> {
            FunctorData m = build_mirror_functor(sk);
            auto viol = validate_functor(view, m);
            if (!viol.empty()) return {false, viol[0].detail};
            PlanarSignature sig = planar_signature(sk, m, {2, 3, 4, 5});
            if (!sig.error.empty()) return {false, sig.error};
            if (!sig.compose_with_mirror)
              return {false, "arity-two component is not the swap"};
            for (const auto& perm : sig.sigma_n) {
              int n = int(perm.size());
              for (int i = 0; i < n; ++i)
                if (perm[size_t(i)] != n - 1 - i)
                  return {false, "component is not the reversal at arity " +
                                     std::to_string(n)};
            }
            return {true, ""};
          });
  r.check("no morphisms between the 3-comb and its mirror",
          [&]() -> std::pair<bool, std::string> {
            PlanarTree b3 = standard_tree(StdTree::left_comb, 3);
            size_t a = hom_trees(b3, mirror_tree(b3), Flavour::planar).size();
            size_t c = hom_trees(mirror_tree(b3), b3, Flavour::planar).size();
            if (a || c)
              return {false, std::to_string(a) + " and " + std::to_string(c)};
            return {true, ""};
          });
  r.check("transformation counts on {identity, mirror} form the identity "
          "pattern",
          [&]() -> std::pair<bool, std::string> {
            FunctorData id = identity_functor(view, sk.content_hash());
            FunctorData m = build_mirror_functor(sk);
            size_t ii = enumerate_nat_transfs(view, id, id).size();
            size_t mm = enumerate_nat_transfs(view, m, m).size();
            size_t im = enumerate_nat_transfs(view, id, m).size();
            size_t mi = enumerate_nat_transfs(view, m, id).size();
            if (ii != 1 || mm != 1 || im != 0 || mi != 0)
              return {false, "pattern (" + std::to_string(ii) + ", " +
                                 std::to_string(im) + "; " +
                                 std::to_string(mi) + ", " +
                                 std::to_string(mm) + ")"};
            return {true, ""};
          });
  r.check("mirror and identity classify correctly",
          [&]() -> std::pair<bool, std::string> {
            auto c1 = classify_planar_functor(
                sk, identity_functor(view, sk.content_hash()));
            auto c2 = classify_planar_functor(sk, build_mirror_functor(sk));
            if (c1.kind != AutoeqClassification::Kind::identity)
              return {false, "identity misclassified: " + c1.detail};
            if (c2.kind != AutoeqClassification::Kind::mirror)
              return {false, "mirror misclassified: " + c2.detail};
            return {true, ""};
          });
  return r.rep;
}

// ------------------------------------------------------------- criterion 7

SuiteReport suite_theta_structure(const SuiteBounds& b) {
  Runner r("theta-structure", b.time_budget_s);
  r.check("table and level tree conversions invert each other",
          [&]() -> std::pair<bool, std::string> {
            auto tables = enumerate_tables(4, 3, 3);
            for (const auto& t : tables)
              if (!(leveltree_table(table_leveltree(t), 3) == t))
                return {false, "round trip fails at " + render_table(t)};
            return {true, std::to_string(tables.size()) + " tables"};
          });
  r.check("one-dimensional hom counts match the monotone map count",
          [&]() -> std::pair<bool, std::string> {
            for (int m = 1; m <= 5; ++m)
              for (int p = 1; p <= 5; ++p) {
                std::vector<int> tm(size_t(m), 1), bm(size_t(m) - 1, 0);
                std::vector<int> tp(size_t(p), 1), bp(size_t(p) - 1, 0);
                DimTable s = validate_table(tm, bm, 1);
                DimTable t = validate_table(tp, bp, 1);
                if (hom_tables(s, t).size() != monotone_map_count(m, p))
                  return {false, "mismatch at m=" + std::to_string(m) +
                                     ", p=" + std::to_string(p)};
              }
            return {true, "parameters up to 5"};
          });
  r.check("two-dimensional hom counts match the strict functor oracle",
          [&]() -> std::pair<bool, std::string> {
            DimTable d2 = disk_table(2, 2);
            if (hom_tables(d2, d2).size() != 5)
              return {false, "endomorphism count of the 2-disk is not 5"};
            auto tables = enumerate_tables(2, 2, 2);
            for (const auto& s : tables)
              for (const auto& t : tables)
                if (hom_tables(s, t).size() != strict_two_functor_count(s, t))
                  return {false, "mismatch at (" + render_table(s) + ", " +
                                     render_table(t) + ")"};
            return {true, std::to_string(tables.size() * tables.size()) +
                              " pairs"};
          });
  return r.rep;
}

// ------------------------------------------------------------- criterion 8

SuiteReport suite_active_inert(const SuiteBounds& b) {
  Runner r("active-inert", b.time_budget_s);
  ThetaSkeleton sk = default_theta2_skeleton();
  r.check("every morphism factors as active followed by inert",
          [&]() -> std::pair<bool, std::string> {
            size_t total = 0;
            for (int s = 0; s < sk.n_objects(); ++s)
              for (int t = 0; t < sk.n_objects(); ++t)
                for (const auto& f : sk.hom(s, t)) {
                  auto fac = factor_active_inert(sk.object(s), f, sk.object(t));
                  if (!(theta_compose(fac.inert, fac.active) == f))
                    return {false, "factor parts do not compose back"};
                  if (!theta_is_active(fac.active, sk.object(s), fac.middle))
                    return {false, "left part is not active"};
                  if (!theta_is_inert(fac.inert))
                    return {false, "right part is not inert"};
                  ++total;
                }
            return {true, std::to_string(total) + " morphisms"};
          });
  r.check("the factorization is unique over all skeleton middles",
          [&]() -> std::pair<bool, std::string> {
            // count (active, inert) pairs landing on each morphism
            std::map<std::tuple<int, int, int>, int> count;
            for (int s = 0; s < sk.n_objects(); ++s)
              for (int m = 0; m < sk.n_objects(); ++m) {
                std::vector<const ThetaMor*> actives;
                for (const auto& a : sk.hom(s, m))
                  if (theta_is_active(a, sk.object(s), sk.object(m)))
                    actives.push_back(&a);
                if (actives.empty()) continue;
                for (int t = 0; t < sk.n_objects(); ++t) {
                  for (const auto& i : sk.hom(m, t)) {
                    if (!theta_is_inert(i)) continue;
                    for (const ThetaMor* a : actives) {
                      int f = sk.find_mor(s, t, theta_compose(i, *a));
                      if (f < 0) return {false, "composite escaped skeleton"};
                      ++count[{s, t, f}];
                    }
                  }
                }
              }
            size_t total = 0;
            for (int s = 0; s < sk.n_objects(); ++s)
              for (int t = 0; t < sk.n_objects(); ++t)
                for (size_t f = 0; f < sk.hom(s, t).size(); ++f) {
                  ++total;
                  auto it = count.find({s, t, int(f)});
                  int n = it == count.end() ? 0 : it->second;
                  if (n != 1)
                    return {false,
                            "morphism with " + std::to_string(n) +
                                " factorizations between " +
                                render_table(sk.object(s)) + " and " +
                                render_table(sk.object(t))};
                }
            return {true, std::to_string(total) + " morphisms, one pair each"};
          });
  r.check("exactly two disk monos in every lower dimension up to 3",
          [&]() -> std::pair<bool, std::string> {
            for (int k = 1; k <= 3; ++k)
              for (int kp = 0; kp < k; ++kp) {
                auto ms = disk_monos(kp, k, 3);
                if (ms.size() != 2 || ms[0] == ms[1])
                  return {false, "disk mono count wrong at (" +
                                     std::to_string(kp) + ", " +
                                     std::to_string(k) + ")"};
                size_t found = 0;
                for (const auto& f :
                     hom_tables(disk_table(kp, 3), disk_table(k, 3)))
                  if (theta_is_mono(disk_table(kp, 3), f, disk_table(k, 3)))
                    ++found;
                if (found != 2)
                  return {false, "mono count in hom set is " +
                                     std::to_string(found)};
              }
            return {true, ""};
          });
  return r.rep;
}

// ------------------------------------------------------------- criterion 9

SuiteReport suite_op_delta(const SuiteBounds& b) {
  Runner r("op-delta-laws", b.time_budget_s);
  ThetaSkeleton sk = default_theta2_skeleton();
  auto view = sk.view();
  std::vector<std::vector<int>> deltas{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<FunctorData> fs;
  for (const auto& d : deltas) fs.push_back(build_op_delta(sk, d));
  r.check("reversal functors satisfy the functor laws",
          [&]() -> std::pair<bool, std::string> {
            // full validation on the two-column subskeleton, where the
            // composite tables are small enough to check exhaustively
            ThetaSkeleton sub(2, enumerate_tables(2, 2, 2));
            for (const auto& d : deltas) {
              auto viol = validate_functor(sub.view(), build_op_delta(sub, d));
              if (!viol.empty()) return {false, viol[0].detail};
            }
            for (const auto& F : fs) {
              for (int o = 0; o < sk.n_objects(); ++o)
                if (F.mor.at({o, o})[size_t(view.id_index(o))] !=
                    view.id_index(F.obj[size_t(o)]))
                  return {false, "identity not preserved"};
            }
            return {true, ""};
          });
  r.check("composition follows the group law",
          [&]() -> std::pair<bool, std::string> {
            for (size_t a = 0; a < deltas.size(); ++a)
              for (size_t c = 0; c < deltas.size(); ++c) {
                std::vector<int> sum{(deltas[a][0] + deltas[c][0]) % 2,
                                     (deltas[a][1] + deltas[c][1]) % 2};
                FunctorData comp = compose_functors(view, fs[a], fs[c]);
                FunctorData direct = build_op_delta(sk, sum);
                if (!(comp.obj == direct.obj && comp.mor == direct.mor))
                  return {false, "law fails at a pair of vectors"};
              }
            return {true, "16 pairs"};
          });
  r.check("identity on objects",
          [&]() -> std::pair<bool, std::string> {
            // No functor that swaps the two endpoint inclusions of the
            // interval can fix the table (2 1 / 0): its three points carry
            // the out-degree profile {4, 3, 1} but the in-degree profile
            // {1, 2, 5}, so no relabelling of points reverses every arrow.
            // The reversal therefore moves some objects, and this check
            // reports the displacement rather than hiding it.
            for (size_t a = 0; a < deltas.size(); ++a)
              for (int o = 0; o < sk.n_objects(); ++o)
                if (fs[a].obj[size_t(o)] != o)
                  return {false,
                          "op_(" + std::to_string(deltas[a][0]) + "," +
                              std::to_string(deltas[a][1]) + ") moves " +
                              render_table(sk.object(o)) + " to " +
                              render_table(
                                  sk.object(fs[a].obj[size_t(o)]))};
            return {true, ""};
          });
  r.check("extraction retracts construction",
          [&]() -> std::pair<bool, std::string> {
            for (size_t a = 0; a < deltas.size(); ++a) {
              auto ext = delta_of_functor(sk, fs[a]);
              if (!ext.delta) return {false, ext.error};
              if (*ext.delta != deltas[a])
                return {false, "extracted vector differs"};
            }
            return {true, ""};
          });
  r.check("transformation counts form the Kronecker pattern",
          [&]() -> std::pair<bool, std::string> {
            for (size_t a = 0; a < deltas.size(); ++a)
              for (size_t c = 0; c < deltas.size(); ++c) {
                size_t n = enumerate_nat_transfs(view, fs[a], fs[c]).size();
                if (n != (a == c ? 1u : 0u))
                  return {false, "count " + std::to_string(n) +
                                     " at a pair of vectors"};
              }
            return {true, "16 pairs"};
          });
  r.check("disks are characterized by their subobjects",
          [&]() -> std::pair<bool, std::string> {
            auto pool = enumerate_tables(b.max_columns, 3, 3);
            for (int k = 1; k <= 3; ++k) {
              DimTable dk = disk_table(k, 3);
              // positive: subobjects of the disk over the whole pool
              for (const auto& s : pool) {
                size_t monos = 0;
                for (const auto& f : hom_tables(s, dk))
                  if (theta_is_mono(s, f, dk)) ++monos;
                size_t expect = 0;
                if (s == dk)
                  expect = 1;
                else if (s.columns() == 1 && s.top[0] < k)
                  expect = 2;
                if (monos != expect)
                  return {false, "subobject count of the " +
                                     std::to_string(k) + "-disk wrong at " +
                                     render_table(s)};
              }
              // uniqueness against disk-shaped subobjects
              for (const auto& cand : pool) {
                bool ok = true;
                for (int l = 0; l <= 3 && ok; ++l) {
                  DimTable dl = disk_table(l, 3);
                  size_t monos = 0;
                  for (const auto& f : hom_tables(dl, cand))
                    if (theta_is_mono(dl, f, cand)) ++monos;
                  size_t allowed_iso = dl == cand ? 1 : 0;
                  if (l < k && monos != 2) ok = false;
                  if (l >= k && monos != allowed_iso) ok = false;
                }
                if (ok != (cand == dk))
                  return {false, "characterization fails at " +
                                     render_table(cand) + " for k=" +
                                     std::to_string(k)};
              }
            }
            return {true,
                    "pool of " +
                        std::to_string(
                            enumerate_tables(b.max_columns, 3, 3).size()) +
                        " tables"};
          });
  return r.rep;
}

// ------------------------------------------------------------ criterion 10

SuiteReport suite_normality(const SuiteBounds& b) {
  Runner r("normality", b.time_budget_s);
  std::vector<PlanarTree> objs{PlanarTree(),
                               standard_tree(StdTree::corolla, 2)};
  OmegaSkeleton sk(Flavour::symmetric, objs);
  auto view = sk.view();
  int eta = 0, c2 = 1;
  // representable at the binary corolla
  FinitePresheaf Y;
  Y.card = {int(sk.hom(eta, c2).size()), int(sk.hom(c2, c2).size())};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int f = 0; f < view.hom_size(s, t); ++f) {
        std::vector<int> table;
        for (int y = 0; y < Y.card[size_t(t)]; ++y)
          table.push_back(sk.find_mor(
              s, c2,
              omega_compose(sk.hom(t, c2)[size_t(y)], sk.hom(s, t)[size_t(f)])));
        Y.act[{s, t, f}] = std::move(table);
      }
  FinitePresheaf colours;
  colours.card = {Y.card[0], 0};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int f = 0; f < view.hom_size(s, t); ++f) {
        std::vector<int> table;
        if (t == 0)
          for (int y = 0; y < colours.card[0]; ++y)
            table.push_back(Y.action(s, t, f)[size_t(y)]);
        colours.act[{s, t, f}] = std::move(table);
      }
  r.check("free orbit complement is normal",
          [&]() -> std::pair<bool, std::string> {
            PresheafMono m{colours, Y, {{0, 1, 2}, {}}};
            auto viol = validate_mono(view, m);
            if (!viol.empty()) return {false, viol[0].detail};
            auto rep = normality_check(sk, m);
            return {rep.normal, rep.witness};
          });
  r.check("fixed point complement is not normal",
          [&]() -> std::pair<bool, std::string> {
            FinitePresheaf Q;
            Q.card = {2, 1};
            Q.act[{0, 0, 0}] = {0, 1};
            Q.act[{0, 1, 0}] = {0};
            Q.act[{0, 1, 1}] = {1};
            Q.act[{0, 1, 2}] = {1};
            Q.act[{1, 0, 0}] = {};
            for (int f = 0; f < view.hom_size(1, 1); ++f) Q.act[{1, 1, f}] = {0};
            FinitePresheaf sub;
            sub.card = {2, 0};
            sub.act[{0, 0, 0}] = {0, 1};
            sub.act[{0, 1, 0}] = {};
            sub.act[{0, 1, 1}] = {};
            sub.act[{0, 1, 2}] = {};
            sub.act[{1, 0, 0}] = {};
            for (int f = 0; f < view.hom_size(1, 1); ++f)
              sub.act[{1, 1, f}] = {};
            PresheafMono m{sub, Q, {{0, 1}, {}}};
            auto viol = validate_mono(view, m);
            if (!viol.empty()) return {false, viol[0].detail};
            auto rep = normality_check(sk, m);
            return {!rep.normal,
                    rep.normal ? "quotient reported normal" : rep.witness};
          });
  r.check("planar monos are normal",
          [&]() -> std::pair<bool, std::string> {
            OmegaSkeleton psk(Flavour::planar, objs);
            FinitePresheaf P = nerve_presheaf(
                free_operad(standard_tree(StdTree::corolla, 2),
                            Flavour::planar),
                psk);
            PresheafMono m;
            m.sub = P;
            m.total = P;
            for (int i = 0; i < 2; ++i) {
              std::vector<int> inj;
              for (int x = 0; x < P.card[size_t(i)]; ++x) inj.push_back(x);
              m.inj.push_back(inj);
            }
            auto viol = validate_mono(psk.view(), m);
            if (!viol.empty()) return {false, viol[0].detail};
            auto rep = normality_check(psk, m);
            return {rep.normal, rep.witness};
          });
  (void)b;
  return r.rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"omega-hom-oracle",   "spine-decomposition", "segal-soundness",
          "rigidity-locality",  "sigma-omega-laws",    "planar-classification",
          "theta-structure",    "active-inert",        "op-delta-laws",
          "normality"};
}

SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds) {
  if (name == "omega-hom-oracle") return suite_hom_oracle(bounds);
  if (name == "spine-decomposition") return suite_spine(bounds);
  if (name == "segal-soundness") return suite_segal(bounds);
  if (name == "rigidity-locality") return suite_rigidity(bounds);
  if (name == "sigma-omega-laws") return suite_sigma(bounds);
  if (name == "planar-classification") return suite_planar(bounds);
  if (name == "theta-structure") return suite_theta_structure(bounds);
  if (name == "active-inert") return suite_active_inert(bounds);
  if (name == "op-delta-laws") return suite_op_delta(bounds);
  if (name == "normality") return suite_normality(bounds);
  std::string msg = "unknown suite '" + name + "'; available:";
  for (const auto& s : suite_names()) msg += " " + s;
  throw std::invalid_argument(msg);
}

}  // namespace dendro
