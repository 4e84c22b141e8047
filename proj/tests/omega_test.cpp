#include <doctest.h>

#include <map>
#include <set>

#include "dendro/omega.hpp"

using namespace dendro;

TEST_CASE("hom counts on small trees") {
  PlanarTree eta;
  PlanarTree c2 = standard_tree(StdTree::corolla, 2);
  PlanarTree b3 = canonical_form(standard_tree(StdTree::left_comb, 3));
  CHECK(hom_trees(eta, c2, Flavour::symmetric).size() == 3);
  CHECK(hom_trees(c2, c2, Flavour::symmetric).size() == 2);
  CHECK(hom_trees(c2, c2, Flavour::planar).size() == 1);
  PlanarTree b3p = standard_tree(StdTree::left_comb, 3);
  CHECK(hom_trees(b3p, mirror_tree(b3p), Flavour::planar).empty());
  CHECK(hom_trees(mirror_tree(b3p), b3p, Flavour::planar).empty());
  CHECK(hom_trees(b3, b3, Flavour::symmetric).size() == 2);
  for (const auto& f : hom_trees(eta, c2, Flavour::symmetric))
    CHECK(omega_mor_valid(f, Flavour::symmetric));
}

TEST_CASE("hom agrees with the operad map oracle") {
  auto trees = enumerate_trees(2, 2, true);
  for (Flavour fl : {Flavour::symmetric, Flavour::planar}) {
    for (const auto& s : trees)
      for (const auto& t : trees) {
        auto homs = hom_trees(s, t, fl);
        auto maps = operad_maps(free_operad(s, fl), free_operad(t, fl));
        CHECK(homs.size() == maps.size());
        std::multiset<std::vector<int>> a, b;
        for (const auto& f : homs) a.insert(f.edge_map);
        for (const auto& m : maps) b.insert(m.colour_map);
        CHECK(a == b);
      }
  }
}

TEST_CASE("composition") {
  PlanarTree eta;
  PlanarTree c2 = standard_tree(StdTree::corolla, 2);
  PlanarTree b3 = canonical_form(standard_tree(StdTree::left_comb, 3));
  auto id_c2 = omega_identity(c2);
  auto homs = hom_trees(eta, c2, Flavour::symmetric);
  for (const auto& f : homs) {
    CHECK(omega_compose(id_c2, f) == f);
    CHECK(omega_compose(f, omega_identity(eta)) == f);
  }
  // leaf colour into C2, then C2 into B3 as the top vertex
  auto c2_to_b3 = hom_trees(c2, b3, Flavour::symmetric);
  REQUIRE(!c2_to_b3.empty());
  for (const auto& g : c2_to_b3) {
    CHECK(omega_mor_valid(g, Flavour::symmetric));
    for (const auto& f : homs) {
      OmegaMor gf = omega_compose(g, f);
      CHECK(omega_mor_valid(gf, Flavour::symmetric));
      CHECK(gf.edge_map[0] == g.edge_map[size_t(f.edge_map[0])]);
    }
  }
  // associativity over composable triples on a small skeleton
  auto sk_trees = enumerate_trees(2, 2, true);
  OmegaSkeleton sk(Flavour::symmetric, sk_trees);
  for (int a = 0; a < sk.n_objects(); ++a)
    for (int b = 0; b < sk.n_objects(); ++b)
      for (int c = 0; c < sk.n_objects(); ++c)
        for (int d = 0; d < sk.n_objects(); ++d)
          for (const auto& f : sk.hom(a, b))
            for (const auto& g : sk.hom(b, c))
              for (const auto& h : sk.hom(c, d))
                CHECK(omega_compose(h, omega_compose(g, f)) ==
                      omega_compose(omega_compose(h, g), f));
  CHECK_THROWS(omega_compose(homs[0], homs[0]));
}

TEST_CASE("cor slice counts") {
  CHECK(cor_slice(PlanarTree()).n_objects() == 1);
  for (int n = 0; n <= 3; ++n)
    CHECK(cor_slice(standard_tree(StdTree::corolla, n)).n_objects() == n + 2);
  CHECK(cor_slice(standard_tree(StdTree::left_comb, 3)).n_objects() == 7);
}

TEST_CASE("cone bijection") {
  auto trees = enumerate_trees(2, 2, true);
  for (Flavour fl : {Flavour::symmetric, Flavour::planar})
    for (const auto& s : trees)
      for (const auto& t : trees) {
        auto rep = check_cone_bijection(s, t, fl);
        CHECK(rep.bijective);
        CHECK(rep.n_morphisms == rep.n_families);
      }
}

TEST_CASE("omega0 restriction") {
  PlanarTree c2 = standard_tree(StdTree::corolla, 2);
  // collection maps C2 -> C2 send the generator to the planar generator
  CHECK(hom_trees(c2, c2, Flavour::symmetric, HomRestrict::omega0).size() ==
        1);
  PlanarTree b3 = canonical_form(standard_tree(StdTree::left_comb, 3));
  auto all = hom_trees(c2, b3, Flavour::symmetric);
  auto coll = hom_trees(c2, b3, Flavour::symmetric, HomRestrict::omega0);
  CHECK(coll.size() <= all.size());
  CHECK(coll.size() == 2);  // the two vertices, planar order preserved
}

TEST_CASE("planar homs inject into symmetric homs") {
  auto trees = enumerate_trees(3, 2, true);
  for (const auto& s : trees)
    for (const auto& t : trees) {
      auto pl = hom_trees(s, t, Flavour::planar);
      auto sym = hom_trees(s, t, Flavour::symmetric);
      CHECK(pl.size() <= sym.size());
      bool linear = true;
      for (int v = 0; v < s.n_vertices(); ++v)
        if (s.arity(v) != 1) linear = false;
      for (int v = 0; v < t.n_vertices(); ++v)
        if (t.arity(v) != 1) linear = false;
      if (linear) CHECK(pl.size() == sym.size());
    }
}

TEST_CASE("sigma conjugation") {
  OmegaSkeleton sk = default_sigma_skeleton();
  auto sigmas = all_sigmas(sk);
  CHECK(sigmas.size() == 4);  // swap at C2 and swap at B3
  SigmaOmega id = sigma_identity(sk);
  int eta = sk.find_object(PlanarTree());
  int c2 = sk.find_object(standard_tree(StdTree::corolla, 2));
  REQUIRE(eta >= 0);
  REQUIRE(c2 >= 0);
  // identity leaves morphisms unchanged
  for (const auto& f : sk.hom(eta, c2))
    CHECK(apply_F_sigma(sk, id, f) == f);
  // the swap at C2 exchanges the two leaf maps
  SigmaOmega swap = id;
  swap.component[size_t(c2)] = {0, 2, 1};
  const auto& colours = sk.hom(eta, c2);
  OmegaMor leaf1 = colours[1], leaf2 = colours[2];
  CHECK(apply_F_sigma(sk, swap, leaf1) == leaf2);
  CHECK(apply_F_sigma(sk, swap, leaf2) == leaf1);
  CHECK(apply_F_sigma(sk, swap, colours[0]) == colours[0]);
  // conjugation with sigma supported at the source only composes with the
  // inverse on the right
  int b3 = sk.find_object(canonical_form(standard_tree(StdTree::left_comb, 3)));
  REQUIRE(b3 >= 0);
  for (const auto& f : sk.hom(c2, b3)) {
    OmegaMor expect = omega_compose(
        f, omega_from_edge_permutation(
               sk.object(c2), invert_perm(swap.component[size_t(c2)])));
    CHECK(apply_F_sigma(sk, swap, f) == expect);
  }
}

TEST_CASE("F_sigma functors and extraction") {
  OmegaSkeleton sk = default_sigma_skeleton();
  auto view = sk.view();
  for (const auto& sigma : all_sigmas(sk)) {
    FunctorData F = build_F_sigma(sk, sigma);
    CHECK(validate_functor(view, F).empty());
    auto ext = sigma_of_functor(sk, F);
    REQUIRE(ext.sigma.has_value());
    CHECK(*ext.sigma == sigma);
    // reconstruction: F_{sigma(F)} equals F table by table
    FunctorData F2 = build_F_sigma(sk, *ext.sigma);
    CHECK(F2.obj == F.obj);
    CHECK(F2.mor == F.mor);
  }
  // functoriality of conjugation at the morphism level
  auto sigmas = all_sigmas(sk);
  for (const auto& sigma : sigmas)
    for (int s = 0; s < sk.n_objects(); ++s)
      for (int t = 0; t < sk.n_objects(); ++t)
        for (int u = 0; u < sk.n_objects(); ++u)
          for (const auto& f : sk.hom(s, t))
            for (const auto& g : sk.hom(t, u))
              CHECK(apply_F_sigma(sk, sigma, omega_compose(g, f)) ==
                    omega_compose(apply_F_sigma(sk, sigma, g),
                                  apply_F_sigma(sk, sigma, f)));
}

TEST_CASE("a functor with a broken colour action is rejected") {
  OmegaSkeleton sk = default_sigma_skeleton();
  FunctorData F = build_F_sigma(sk, sigma_identity(sk));
  int eta = sk.find_object(PlanarTree());
  int c2 = sk.find_object(standard_tree(StdTree::corolla, 2));
  // rewire a single colour of C2: no automorphism matches any more
  auto& table = F.mor.at({eta, c2});
  std::swap(table[0], table[1]);
  auto ext = sigma_of_functor(sk, F);
  CHECK(!ext.sigma.has_value());
  CHECK(!ext.error.empty());
}

TEST_CASE("natural transformations: contractibility pattern") {
  OmegaSkeleton sk = default_sigma_skeleton();
  auto view = sk.view();
  auto sigmas = all_sigmas(sk);
  std::vector<FunctorData> fs;
  for (const auto& sigma : sigmas) fs.push_back(build_F_sigma(sk, sigma));
  for (const auto& F : fs)
    for (const auto& G : fs)
      CHECK(enumerate_nat_transfs(view, F, G).size() == 1);
}

TEST_CASE("mirror functor on the planar skeleton") {
  OmegaSkeleton sk = default_planar_skeleton();
  auto view = sk.view();
  FunctorData m = build_mirror_functor(sk);
  CHECK(validate_functor(view, m).empty());
  FunctorData id = identity_functor(view, sk.content_hash());
  // involution
  FunctorData mm = compose_functors(view, m, m);
  CHECK(mm.obj == id.obj);
  CHECK(mm.mor == id.mor);
  // the signature of the mirror is the order reversal at every arity
  PlanarSignature sig = planar_signature(sk, m, {0, 1, 2, 3, 4, 5});
  REQUIRE(sig.error.empty());
  CHECK(sig.compose_with_mirror);
  for (size_t k = 0; k < sig.sigma_n.size(); ++k) {
    int n = int(sig.sigma_n[k].size());
    for (int i = 0; i < n; ++i) CHECK(sig.sigma_n[k][size_t(i)] == n - 1 - i);
  }
  PlanarSignature idsig = planar_signature(sk, id, {0, 1, 2, 3, 4, 5});
  REQUIRE(idsig.error.empty());
  CHECK(!idsig.compose_with_mirror);
  // nat transf counts form the identity pattern on {id, M}
  CHECK(enumerate_nat_transfs(view, id, id).size() == 1);
  CHECK(enumerate_nat_transfs(view, m, m).size() == 1);
  CHECK(enumerate_nat_transfs(view, id, m).empty());
  CHECK(enumerate_nat_transfs(view, m, id).empty());
}

TEST_CASE("morphism serialization") {
  PlanarTree c2 = standard_tree(StdTree::corolla, 2);
  auto homs = hom_trees(c2, c2, Flavour::symmetric);
  std::set<std::string> keys;
  for (const auto& f : homs) keys.insert(f.key());
  CHECK(keys.size() == homs.size());
  CHECK(omega_mor_to_json(homs[0]).find("edge-map") != std::string::npos);
}
