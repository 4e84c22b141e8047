#include <doctest.h>

#include <set>

#include "dendro/segal.hpp"

using namespace dendro;

namespace {

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

// the free category on a -> b -> c
FinCategory path_category() {
  FinCategory c;
  c.objects = {"a", "b", "c"};
  c.arrows = {{0, 0, "1a"}, {1, 1, "1b"}, {2, 2, "1c"},
              {0, 1, "f"},  {1, 2, "g"},  {0, 2, "gf"}};
  c.ids = {0, 1, 2};
  for (int i = 0; i < 3; ++i)
    for (size_t a = 0; a < c.arrows.size(); ++a) {
      if (c.arrows[a].src == i) c.comp[{int(a), c.ids[size_t(i)]}] = int(a);
      if (c.arrows[a].tgt == i) c.comp[{c.ids[size_t(i)], int(a)}] = int(a);
    }
  c.comp[{4, 3}] = 5;  // g . f
  return c;
}

}  // namespace

TEST_CASE("operad nerves are functorial and Segal") {
  for (Flavour fl : {Flavour::symmetric, Flavour::planar}) {
    OmegaSkeleton sk = nerve_skeleton(fl);
    auto view = sk.view();
    std::vector<FinOperad> corpus{
        eta_operad(fl), j_operad(fl),
        free_operad(standard_tree(StdTree::corolla, 2), fl),
        free_operad(parse_tree("(e ())"), fl)};
    for (const auto& p : corpus) {
      FinitePresheaf X = nerve_presheaf(p, sk);
      CHECK(validate_presheaf(view, X).empty());
      for (int o = 0; o < sk.n_objects(); ++o) {
        auto rep = segal_check_tree(sk, X, o);
        REQUIRE(rep.applicable);
        CHECK(rep.bijective);
      }
    }
  }
}

TEST_CASE("eta nerve values: one on linear trees, zero otherwise") {
  OmegaSkeleton sk = nerve_skeleton(Flavour::symmetric);
  FinitePresheaf X = nerve_presheaf(eta_operad(Flavour::symmetric), sk);
  for (int o = 0; o < sk.n_objects(); ++o) {
    const PlanarTree& t = sk.object(o);
    bool linear = true;
    for (int v = 0; v < t.n_vertices(); ++v)
      if (t.arity(v) != 1) linear = false;
    CHECK(X.card[size_t(o)] == (linear ? 1 : 0));
  }
}

TEST_CASE("free C2 nerve values on the small skeleton") {
  OmegaSkeleton sk = nerve_skeleton(Flavour::symmetric);
  FinOperad c2 = free_operad(standard_tree(StdTree::corolla, 2),
                             Flavour::symmetric);
  FinitePresheaf X = nerve_presheaf(c2, sk);
  CHECK(X.card[size_t(sk.find_object(PlanarTree()))] == 3);
  CHECK(X.card[size_t(sk.find_object(standard_tree(StdTree::corolla, 2)))] ==
        2);
}

namespace {

// Removes an element together with everything that maps onto it under some
// action, so that the complement is again a presheaf.
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
  // re-index the survivors
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

}  // namespace

TEST_CASE("segal failure witnesses: deletion and ghost") {
  OmegaSkeleton sk = nerve_skeleton(Flavour::symmetric);
  auto view = sk.view();
  int l2 = sk.find_object(parse_tree("((e))"));
  REQUIRE(l2 >= 0);

  // J has nerve values 2^(number of colours) on linear trees
  FinitePresheaf X = nerve_presheaf(j_operad(), sk);
  REQUIRE(X.card[size_t(l2)] == 8);
  REQUIRE(segal_check_tree(sk, X, l2).bijective);

  // choose an element that is not hit by any degeneracy: its two unary
  // components both cross between the objects of the groupoid
  int eta = sk.find_object(PlanarTree());
  int c1 = sk.find_object(standard_tree(StdTree::corolla, 1));
  REQUIRE(eta >= 0);
  REQUIRE(c1 >= 0);
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
  REQUIRE(victim >= 0);
  FinitePresheaf Y = delete_upward(view, X, l2, victim);
  REQUIRE(validate_presheaf(view, Y).empty());
  CHECK(Y.card[size_t(l2)] == 7);
  CHECK(Y.card[size_t(eta)] == X.card[size_t(eta)]);  // spine values survive
  CHECK(Y.card[size_t(c1)] == X.card[size_t(c1)]);
  auto rep = segal_check_tree(sk, Y, l2);
  REQUIRE(rep.applicable);
  CHECK(!rep.bijective);
  CHECK(rep.detail.find("without preimage") != std::string::npos);

  // ghost duplicate: behaves like element 0 under every action except that
  // the identity must fix it; injectivity of the Segal map fails
  {
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
    REQUIRE(validate_presheaf(view, Z).empty());
    auto rep2 = segal_check_tree(sk, Z, l2);
    REQUIRE(rep2.applicable);
    CHECK(!rep2.bijective);
  }
}

TEST_CASE("category nerve over tables") {
  ThetaSkeleton sk(2, enumerate_tables(2, 2, 2));
  auto view = sk.view();
  FinCategory c = path_category();
  REQUIRE(validate_category(c).empty());
  FinitePresheaf X = cat_nerve_presheaf(c, sk);
  CHECK(validate_presheaf(view, X).empty());
  int two = sk.find_object(parse_table("1 1 / 0", 2));
  REQUIRE(two >= 0);
  CHECK(X.card[size_t(two)] == 10);  // composable pairs, identities included
  for (int o = 0; o < sk.n_objects(); ++o) {
    auto rep = segal_check_table(sk, X, o);
    REQUIRE(rep.applicable);
    CHECK(rep.bijective);
  }
  // deleting a strictly composable pair breaks the Segal condition there;
  // the deletion is propagated upwards so that a presheaf remains
  int d1 = sk.find_object(disk_table(1, 2));
  REQUIRE(d1 >= 0);
  int victim = -1;
  for (int x = 0; x < X.card[size_t(two)]; ++x) {
    bool hit = false;
    for (int f = 0; f < view.hom_size(two, d1); ++f) {
      const auto& table = X.action(two, d1, f);
      for (int y = 0; y < X.card[size_t(d1)]; ++y)
        if (table[size_t(y)] == x) hit = true;
    }
    for (int f = 0; f < view.hom_size(two, two); ++f) {
      if (f == view.id_index(two)) continue;
      const auto& table = X.action(two, two, f);
      for (int y = 0; y < X.card[size_t(two)]; ++y)
        if (table[size_t(y)] == x) hit = true;
    }
    if (!hit) {
      victim = x;
      break;
    }
  }
  REQUIRE(victim >= 0);
  FinitePresheaf Y = delete_upward(view, X, two, victim);
  REQUIRE(validate_presheaf(view, Y).empty());
  CHECK(Y.card[size_t(d1)] == X.card[size_t(d1)]);  // disk values survive
  auto rep = segal_check_table(sk, Y, two);
  REQUIRE(rep.applicable);
  CHECK(!rep.bijective);
  CHECK(rep.detail.find("without preimage") != std::string::npos);
}

TEST_CASE("segal at corollas and single columns always passes") {
  OmegaSkeleton sk = nerve_skeleton(Flavour::symmetric);
  FinOperad j = j_operad();
  FinitePresheaf X = nerve_presheaf(j, sk);
  for (int n : {0, 1, 2}) {
    int o = sk.find_object(standard_tree(StdTree::corolla, n));
    REQUIRE(o >= 0);
    CHECK(segal_check_tree(sk, X, o).bijective);
  }
  ThetaSkeleton tk(2, enumerate_tables(2, 2, 2));
  FinitePresheaf Y = cat_nerve_presheaf(path_category(), tk);
  for (int k = 0; k <= 2; ++k) {
    int o = tk.find_object(disk_table(k, 2));
    REQUIRE(o >= 0);
    CHECK(segal_check_table(tk, Y, o).bijective);
  }
}

TEST_CASE("normality") {
  // skeleton {eta, C2} and the representable at C2
  std::vector<PlanarTree> objs{PlanarTree(),
                               standard_tree(StdTree::corolla, 2)};
  OmegaSkeleton sk(Flavour::symmetric, objs);
  auto view = sk.view();
  int eta = 0, c2 = 1;
  // representable Y = hom(-, C2): values hom(eta, C2) = 3, hom(C2, C2) = 2
  FinitePresheaf Y;
  Y.card = {int(sk.hom(eta, c2).size()), int(sk.hom(c2, c2).size())};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int f = 0; f < view.hom_size(s, t); ++f) {
        std::vector<int> table;
        for (int y = 0; y < Y.card[size_t(t)]; ++y) {
          OmegaMor comp = omega_compose(sk.hom(t, c2)[size_t(y)],
                                        sk.hom(s, t)[size_t(f)]);
          table.push_back(sk.find_mor(s, c2, comp));
        }
        Y.act[{s, t, f}] = std::move(table);
      }
  REQUIRE(validate_presheaf(view, Y).empty());

  // colours-only subpresheaf: everything at eta, nothing at C2
  FinitePresheaf X;
  X.card = {Y.card[0], 0};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int f = 0; f < view.hom_size(s, t); ++f) {
        std::vector<int> table;
        if (t == 0)
          for (int y = 0; y < X.card[0]; ++y)
            table.push_back(Y.action(s, t, f)[size_t(y)]);
        X.act[{s, t, f}] = std::move(table);
      }
  PresheafMono m;
  m.sub = X;
  m.total = Y;
  m.inj = {{0, 1, 2}, {}};
  REQUIRE(validate_mono(view, m).empty());
  auto rep = normality_check(sk, m);
  CHECK(rep.normal);  // the two binary elements form a free orbit

  // quotient identifying the two binary elements (and hence the two leaf
  // colours): the class at C2 is fixed by the swap
  FinitePresheaf Q;
  Q.card = {2, 1};  // colours {root, leaf-class}; one binary class
  Q.act[{0, 0, 0}] = {0, 1};                      // identity at eta
  Q.act[{0, 1, 0}] = {0};                         // root map
  Q.act[{0, 1, 1}] = {1};                         // first leaf
  Q.act[{0, 1, 2}] = {1};                         // second leaf
  Q.act[{1, 0, 0}] = {};                          // no maps C2 -> eta
  for (int f = 0; f < view.hom_size(1, 1); ++f)   // both automorphisms
    Q.act[{1, 1, f}] = {0};
  REQUIRE(validate_presheaf(view, Q).empty());
  FinitePresheaf Xq;  // colours-only subpresheaf of the quotient
  Xq.card = {2, 0};
  Xq.act[{0, 0, 0}] = {0, 1};
  Xq.act[{0, 1, 0}] = {};
  Xq.act[{0, 1, 1}] = {};
  Xq.act[{0, 1, 2}] = {};
  Xq.act[{1, 0, 0}] = {};
  for (int f = 0; f < view.hom_size(1, 1); ++f) Xq.act[{1, 1, f}] = {};
  PresheafMono mq;
  mq.sub = Xq;
  mq.total = Q;
  mq.inj = {{0, 1}, {}};
  REQUIRE(validate_mono(view, mq).empty());
  auto rep2 = normality_check(sk, mq);
  CHECK(!rep2.normal);
  CHECK(!rep2.witness.empty());

  // planar monos are always normal
  OmegaSkeleton psk(Flavour::planar, objs);
  FinOperad c2p = free_operad(standard_tree(StdTree::corolla, 2),
                              Flavour::planar);
  FinitePresheaf P = nerve_presheaf(c2p, psk);
  PresheafMono pm;
  pm.sub = P;
  pm.total = P;
  for (int i = 0; i < 2; ++i) {
    std::vector<int> inj;
    for (int x = 0; x < P.card[size_t(i)]; ++x) inj.push_back(x);
    pm.inj.push_back(inj);
  }
  CHECK(normality_check(psk, pm).normal);
}

TEST_CASE("presheaf json round trip") {
  OmegaSkeleton sk = nerve_skeleton(Flavour::symmetric);
  FinitePresheaf X = nerve_presheaf(j_operad(), sk);
  std::string text = presheaf_to_json(sk, X);
  auto [sk2, X2] = presheaf_from_json(text);
  CHECK(sk2.n_objects() == sk.n_objects());
  CHECK(X2.card == X.card);
  CHECK(X2.act == X.act);
  CHECK_THROWS(presheaf_from_json("{\"schema\":\"bogus\"}"));
}
