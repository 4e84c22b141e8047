#include <doctest.h>

#include <set>

#include "dendro/ncat2.hpp"
#include "dendro/theta.hpp"

using namespace dendro;

TEST_CASE("table validation") {
  DimTable t = parse_table("2 2 2 3 2 1 / 1 0 1 1 0", 3);
  CHECK(t.height() == 3);
  CHECK(t.columns() == 6);
  CHECK_THROWS(parse_table("2 2 2 3 2 1 / 1 0 1 1 0", 2));  // height > n
  CHECK(parse_table("1", 3).columns() == 1);
  CHECK(parse_table("1 /", 3).columns() == 1);
  auto err = table_violation({1, 2}, {1}, 3);
  REQUIRE(err.has_value());
  CHECK(err->index == 1);
  CHECK_THROWS(parse_table("1 2 / 1", 3));
  CHECK_THROWS(parse_table("", 3));
}

TEST_CASE("level tree round trip") {
  // the running example: leaves at depths 2 2 2 3 2 1, meets 1 0 1 1 0
  DimTable t = parse_table("2 2 2 3 2 1 / 1 0 1 1 0", 3);
  PlanarTree lt = table_leveltree(t);
  auto leaves = lt.leaf_edges();
  CHECK(leaves.size() == 6);
  CHECK(leveltree_table(lt, 3) == t);
  // a single column gives a linear path
  CHECK(table_leveltree(parse_table("3", 3)).render(true) == "(((e)))");
  CHECK(table_leveltree(parse_table("1 1 / 0", 3)).render(true) == "(e e)");
  // exhaustive round trip at height <= 3, <= 4 columns
  for (const auto& table : enumerate_tables(4, 3, 3))
    CHECK(leveltree_table(table_leveltree(table), 3) == table);
  // nullary vertices are not level trees
  CHECK_THROWS(leveltree_table(parse_tree("(e ())"), 3));
}

TEST_CASE("hom counts against the linear oracle") {
  // tables of height 1 with m columns behave like chains
  auto linear = [](int m) {
    std::vector<int> top(size_t(m), 1), bot(size_t(m) - 1, 0);
    return validate_table(top, bot, 2);
  };
  for (int m = 1; m <= 5; ++m)
    for (int p = 1; p <= 5; ++p)
      CHECK(hom_tables(linear(m), linear(p)).size() ==
            monotone_map_count(m, p));
  // the terminal object
  for (const auto& t : enumerate_tables(3, 2, 2))
    CHECK(hom_tables(t, disk_table(0, 2)).size() == 1);
}

TEST_CASE("hom counts against the strict 2-functor oracle") {
  auto tables = enumerate_tables(2, 2, 2);
  CHECK(tables.size() == 8);
  DimTable d2 = disk_table(2, 2);
  CHECK(hom_tables(d2, d2).size() == 5);
  CHECK(strict_two_functor_count(d2, d2) == 5);
  for (const auto& s : tables)
    for (const auto& t : tables)
      CHECK(hom_tables(s, t).size() == strict_two_functor_count(s, t));
}

TEST_CASE("composition and identities") {
  auto tables = enumerate_tables(2, 2, 2);
  for (const auto& s : tables) {
    ThetaMor id = theta_identity(s);
    for (const auto& t : tables)
      for (const auto& f : hom_tables(s, t)) {
        CHECK(theta_compose(f, id) == f);
        CHECK(theta_compose(theta_identity(t), f) == f);
      }
  }
  // associativity on a small sample
  DimTable a = parse_table("1 1 / 0", 2), b = parse_table("2 1 / 0", 2);
  for (const auto& f : hom_tables(a, a))
    for (const auto& g : hom_tables(a, b))
      for (const auto& h : hom_tables(b, b))
        CHECK(theta_compose(h, theta_compose(g, f)) ==
              theta_compose(theta_compose(h, g), f));
}

TEST_CASE("disk monos") {
  for (int k = 1; k <= 3; ++k)
    for (int kp = 0; kp < k; ++kp) {
      auto ms = disk_monos(kp, k, 3);
      CHECK(ms.size() == 2);
      CHECK(!(ms[0] == ms[1]));
      for (const auto& m : ms)
        CHECK(theta_is_mono(disk_table(kp, 3), m, disk_table(k, 3)));
      // they are the only monos
      int count = 0;
      for (const auto& f : hom_tables(disk_table(kp, 3), disk_table(k, 3)))
        if (theta_is_mono(disk_table(kp, 3), f, disk_table(k, 3))) ++count;
      CHECK(count == 2);
    }
  CHECK(disk_monos(2, 2, 3).size() == 1);
  // composites: the two maps D1 -> D3 factor through D2
  auto lo = disk_mono(1, 2, false), hi = disk_mono(1, 2, true);
  auto lo2 = disk_mono(2, 3, false), hi2 = disk_mono(2, 3, true);
  CHECK(theta_compose(lo2, lo) == disk_mono(1, 3, false));
  CHECK(theta_compose(hi2, hi) == disk_mono(1, 3, true));
}

TEST_CASE("active and inert") {
  // endpoints of the interval: the map (0) -> (1) hitting the top
  DimTable d0 = disk_table(0, 2), d1 = disk_table(1, 2);
  auto homs = hom_tables(d0, d1);
  REQUIRE(homs.size() == 2);
  for (const auto& f : homs) {
    auto fac = factor_active_inert(d0, f, d1);
    CHECK(theta_is_active(fac.active, d0, fac.middle));
    CHECK(theta_is_inert(fac.inert));
    CHECK(theta_compose(fac.inert, fac.active) == f);
    CHECK(fac.middle == d0);  // the image is a point
  }
  // identities factor trivially
  for (const auto& t : enumerate_tables(2, 2, 2)) {
    auto fac = factor_active_inert(t, theta_identity(t), t);
    CHECK(fac.middle == t);
    CHECK(fac.active == theta_identity(t));
    CHECK(fac.inert == theta_identity(t));
  }
  // an endpoint-preserving surjection is its own active part
  DimTable two = parse_table("1 1 / 0", 1);
  for (const auto& f : hom_tables(two, d1)) {
    if (f.top.front() != 0 || f.top.back() != 1) continue;
    auto fac = factor_active_inert(two, f, d1);
    CHECK(fac.middle == d1);
    CHECK(fac.active == f);
    CHECK(theta_is_inert(fac.inert));
  }
  // factorization against all morphisms of a small pool, with uniqueness
  auto pool = enumerate_tables(2, 2, 2);
  for (const auto& s : pool)
    for (const auto& t : pool)
      for (const auto& f : hom_tables(s, t)) {
        auto fac = factor_active_inert(s, f, t);
        CHECK(theta_compose(fac.inert, fac.active) == f);
        CHECK(theta_is_active(fac.active, s, fac.middle));
        CHECK(theta_is_inert(fac.inert));
        size_t count = 0;
        for (const auto& mid : pool) {
          for (const auto& a : hom_tables(s, mid)) {
            if (!theta_is_active(a, s, mid)) continue;
            for (const auto& i : hom_tables(mid, t)) {
              if (!theta_is_inert(i)) continue;
              if (theta_compose(i, a) == f) ++count;
            }
          }
        }
        CHECK(count == 1);
      }
}

TEST_CASE("orientation reversal on objects") {
  // reversal of the top blocks: the asymmetric table moves
  DimTable t21 = parse_table("2 1 / 0", 2);
  DimTable t12 = parse_table("1 2 / 0", 2);
  CHECK(op_delta_obj({1, 0}, t21) == t12);
  CHECK(op_delta_obj({1, 0}, t12) == t21);
  CHECK(op_delta_obj({0, 1}, t21) == t21);
  // at height <= 2 the inner reversal fixes every table
  for (const auto& t : enumerate_tables(3, 2, 2))
    CHECK(op_delta_obj({0, 1}, t) == t);
  // disks are always fixed
  for (int k = 0; k <= 3; ++k)
    for (int d1 = 0; d1 <= 1; ++d1)
      for (int d2 = 0; d2 <= 1; ++d2)
        for (int d3 = 0; d3 <= 1; ++d3)
          CHECK(op_delta_obj({d1, d2, d3}, disk_table(k, 3)) ==
                disk_table(k, 3));
  // involution per coordinate
  for (const auto& t : enumerate_tables(3, 2, 2)) {
    CHECK(op_delta_obj({1, 0}, op_delta_obj({1, 0}, t)) == t);
    CHECK(op_delta_obj({1, 1}, op_delta_obj({1, 1}, t)) == t);
  }
}

TEST_CASE("no identity-on-objects functor can swap the endpoint monos") {
  // Counting arrows by source and target in the free 2-category on
  // (2 1 / 0): out-degrees and in-degrees differ as multisets, so no
  // relabelling of the three objects can reverse all 1-arrows.
  DimTable t = parse_table("2 1 / 0", 2);
  DimTable d0 = disk_table(0, 2), d1 = disk_table(1, 2);
  auto points = hom_tables(d0, t);
  auto arrows = hom_tables(d1, t);
  REQUIRE(points.size() == 3);
  auto src = disk_mono(0, 1, false), tgt = disk_mono(0, 1, true);
  std::multiset<size_t> out_deg, in_deg;
  for (size_t x = 0; x < points.size(); ++x) {
    size_t outs = 0, ins = 0;
    for (const auto& a : arrows) {
      if (theta_compose(a, src) == points[x]) ++outs;
      if (theta_compose(a, tgt) == points[x]) ++ins;
    }
    out_deg.insert(outs);
    in_deg.insert(ins);
  }
  CHECK(out_deg != in_deg);
}

TEST_CASE("orientation reversal on morphisms") {
  ThetaSkeleton sk = default_theta2_skeleton();
  CHECK(sk.n_objects() == 21);
  // swap of the endpoint monos exactly at the flipped level
  for (int k = 1; k <= 2; ++k) {
    DimTable lo = disk_table(k - 1, 2), hi = disk_table(k, 2);
    auto s = disk_mono(k - 1, k, false);
    auto t = disk_mono(k - 1, k, true);
    for (int d1 = 0; d1 <= 1; ++d1)
      for (int d2 = 0; d2 <= 1; ++d2) {
        std::vector<int> delta{d1, d2};
        bool swapped = delta[size_t(k) - 1] == 1;
        CHECK(apply_op_delta(delta, s, lo, hi) == (swapped ? t : s));
        CHECK(apply_op_delta(delta, t, lo, hi) == (swapped ? s : t));
      }
  }
  // monoid law and involution on all skeleton morphisms
  std::vector<std::vector<int>> deltas{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (const auto& da : deltas)
    for (const auto& db : deltas) {
      std::vector<int> dab{(da[0] + db[0]) % 2, (da[1] + db[1]) % 2};
      for (int s = 0; s < sk.n_objects(); ++s)
        for (int t = 0; t < sk.n_objects(); ++t)
          for (const auto& f : sk.hom(s, t)) {
            auto one = apply_op_delta(db, f, sk.object(s), sk.object(t));
            auto two = apply_op_delta(da, one, op_delta_obj(db, sk.object(s)),
                                      op_delta_obj(db, sk.object(t)));
            CHECK(two == apply_op_delta(dab, f, sk.object(s), sk.object(t)));
          }
    }
}

TEST_CASE("op_delta functors on the skeleton") {
  // full functor-law validation on the two-column skeleton; the larger
  // default skeleton is exercised by the acceptance suites
  ThetaSkeleton sk(2, enumerate_tables(2, 2, 2));
  auto view = sk.view();
  std::vector<std::vector<int>> deltas{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<FunctorData> fs;
  for (const auto& d : deltas) {
    FunctorData F = build_op_delta(sk, d);
    CHECK(validate_functor(view, F).empty());
    auto ext = delta_of_functor(sk, F);
    REQUIRE(ext.delta.has_value());
    CHECK(*ext.delta == d);
    fs.push_back(std::move(F));
  }
  // composition follows the group law
  for (size_t a = 0; a < deltas.size(); ++a)
    for (size_t b = 0; b < deltas.size(); ++b) {
      std::vector<int> dab{(deltas[a][0] + deltas[b][0]) % 2,
                           (deltas[a][1] + deltas[b][1]) % 2};
      FunctorData comp = compose_functors(view, fs[a], fs[b]);
      FunctorData direct = build_op_delta(sk, dab);
      CHECK(comp.obj == direct.obj);
      CHECK(comp.mor == direct.mor);
    }
  // Kronecker pattern of natural transformations
  for (size_t a = 0; a < deltas.size(); ++a)
    for (size_t b = 0; b < deltas.size(); ++b)
      CHECK(enumerate_nat_transfs(view, fs[a], fs[b]).size() ==
            (a == b ? 1u : 0u));
}

TEST_CASE("spine data") {
  DimTable t = parse_table("1 1 / 0", 2);
  SpineTable sp = spine_table(t);
  CHECK(sp.columns.size() == 2);
  CHECK(sp.glue_left.size() == 1);
  // cocone consistency at every glue, for several tables
  for (const auto& table : enumerate_tables(3, 2, 2)) {
    SpineTable s = spine_table(table);
    for (size_t i = 0; i < s.glue_left.size(); ++i)
      CHECK(theta_compose(s.columns[i], s.glue_left[i]) ==
            theta_compose(s.columns[i + 1], s.glue_right[i]));
    for (const auto& c : s.columns) CHECK(theta_is_inert(c));
  }
  // single column: the inclusion is the identity
  SpineTable sd = spine_table(disk_table(2, 2));
  CHECK(sd.columns.size() == 1);
  CHECK(sd.columns[0] == theta_identity(disk_table(2, 2)));
}

TEST_CASE("disk characterization by subobjects") {
  auto pool = enumerate_tables(3, 3, 3);
  // positive direction: every proper subobject of a disk, over the whole
  // pool, is a lower disk, and each lower disk contributes two monos
  for (int k = 0; k <= 3; ++k) {
    DimTable dk = disk_table(k, 3);
    for (const auto& s : pool) {
      size_t monos = 0;
      for (const auto& f : hom_tables(s, dk))
        if (theta_is_mono(s, f, dk)) ++monos;
      if (s == dk) {
        CHECK(monos == 1);  // the identity only
      } else if (s.columns() == 1 && s.top[0] < k) {
        CHECK(monos == 2);
      } else {
        CHECK(monos == 0);
      }
    }
  }
  // uniqueness: any other table in the pool violates one of the two
  // conditions, already against disk-shaped subobjects
  for (int k = 1; k <= 3; ++k) {
    DimTable dk = disk_table(k, 3);
    for (const auto& cand : pool) {
      bool ok = true;
      for (int l = 0; l <= 3 && ok; ++l) {
        DimTable dl = disk_table(l, 3);
        size_t monos = 0;
        for (const auto& f : hom_tables(dl, cand))
          if (theta_is_mono(dl, f, cand)) ++monos;
        size_t allowed_iso = dl == cand ? 1 : 0;  // the identity is not proper
        if (l < k && monos != 2) ok = false;      // exactly two monos
        if (l >= k && monos != allowed_iso) ok = false;  // no proper high disks
      }
      CHECK(ok == (cand == dk));
    }
  }
}
