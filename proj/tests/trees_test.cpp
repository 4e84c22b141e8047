#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dendro/trees.hpp"

using namespace dendro;

namespace {

// Formal-term oracle for the free operad on a tree: terms are built
// inductively from unit symbols and vertex generators, so the count is
// computed without any region arithmetic.  Returns multiset of signatures
// (input colours, output colour).
std::multiset<std::pair<std::vector<int>, int>> formal_term_signatures(
    const PlanarTree& t, Flavour flavour) {
  std::multiset<std::pair<std::vector<int>, int>> sigs;
  // terms_at[e] = list of input-colour tuples of terms with output e, in the
  // term's own planar order
  std::map<int, std::vector<std::vector<int>>> terms_at;
  std::function<void(int)> build = [&](int e) {
    auto& out = terms_at[e];
    out.push_back({e});  // unit
    int v = t.edge(e).above;
    if (v < 0) return;
    for (int in : t.vertex(v).in_edges) build(in);
    // generator applied to sub-terms
    std::vector<std::vector<std::vector<int>>> pools;
    for (int in : t.vertex(v).in_edges) pools.push_back(terms_at[in]);
    std::vector<size_t> idx(pools.size(), 0);
    for (;;) {
      std::vector<int> ins;
      for (size_t i = 0; i < pools.size(); ++i) {
        const auto& sub = pools[i][idx[i]];
        ins.insert(ins.end(), sub.begin(), sub.end());
      }
      out.push_back(ins);
      size_t i = pools.size();
      bool done = pools.empty();
      while (i > 0) {
        --i;
        if (++idx[i] < pools[i].size()) break;
        idx[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  };
  build(PlanarTree::root);
  for (const auto& [e, terms] : terms_at) {
    for (const auto& ins : terms) {
      if (flavour == Flavour::planar) {
        sigs.insert({ins, e});
      } else {
        for (const auto& p : all_permutations(int(ins.size()))) {
          std::vector<int> permuted(ins.size());
          for (size_t i = 0; i < ins.size(); ++i)
            permuted[i] = ins[size_t(p[i])];
          sigs.insert({permuted, e});
        }
      }
    }
  }
  return sigs;
}

PlanarTree replanarize(const PlanarTree& t, std::mt19937& rng) {
  if (t.is_eta()) return t;
  auto cs = t.children();
  std::shuffle(cs.begin(), cs.end(), rng);
  for (auto& c : cs) c = replanarize(c, rng);
  return PlanarTree::make_vertex(cs);
}

}  // namespace

TEST_CASE("tree literal grammar") {
  CHECK(parse_tree("η").is_eta());
  CHECK(parse_tree("e").is_eta());
  CHECK(parse_tree("((η η) η)").render(true) == "((e e) e)");
  PlanarTree t = parse_tree("(e ())");
  CHECK(t.n_vertices() == 2);
  CHECK(t.n_edges() == 3);
  CHECK(t.render() == "(η ())");
  CHECK_THROWS_AS(parse_tree("((e)"), ParseError);
  CHECK_THROWS_AS(parse_tree("x"), ParseError);
  CHECK_THROWS_AS(parse_tree("e e"), ParseError);
  try {
    parse_tree("(e x)");
  } catch (const ParseError& err) {
    CHECK(err.pos == 3);
  }
}

TEST_CASE("grammar round trip on generated trees") {
  for (const auto& t : enumerate_trees(3, 3, false)) {
    CHECK(parse_tree(t.render()) == t);
    CHECK(parse_tree(t.render(true)) == t);
  }
}

TEST_CASE("standard trees") {
  CHECK(standard_tree(StdTree::corolla, 2).render(true) == "(e e)");
  CHECK(standard_tree(StdTree::left_comb, 2) ==
        standard_tree(StdTree::corolla, 2));
  CHECK(standard_tree(StdTree::left_comb, 3).render(true) == "((e e) e)");
  CHECK(standard_tree(StdTree::corolla, 0).render(true) == "()");
  CHECK_THROWS(standard_tree(StdTree::corolla, -1));
  CHECK_THROWS(standard_tree(StdTree::left_comb, 1));
}

TEST_CASE("canonical form identifies isomorphic trees") {
  PlanarTree a = parse_tree("((e e) e)");
  PlanarTree b = parse_tree("(e (e e))");
  CHECK(canonical_form(a) == canonical_form(b));
  PlanarTree c3 = standard_tree(StdTree::corolla, 3);
  CHECK(canonical_form(c3) == c3);

  std::mt19937 rng(7);
  for (const auto& t : enumerate_trees(3, 3, false)) {
    PlanarTree ct = canonical_form(t);
    CHECK(canonical_form(ct) == ct);  // idempotent
    for (int i = 0; i < 5; ++i)
      CHECK(canonical_form(replanarize(t, rng)) == ct);
  }
}

TEST_CASE("mirror is an involution preserving the iso class") {
  PlanarTree b3 = standard_tree(StdTree::left_comb, 3);
  CHECK(mirror_tree(b3).render(true) == "(e (e e))");
  for (const auto& t : enumerate_trees(4, 3, false)) {
    CHECK(mirror_tree(mirror_tree(t)) == t);
    CHECK(canonical_form(mirror_tree(t)) == canonical_form(t));
  }
  PlanarTree c4 = standard_tree(StdTree::corolla, 4);
  CHECK(mirror_tree(c4) == c4);
}

TEST_CASE("mirror edge map is a bijection matching structure") {
  PlanarTree b3 = standard_tree(StdTree::left_comb, 3);
  auto m = mirror_edge_map(b3);
  std::set<int> image(m.begin(), m.end());
  CHECK(int(image.size()) == b3.n_edges());
  CHECK(m[0] == 0);  // root fixed
}

TEST_CASE("graft") {
  PlanarTree c2 = standard_tree(StdTree::corolla, 2);
  auto leaves = c2.leaf_edges();
  REQUIRE(leaves.size() == 2);
  CHECK(graft(c2, leaves[0], c2) == standard_tree(StdTree::left_comb, 3));
  CHECK(graft(c2, leaves[1], PlanarTree()) == c2);
  CHECK(graft(c2, leaves[1], standard_tree(StdTree::corolla, 0)) ==
        parse_tree("(e ())"));
  CHECK_THROWS(graft(c2, PlanarTree::root, c2));

  // grafting at disjoint leaves commutes (leaves tracked by planar position)
  PlanarTree s1 = parse_tree("(e e)");
  PlanarTree s2 = parse_tree("((e) e)");
  PlanarTree base = standard_tree(StdTree::corolla, 3);
  auto lv = base.leaf_edges();
  PlanarTree x1 = graft(base, lv[2], s2);
  PlanarTree x = graft(x1, x1.leaf_edges()[0], s1);
  PlanarTree y1 = graft(base, lv[0], s1);
  PlanarTree y = graft(y1, y1.leaf_edges().back(), s2);
  CHECK(x == y);
}

TEST_CASE("tree automorphisms") {
  CHECK(tree_automorphisms(PlanarTree()).size() == 1);
  CHECK(tree_automorphisms(canonical_form(parse_tree("(e e)"))).size() == 2);
  CHECK(tree_automorphisms(canonical_form(standard_tree(StdTree::left_comb, 3)))
            .size() == 2);
  for (int n = 0; n <= 4; ++n) {
    auto auts = tree_automorphisms(standard_tree(StdTree::corolla, n));
    int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(int(auts.size()) == fact);
    // closed under composition and inverse
    std::set<std::vector<int>> all(auts.begin(), auts.end());
    for (const auto& a : auts) {
      CHECK(all.count(invert_perm(a)) == 1);
      for (const auto& b : auts) CHECK(all.count(compose_perms(a, b)) == 1);
    }
  }
  auto t = canonical_form(parse_tree("((e e) (e e))"));
  CHECK(tree_automorphisms(t).size() == 8);
}

TEST_CASE("free operad operations by region enumeration") {
  CHECK(operations_of_free_operad(PlanarTree(), Flavour::symmetric).size() ==
        1);
  PlanarTree c2 = standard_tree(StdTree::corolla, 2);
  auto sym = operations_of_free_operad(c2, Flavour::symmetric);
  CHECK(sym.size() == 5);  // 3 identities + 2 leaf orderings
  PlanarTree b3 = standard_tree(StdTree::left_comb, 3);
  auto pl = operations_of_free_operad(b3, Flavour::planar);
  CHECK(pl.size() == 8);  // 5 identities + 3 regions

  for (int n = 0; n <= 4; ++n) {
    PlanarTree cn = standard_tree(StdTree::corolla, n);
    int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(int(operations_of_free_operad(cn, Flavour::symmetric).size()) ==
          n + 1 + fact);
    CHECK(int(operations_of_free_operad(cn, Flavour::planar).size()) ==
          n + 1 + 1);
  }
}

TEST_CASE("region model agrees with the formal-term oracle") {
  for (const auto& t : enumerate_trees(3, 2, false)) {
    for (Flavour f : {Flavour::symmetric, Flavour::planar}) {
      auto ops = operations_of_free_operad(t, f);
      std::multiset<std::pair<std::vector<int>, int>> got;
      for (const auto& op : ops) got.insert({op.leaves, op.root_edge});
      CHECK(got == formal_term_signatures(t, f));
    }
  }
}

TEST_CASE("subtree op algebra") {
  PlanarTree b3 = standard_tree(StdTree::left_comb, 3);
  // bottom vertex is 0, upper vertex is 1 in preorder
  SubtreeOp bottom = op_generator(b3, 0);
  SubtreeOp top = op_generator(b3, 1);
  CHECK(bottom.leaves == std::vector<int>{1, 4});
  CHECK(top.leaves == std::vector<int>{2, 3});
  SubtreeOp whole = op_gamma(bottom, {top, op_identity(4)});
  CHECK(whole.leaves == std::vector<int>{2, 3, 4});
  CHECK(whole.vmask == 3);
  // unit laws
  CHECK(op_gamma(op_identity(0), {bottom}) == bottom);
  CHECK(op_gamma(bottom, {op_identity(1), op_identity(4)}) == bottom);
  // the symmetric action is a right action
  auto perms = all_permutations(3);
  for (const auto& p : perms)
    for (const auto& q : perms)
      CHECK(op_sigma(op_sigma(whole, p), q) ==
            op_sigma(whole, compose_perms(p, q)));
  CHECK_THROWS(op_gamma(bottom, {op_identity(4), op_identity(1)}));
}

TEST_CASE("tree enumeration") {
  auto canon = enumerate_trees(3, 2, true);
  CHECK(canon.size() == 28);  // 1 + 3 + 6 + 18 by vertex count
  auto planar = enumerate_trees(3, 2, false);
  for (const auto& t : canon) CHECK(is_canonical(t));
  CHECK(std::is_sorted(canon.begin(), canon.end(),
                       [](auto& a, auto& b) { return a < b; }));
  CHECK(planar.size() >= canon.size());
}
