#include "dendro/trees.hpp"

#include <algorithm>
#include <functional>

namespace dendro {

std::string flavour_name(Flavour f) {
  return f == Flavour::symmetric ? "symmetric" : "planar";
}

PlanarTree::PlanarTree() { edges_.push_back(Edge{}); }

int PlanarTree::append_subtree(const PlanarTree& s, int below_vertex) {
  int edge_base = int(edges_.size());
  int vert_base = int(verts_.size());
  for (const Edge& e : s.edges_) {
    Edge ne;
    ne.below = e.below < 0 ? below_vertex : e.below + vert_base;
    ne.above = e.above < 0 ? -1 : e.above + vert_base;
    edges_.push_back(ne);
  }
  for (const Vertex& v : s.verts_) {
    Vertex nv;
    nv.out_edge = v.out_edge + edge_base;
    for (int in : v.in_edges) nv.in_edges.push_back(in + edge_base);
    verts_.push_back(nv);
  }
  return edge_base;
}

PlanarTree PlanarTree::make_vertex(const std::vector<PlanarTree>& children) {
  PlanarTree t;
  t.edges_[0].above = 0;
  t.verts_.push_back(Vertex{0, {}});
  // Re-number ids in leftmost depth-first order by rebuilding child by child.
  // append_subtree produces preorder ids because children are appended in
  // planar order and each child is itself preordered.
  for (const PlanarTree& c : children) {
    int root_of_child = t.append_subtree(c, 0);
    t.verts_[0].in_edges.push_back(root_of_child);
  }
  return t;
}

std::vector<int> PlanarTree::leaf_edges() const {
  std::vector<int> out;
  // Preorder ids make the planar left-to-right order equal to id order for
  // leaves of corollas, but not in general; walk the tree explicitly.
  std::vector<int> stack{root};
  // iterative preorder with children pushed right-to-left
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    int v = edges_[size_t(e)].above;
    if (v < 0) {
      out.push_back(e);
    } else {
      const auto& ins = verts_[size_t(v)].in_edges;
      for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

PlanarTree PlanarTree::subtree_at(int e) const {
  int v = edges_[size_t(e)].above;
  if (v < 0) return PlanarTree();
  std::vector<PlanarTree> cs;
  for (int in : verts_[size_t(v)].in_edges) cs.push_back(subtree_at(in));
  return make_vertex(cs);
}

std::vector<PlanarTree> PlanarTree::children() const {
  std::vector<PlanarTree> cs;
  if (is_eta()) return cs;
  for (int in : verts_[0].in_edges) cs.push_back(subtree_at(in));
  return cs;
}

namespace {
void render_rec(const PlanarTree& t, int e, bool ascii, std::string& out) {
  int v = t.edge(e).above;
  if (v < 0) {
    out += ascii ? "e" : "η";
    return;
  }
  out += "(";
  const auto& ins = t.vertex(v).in_edges;
  for (size_t i = 0; i < ins.size(); ++i) {
    if (i) out += " ";
    render_rec(t, ins[i], ascii, out);
  }
  out += ")";
}
}  // namespace

std::string PlanarTree::render(bool ascii) const {
  std::string out;
  render_rec(*this, root, ascii, out);
  return out;
}

bool PlanarTree::operator==(const PlanarTree& o) const {
  if (edges_.size() != o.edges_.size() || verts_.size() != o.verts_.size())
    return false;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].below != o.edges_[i].below ||
        edges_[i].above != o.edges_[i].above)
      return false;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].out_edge != o.verts_[i].out_edge ||
        verts_[i].in_edges != o.verts_[i].in_edges)
      return false;
  return true;
}

bool PlanarTree::operator<(const PlanarTree& o) const {
  if (n_edges() != o.n_edges()) return n_edges() < o.n_edges();
  return render(true) < o.render(true);
}

PlanarTree parse_tree(std::string_view s) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' ||
                              s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  };
  // returns true if an eta token was consumed
  auto try_eta = [&]() -> bool {
    if (pos < s.size() && s[pos] == 'e') {
      ++pos;
      return true;
    }
    // UTF-8 for η is 0xCE 0xB7
    if (pos + 1 < s.size() && (unsigned char)s[pos] == 0xCE &&
        (unsigned char)s[pos + 1] == 0xB7) {
      pos += 2;
      return true;
    }
    return false;
  };
  std::function<PlanarTree()> term = [&]() -> PlanarTree {
    skip_ws();
    if (pos >= s.size()) throw ParseError(pos, "unexpected end of input");
    if (try_eta()) return PlanarTree();
    if (s[pos] == '(') {
      ++pos;
      std::vector<PlanarTree> cs;
      for (;;) {
        skip_ws();
        if (pos >= s.size()) throw ParseError(pos, "missing ')'");
        if (s[pos] == ')') {
          ++pos;
          return PlanarTree::make_vertex(cs);
        }
        cs.push_back(term());
      }
    }
    throw ParseError(pos, "expected 'η', 'e' or '('");
  };
  PlanarTree t = term();
  skip_ws();
  if (pos != s.size()) throw ParseError(pos, "trailing input");
  return t;
}

PlanarTree standard_tree(StdTree kind, int n) {
  switch (kind) {
    case StdTree::eta:
      return PlanarTree();
    case StdTree::corolla: {
      if (n < 0) throw std::invalid_argument("corolla arity must be >= 0");
      std::vector<PlanarTree> cs(static_cast<size_t>(n));
      return PlanarTree::make_vertex(cs);
    }
    case StdTree::left_comb: {
      if (n < 2) throw std::invalid_argument("left comb needs >= 2 leaves");
      PlanarTree t = standard_tree(StdTree::corolla, 2);
      for (int i = 3; i <= n; ++i)
        t = PlanarTree::make_vertex({t, PlanarTree()});
      return t;
    }
  }
  throw std::invalid_argument("unknown standard tree");
}

PlanarTree canonical_form(const PlanarTree& t) {
  if (t.is_eta()) return t;
  std::vector<PlanarTree> cs = t.children();
  for (auto& c : cs) c = canonical_form(c);
  std::sort(cs.begin(), cs.end(), [](const PlanarTree& a, const PlanarTree& b) {
    return a.render(true) < b.render(true);
  });
  return PlanarTree::make_vertex(cs);
}

bool is_canonical(const PlanarTree& t) { return t == canonical_form(t); }

PlanarTree mirror_tree(const PlanarTree& t) {
  if (t.is_eta()) return t;
  std::vector<PlanarTree> cs = t.children();
  std::reverse(cs.begin(), cs.end());
  for (auto& c : cs) c = mirror_tree(c);
  return PlanarTree::make_vertex(cs);
}

namespace {
void mirror_map_rec(const PlanarTree& t, int e, const PlanarTree& m, int me,
                    std::vector<int>& out) {
  out[size_t(e)] = me;
  int v = t.edge(e).above;
  if (v < 0) return;
  int mv = m.edge(me).above;
  const auto& ins = t.vertex(v).in_edges;
  const auto& mins = m.vertex(mv).in_edges;
  for (size_t i = 0; i < ins.size(); ++i)
    mirror_map_rec(t, ins[i], m, mins[ins.size() - 1 - i], out);
}
}  // namespace

std::vector<int> mirror_edge_map(const PlanarTree& t) {
  PlanarTree m = mirror_tree(t);
  std::vector<int> out(size_t(t.n_edges()), -1);
  mirror_map_rec(t, PlanarTree::root, m, PlanarTree::root, out);
  return out;
}

namespace {
PlanarTree graft_rec(const PlanarTree& t, int e, int leaf,
                     const PlanarTree& s) {
  if (e == leaf) return s;
  int v = t.edge(e).above;
  if (v < 0) return PlanarTree();
  std::vector<PlanarTree> cs;
  for (int in : t.vertex(v).in_edges) cs.push_back(graft_rec(t, in, leaf, s));
  return PlanarTree::make_vertex(cs);
}
}  // namespace

PlanarTree graft(const PlanarTree& t, int leaf, const PlanarTree& s) {
  if (leaf < 0 || leaf >= t.n_edges() || !t.is_leaf_edge(leaf))
    throw std::invalid_argument("graft target is not a leaf edge");
  return graft_rec(t, PlanarTree::root, leaf, s);
}

namespace {
// Automorphisms of the subtree rooted at edge e, as maps defined on the
// edge ids of that subtree (entries outside it untouched).
void collect_autos(const PlanarTree& t, int e,
                   std::vector<std::vector<int>>& acc) {
  // acc holds partial permutations; refine in place
  int v = t.edge(e).above;
  if (v < 0) return;
  const auto& ins = t.vertex(v).in_edges;
  // group consecutive children with equal encodings (input is canonical, so
  // equal children are structurally identical and adjacent)
  std::vector<std::string> enc;
  std::vector<PlanarTree> subs;
  for (int in : ins) {
    subs.push_back(t.subtree_at(in));
    enc.push_back(subs.back().render(true));
  }
  size_t i = 0;
  while (i < ins.size()) {
    size_t j = i;
    while (j < ins.size() && enc[j] == enc[i]) ++j;
    // children i..j-1 are interchangeable
    int block = int(j - i);
    // per-child automorphisms of the common shape
    std::vector<std::vector<int>> child_autos;  // local edge maps
    {
      std::vector<std::vector<int>> sub_acc{
          std::vector<int>(size_t(subs[i].n_edges()))};
      for (int k = 0; k < subs[i].n_edges(); ++k) sub_acc[0][size_t(k)] = k;
      collect_autos(subs[i], PlanarTree::root, sub_acc);
      child_autos = std::move(sub_acc);
    }
    // all assignments: permutation of the block x per-slot automorphism
    std::vector<std::vector<int>> perms = all_permutations(block);
    std::vector<std::vector<int>> next;
    for (const auto& base : acc) {
      // enumerate (perm, tuple of child autos)
      std::vector<int> choice(size_t(block), 0);
      for (const auto& pi : perms) {
        std::fill(choice.begin(), choice.end(), 0);
        for (;;) {
          std::vector<int> cur = base;
          for (int b = 0; b < block; ++b) {
            const auto& am = child_autos[size_t(choice[size_t(b)])];
            int src_off = ins[i + size_t(b)];
            int dst_off = ins[i + size_t(pi[size_t(b)])];
            int ne = subs[i].n_edges();
            for (int k = 0; k < ne; ++k)
              cur[size_t(src_off + k)] = dst_off + am[size_t(k)];
          }
          next.push_back(std::move(cur));
          int b = block - 1;
          while (b >= 0) {
            ++choice[size_t(b)];
            if (choice[size_t(b)] < int(child_autos.size())) break;
            choice[size_t(b)] = 0;
            --b;
          }
          if (b < 0) break;
        }
      }
    }
    acc = std::move(next);
    i = j;
  }
}
}  // namespace

std::vector<std::vector<int>> tree_automorphisms(const PlanarTree& t) {
  if (!is_canonical(t))
    throw std::invalid_argument("tree_automorphisms needs a canonical tree");
  std::vector<std::vector<int>> acc{std::vector<int>(size_t(t.n_edges()))};
  for (int k = 0; k < t.n_edges(); ++k) acc[0][size_t(k)] = k;
  collect_autos(t, PlanarTree::root, acc);
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

bool SubtreeOp::operator<(const SubtreeOp& o) const {
  if (root_edge != o.root_edge) return root_edge < o.root_edge;
  if (vmask != o.vmask) return vmask < o.vmask;
  return leaves < o.leaves;
}

SubtreeOp op_identity(int edge) { return SubtreeOp{edge, 0, {edge}}; }

SubtreeOp op_generator(const PlanarTree& t, int v) {
  SubtreeOp op;
  op.root_edge = t.vertex(v).out_edge;
  op.vmask = uint64_t(1) << v;
  op.leaves = t.vertex(v).in_edges;
  return op;
}

std::vector<int> planar_region_leaves(const PlanarTree& t, int root_edge,
                                      uint64_t vmask) {
  std::vector<int> out;
  std::vector<int> stack{root_edge};
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    int v = t.edge(e).above;
    if (v >= 0 && (vmask >> v) & 1) {
      const auto& ins = t.vertex(v).in_edges;
      for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.push_back(*it);
    } else {
      out.push_back(e);
    }
  }
  return out;
}

SubtreeOp op_gamma(const SubtreeOp& p, const std::vector<SubtreeOp>& args) {
  if (int(args.size()) != p.op_arity())
    throw std::invalid_argument("op_gamma: arity mismatch");
  SubtreeOp r;
  r.root_edge = p.root_edge;
  r.vmask = p.vmask;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i].root_edge != p.leaves[i])
      throw std::invalid_argument("op_gamma: argument boundary mismatch");
    r.vmask |= args[i].vmask;
    r.leaves.insert(r.leaves.end(), args[i].leaves.begin(),
                    args[i].leaves.end());
  }
  return r;
}

SubtreeOp op_sigma(const SubtreeOp& p, const std::vector<int>& perm) {
  if (int(perm.size()) != p.op_arity())
    throw std::invalid_argument("op_sigma: arity mismatch");
  SubtreeOp r = p;
  for (size_t i = 0; i < perm.size(); ++i)
    r.leaves[i] = p.leaves[size_t(perm[i])];
  return r;
}

namespace {
// regions containing the vertex above e (if any), by planar recursion
void regions_above(const PlanarTree& t, int e,
                   std::vector<uint64_t>& out) {
  out.clear();
  int v = t.edge(e).above;
  if (v < 0) return;
  std::vector<std::vector<uint64_t>> per_input;  // options per input edge
  for (int in : t.vertex(v).in_edges) {
    std::vector<uint64_t> opts{0};  // cut at this edge
    std::vector<uint64_t> deeper;
    regions_above(t, in, deeper);
    for (uint64_t m : deeper) opts.push_back(m);
    per_input.push_back(std::move(opts));
  }
  std::vector<size_t> idx(per_input.size(), 0);
  for (;;) {
    uint64_t m = uint64_t(1) << v;
    for (size_t i = 0; i < per_input.size(); ++i) m |= per_input[i][idx[i]];
    out.push_back(m);
    size_t i = per_input.size();
    while (i > 0) {
      --i;
      if (++idx[i] < per_input[i].size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (per_input.empty()) return;
  }
}
}  // namespace

std::vector<SubtreeOp> operations_of_free_operad(const PlanarTree& t,
                                                 Flavour flavour) {
  if (t.n_vertices() > 60)
    throw std::invalid_argument("tree too large for region enumeration");
  std::vector<SubtreeOp> ops;
  for (int e = 0; e < t.n_edges(); ++e) ops.push_back(op_identity(e));
  std::vector<uint64_t> masks;
  for (int e = 0; e < t.n_edges(); ++e) {
    regions_above(t, e, masks);
    std::sort(masks.begin(), masks.end());
    for (uint64_t m : masks) {
      SubtreeOp op;
      op.root_edge = e;
      op.vmask = m;
      op.leaves = planar_region_leaves(t, e, m);
      if (flavour == Flavour::planar) {
        ops.push_back(op);
      } else {
        for (const auto& perm : all_permutations(op.op_arity()))
          ops.push_back(op_sigma(op, perm));
      }
    }
  }
  return ops;
}

std::vector<PlanarTree> enumerate_trees(int max_vertices, int max_arity,
                                        bool canonical_only) {
  // trees_by_v[v] = all planar trees with exactly v vertices
  std::vector<std::vector<PlanarTree>> by_v(size_t(max_vertices) + 1);
  by_v[0].push_back(PlanarTree());
  for (int v = 1; v <= max_vertices; ++v) {
    for (int a = 0; a <= max_arity; ++a) {
      // compositions of v-1 into a parts
      std::vector<int> parts(size_t(a), 0);
      std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == a) {
          if (remaining != 0) return;
          // cartesian product of child choices
          std::vector<size_t> idx(size_t(a), 0);
          for (;;) {
            std::vector<PlanarTree> cs;
            bool ok = true;
            for (int k = 0; k < a; ++k) {
              const auto& pool = by_v[size_t(parts[size_t(k)])];
              if (idx[size_t(k)] >= pool.size()) {
                ok = false;
                break;
              }
              cs.push_back(pool[idx[size_t(k)]]);
            }
            if (ok) by_v[size_t(v)].push_back(PlanarTree::make_vertex(cs));
            int k = a - 1;
            while (k >= 0) {
              ++idx[size_t(k)];
              if (idx[size_t(k)] < by_v[size_t(parts[size_t(k)])].size()) break;
              idx[size_t(k)] = 0;
              --k;
            }
            if (k < 0) break;
          }
        } else {
          for (int p = 0; p <= remaining; ++p) {
            parts[size_t(i)] = p;
            rec(i + 1, remaining - p);
          }
        }
      };
      if (a == 0) {
        if (v == 1) by_v[size_t(v)].push_back(PlanarTree::make_vertex({}));
      } else {
        rec(0, v - 1);
      }
    }
  }
  std::vector<PlanarTree> out;
  for (auto& pool : by_v)
    for (auto& t : pool) out.push_back(std::move(t));
  if (canonical_only) {
    for (auto& t : out) t = canonical_form(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[size_t(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> compose_perms(const std::vector<int>& p,
                               const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[size_t(q[i])];
  return r;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[size_t(p[i])] = int(i);
  return r;
}

std::vector<int> block_permutation(const std::vector<int>& sigma,
                                   const std::vector<int>& block_lengths) {
  size_t n = sigma.size();
  std::vector<int> inv = invert_perm(sigma);
  std::vector<int> start_b(n + 1, 0);
  for (size_t j = 0; j < n; ++j)
    start_b[j + 1] = start_b[j] + block_lengths[size_t(inv[j])];
  std::vector<int> out;
  for (size_t i = 0; i < n; ++i) {
    int len = block_lengths[i];
    int dst = start_b[size_t(sigma[i])];
    for (int o = 0; o < len; ++o) out.push_back(dst + o);
  }
  return out;
}

}  // namespace dendro
