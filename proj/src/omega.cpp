#include "dendro/omega.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dendro {

bool OmegaMor::operator<(const OmegaMor& o) const {
  if (edge_map != o.edge_map) return edge_map < o.edge_map;
  return vassign < o.vassign;
}

std::string OmegaMor::key() const {
  std::ostringstream os;
  os << "E:";
  for (size_t i = 0; i < edge_map.size(); ++i)
    os << (i ? "," : "") << edge_map[i];
  os << "|V:";
  for (const auto& op : vassign) {
    os << "(" << op.root_edge << "m" << op.vmask << "[";
    for (size_t i = 0; i < op.leaves.size(); ++i)
      os << (i ? "," : "") << op.leaves[i];
    os << "])";
  }
  return os.str();
}

std::string omega_mor_to_json(const OmegaMor& f) {
  nlohmann::json j;
  j["schema"] = "dendro/omegamor-1";
  j["source"] = f.src.render(true);
  j["target"] = f.tgt.render(true);
  nlohmann::json em = nlohmann::json::object();
  for (size_t i = 0; i < f.edge_map.size(); ++i)
    em["e" + std::to_string(i)] = "e" + std::to_string(f.edge_map[i]);
  j["edge-map"] = em;
  nlohmann::json vs = nlohmann::json::object();
  for (size_t v = 0; v < f.vassign.size(); ++v) {
    nlohmann::json o;
    std::vector<int> region;
    for (int w = 0; w < 64; ++w)
      if ((f.vassign[v].vmask >> w) & 1) region.push_back(w);
    o["root"] = f.vassign[v].root_edge;
    o["region"] = region;
    o["leaf-order"] = f.vassign[v].leaves;
    vs["v" + std::to_string(v)] = o;
  }
  j["vertices"] = vs;
  return j.dump(2);
}

namespace {

// target operations grouped by (output edge, arity)
struct OpPools {
  std::map<std::pair<int, int>, std::vector<SubtreeOp>> pools;

  OpPools(const PlanarTree& t, Flavour flavour, HomRestrict restrict_to) {
    for (const auto& op : operations_of_free_operad(t, flavour)) {
      if (restrict_to == HomRestrict::omega0) {
        if (op.is_identity()) {
          // identities are collection maps of colours; keep them for unary
        } else {
          // single generating vertex, planar leaf order
          if (__builtin_popcountll(op.vmask) != 1) continue;
          int v = __builtin_ctzll(op.vmask);
          if (op.leaves != t.vertex(v).in_edges) continue;
        }
      }
      pools[{op.root_edge, op.op_arity()}].push_back(op);
    }
  }

  const std::vector<SubtreeOp>* get(int out, int arity) const {
    auto it = pools.find({out, arity});
    return it == pools.end() ? nullptr : &it->second;
  }
};

}  // namespace

std::vector<OmegaMor> hom_trees(const PlanarTree& s, const PlanarTree& t,
                                Flavour flavour, HomRestrict restrict_to) {
  std::vector<OmegaMor> out;
  if (s.is_eta()) {
    for (int e = 0; e < t.n_edges(); ++e)
      out.push_back(OmegaMor{s, t, {e}, {}});
    return out;
  }
  OpPools pools(t, flavour, restrict_to);
  OmegaMor cur{s, t, std::vector<int>(size_t(s.n_edges()), -1),
               std::vector<SubtreeOp>(size_t(s.n_vertices()))};
  std::function<void(int)> rec = [&](int v) {
    if (v == s.n_vertices()) {
      out.push_back(cur);
      return;
    }
    int e = s.vertex(v).out_edge;
    const auto* cands = pools.get(cur.edge_map[size_t(e)], s.arity(v));
    if (!cands) return;
    for (const auto& op : *cands) {
      cur.vassign[size_t(v)] = op;
      const auto& ins = s.vertex(v).in_edges;
      for (size_t i = 0; i < ins.size(); ++i)
        cur.edge_map[size_t(ins[i])] = op.leaves[i];
      rec(v + 1);
    }
  };
  for (int e = 0; e < t.n_edges(); ++e) {
    cur.edge_map[0] = e;
    rec(0);
  }
  return out;
}

OmegaMor omega_identity(const PlanarTree& t) {
  OmegaMor f{t, t, std::vector<int>(size_t(t.n_edges())), {}};
  for (int e = 0; e < t.n_edges(); ++e) f.edge_map[size_t(e)] = e;
  for (int v = 0; v < t.n_vertices(); ++v)
    f.vassign.push_back(op_generator(t, v));
  return f;
}

bool omega_mor_valid(const OmegaMor& f, Flavour flavour) {
  const PlanarTree& s = f.src;
  const PlanarTree& t = f.tgt;
  if (int(f.edge_map.size()) != s.n_edges()) return false;
  if (int(f.vassign.size()) != s.n_vertices()) return false;
  for (int e : f.edge_map)
    if (e < 0 || e >= t.n_edges()) return false;
  for (int v = 0; v < s.n_vertices(); ++v) {
    const SubtreeOp& op = f.vassign[size_t(v)];
    if (op.root_edge != f.edge_map[size_t(s.vertex(v).out_edge)]) return false;
    const auto& ins = s.vertex(v).in_edges;
    if (op.leaves.size() != ins.size()) return false;
    for (size_t i = 0; i < ins.size(); ++i)
      if (op.leaves[i] != f.edge_map[size_t(ins[i])]) return false;
    // region shape: rooted, connected, with the right boundary
    if (op.vmask == 0) {
      if (op.leaves != std::vector<int>{op.root_edge}) return false;
      continue;
    }
    int top = t.edge(op.root_edge).above;
    if (top < 0 || !((op.vmask >> top) & 1)) return false;
    for (int w = 0; w < t.n_vertices(); ++w) {
      if (!((op.vmask >> w) & 1)) continue;
      int e = t.vertex(w).out_edge;
      if (e != op.root_edge && !((op.vmask >> t.edge(e).below) & 1))
        return false;
    }
    auto planar = planar_region_leaves(t, op.root_edge, op.vmask);
    auto sorted_a = planar;
    auto sorted_b = op.leaves;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
    if (flavour == Flavour::planar && op.leaves != planar) return false;
  }
  return true;
}

namespace {
SubtreeOp eval_planar_region(const OmegaMor& g, const PlanarTree& mid,
                             int root_edge, uint64_t vmask) {
  int v = mid.edge(root_edge).above;
  if (v < 0 || !((vmask >> v) & 1))
    return op_identity(g.edge_map[size_t(root_edge)]);
  std::vector<SubtreeOp> args;
  for (int in : mid.vertex(v).in_edges)
    args.push_back(eval_planar_region(g, mid, in, vmask));
  return op_gamma(g.vassign[size_t(v)], args);
}

// image of a subtree op of g.src under g
SubtreeOp eval_op(const OmegaMor& g, const SubtreeOp& op) {
  if (op.is_identity()) return op_identity(g.edge_map[size_t(op.root_edge)]);
  auto planar = planar_region_leaves(g.src, op.root_edge, op.vmask);
  SubtreeOp img = eval_planar_region(g, g.src, op.root_edge, op.vmask);
  if (op.leaves == planar) return img;
  std::vector<int> perm(op.leaves.size());
  for (size_t i = 0; i < op.leaves.size(); ++i) {
    auto it = std::find(planar.begin(), planar.end(), op.leaves[i]);
    perm[i] = int(it - planar.begin());
  }
  return op_sigma(img, perm);
}
}  // namespace

OmegaMor omega_compose(const OmegaMor& g, const OmegaMor& f) {
  if (!(f.tgt == g.src))
    throw std::invalid_argument("omega_compose: boundary mismatch");
  OmegaMor r{f.src, g.tgt, {}, {}};
  r.edge_map.resize(f.edge_map.size());
  for (size_t e = 0; e < f.edge_map.size(); ++e)
    r.edge_map[e] = g.edge_map[size_t(f.edge_map[e])];
  for (const auto& op : f.vassign) r.vassign.push_back(eval_op(g, op));
  return r;
}

OmegaMor omega_from_edge_permutation(const PlanarTree& t,
                                     const std::vector<int>& perm) {
  OmegaMor f{t, t, perm, {}};
  for (int v = 0; v < t.n_vertices(); ++v) {
    int e = t.vertex(v).out_edge;
    int img_e = perm[size_t(e)];
    int w = t.edge(img_e).above;
    if (w < 0)
      throw std::invalid_argument("edge permutation is not an automorphism");
    SubtreeOp op;
    op.root_edge = img_e;
    op.vmask = uint64_t(1) << w;
    for (int in : t.vertex(v).in_edges) op.leaves.push_back(perm[size_t(in)]);
    f.vassign.push_back(op);
  }
  return f;
}

OmegaMor omega_mirror_transport(const OmegaMor& f) {
  PlanarTree ms = mirror_tree(f.src);
  PlanarTree mt = mirror_tree(f.tgt);
  auto src_map = mirror_edge_map(f.src);
  auto tgt_map = mirror_edge_map(f.tgt);
  OmegaMor r{ms, mt, std::vector<int>(size_t(f.src.n_edges())), {}};
  for (size_t e = 0; e < f.edge_map.size(); ++e)
    r.edge_map[size_t(src_map[e])] = tgt_map[size_t(f.edge_map[e])];
  // vertex v of src corresponds to the vertex above the mirrored out edge
  r.vassign.resize(f.vassign.size());
  for (int v = 0; v < f.src.n_vertices(); ++v) {
    int mv = ms.edge(size_t(src_map[size_t(f.src.vertex(v).out_edge)])).above;
    const SubtreeOp& op = f.vassign[size_t(v)];
    SubtreeOp mop;
    mop.root_edge = tgt_map[size_t(op.root_edge)];
    for (int w = 0; w < f.tgt.n_vertices(); ++w)
      if ((op.vmask >> w) & 1) {
        int mw = mt.edge(size_t(tgt_map[size_t(f.tgt.vertex(w).out_edge)]))
                     .above;
        mop.vmask |= uint64_t(1) << mw;
      }
    for (auto it = op.leaves.rbegin(); it != op.leaves.rend(); ++it)
      mop.leaves.push_back(tgt_map[size_t(*it)]);
    r.vassign[size_t(mv)] = mop;
  }
  return r;
}

OperadMap omega_to_operad_map(const OmegaMor& f, const FinOperad& free_src,
                              const FinOperad& free_tgt) {
  OperadMap m;
  m.colour_map = f.edge_map;
  auto src_ops = operations_of_free_operad(f.src, free_src.flavour);
  auto tgt_ops = operations_of_free_operad(f.tgt, free_tgt.flavour);
  std::map<SubtreeOp, int> tgt_index;
  for (size_t i = 0; i < tgt_ops.size(); ++i) tgt_index[tgt_ops[i]] = int(i);
  for (const auto& op : src_ops)
    m.op_map.push_back(tgt_index.at(eval_op(f, op)));
  return m;
}

CorSlice cor_slice(const PlanarTree& t) {
  CorSlice s;
  s.tree = t;
  s.n_colours = t.n_edges();
  for (int v = 0; v < t.n_vertices(); ++v)
    s.corollas.push_back({v, t.vertex(v).out_edge, t.vertex(v).in_edges});
  return s;
}

ConeReport check_cone_bijection(const PlanarTree& t, const PlanarTree& u,
                                Flavour flavour) {
  ConeReport rep;
  auto homs = hom_trees(t, u, flavour);
  rep.n_morphisms = homs.size();
  std::set<std::string> hom_keys;
  for (const auto& f : homs) hom_keys.insert(f.key());

  // Independent enumeration of compatible families over the corolla slice:
  // plain cartesian product over vertices of all arity-matching operations,
  // filtered by edge agreement (no root-first pruning).
  std::set<std::string> family_keys;
  if (t.is_eta()) {
    for (int e = 0; e < u.n_edges(); ++e)
      family_keys.insert(OmegaMor{t, u, {e}, {}}.key());
  } else {
    std::map<int, std::vector<SubtreeOp>> by_arity;
    for (const auto& op : operations_of_free_operad(u, flavour))
      by_arity[op.op_arity()].push_back(op);
    int nv = t.n_vertices();
    std::vector<const std::vector<SubtreeOp>*> pool(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) {
      auto it = by_arity.find(t.arity(v));
      if (it == by_arity.end()) {
        rep.n_families = 0;
        rep.bijective = rep.n_morphisms == 0;
        return rep;
      }
      pool[size_t(v)] = &it->second;
    }
    std::vector<size_t> idx(size_t(nv), 0);
    for (;;) {
      // derive edge images from the vertex choices, rejecting clashes
      std::vector<int> emap(size_t(t.n_edges()), -1);
      bool ok = true;
      for (int v = nv - 1; v >= 0 && ok; --v) {
        const SubtreeOp& op = (*pool[size_t(v)])[idx[size_t(v)]];
        auto set_edge = [&](int e, int img) {
          if (emap[size_t(e)] >= 0 && emap[size_t(e)] != img) ok = false;
          emap[size_t(e)] = img;
        };
        set_edge(t.vertex(v).out_edge, op.root_edge);
        const auto& ins = t.vertex(v).in_edges;
        for (size_t i = 0; i < ins.size() && ok; ++i)
          set_edge(ins[i], op.leaves[i]);
      }
      if (ok) {
        OmegaMor cand{t, u, emap, {}};
        for (int v = 0; v < nv; ++v)
          cand.vassign.push_back((*pool[size_t(v)])[idx[size_t(v)]]);
        family_keys.insert(cand.key());
      }
      int v = nv;
      bool done = false;
      while (v > 0) {
        --v;
        if (++idx[size_t(v)] < pool[size_t(v)]->size()) break;
        idx[size_t(v)] = 0;
        if (v == 0) done = true;
      }
      if (done) break;
    }
  }
  rep.n_families = family_keys.size();
  rep.bijective = hom_keys == family_keys;
  if (!rep.bijective) {
    rep.detail = "hom count " + std::to_string(rep.n_morphisms) +
                 ", family count " + std::to_string(rep.n_families);
  }
  return rep;
}

// --------------------------------------------------------------- skeletons

OmegaSkeleton::OmegaSkeleton(Flavour flavour, std::vector<PlanarTree> objects)
    : flavour_(flavour), objects_(std::move(objects)) {
  int n = int(objects_.size());
  hom_.assign(size_t(n), std::vector<std::vector<OmegaMor>>(size_t(n)));
  index_.assign(size_t(n),
                std::vector<std::map<std::pair<std::vector<int>, std::vector<SubtreeOp>>, int>>(
                    size_t(n)));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      hom_[size_t(s)][size_t(t)] =
          hom_trees(objects_[size_t(s)], objects_[size_t(t)], flavour_);
      auto& idx = index_[size_t(s)][size_t(t)];
      for (size_t k = 0; k < hom_[size_t(s)][size_t(t)].size(); ++k) {
        const auto& m = hom_[size_t(s)][size_t(t)][k];
        idx[{m.edge_map, m.vassign}] = int(k);
      }
    }
}

const std::vector<OmegaMor>& OmegaSkeleton::hom(int s, int t) const {
  return hom_[size_t(s)][size_t(t)];
}

int OmegaSkeleton::find_object(const PlanarTree& t) const {
  for (size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == t) return int(i);
  return -1;
}

int OmegaSkeleton::find_mor(int s, int t, const OmegaMor& f) const {
  auto it = index_[size_t(s)][size_t(t)].find({f.edge_map, f.vassign});
  if (it == index_[size_t(s)][size_t(t)].end()) return -1;
  return it->second;
}

FinCatView OmegaSkeleton::view() const {
  FinCatView v;
  v.n_objects = n_objects();
  for (const auto& t : objects_) v.object_names.push_back(t.render(true));
  v.hom_size = [this](int s, int t) { return int(hom(s, t).size()); };
  v.id_index = [this](int o) {
    return find_mor(o, o, omega_identity(object(o)));
  };
  v.compose = [this](int s, int t, int u, int f, int g) {
    OmegaMor c = omega_compose(hom(t, u)[size_t(g)], hom(s, t)[size_t(f)]);
    int i = find_mor(s, u, c);
    if (i < 0) throw std::logic_error("composite missing from skeleton");
    return i;
  };
  return v;
}

std::string OmegaSkeleton::manifest() const {
  std::string out = "skeleton " + flavour_name(flavour_) + "\n";
  for (const auto& t : objects_) out += t.render(true) + "\n";
  return out;
}

std::string OmegaSkeleton::content_hash() const {
  char buf[32];
  snprintf(buf, sizeof buf, "%016llx",
           (unsigned long long)fnv1a64(manifest()));
  return buf;
}

OmegaSkeleton default_sigma_skeleton() {
  std::vector<PlanarTree> objs{
      PlanarTree(), standard_tree(StdTree::corolla, 0),
      standard_tree(StdTree::corolla, 1), standard_tree(StdTree::corolla, 2),
      canonical_form(standard_tree(StdTree::left_comb, 3))};
  return OmegaSkeleton(Flavour::symmetric, std::move(objs));
}

OmegaSkeleton default_omega_skeleton() {
  return OmegaSkeleton(Flavour::symmetric, enumerate_trees(3, 2, true));
}

OmegaSkeleton default_planar_skeleton() {
  auto objs = enumerate_trees(3, 2, false);
  for (int n = 3; n <= 5; ++n)
    objs.push_back(standard_tree(StdTree::corolla, n));
  std::sort(objs.begin(), objs.end());
  objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
  return OmegaSkeleton(Flavour::planar, std::move(objs));
}

// ----------------------------------------------------------------- Sigma_Omega

SigmaOmega sigma_identity(const OmegaSkeleton& sk) {
  SigmaOmega s;
  for (int i = 0; i < sk.n_objects(); ++i) {
    std::vector<int> id(static_cast<size_t>(sk.object(i).n_edges()));
    for (size_t k = 0; k < id.size(); ++k) id[k] = int(k);
    s.component.push_back(std::move(id));
  }
  return s;
}

std::vector<SigmaOmega> all_sigmas(const OmegaSkeleton& sk) {
  std::vector<std::vector<std::vector<int>>> pools;
  size_t total = 1;
  for (int i = 0; i < sk.n_objects(); ++i) {
    pools.push_back(tree_automorphisms(canonical_form(sk.object(i))));
    total *= pools.back().size();
    if (total > 1000000)
      throw BoundExceeded("automorphism product too large");
  }
  std::vector<SigmaOmega> out;
  std::vector<size_t> idx(pools.size(), 0);
  for (;;) {
    SigmaOmega s;
    for (size_t i = 0; i < pools.size(); ++i)
      s.component.push_back(pools[i][idx[i]]);
    out.push_back(std::move(s));
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
  return out;
}

SigmaOmega sigma_mult(const OmegaSkeleton& sk, const SigmaOmega& a,
                      const SigmaOmega& b) {
  SigmaOmega r;
  for (int i = 0; i < sk.n_objects(); ++i)
    r.component.push_back(
        compose_perms(a.component[size_t(i)], b.component[size_t(i)]));
  return r;
}

SigmaOmega sigma_inv(const OmegaSkeleton& sk, const SigmaOmega& a) {
  SigmaOmega r;
  for (int i = 0; i < sk.n_objects(); ++i)
    r.component.push_back(invert_perm(a.component[size_t(i)]));
  return r;
}

OmegaMor apply_F_sigma(const OmegaSkeleton& sk, const SigmaOmega& sigma,
                       const OmegaMor& f) {
  int si = sk.find_object(f.src);
  int ti = sk.find_object(f.tgt);
  OmegaMor r = f;
  if (si >= 0) {
    OmegaMor pre = omega_from_edge_permutation(
        f.src, invert_perm(sigma.component[size_t(si)]));
    r = omega_compose(r, pre);
  }
  if (ti >= 0) {
    OmegaMor post =
        omega_from_edge_permutation(f.tgt, sigma.component[size_t(ti)]);
    r = omega_compose(post, r);
  }
  return r;
}

FunctorData build_F_sigma(const OmegaSkeleton& sk, const SigmaOmega& sigma) {
  FunctorData F;
  F.skeleton_id = sk.content_hash();
  for (int i = 0; i < sk.n_objects(); ++i) F.obj.push_back(i);
  for (int s = 0; s < sk.n_objects(); ++s)
    for (int t = 0; t < sk.n_objects(); ++t) {
      std::vector<int> table;
      for (const auto& f : sk.hom(s, t)) {
        int i = sk.find_mor(s, t, apply_F_sigma(sk, sigma, f));
        if (i < 0) throw std::logic_error("conjugate missing from skeleton");
        table.push_back(i);
      }
      F.mor[{s, t}] = std::move(table);
    }
  return F;
}

SigmaExtract sigma_of_functor(const OmegaSkeleton& sk, const FunctorData& F) {
  SigmaExtract out;
  int eta = sk.find_object(PlanarTree());
  if (eta < 0) {
    out.error = "skeleton does not contain the bare edge";
    return out;
  }
  for (int i = 0; i < sk.n_objects(); ++i)
    if (F.obj[size_t(i)] != i) {
      out.error = "functor is not the identity on objects";
      return out;
    }
  SigmaOmega sigma;
  for (int i = 0; i < sk.n_objects(); ++i) {
    const auto& colours = sk.hom(eta, i);
    const auto& table = F.mor.at({eta, i});
    std::vector<std::vector<int>> matches;
    for (const auto& aut :
         tree_automorphisms(canonical_form(sk.object(i)))) {
      OmegaMor a = omega_from_edge_permutation(sk.object(i), aut);
      bool ok = true;
      for (size_t c = 0; c < colours.size() && ok; ++c) {
        int img = sk.find_mor(eta, i, omega_compose(a, colours[c]));
        ok = img == table[c];
      }
      if (ok) matches.push_back(aut);
    }
    if (matches.empty()) {
      out.error = "no automorphism matches the colour action at object " +
                  sk.object(i).render(true);
      return out;
    }
    if (matches.size() > 1) {
      out.error = "colour action under-determines the automorphism at " +
                  sk.object(i).render(true);
      return out;
    }
    sigma.component.push_back(matches[0]);
  }
  out.sigma = std::move(sigma);
  return out;
}

FunctorData build_mirror_functor(const OmegaSkeleton& sk) {
  FunctorData F;
  F.skeleton_id = sk.content_hash();
  for (int i = 0; i < sk.n_objects(); ++i) {
    int m = sk.find_object(mirror_tree(sk.object(i)));
    if (m < 0) throw std::invalid_argument("skeleton is not mirror closed");
    F.obj.push_back(m);
  }
  for (int s = 0; s < sk.n_objects(); ++s)
    for (int t = 0; t < sk.n_objects(); ++t) {
      std::vector<int> table;
      for (const auto& f : sk.hom(s, t)) {
        OmegaMor m = omega_mirror_transport(f);
        int i = sk.find_mor(F.obj[size_t(s)], F.obj[size_t(t)], m);
        if (i < 0) throw std::logic_error("mirrored morphism missing");
        table.push_back(i);
      }
      F.mor[{s, t}] = std::move(table);
    }
  return F;
}

PlanarSignature planar_signature(const OmegaSkeleton& sk, const FunctorData& F,
                                 const std::vector<int>& arities) {
  PlanarSignature out;
  int eta = sk.find_object(PlanarTree());
  if (eta < 0) {
    out.error = "skeleton does not contain the bare edge";
    return out;
  }
  if (F.obj[size_t(eta)] != eta) {
    out.error = "functor does not preserve the bare edge";
    return out;
  }
  for (int n : arities) {
    int cn = sk.find_object(standard_tree(StdTree::corolla, n));
    if (cn < 0) {
      out.error = "skeleton lacks the corolla of arity " + std::to_string(n);
      return out;
    }
    if (F.obj[size_t(cn)] != cn) {
      out.error = "functor does not preserve the corolla of arity " +
                  std::to_string(n);
      return out;
    }
    const auto& table = F.mor.at({eta, cn});
    // hom(eta, C_n) lists the root colour first, then the leaves in planar
    // order (edge ids 1..n)
    if (table[0] != 0) {
      out.error = "root map of the corolla of arity " + std::to_string(n) +
                  " is not preserved";
      return out;
    }
    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<bool> seen(size_t(n), false);
    for (int i = 0; i < n; ++i) {
      int img = table[size_t(i) + 1];
      if (img < 1 || img > n || seen[size_t(img - 1)]) {
        out.error = "leaf action is not a permutation at arity " +
                    std::to_string(n);
        return out;
      }
      seen[size_t(img - 1)] = true;
      perm[size_t(i)] = img - 1;
    }
    out.sigma_n.push_back(perm);
    if (n == 2 && perm == std::vector<int>{1, 0}) out.compose_with_mirror = true;
  }
  return out;
}

}  // namespace dendro
