#include "dendro/segal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dendro {

std::vector<Violation> validate_presheaf(const FinCatView& cat,
                                         const FinitePresheaf& X) {
  std::vector<Violation> out;
  if (int(X.card.size()) != cat.n_objects) {
    out.push_back({"objects", "value list has the wrong size"});
    return out;
  }
  for (int s = 0; s < cat.n_objects; ++s)
    for (int t = 0; t < cat.n_objects; ++t)
      for (int f = 0; f < cat.hom_size(s, t); ++f) {
        auto it = X.act.find({s, t, f});
        if (it == X.act.end()) {
          out.push_back({"totality", "missing action table"});
          return out;
        }
        if (int(it->second.size()) != X.card[size_t(t)])
          out.push_back({"typing", "action table has the wrong size"});
        for (int v : it->second)
          if (v < 0 || v >= X.card[size_t(s)])
            out.push_back({"typing", "action value out of range"});
      }
  if (!out.empty()) return out;
  for (int o = 0; o < cat.n_objects; ++o) {
    const auto& table = X.action(o, o, cat.id_index(o));
    for (int v = 0; v < X.card[size_t(o)]; ++v)
      if (table[size_t(v)] != v) {
        out.push_back({"identity", "identity acts non-trivially at object " +
                                       cat.object_names[size_t(o)]});
        break;
      }
  }
  for (int s = 0; s < cat.n_objects; ++s)
    for (int t = 0; t < cat.n_objects; ++t)
      for (int u = 0; u < cat.n_objects; ++u)
        for (int f = 0; f < cat.hom_size(s, t); ++f)
          for (int g = 0; g < cat.hom_size(t, u); ++g) {
            int gf = cat.compose(s, t, u, f, g);
            const auto& tgf = X.action(s, u, gf);
            const auto& tg = X.action(t, u, g);
            const auto& tf = X.action(s, t, f);
            for (int v = 0; v < X.card[size_t(u)]; ++v)
              if (tgf[size_t(v)] != tf[size_t(tg[size_t(v)])]) {
                out.push_back({"composition",
                               "actions do not compose at objects " +
                                   cat.object_names[size_t(s)] + " <- " +
                                   cat.object_names[size_t(t)] + " <- " +
                                   cat.object_names[size_t(u)]});
                if (out.size() > 10) return out;
                break;
              }
          }
  return out;
}

// ------------------------------------------------------------- Segal, trees

SegalReport segal_check_tree(const OmegaSkeleton& sk, const FinitePresheaf& X,
                             int obj) {
  SegalReport rep;
  const PlanarTree& T = sk.object(obj);
  int eta = sk.find_object(PlanarTree());
  if (eta < 0) {
    rep.detail = "skeleton lacks the bare edge";
    return rep;
  }
  if (T.is_eta()) {
    rep.applicable = true;
    rep.bijective = true;
    rep.object_count = rep.family_count = size_t(X.card[size_t(obj)]);
    return rep;
  }
  // locate corolla objects and the slice morphisms
  int nv = T.n_vertices();
  std::vector<int> cor_idx(static_cast<size_t>(nv));
  std::vector<int> vertex_mor(static_cast<size_t>(nv));  // corolla -> T, in hom(cor, obj)
  for (int v = 0; v < nv; ++v) {
    int n = T.arity(v);
    int c = sk.find_object(standard_tree(StdTree::corolla, n));
    if (c < 0) {
      rep.detail = "skeleton lacks the corolla of arity " + std::to_string(n);
      return rep;
    }
    cor_idx[size_t(v)] = c;
    OmegaMor m;
    m.src = sk.object(c);
    m.tgt = T;
    m.edge_map.push_back(T.vertex(v).out_edge);
    for (int in : T.vertex(v).in_edges) m.edge_map.push_back(in);
    SubtreeOp op;
    op.root_edge = T.vertex(v).out_edge;
    op.vmask = uint64_t(1) << v;
    op.leaves = T.vertex(v).in_edges;
    m.vassign.push_back(op);
    vertex_mor[size_t(v)] = sk.find_mor(c, obj, m);
    if (vertex_mor[size_t(v)] < 0) {
      rep.detail = "generating corolla map missing from the skeleton";
      return rep;
    }
  }
  std::vector<int> colour_mor(size_t(T.n_edges()));
  for (int e = 0; e < T.n_edges(); ++e) {
    OmegaMor m{PlanarTree(), T, {e}, {}};
    colour_mor[size_t(e)] = sk.find_mor(eta, obj, m);
    if (colour_mor[size_t(e)] < 0) {
      rep.detail = "colour map missing from the skeleton";
      return rep;
    }
  }
  rep.applicable = true;
  // Segal images of the presheaf elements
  auto family_of = [&](int x) {
    std::vector<int> fam;
    for (int e = 0; e < T.n_edges(); ++e)
      fam.push_back(X.action(eta, obj, colour_mor[size_t(e)])[size_t(x)]);
    for (int v = 0; v < nv; ++v)
      fam.push_back(
          X.action(cor_idx[size_t(v)], obj, vertex_mor[size_t(v)])[size_t(x)]);
    return fam;
  };
  // all compatible families over the slice
  std::set<std::vector<int>> families;
  {
    std::vector<size_t> idx(size_t(nv), 0);
    for (;;) {
      std::vector<int> edge_val(size_t(T.n_edges()), -1);
      bool ok = true;
      std::vector<int> bs(static_cast<size_t>(nv));
      for (int v = 0; v < nv && ok; ++v) {
        int c = cor_idx[size_t(v)];
        if (idx[size_t(v)] >= size_t(X.card[size_t(c)])) {
          ok = false;
          break;
        }
        int b = int(idx[size_t(v)]);
        bs[size_t(v)] = b;
        int n = T.arity(v);
        auto set_edge = [&](int e, int val) {
          if (edge_val[size_t(e)] >= 0 && edge_val[size_t(e)] != val)
            ok = false;
          edge_val[size_t(e)] = val;
        };
        // hom(eta, corolla) lists edge 0 (root) first, then the leaves
        set_edge(T.vertex(v).out_edge, X.action(eta, c, 0)[size_t(b)]);
        for (int i = 0; i < n && ok; ++i)
          set_edge(T.vertex(v).in_edges[size_t(i)],
                   X.action(eta, c, i + 1)[size_t(b)]);
      }
      if (ok && nv > 0) {
        bool covered = true;
        for (int e = 0; e < T.n_edges(); ++e)
          if (edge_val[size_t(e)] < 0) covered = false;
        if (covered) {
          std::vector<int> fam = edge_val;
          for (int v = 0; v < nv; ++v) fam.push_back(bs[size_t(v)]);
          families.insert(fam);
        }
      }
      int v = nv;
      bool done = (nv == 0);
      while (v > 0) {
        --v;
        if (++idx[size_t(v)] < size_t(X.card[size_t(cor_idx[size_t(v)])]))
          break;
        idx[size_t(v)] = 0;
        if (v == 0) done = true;
      }
      if (done) break;
    }
  }
  rep.family_count = families.size();
  rep.object_count = size_t(X.card[size_t(obj)]);
  std::set<std::vector<int>> images;
  bool injective = true;
  for (int x = 0; x < X.card[size_t(obj)]; ++x) {
    auto fam = family_of(x);
    if (!images.insert(fam).second) {
      injective = false;
      rep.detail = "two elements share the spine family at element " +
                   std::to_string(x);
    }
    if (!families.count(fam))
      rep.detail = "segal image is not a compatible family";
  }
  bool surjective = true;
  for (const auto& fam : families)
    if (!images.count(fam)) {
      surjective = false;
      std::ostringstream os;
      os << "family without preimage:";
      for (int v : fam) os << " " << v;
      rep.detail = os.str();
      break;
    }
  rep.bijective = injective && surjective && images.size() == families.size();
  return rep;
}

// ------------------------------------------------------------ Segal, tables

SegalReport segal_check_table(const ThetaSkeleton& sk, const FinitePresheaf& X,
                              int obj) {
  SegalReport rep;
  const DimTable& T = sk.object(obj);
  SpineTable sp = spine_table(T);
  int m = T.columns();
  std::vector<int> disk_idx(static_cast<size_t>(m));
  std::vector<int> col_mor(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    disk_idx[size_t(i)] = sk.find_object(disk_table(T.top[size_t(i)], T.ambient));
    if (disk_idx[size_t(i)] < 0) {
      rep.detail = "skeleton lacks a column disk";
      return rep;
    }
    col_mor[size_t(i)] = sk.find_mor(disk_idx[size_t(i)], obj, sp.columns[size_t(i)]);
    if (col_mor[size_t(i)] < 0) {
      rep.detail = "column inclusion missing from the skeleton";
      return rep;
    }
  }
  std::vector<int> glue_idx(size_t(m) - 1, -1);
  std::vector<int> glue_l(size_t(m) - 1), glue_r(size_t(m) - 1);
  for (int i = 0; i + 1 < m; ++i) {
    glue_idx[size_t(i)] =
        sk.find_object(disk_table(T.bot[size_t(i)], T.ambient));
    if (glue_idx[size_t(i)] < 0) {
      rep.detail = "skeleton lacks a glue disk";
      return rep;
    }
    glue_l[size_t(i)] = sk.find_mor(glue_idx[size_t(i)], disk_idx[size_t(i)],
                                    sp.glue_left[size_t(i)]);
    glue_r[size_t(i)] = sk.find_mor(glue_idx[size_t(i)], disk_idx[size_t(i) + 1],
                                    sp.glue_right[size_t(i)]);
    if (glue_l[size_t(i)] < 0 || glue_r[size_t(i)] < 0) {
      rep.detail = "glue mono missing from the skeleton";
      return rep;
    }
  }
  rep.applicable = true;
  auto family_of = [&](int x) {
    std::vector<int> fam;
    for (int i = 0; i < m; ++i)
      fam.push_back(
          X.action(disk_idx[size_t(i)], obj, col_mor[size_t(i)])[size_t(x)]);
    return fam;
  };
  std::set<std::vector<int>> families;
  {
    std::vector<int> cur(static_cast<size_t>(m));
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        families.insert(cur);
        return;
      }
      for (int a = 0; a < X.card[size_t(disk_idx[size_t(i)])]; ++a) {
        if (i > 0) {
          int left = X.action(glue_idx[size_t(i) - 1], disk_idx[size_t(i) - 1],
                              glue_l[size_t(i) - 1])[size_t(cur[size_t(i) - 1])];
          int right = X.action(glue_idx[size_t(i) - 1], disk_idx[size_t(i)],
                               glue_r[size_t(i) - 1])[size_t(a)];
          if (left != right) continue;
        }
        cur[size_t(i)] = a;
        rec(i + 1);
      }
    };
    rec(0);
  }
  rep.family_count = families.size();
  rep.object_count = size_t(X.card[size_t(obj)]);
  std::set<std::vector<int>> images;
  bool injective = true;
  for (int x = 0; x < X.card[size_t(obj)]; ++x) {
    auto fam = family_of(x);
    if (!images.insert(fam).second) injective = false;
    if (!families.count(fam)) rep.detail = "image is not compatible";
  }
  bool surjective = true;
  for (const auto& fam : families)
    if (!images.count(fam)) {
      surjective = false;
      std::ostringstream os;
      os << "family without preimage:";
      for (int v : fam) os << " " << v;
      rep.detail = os.str();
      break;
    }
  rep.bijective = injective && surjective;
  return rep;
}

// ------------------------------------------------------------------ nerves

FinitePresheaf nerve_presheaf(const FinOperad& p, const OmegaSkeleton& sk) {
  FinitePresheaf X;
  int n = sk.n_objects();
  std::vector<FinOperad> frees;
  std::vector<std::vector<OperadMap>> values;
  std::vector<std::map<std::pair<std::vector<int>, std::vector<int>>, int>>
      index(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    frees.push_back(free_operad(sk.object(i), p.flavour));
    values.push_back(operad_maps(frees.back(), p));
    X.card.push_back(int(values.back().size()));
    for (size_t k = 0; k < values.back().size(); ++k)
      index[size_t(i)][{values.back()[k].colour_map,
                        values.back()[k].op_map}] = int(k);
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const auto& homs = sk.hom(s, t);
      for (size_t f = 0; f < homs.size(); ++f) {
        OperadMap fm = omega_to_operad_map(homs[f], frees[size_t(s)],
                                           frees[size_t(t)]);
        std::vector<int> table;
        for (const auto& g : values[size_t(t)]) {
          OperadMap comp;
          for (int c : fm.colour_map)
            comp.colour_map.push_back(g.colour_map[size_t(c)]);
          for (int o : fm.op_map) comp.op_map.push_back(g.op_map[size_t(o)]);
          table.push_back(
              index[size_t(s)].at({comp.colour_map, comp.op_map}));
        }
        X.act[{s, t, int(f)}] = std::move(table);
      }
    }
  return X;
}

FinitePresheaf cat_nerve_presheaf(const FinCategory& c,
                                  const ThetaSkeleton& sk) {
  FinitePresheaf X;
  int n = sk.n_objects();
  // value at T: chains {c0, a1, ..., aq} with q the number of top blocks
  auto blocks_of = [&](const DimTable& t) {
    if (t.columns() == 1 && t.top[0] == 0) return 0;
    int q = 1;
    for (int b : t.bot)
      if (b == 0) ++q;
    return q;
  };
  // chains encoded as {c0, a1..aq}
  std::vector<std::vector<std::vector<int>>> values(static_cast<size_t>(n));
  std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int q = blocks_of(sk.object(i));
    for (int o = 0; o < c.n_objects(); ++o) {
      std::vector<int> cur{o};
      std::function<void(int)> rec = [&](int j) {
        if (j == q) {
          index[size_t(i)][cur] = int(values[size_t(i)].size());
          values[size_t(i)].push_back(cur);
          return;
        }
        int at = j == 0 ? cur[0] : c.arrows[size_t(cur.back())].tgt;
        for (size_t a = 0; a < c.arrows.size(); ++a) {
          if (c.arrows[a].src != at) continue;
          cur.push_back(int(a));
          rec(j + 1);
          cur.pop_back();
        }
      };
      rec(0);
    }
    X.card.push_back(int(values[size_t(i)].size()));
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const auto& homs = sk.hom(s, t);
      int qs = blocks_of(sk.object(s));
      for (size_t f = 0; f < homs.size(); ++f) {
        const auto& phi = homs[f].top;
        std::vector<int> table;
        for (const auto& el : values[size_t(t)]) {
          // object at position k, and composites over covered ranges
          auto obj_at = [&](int k) {
            return k == 0 ? el[0] : c.arrows[size_t(el[size_t(k)])].tgt;
          };
          std::vector<int> out{obj_at(phi[0])};
          for (int i = 1; i <= qs; ++i) {
            int acc = c.ids[size_t(obj_at(phi[size_t(i) - 1]))];
            for (int j = phi[size_t(i) - 1] + 1; j <= phi[size_t(i)]; ++j)
              acc = *c.compose(el[size_t(j)], acc);
            out.push_back(acc);
          }
          table.push_back(index[size_t(s)].at(out));
        }
        X.act[{s, t, int(f)}] = std::move(table);
      }
    }
  return X;
}

// --------------------------------------------------------------- normality

std::vector<Violation> validate_mono(const FinCatView& cat,
                                     const PresheafMono& m) {
  std::vector<Violation> out;
  auto sub_v = validate_presheaf(cat, m.sub);
  auto tot_v = validate_presheaf(cat, m.total);
  out.insert(out.end(), sub_v.begin(), sub_v.end());
  out.insert(out.end(), tot_v.begin(), tot_v.end());
  if (!out.empty()) return out;
  for (int o = 0; o < cat.n_objects; ++o) {
    std::set<int> seen;
    if (int(m.inj[size_t(o)].size()) != m.sub.card[size_t(o)]) {
      out.push_back({"typing", "injection table size mismatch"});
      return out;
    }
    for (int v : m.inj[size_t(o)]) {
      if (v < 0 || v >= m.total.card[size_t(o)])
        out.push_back({"typing", "injection value out of range"});
      if (!seen.insert(v).second)
        out.push_back({"mono", "levelwise map is not injective at object " +
                                   cat.object_names[size_t(o)]});
    }
  }
  for (int s = 0; s < cat.n_objects; ++s)
    for (int t = 0; t < cat.n_objects; ++t)
      for (int f = 0; f < cat.hom_size(s, t); ++f) {
        const auto& xs = m.sub.action(s, t, f);
        const auto& ys = m.total.action(s, t, f);
        for (int v = 0; v < m.sub.card[size_t(t)]; ++v)
          if (ys[size_t(m.inj[size_t(t)][size_t(v)])] !=
              m.inj[size_t(s)][size_t(xs[size_t(v)])]) {
            out.push_back({"naturality",
                           "injection does not commute with the actions"});
            return out;
          }
      }
  return out;
}

NormalityReport normality_check(const OmegaSkeleton& sk,
                                const PresheafMono& m) {
  NormalityReport rep;
  rep.normal = true;
  for (int i = 0; i < sk.n_objects(); ++i) {
    std::set<int> image(m.inj[size_t(i)].begin(), m.inj[size_t(i)].end());
    if (sk.flavour() == Flavour::planar) continue;  // trivial groups act freely
    auto auts = tree_automorphisms(canonical_form(sk.object(i)));
    for (const auto& a : auts) {
      bool is_id = true;
      for (size_t k = 0; k < a.size(); ++k)
        if (a[k] != int(k)) is_id = false;
      if (is_id) continue;
      int mor = sk.find_mor(i, i, omega_from_edge_permutation(sk.object(i), a));
      if (mor < 0) continue;
      const auto& table = m.total.action(i, i, mor);
      for (int y = 0; y < m.total.card[size_t(i)]; ++y) {
        if (image.count(y)) continue;
        if (table[size_t(y)] == y) {
          rep.normal = false;
          rep.witness = "element " + std::to_string(y) + " of the value at " +
                        sk.object(i).render(true) +
                        " is fixed by a non-trivial automorphism";
          return rep;
        }
      }
    }
  }
  return rep;
}

// -------------------------------------------------------------------- JSON

std::string presheaf_to_json(const OmegaSkeleton& sk,
                             const FinitePresheaf& X) {
  nlohmann::json j;
  j["schema"] = "dendro/presheaf-1";
  j["flavour"] = flavour_name(sk.flavour());
  nlohmann::json objs = nlohmann::json::array();
  for (int i = 0; i < sk.n_objects(); ++i)
    objs.push_back(sk.object(i).render(true));
  j["skeleton"] = objs;
  j["card"] = X.card;
  nlohmann::json acts = nlohmann::json::array();
  for (const auto& [key, table] : X.act) {
    nlohmann::json a;
    a["src"] = std::get<0>(key);
    a["tgt"] = std::get<1>(key);
    a["mor"] = std::get<2>(key);
    a["table"] = table;
    acts.push_back(a);
  }
  j["actions"] = acts;
  return j.dump(2);
}

std::pair<OmegaSkeleton, FinitePresheaf> presheaf_from_json(
    const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("schema") || j["schema"] != "dendro/presheaf-1")
    throw std::invalid_argument("unknown presheaf schema");
  Flavour fl = std::string(j.at("flavour")) == "planar" ? Flavour::planar
                                                        : Flavour::symmetric;
  std::vector<PlanarTree> objs;
  for (const auto& lit : j.at("skeleton"))
    objs.push_back(parse_tree(std::string(lit)));
  OmegaSkeleton sk(fl, std::move(objs));
  FinitePresheaf X;
  for (const auto& c : j.at("card")) X.card.push_back(int(c));
  for (const auto& a : j.at("actions")) {
    std::vector<int> table;
    for (const auto& v : a.at("table")) table.push_back(int(v));
    X.act[{int(a.at("src")), int(a.at("tgt")), int(a.at("mor"))}] =
        std::move(table);
  }
  auto viol = validate_presheaf(sk.view(), X);
  if (!viol.empty())
    throw std::invalid_argument("presheaf fails validation: " + viol[0].law +
                                ": " + viol[0].detail);
  return {std::move(sk), std::move(X)};
}

}  // namespace dendro
