#include "dendro/finop.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dendro {

using nlohmann::json;

// ---------------------------------------------------------------- categories

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == x && arrows[i].tgt == y) out.push_back(int(i));
  return out;
}

std::optional<int> FinCategory::compose(int g, int f) const {
  auto it = comp.find({g, f});
  if (it == comp.end()) return std::nullopt;
  return it->second;
}

std::vector<Violation> validate_category(const FinCategory& c) {
  std::vector<Violation> out;
  for (int o = 0; o < c.n_objects(); ++o) {
    int id = c.ids[size_t(o)];
    if (c.arrows[size_t(id)].src != o || c.arrows[size_t(id)].tgt != o)
      out.push_back({"identity", "id of object " + std::to_string(o) +
                                     " has wrong endpoints"});
  }
  for (size_t g = 0; g < c.arrows.size(); ++g) {
    for (size_t f = 0; f < c.arrows.size(); ++f) {
      bool composable = c.arrows[f].tgt == c.arrows[g].src;
      auto gf = c.compose(int(g), int(f));
      if (composable != gf.has_value()) {
        out.push_back({"totality", "composite (" + std::to_string(g) + "," +
                                       std::to_string(f) +
                                       (composable ? ") missing" : ") bogus")});
        continue;
      }
      if (!gf) continue;
      if (c.arrows[size_t(*gf)].src != c.arrows[f].src ||
          c.arrows[size_t(*gf)].tgt != c.arrows[g].tgt)
        out.push_back({"typing", "composite has wrong endpoints"});
    }
  }
  for (size_t f = 0; f < c.arrows.size(); ++f) {
    int sf = c.arrows[f].src, tf = c.arrows[f].tgt;
    if (c.compose(int(f), c.ids[size_t(sf)]) != int(f) ||
        c.compose(c.ids[size_t(tf)], int(f)) != int(f))
      out.push_back({"unit", "identity laws fail at arrow " +
                                 std::to_string(f)});
    for (size_t g = 0; g < c.arrows.size(); ++g) {
      if (c.arrows[g].src != tf) continue;
      for (size_t h = 0; h < c.arrows.size(); ++h) {
        if (c.arrows[h].src != c.arrows[g].tgt) continue;
        auto left = c.compose(int(h), *c.compose(int(g), int(f)));
        auto right = c.compose(*c.compose(int(h), int(g)), int(f));
        if (left != right)
          out.push_back({"associativity",
                         "(" + std::to_string(h) + "," + std::to_string(g) +
                             "," + std::to_string(f) + ")"});
      }
    }
  }
  return out;
}

bool is_rigid_category(const FinCategory& c) {
  for (size_t u = 0; u < c.arrows.size(); ++u) {
    if (int(u) == c.ids[size_t(c.arrows[u].src)]) continue;
    for (size_t v = 0; v < c.arrows.size(); ++v) {
      if (c.arrows[v].src != c.arrows[u].tgt ||
          c.arrows[v].tgt != c.arrows[u].src)
        continue;
      if (c.compose(int(v), int(u)) == c.ids[size_t(c.arrows[u].src)] &&
          c.compose(int(u), int(v)) == c.ids[size_t(c.arrows[u].tgt)])
        return false;
    }
  }
  return true;
}

bool categories_isomorphic(const FinCategory& a, const FinCategory& b) {
  if (a.n_objects() != b.n_objects() || a.arrows.size() != b.arrows.size())
    return false;
  int n = a.n_objects();
  std::vector<int> obj(size_t(n), -1);
  std::vector<bool> used(size_t(n), false);
  std::function<bool(int)> place = [&](int o) -> bool {
    if (o == n) {
      // map arrows
      std::vector<int> amap(a.arrows.size(), -1);
      std::vector<bool> ause(b.arrows.size(), false);
      std::function<bool(size_t)> parrow = [&](size_t i) -> bool {
        if (i == a.arrows.size()) {
          for (size_t f = 0; f < a.arrows.size(); ++f)
            for (size_t g = 0; g < a.arrows.size(); ++g) {
              auto gf = a.compose(int(g), int(f));
              if (!gf) continue;
              auto im = b.compose(amap[g], amap[f]);
              if (!im || *im != amap[size_t(*gf)]) return false;
            }
          for (int x = 0; x < n; ++x)
            if (amap[size_t(a.ids[size_t(x)])] != b.ids[size_t(obj[size_t(x)])])
              return false;
          return true;
        }
        for (size_t j = 0; j < b.arrows.size(); ++j) {
          if (ause[j]) continue;
          if (b.arrows[j].src != obj[size_t(a.arrows[i].src)] ||
              b.arrows[j].tgt != obj[size_t(a.arrows[i].tgt)])
            continue;
          amap[i] = int(j);
          ause[j] = true;
          if (parrow(i + 1)) return true;
          ause[j] = false;
          amap[i] = -1;
        }
        return false;
      };
      return parrow(0);
    }
    for (int x = 0; x < n; ++x) {
      if (used[size_t(x)]) continue;
      obj[size_t(o)] = x;
      used[size_t(x)] = true;
      if (place(o + 1)) return true;
      used[size_t(x)] = false;
      obj[size_t(o)] = -1;
    }
    return false;
  };
  return place(0);
}

FinCategory contractible_groupoid(int n_objects) {
  FinCategory c;
  for (int i = 0; i < n_objects; ++i)
    c.objects.push_back("x" + std::to_string(i));
  // one arrow per ordered pair
  std::vector<std::vector<int>> idx(static_cast<size_t>(n_objects),
                                    std::vector<int>(size_t(n_objects)));
  for (int x = 0; x < n_objects; ++x)
    for (int y = 0; y < n_objects; ++y) {
      idx[size_t(x)][size_t(y)] = int(c.arrows.size());
      c.arrows.push_back({x, y,
                          "a" + std::to_string(x) + std::to_string(y)});
    }
  for (int x = 0; x < n_objects; ++x)
    c.ids.push_back(idx[size_t(x)][size_t(x)]);
  for (int x = 0; x < n_objects; ++x)
    for (int y = 0; y < n_objects; ++y)
      for (int z = 0; z < n_objects; ++z)
        c.comp[{idx[size_t(y)][size_t(z)], idx[size_t(x)][size_t(y)]}] =
            idx[size_t(x)][size_t(z)];
  return c;
}

// ------------------------------------------------------------------ operads

bool FinOperad::is_unit(int op) const {
  for (int u : unit)
    if (u == op) return true;
  return false;
}

std::optional<int> FinOperad::gamma(int op, const std::vector<int>& args) const {
  auto it = comp.find({op, args});
  if (it == comp.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinOperad::act(int op, const std::vector<int>& perm) const {
  if (flavour == Flavour::planar) {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != int(i)) return std::nullopt;
    return op;
  }
  auto it = sym.find({op, perm});
  if (it == sym.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FinOperad::ops_with_output(int colour) const {
  std::vector<int> out;
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].output == colour) out.push_back(int(i));
  return out;
}

std::vector<int> FinOperad::ops_with_signature(const std::vector<int>& inputs,
                                               int output) const {
  std::vector<int> out;
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].output == output && ops[i].inputs == inputs)
      out.push_back(int(i));
  return out;
}

std::vector<int> FinOperad::unary_ops(int from, int to) const {
  return ops_with_signature({from}, to);
}

namespace {

// all arg tuples (op indices) composable with op, in lexicographic order
void composable_tuples(const FinOperad& p, int op,
                       const std::function<void(const std::vector<int>&)>& f) {
  int n = p.op_arity(op);
  std::vector<std::vector<int>> pools;
  for (int i = 0; i < n; ++i)
    pools.push_back(p.ops_with_output(p.ops[size_t(op)].inputs[size_t(i)]));
  std::vector<size_t> idx(size_t(n), 0);
  for (;;) {
    std::vector<int> args;
    for (int i = 0; i < n; ++i) args.push_back(pools[size_t(i)][idx[size_t(i)]]);
    f(args);
    int i = n;
    bool done = (n == 0);
    while (i > 0) {
      --i;
      if (++idx[size_t(i)] < pools[size_t(i)].size()) break;
      idx[size_t(i)] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
}

std::string op_desc(const FinOperad& p, int op) {
  return p.ops[size_t(op)].name + "#" + std::to_string(op);
}

}  // namespace

std::vector<Violation> validate_operad(const FinOperad& p) {
  std::vector<Violation> out;
  // well-typed tables
  if (int(p.unit.size()) != p.n_colours())
    out.push_back({"units", "one unit per colour required"});
  for (int c = 0; c < p.n_colours() && c < int(p.unit.size()); ++c) {
    int u = p.unit[size_t(c)];
    if (p.ops[size_t(u)].inputs != std::vector<int>{c} ||
        p.ops[size_t(u)].output != c)
      out.push_back({"units", "unit of colour " + std::to_string(c) +
                                  " has wrong signature"});
  }
  // composition totality and typing
  for (size_t op = 0; op < p.ops.size(); ++op) {
    composable_tuples(p, int(op), [&](const std::vector<int>& args) {
      auto r = p.gamma(int(op), args);
      if (!r) {
        out.push_back({"totality",
                       "missing composite at " + op_desc(p, int(op))});
        return;
      }
      std::vector<int> ins;
      for (int a : args)
        ins.insert(ins.end(), p.ops[size_t(a)].inputs.begin(),
                   p.ops[size_t(a)].inputs.end());
      if (p.ops[size_t(*r)].inputs != ins ||
          p.ops[size_t(*r)].output != p.ops[op].output)
        out.push_back({"typing",
                       "composite at " + op_desc(p, int(op)) +
                           " has wrong signature"});
    });
  }
  // unit laws
  for (size_t op = 0; op < p.ops.size(); ++op) {
    std::vector<int> units;
    for (int c : p.ops[op].inputs) units.push_back(p.unit[size_t(c)]);
    if (p.gamma(int(op), units) != int(op))
      out.push_back({"unitality", "op(units) != op at " + op_desc(p, int(op))});
    if (p.gamma(p.unit[size_t(p.ops[op].output)], {int(op)}) != int(op))
      out.push_back({"unitality", "unit(op) != op at " + op_desc(p, int(op))});
  }
  // associativity
  for (const auto& [key, r] : p.comp) {
    const auto& [op, args] = key;
    // choose composable tuples for r by splitting per arg
    std::vector<std::vector<std::vector<int>>> arg_pools;  // per arg: tuples
    bool abort = false;
    for (int a : args) {
      std::vector<std::vector<int>> tuples;
      composable_tuples(p, a, [&](const std::vector<int>& t) {
        tuples.push_back(t);
      });
      if (tuples.empty()) abort = true;
      arg_pools.push_back(std::move(tuples));
    }
    if (abort) continue;  // some arg has an input colour with no ops: vacuous
    std::vector<size_t> idx(args.size(), 0);
    for (;;) {
      std::vector<int> flat;
      std::vector<int> inner;
      bool ok = true;
      for (size_t i = 0; i < args.size(); ++i) {
        const auto& t = arg_pools[i][idx[i]];
        auto g = p.gamma(args[i], t);
        if (!g) {
          ok = false;
          break;
        }
        inner.push_back(*g);
        flat.insert(flat.end(), t.begin(), t.end());
      }
      if (ok) {
        auto left = p.gamma(r, flat);
        auto right = p.gamma(int(op), inner);
        if (left != right)
          out.push_back({"associativity",
                         "nested composite mismatch at " + op_desc(p, op)});
      }
      size_t i = args.size();
      bool done = args.empty();
      while (i > 0) {
        --i;
        if (++idx[i] < arg_pools[i].size()) break;
        idx[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
      if (!out.empty() && out.size() > 50) return out;  // cap the report
    }
  }
  if (p.flavour == Flavour::symmetric) {
    // group action laws
    for (size_t op = 0; op < p.ops.size(); ++op) {
      int n = p.op_arity(int(op));
      for (const auto& s : all_permutations(n)) {
        auto r = p.act(int(op), s);
        if (!r) {
          out.push_back({"symmetry", "missing action at " + op_desc(p, int(op))});
          continue;
        }
        // typing
        std::vector<int> ins;
        for (int i = 0; i < n; ++i)
          ins.push_back(p.ops[op].inputs[size_t(s[size_t(i)])]);
        if (p.ops[size_t(*r)].inputs != ins ||
            p.ops[size_t(*r)].output != p.ops[op].output)
          out.push_back({"symmetry", "action typing at " + op_desc(p, int(op))});
        for (const auto& s2 : all_permutations(n)) {
          auto a = p.act(*r, s2);
          auto b = p.act(int(op), compose_perms(s, s2));
          if (a != b)
            out.push_back({"symmetry", "action composition at " +
                                           op_desc(p, int(op))});
        }
      }
    }
    // equivariance of composition
    for (const auto& [key, r] : p.comp) {
      const auto& [op, args] = key;
      int n = int(args.size());
      std::vector<int> lens;
      for (int a : args) lens.push_back(p.op_arity(a));
      for (const auto& s : all_permutations(n)) {
        auto ps = p.act(op, s);
        std::vector<int> perm_args;
        std::vector<int> perm_lens;
        for (int i = 0; i < n; ++i) {
          perm_args.push_back(args[size_t(s[size_t(i)])]);
          perm_lens.push_back(lens[size_t(s[size_t(i)])]);
        }
        auto lhs = p.gamma(*ps, perm_args);
        auto rhs = p.act(r, block_permutation(s, perm_lens));
        if (lhs != rhs)
          out.push_back({"equivariance", "at " + op_desc(p, op)});
        if (out.size() > 80) return out;
      }
    }
  }
  return out;
}

FinOperad eta_operad(Flavour flavour) {
  FinOperad p;
  p.flavour = flavour;
  p.colours = {"c"};
  p.ops.push_back({"1_c", {0}, 0});
  p.unit = {0};
  p.comp[{0, {0}}] = 0;
  if (flavour == Flavour::symmetric) p.sym[{0, {0}}] = 0;
  return p;
}

FinOperad category_as_operad(const FinCategory& c, Flavour flavour) {
  FinOperad p;
  p.flavour = flavour;
  p.colours = c.objects;
  for (const auto& a : c.arrows) p.ops.push_back({a.name, {a.src}, a.tgt});
  p.unit = c.ids;
  for (const auto& [gf, r] : c.comp) p.comp[{gf.first, {gf.second}}] = r;
  if (flavour == Flavour::symmetric)
    for (size_t op = 0; op < p.ops.size(); ++op) p.sym[{int(op), {0}}] = int(op);
  return p;
}

FinOperad j_operad(Flavour flavour) {
  return category_as_operad(contractible_groupoid(2), flavour);
}

FinOperad free_operad(const PlanarTree& t, Flavour flavour) {
  FinOperad p;
  p.flavour = flavour;
  for (int e = 0; e < t.n_edges(); ++e)
    p.colours.push_back("e" + std::to_string(e));
  auto list = operations_of_free_operad(t, flavour);
  std::map<SubtreeOp, int> index;
  for (size_t i = 0; i < list.size(); ++i) {
    const SubtreeOp& op = list[i];
    std::string name;
    if (op.is_identity()) {
      name = "1_e" + std::to_string(op.root_edge);
    } else {
      name = "r" + std::to_string(op.root_edge) + "m" +
             std::to_string(op.vmask) + "|";
      for (size_t k = 0; k < op.leaves.size(); ++k)
        name += (k ? "," : "") + std::to_string(op.leaves[k]);
    }
    p.ops.push_back({name, op.leaves, op.root_edge});
    index[op] = int(i);
  }
  for (int e = 0; e < t.n_edges(); ++e) p.unit.push_back(e);
  for (size_t i = 0; i < list.size(); ++i) {
    composable_tuples(p, int(i), [&](const std::vector<int>& args) {
      std::vector<SubtreeOp> sub;
      for (int a : args) sub.push_back(list[size_t(a)]);
      p.comp[{int(i), args}] = index.at(op_gamma(list[i], sub));
    });
    if (flavour == Flavour::symmetric) {
      for (const auto& s : all_permutations(int(list[i].leaves.size())))
        p.sym[{int(i), s}] = index.at(op_sigma(list[i], s));
    }
  }
  return p;
}

int free_operad_op_index(const FinOperad& p, const PlanarTree& t,
                         const SubtreeOp& op) {
  (void)t;
  for (size_t i = 0; i < p.ops.size(); ++i)
    if (p.ops[i].inputs == op.leaves && p.ops[i].output == op.root_edge) {
      // identities and regions are distinguished by the encoded name
      bool ident = p.ops[i].name.rfind("1_", 0) == 0;
      if (ident == op.is_identity()) {
        if (op.is_identity()) return int(i);
        if (p.ops[i].name.rfind("r" + std::to_string(op.root_edge) + "m" +
                                    std::to_string(op.vmask) + "|",
                                0) == 0)
          return int(i);
      }
    }
  throw std::invalid_argument("operation not present in free operad");
}

FinCategory underlying_category(const FinOperad& p) {
  FinCategory c;
  c.objects = p.colours;
  std::vector<int> arrow_of_op(p.ops.size(), -1);
  for (size_t op = 0; op < p.ops.size(); ++op) {
    if (p.op_arity(int(op)) != 1) continue;
    arrow_of_op[op] = int(c.arrows.size());
    c.arrows.push_back(
        {p.ops[op].inputs[0], p.ops[op].output, p.ops[op].name});
  }
  for (int col = 0; col < p.n_colours(); ++col)
    c.ids.push_back(arrow_of_op[size_t(p.unit[size_t(col)])]);
  for (const auto& [key, r] : p.comp) {
    const auto& [g, args] = key;
    if (args.size() != 1) continue;
    if (arrow_of_op[size_t(g)] < 0 || arrow_of_op[size_t(args[0])] < 0)
      continue;
    c.comp[{arrow_of_op[size_t(g)], arrow_of_op[size_t(args[0])]}] =
        arrow_of_op[size_t(r)];
  }
  return c;
}

bool is_rigid(const FinOperad& p) {
  return is_rigid_category(underlying_category(p));
}

// ------------------------------------------------------------- operad maps

namespace {

struct MapSearch {
  const FinOperad& p;
  const FinOperad& q;
  const MapBounds& bounds;
  std::vector<int> cmap, omap;
  std::vector<int> gens;
  std::vector<OperadMap> found;
  size_t nodes = 0;

  MapSearch(const FinOperad& p_, const FinOperad& q_, const MapBounds& b)
      : p(p_), q(q_), bounds(b) {
    cmap.assign(size_t(p.n_colours()), -1);
    omap.assign(p.ops.size(), -1);
    // greedy generating sequence: close under gamma and sym starting from
    // units, adding the first op not yet reachable
    std::vector<bool> closed(p.ops.size(), false);
    for (int u : p.unit) closed[size_t(u)] = true;
    auto close = [&] {
      bool more = true;
      while (more) {
        more = false;
        for (const auto& [key, r] : p.comp) {
          if (closed[size_t(r)]) continue;
          if (!closed[size_t(key.first)]) continue;
          bool all = true;
          for (int a : key.second)
            if (!closed[size_t(a)]) {
              all = false;
              break;
            }
          if (all) {
            closed[size_t(r)] = true;
            more = true;
          }
        }
        for (const auto& [key, r] : p.sym) {
          if (!closed[size_t(r)] && closed[size_t(key.first)]) {
            closed[size_t(r)] = true;
            more = true;
          }
        }
      }
    };
    close();
    for (size_t op = 0; op < p.ops.size(); ++op)
      if (!closed[op]) {
        gens.push_back(int(op));
        closed[op] = true;
        close();
      }
  }

  struct Undo {
    std::vector<int> cols;  // colours assigned
    std::vector<int> opsv;  // ops assigned
  };

  bool assign_colour(int c, int tc, Undo& u) {
    if (cmap[size_t(c)] >= 0) return cmap[size_t(c)] == tc;
    cmap[size_t(c)] = tc;
    u.cols.push_back(c);
    return assign_op(p.unit[size_t(c)], q.unit[size_t(tc)], u);
  }

  bool assign_op(int op, int target, Undo& u) {
    if (omap[size_t(op)] >= 0) return omap[size_t(op)] == target;
    // signature consistency drives colour assignments
    const auto& sig = p.ops[size_t(op)];
    const auto& tsig = q.ops[size_t(target)];
    if (sig.inputs.size() != tsig.inputs.size()) return false;
    omap[size_t(op)] = target;
    u.opsv.push_back(op);
    if (!assign_colour(sig.output, tsig.output, u)) return false;
    for (size_t i = 0; i < sig.inputs.size(); ++i)
      if (!assign_colour(sig.inputs[i], tsig.inputs[i], u)) return false;
    return true;
  }

  void undo(const Undo& u) {
    for (int c : u.cols) cmap[size_t(c)] = -1;
    for (int op : u.opsv) omap[size_t(op)] = -1;
  }

  bool propagate(Undo& u) {
    bool more = true;
    while (more) {
      more = false;
      for (const auto& [key, r] : p.comp) {
        if (omap[size_t(key.first)] < 0) continue;
        bool all = true;
        std::vector<int> targs;
        for (int a : key.second) {
          if (omap[size_t(a)] < 0) {
            all = false;
            break;
          }
          targs.push_back(omap[size_t(a)]);
        }
        if (!all) continue;
        auto img = q.gamma(omap[size_t(key.first)], targs);
        if (!img) return false;
        if (omap[size_t(r)] < 0) {
          if (!assign_op(r, *img, u)) return false;
          more = true;
        } else if (omap[size_t(r)] != *img) {
          return false;
        }
      }
      for (const auto& [key, r] : p.sym) {
        if (omap[size_t(key.first)] < 0) continue;
        auto img = q.act(omap[size_t(key.first)], key.second);
        if (!img) return false;
        if (omap[size_t(r)] < 0) {
          if (!assign_op(r, *img, u)) return false;
          more = true;
        } else if (omap[size_t(r)] != *img) {
          return false;
        }
      }
    }
    return true;
  }

  bool verify() const {
    for (size_t op = 0; op < p.ops.size(); ++op) {
      const auto& sig = p.ops[op];
      const auto& tsig = q.ops[size_t(omap[op])];
      if (tsig.output != cmap[size_t(sig.output)]) return false;
      if (tsig.inputs.size() != sig.inputs.size()) return false;
      for (size_t i = 0; i < sig.inputs.size(); ++i)
        if (tsig.inputs[i] != cmap[size_t(sig.inputs[i])]) return false;
    }
    for (int c = 0; c < p.n_colours(); ++c)
      if (omap[size_t(p.unit[size_t(c)])] != q.unit[size_t(cmap[size_t(c)])])
        return false;
    for (const auto& [key, r] : p.comp) {
      std::vector<int> targs;
      for (int a : key.second) targs.push_back(omap[size_t(a)]);
      if (q.gamma(omap[size_t(key.first)], targs) != omap[size_t(r)])
        return false;
    }
    for (const auto& [key, r] : p.sym)
      if (q.act(omap[size_t(key.first)], key.second) != omap[size_t(r)])
        return false;
    return true;
  }

  void run(size_t gi) {
    if (++nodes > bounds.max_nodes)
      throw BoundExceeded("operad map search exceeded node bound");
    if (gi < gens.size()) {
      int g = gens[size_t(gi)];
      if (omap[size_t(g)] >= 0) {
        run(gi + 1);
        return;
      }
      int n = p.op_arity(g);
      for (size_t h = 0; h < q.ops.size(); ++h) {
        if (q.op_arity(int(h)) != n) continue;
        Undo u;
        if (assign_op(g, int(h), u) && propagate(u)) run(gi + 1);
        undo(u);
      }
      return;
    }
    // remaining colours (not touched by any generator's closure)
    int c = -1;
    for (int i = 0; i < p.n_colours(); ++i)
      if (cmap[size_t(i)] < 0) {
        c = i;
        break;
      }
    if (c >= 0) {
      for (int tc = 0; tc < q.n_colours(); ++tc) {
        Undo u;
        if (assign_colour(c, tc, u) && propagate(u)) run(gens.size());
        undo(u);
      }
      return;
    }
    for (size_t op = 0; op < p.ops.size(); ++op)
      if (omap[op] < 0) return;  // unreachable op: defect, produce nothing
    if (!verify()) return;
    if (found.size() >= bounds.max_maps)
      throw BoundExceeded("operad map count exceeded bound");
    found.push_back(OperadMap{cmap, omap});
  }
};

}  // namespace

std::vector<OperadMap> operad_maps(const FinOperad& p, const FinOperad& q,
                                   const MapBounds& bounds) {
  if (p.flavour != q.flavour)
    throw std::invalid_argument("operad_maps needs matching flavours");
  MapSearch s(p, q, bounds);
  s.run(0);
  std::sort(s.found.begin(), s.found.end(),
            [](const OperadMap& a, const OperadMap& b) {
              if (a.colour_map != b.colour_map)
                return a.colour_map < b.colour_map;
              return a.op_map < b.op_map;
            });
  return s.found;
}

bool operads_isomorphic(const FinOperad& p, const FinOperad& q) {
  if (p.n_colours() != q.n_colours() || p.ops.size() != q.ops.size())
    return false;
  for (const auto& m : operad_maps(p, q)) {
    std::set<int> cimg(m.colour_map.begin(), m.colour_map.end());
    std::set<int> oimg(m.op_map.begin(), m.op_map.end());
    if (int(cimg.size()) == p.n_colours() && oimg.size() == p.ops.size())
      return true;
  }
  return false;
}

FinCategory internal_hom_category(const FinOperad& p, const FinOperad& q) {
  if (p.flavour != q.flavour)
    throw std::invalid_argument("internal hom needs matching flavours");
  auto maps = operad_maps(p, q);
  FinCategory c;
  for (size_t i = 0; i < maps.size(); ++i)
    c.objects.push_back("f" + std::to_string(i));
  // a morphism f -> g is a family alpha_c in q(f(c); g(c)) with
  //   g(op) o (alpha_{c_1}, ..., alpha_{c_n}) = alpha_d o f(op)
  struct Morph {
    int f, g;
    std::vector<int> alpha;  // per colour of p
  };
  std::vector<Morph> morphs;
  int ncol = p.n_colours();
  for (size_t fi = 0; fi < maps.size(); ++fi) {
    for (size_t gi = 0; gi < maps.size(); ++gi) {
      std::vector<std::vector<int>> cand(static_cast<size_t>(ncol));
      for (int cidx = 0; cidx < ncol; ++cidx)
        cand[size_t(cidx)] = q.unary_ops(maps[fi].colour_map[size_t(cidx)],
                                         maps[gi].colour_map[size_t(cidx)]);
      std::vector<int> alpha(size_t(ncol), -1);
      std::function<void(int)> rec = [&](int cidx) {
        if (cidx == ncol) {
          for (size_t op = 0; op < p.ops.size(); ++op) {
            std::vector<int> alphas;
            for (int in : p.ops[op].inputs)
              alphas.push_back(alpha[size_t(in)]);
            auto lhs = q.gamma(maps[gi].op_map[op], alphas);
            auto rhs = q.gamma(alpha[size_t(p.ops[op].output)],
                               {maps[fi].op_map[op]});
            if (!lhs || !rhs || *lhs != *rhs) return;
          }
          morphs.push_back({int(fi), int(gi), alpha});
          return;
        }
        for (int a : cand[size_t(cidx)]) {
          alpha[size_t(cidx)] = a;
          rec(cidx + 1);
        }
        alpha[size_t(cidx)] = -1;
      };
      rec(0);
    }
  }
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (size_t i = 0; i < morphs.size(); ++i) {
    c.arrows.push_back({morphs[i].f, morphs[i].g, "t" + std::to_string(i)});
    index[{morphs[i].f, morphs[i].g, morphs[i].alpha}] = int(i);
  }
  c.ids.assign(maps.size(), -1);
  for (size_t i = 0; i < morphs.size(); ++i) {
    if (morphs[i].f != morphs[i].g) continue;
    bool is_id = true;
    for (int cidx = 0; cidx < ncol; ++cidx)
      if (morphs[i].alpha[size_t(cidx)] !=
          q.unit[size_t(maps[size_t(morphs[i].f)].colour_map[size_t(cidx)])])
        is_id = false;
    if (is_id) c.ids[size_t(morphs[i].f)] = int(i);
  }
  for (size_t a = 0; a < morphs.size(); ++a)
    for (size_t b = 0; b < morphs.size(); ++b) {
      if (morphs[b].g != morphs[a].f) continue;  // compose a after b
      std::vector<int> alpha(static_cast<size_t>(ncol));
      bool ok = true;
      for (int cidx = 0; cidx < ncol && ok; ++cidx) {
        auto r = q.gamma(morphs[a].alpha[size_t(cidx)],
                         {morphs[b].alpha[size_t(cidx)]});
        if (!r)
          ok = false;
        else
          alpha[size_t(cidx)] = *r;
      }
      if (!ok) continue;
      auto it = index.find({morphs[b].f, morphs[a].g, alpha});
      if (it != index.end()) c.comp[{int(a), int(b)}] = it->second;
    }
  return c;
}

bool locality(const FinOperad& p, const std::optional<PlanarTree>& t) {
  if (t) {
    FinOperad free = free_operad(*t, p.flavour);
    return is_rigid_category(internal_hom_category(free, p));
  }
  FinOperad j = j_operad(p.flavour);
  auto maps = operad_maps(j, p);
  // precomposition with J -> eta sends the colour c to the constant map at c;
  // bijectivity means every map from J is such a constant
  for (const auto& m : maps) {
    if (m.colour_map[0] != m.colour_map[1]) return false;
    int u = p.unit[size_t(m.colour_map[0])];
    for (int im : m.op_map)
      if (im != u) return false;
  }
  return int(maps.size()) == p.n_colours();
}

FinOperad mirror_operad(const FinOperad& p) {
  if (p.flavour != Flavour::planar)
    throw std::invalid_argument("mirror_operad needs the planar flavour");
  FinOperad m = p;
  for (auto& op : m.ops) std::reverse(op.inputs.begin(), op.inputs.end());
  m.comp.clear();
  for (const auto& [key, r] : p.comp) {
    std::vector<int> args = key.second;
    std::reverse(args.begin(), args.end());
    m.comp[{key.first, args}] = r;
  }
  return m;
}

std::vector<OperadMap> nerve_at(const FinOperad& p, const PlanarTree& t) {
  return operad_maps(free_operad(t, p.flavour), p);
}

// ---------------------------------------------------------- classification

std::vector<std::pair<std::vector<int>, std::vector<int>>> all_suboperads(
    const FinOperad& p, const ClassifyBounds& bounds) {
  if (int(p.ops.size()) > bounds.max_ops_for_suboperads)
    throw BoundExceeded("operad too large for suboperad enumeration");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  int ncol = p.n_colours();
  if (ncol > 20) throw BoundExceeded("too many colours");
  for (uint32_t cset = 0; cset < (uint32_t(1) << ncol); ++cset) {
    std::vector<int> cols;
    std::vector<bool> has_col(size_t(ncol), false);
    for (int c = 0; c < ncol; ++c)
      if ((cset >> c) & 1) {
        cols.push_back(c);
        has_col[size_t(c)] = true;
      }
    std::vector<int> avail;  // non-unit ops with signature inside cols
    for (size_t op = 0; op < p.ops.size(); ++op) {
      if (p.is_unit(int(op))) continue;
      bool inside = has_col[size_t(p.ops[op].output)];
      for (int in : p.ops[op].inputs) inside = inside && has_col[size_t(in)];
      if (inside) avail.push_back(int(op));
    }
    if (int(avail.size()) > bounds.max_nonunit_for_suboperads)
      throw BoundExceeded("too many candidate operations");
    for (uint32_t oset = 0; oset < (uint32_t(1) << avail.size()); ++oset) {
      std::vector<bool> has_op(p.ops.size(), false);
      for (int c : cols) has_op[size_t(p.unit[size_t(c)])] = true;
      for (size_t i = 0; i < avail.size(); ++i)
        if ((oset >> i) & 1) has_op[size_t(avail[i])] = true;
      bool closed = true;
      for (const auto& [key, r] : p.comp) {
        if (!has_op[size_t(key.first)]) continue;
        bool all = true;
        for (int a : key.second) all = all && has_op[size_t(a)];
        if (all && !has_op[size_t(r)]) {
          closed = false;
          break;
        }
      }
      if (closed)
        for (const auto& [key, r] : p.sym) {
          if (has_op[size_t(key.first)] && !has_op[size_t(r)]) {
            closed = false;
            break;
          }
        }
      if (!closed) continue;
      std::vector<int> opsv;
      for (size_t op = 0; op < p.ops.size(); ++op)
        if (has_op[op]) opsv.push_back(int(op));
      out.push_back({cols, opsv});
    }
  }
  return out;
}

ClassifyReport classify_operad(const FinOperad& p,
                               const ClassifyBounds& bounds) {
  ClassifyReport r;
  r.is_discrete = true;
  for (size_t op = 0; op < p.ops.size(); ++op)
    if (!p.is_unit(int(op))) r.is_discrete = false;
  r.is_category = !operad_maps(p, eta_operad(p.flavour)).empty();
  try {
    auto subs = all_suboperads(p, bounds);
    bool all_proper_discrete = true;
    for (const auto& [cols, opsv] : subs) {
      bool proper = int(cols.size()) < p.n_colours() ||
                    opsv.size() < p.ops.size();
      if (!proper) continue;
      for (int op : opsv)
        if (!p.is_unit(op)) all_proper_discrete = false;
    }
    r.is_pseudo_corolla =
        (!r.is_discrete && all_proper_discrete) ? Tri::yes : Tri::no;
    r.note = "suboperad enumeration includes the empty suboperad";
  } catch (const BoundExceeded& e) {
    r.is_pseudo_corolla = Tri::indeterminate;
    r.note = std::string("suboperad enumeration aborted: ") + e.what();
  }
  if (r.is_pseudo_corolla == Tri::yes) {
    int arity = -1;
    for (size_t op = 0; op < p.ops.size(); ++op)
      if (!p.is_unit(int(op))) arity = p.op_arity(int(op));
    if (arity >= 0 && p.n_colours() == arity + 1) {
      FinOperad corolla =
          free_operad(standard_tree(StdTree::corolla, arity), p.flavour);
      if (operads_isomorphic(p, corolla)) r.corolla_arity = arity;
    }
  }
  return r;
}

// -------------------------------------------------------------------- JSON

std::string operad_to_json(const FinOperad& p) {
  json j;
  j["schema"] = "dendro/finoperad-1";
  j["flavour"] = flavour_name(p.flavour);
  j["colours"] = p.colours;
  json ops = json::array();
  for (size_t i = 0; i < p.ops.size(); ++i) {
    if (p.is_unit(int(i))) continue;
    json o;
    o["name"] = p.ops[i].name;
    json ins = json::array();
    for (int c : p.ops[i].inputs) ins.push_back(p.colours[size_t(c)]);
    o["inputs"] = ins;
    o["output"] = p.colours[size_t(p.ops[i].output)];
    ops.push_back(o);
  }
  j["operations"] = ops;
  // units are implicit on load and named after their colour
  auto opname = [&](int op) {
    if (p.is_unit(op)) return "1_" + p.colours[size_t(p.ops[size_t(op)].output)];
    return p.ops[size_t(op)].name;
  };
  json comps = json::array();
  for (const auto& [key, r] : p.comp) {
    bool outer_unit = p.is_unit(key.first);
    bool args_units = true;
    for (int a : key.second) args_units = args_units && p.is_unit(a);
    if (outer_unit || args_units) continue;  // unit laws are implicit
    json e;
    e["op"] = opname(key.first);
    json args = json::array();
    for (int a : key.second) args.push_back(opname(a));
    e["args"] = args;
    e["result"] = opname(r);
    comps.push_back(e);
  }
  j["composition"] = comps;
  json syms = json::array();
  for (const auto& [key, r] : p.sym) {
    bool ident = true;
    for (size_t i = 0; i < key.second.size(); ++i)
      ident = ident && key.second[i] == int(i);
    if (ident || p.is_unit(key.first)) continue;
    json e;
    e["op"] = opname(key.first);
    e["perm"] = key.second;
    e["result"] = opname(r);
    syms.push_back(e);
  }
  j["symmetry"] = syms;
  return j.dump(2);
}

FinOperad operad_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("schema") || j["schema"] != "dendro/finoperad-1")
    throw std::invalid_argument("unknown operad schema");
  FinOperad p;
  std::string fl = j.at("flavour");
  if (fl == "symmetric")
    p.flavour = Flavour::symmetric;
  else if (fl == "planar")
    p.flavour = Flavour::planar;
  else
    throw std::invalid_argument("unknown flavour: " + fl);
  std::map<std::string, int> colour_idx;
  for (const auto& c : j.at("colours")) {
    colour_idx[c] = int(p.colours.size());
    p.colours.push_back(c);
  }
  std::map<std::string, int> op_idx;
  // implicit units first
  for (int c = 0; c < p.n_colours(); ++c) {
    std::string n = "1_" + p.colours[size_t(c)];
    op_idx[n] = int(p.ops.size());
    p.unit.push_back(int(p.ops.size()));
    p.ops.push_back({n, {c}, c});
  }
  for (const auto& o : j.at("operations")) {
    std::string n = o.at("name");
    if (op_idx.count(n)) throw std::invalid_argument("duplicate op " + n);
    std::vector<int> ins;
    for (const auto& c : o.at("inputs")) ins.push_back(colour_idx.at(c));
    op_idx[n] = int(p.ops.size());
    p.ops.push_back({n, ins, colour_idx.at(std::string(o.at("output")))});
  }
  // unit composition laws
  for (size_t op = 0; op < p.ops.size(); ++op) {
    std::vector<int> units;
    for (int c : p.ops[op].inputs) units.push_back(p.unit[size_t(c)]);
    p.comp[{int(op), units}] = int(op);
    p.comp[{p.unit[size_t(p.ops[op].output)], {int(op)}}] = int(op);
  }
  if (j.contains("composition"))
    for (const auto& e : j["composition"]) {
      std::vector<int> args;
      for (const auto& a : e.at("args")) args.push_back(op_idx.at(a));
      p.comp[{op_idx.at(std::string(e.at("op"))), args}] =
          op_idx.at(std::string(e.at("result")));
    }
  if (p.flavour == Flavour::symmetric) {
    for (size_t op = 0; op < p.ops.size(); ++op) {
      std::vector<int> id(p.ops[op].inputs.size());
      for (size_t i = 0; i < id.size(); ++i) id[i] = int(i);
      p.sym[{int(op), id}] = int(op);
    }
    if (j.contains("symmetry"))
      for (const auto& e : j["symmetry"]) {
        std::vector<int> perm;
        for (const auto& k : e.at("perm")) perm.push_back(int(k));
        p.sym[{op_idx.at(std::string(e.at("op"))), perm}] =
            op_idx.at(std::string(e.at("result")));
      }
  }
  auto viol = validate_operad(p);
  if (!viol.empty())
    throw std::invalid_argument("operad fails validation: " + viol[0].law +
                                ": " + viol[0].detail);
  return p;
}

}  // namespace dendro
