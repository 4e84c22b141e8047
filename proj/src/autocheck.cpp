#include "dendro/autocheck.hpp"

#include <functional>

#include <json.hpp>

namespace dendro {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

FunctorData identity_functor(const FinCatView& cat, const std::string& id) {
  FunctorData F;
  F.skeleton_id = id;
  for (int o = 0; o < cat.n_objects; ++o) F.obj.push_back(o);
  for (int s = 0; s < cat.n_objects; ++s)
    for (int t = 0; t < cat.n_objects; ++t) {
      std::vector<int> table(static_cast<size_t>(cat.hom_size(s, t)));
      for (size_t i = 0; i < table.size(); ++i) table[i] = int(i);
      F.mor[{s, t}] = std::move(table);
    }
  return F;
}

FunctorData compose_functors(const FinCatView& cat, const FunctorData& outer,
                             const FunctorData& inner) {
  FunctorData F;
  F.skeleton_id = inner.skeleton_id;
  for (int o = 0; o < cat.n_objects; ++o)
    F.obj.push_back(outer.obj[size_t(inner.obj[size_t(o)])]);
  for (int s = 0; s < cat.n_objects; ++s)
    for (int t = 0; t < cat.n_objects; ++t) {
      std::vector<int> table(static_cast<size_t>(cat.hom_size(s, t)));
      for (size_t i = 0; i < table.size(); ++i)
        table[i] = outer.map_mor(inner.obj[size_t(s)], inner.obj[size_t(t)],
                                 inner.map_mor(s, t, int(i)));
      F.mor[{s, t}] = std::move(table);
    }
  return F;
}

std::vector<Violation> validate_functor(const FinCatView& cat,
                                        const FunctorData& F) {
  std::vector<Violation> out;
  if (int(F.obj.size()) != cat.n_objects) {
    out.push_back({"objects", "object table has the wrong size"});
    return out;
  }
  for (int o = 0; o < cat.n_objects; ++o)
    if (F.obj[size_t(o)] < 0 || F.obj[size_t(o)] >= cat.n_objects) {
      out.push_back({"objects", "object image out of range"});
      return out;
    }
  for (int s = 0; s < cat.n_objects; ++s)
    for (int t = 0; t < cat.n_objects; ++t) {
      auto it = F.mor.find({s, t});
      if (it == F.mor.end()) {
        out.push_back({"totality", "missing table for hom(" +
                                       cat.object_names[size_t(s)] + ", " +
                                       cat.object_names[size_t(t)] + ")"});
        continue;
      }
      int n = cat.hom_size(s, t);
      int m = cat.hom_size(F.obj[size_t(s)], F.obj[size_t(t)]);
      if (int(it->second.size()) != n) {
        out.push_back({"totality", "table size mismatch"});
        continue;
      }
      for (int f : it->second)
        if (f < 0 || f >= m) out.push_back({"typing", "morphism image out of range"});
    }
  if (!out.empty()) return out;
  for (int o = 0; o < cat.n_objects; ++o)
    if (F.map_mor(o, o, cat.id_index(o)) != cat.id_index(F.obj[size_t(o)]))
      out.push_back({"identity", "identity of " +
                                     cat.object_names[size_t(o)] +
                                     " not preserved"});
  for (int s = 0; s < cat.n_objects; ++s)
    for (int t = 0; t < cat.n_objects; ++t)
      for (int u = 0; u < cat.n_objects; ++u) {
        int nf = cat.hom_size(s, t), ng = cat.hom_size(t, u);
        for (int f = 0; f < nf; ++f)
          for (int g = 0; g < ng; ++g) {
            int gf = cat.compose(s, t, u, f, g);
            int lhs = F.map_mor(s, u, gf);
            int rhs =
                cat.compose(F.obj[size_t(s)], F.obj[size_t(t)],
                            F.obj[size_t(u)], F.map_mor(s, t, f),
                            F.map_mor(t, u, g));
            if (lhs != rhs) {
              out.push_back(
                  {"composition",
                   "composite not preserved on hom(" +
                       cat.object_names[size_t(s)] + ", " +
                       cat.object_names[size_t(t)] + ") x hom(" +
                       cat.object_names[size_t(t)] + ", " +
                       cat.object_names[size_t(u)] + ") at (" +
                       std::to_string(f) + ", " + std::to_string(g) + ")"});
              if (out.size() > 20) return out;
            }
          }
      }
  return out;
}

std::string functor_to_json(const FunctorData& F) {
  nlohmann::json j;
  j["schema"] = "dendro/functor-1";
  j["skeleton"] = F.skeleton_id;
  j["objects"] = F.obj;
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& [key, table] : F.mor) {
    nlohmann::json e;
    e["src"] = key.first;
    e["tgt"] = key.second;
    e["table"] = table;
    ms.push_back(e);
  }
  j["morphisms"] = ms;
  return j.dump(2);
}

FunctorData functor_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("schema") || j["schema"] != "dendro/functor-1")
    throw std::invalid_argument("unknown functor schema");
  FunctorData F;
  F.skeleton_id = j.at("skeleton");
  for (const auto& o : j.at("objects")) F.obj.push_back(int(o));
  for (const auto& e : j.at("morphisms")) {
    std::vector<int> table;
    for (const auto& v : e.at("table")) table.push_back(int(v));
    F.mor[{int(e.at("src")), int(e.at("tgt"))}] = std::move(table);
  }
  return F;
}

std::vector<NatTransfData> enumerate_nat_transfs(const FinCatView& cat,
                                                 const FunctorData& F,
                                                 const FunctorData& G) {
  std::vector<NatTransfData> out;
  int n = cat.n_objects;
  std::vector<int> comp(size_t(n), -1);
  // naturality of gamma against f: s -> t:
  //   gamma_t . F(f) = G(f) . gamma_s   in hom(F(s), G(t))
  auto natural = [&](int s, int t, int f) {
    int lhs = cat.compose(F.obj[size_t(s)], F.obj[size_t(t)], G.obj[size_t(t)],
                          F.map_mor(s, t, f), comp[size_t(t)]);
    int rhs = cat.compose(F.obj[size_t(s)], G.obj[size_t(s)], G.obj[size_t(t)],
                          comp[size_t(s)], G.map_mor(s, t, f));
    return lhs == rhs;
  };
  std::function<void(int)> rec = [&](int o) {
    if (o == n) {
      out.push_back(NatTransfData{comp});
      return;
    }
    int m = cat.hom_size(F.obj[size_t(o)], G.obj[size_t(o)]);
    for (int c = 0; c < m; ++c) {
      comp[size_t(o)] = c;
      bool ok = true;
      for (int p = 0; p <= o && ok; ++p) {
        for (int f = 0; f < cat.hom_size(p, o) && ok; ++f)
          ok = natural(p, o, f);
        for (int f = 0; f < cat.hom_size(o, p) && ok; ++f)
          ok = natural(o, p, f);
      }
      if (ok) rec(o + 1);
    }
    comp[size_t(o)] = -1;
  };
  rec(0);
  return out;
}

}  // namespace dendro
