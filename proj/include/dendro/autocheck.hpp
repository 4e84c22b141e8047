#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dendro/finop.hpp"

namespace dendro {

// Finite category presented by indexed hom-sets; the concrete skeleta
// (trees, planar trees, tables) all expose this view.
struct FinCatView {
  int n_objects = 0;
  std::vector<std::string> object_names;
  // number of morphisms s -> t
  std::function<int(int, int)> hom_size;
  // index of the identity inside hom(o, o)
  std::function<int(int)> id_index;
  // (s, t, u, f in hom(s,t), g in hom(t,u)) -> index of g.f in hom(s,u)
  std::function<int(int, int, int, int, int)> compose;
};

// A functor on a finite full subcategory, as explicit tables.
struct FunctorData {
  std::string skeleton_id;
  std::vector<int> obj;                             // object -> object
  std::map<std::pair<int, int>, std::vector<int>> mor;  // hom(s,t) -> hom table

  int map_mor(int s, int t, int f) const {
    return mor.at({s, t})[size_t(f)];
  }
};

FunctorData identity_functor(const FinCatView& cat, const std::string& id);
FunctorData compose_functors(const FinCatView& cat, const FunctorData& outer,
                             const FunctorData& inner);

std::vector<Violation> validate_functor(const FinCatView& cat,
                                        const FunctorData& F);

// A natural transformation F -> G: for each object o, an index into
// hom(F(o), G(o)).
struct NatTransfData {
  std::vector<int> component;
};

std::vector<NatTransfData> enumerate_nat_transfs(const FinCatView& cat,
                                                 const FunctorData& F,
                                                 const FunctorData& G);

// Functor files (schema "dendro/functor-1") reference their skeleton by
// content hash.
std::string functor_to_json(const FunctorData& F);
FunctorData functor_from_json(const std::string& text);

uint64_t fnv1a64(const std::string& s);

}  // namespace dendro
