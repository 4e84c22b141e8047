#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dendro/autocheck.hpp"
#include "dendro/finop.hpp"
#include "dendro/trees.hpp"

namespace dendro {

// A morphism of the tree category: an edge map together with, for each
// source vertex, an operation of the free operad on the target whose
// boundary matches the images of the vertex's edges.
struct OmegaMor {
  PlanarTree src, tgt;
  std::vector<int> edge_map;
  std::vector<SubtreeOp> vassign;  // per source vertex

  bool operator==(const OmegaMor& o) const = default;
  bool operator<(const OmegaMor& o) const;  // within a fixed hom-set
  std::string key() const;  // deterministic serialization
};

enum class HomRestrict { all, omega0 };

// Complete enumeration by backtracking: root edge image first, then vertex
// assignments outward from the root.  With omega0, vertices may only map to
// single-vertex regions in planar order (collection-level maps).
std::vector<OmegaMor> hom_trees(const PlanarTree& s, const PlanarTree& t,
                                Flavour flavour,
                                HomRestrict restrict_to = HomRestrict::all);

OmegaMor omega_identity(const PlanarTree& t);
bool omega_mor_valid(const OmegaMor& f, Flavour flavour);
OmegaMor omega_compose(const OmegaMor& g, const OmegaMor& f);
OmegaMor omega_from_edge_permutation(const PlanarTree& t,
                                     const std::vector<int>& perm);
OmegaMor omega_mirror_transport(const OmegaMor& f);  // M on morphisms

// Operad map free(src) -> free(tgt) with the same data.
OperadMap omega_to_operad_map(const OmegaMor& f, const FinOperad& free_src,
                              const FinOperad& free_tgt);

std::string omega_mor_to_json(const OmegaMor& f);

// Objects of the corolla slice of a tree: one per edge (a colour) and one
// per vertex (a generating corolla), with the corolla's root and leaf maps
// recorded as the vertex's boundary edges.
struct CorSlice {
  PlanarTree tree;
  int n_colours = 0;
  struct VertexObject {
    int vertex;
    int out_edge;
    std::vector<int> in_edges;
  };
  std::vector<VertexObject> corollas;
  int n_objects() const { return n_colours + int(corollas.size()); }
};

CorSlice cor_slice(const PlanarTree& t);

struct ConeReport {
  size_t n_morphisms = 0;
  size_t n_families = 0;
  bool bijective = false;
  std::string detail;
};

// Compares hom(t, u) with the independently enumerated compatible families
// over the corolla slice of t.
ConeReport check_cone_bijection(const PlanarTree& t, const PlanarTree& u,
                                Flavour flavour);

// Finite full subcategory of the tree category on an explicit object list.
class OmegaSkeleton {
 public:
  OmegaSkeleton(Flavour flavour, std::vector<PlanarTree> objects);

  Flavour flavour() const { return flavour_; }
  int n_objects() const { return int(objects_.size()); }
  const PlanarTree& object(int i) const { return objects_[size_t(i)]; }
  const std::vector<OmegaMor>& hom(int s, int t) const;
  int find_object(const PlanarTree& t) const;  // -1 if absent
  int find_mor(int s, int t, const OmegaMor& f) const;
  FinCatView view() const;
  std::string manifest() const;  // tree literals, one per line
  std::string content_hash() const;

 private:
  Flavour flavour_;
  std::vector<PlanarTree> objects_;
  mutable std::vector<std::vector<std::vector<OmegaMor>>> hom_;
  mutable std::vector<std::vector<std::map<std::pair<std::vector<int>, std::vector<SubtreeOp>>, int>>> index_;
};

OmegaSkeleton default_sigma_skeleton();    // η, C0, C1, C2, B3 (symmetric)
OmegaSkeleton default_omega_skeleton();    // canonical trees, <=3 vertices
OmegaSkeleton default_planar_skeleton();   // planar trees plus corollas to C5

// Finitely supported member of the product of tree automorphism groups:
// one edge permutation per skeleton object (identity by default).
struct SigmaOmega {
  std::vector<std::vector<int>> component;  // per object: edge permutation

  bool operator==(const SigmaOmega& o) const = default;
};

SigmaOmega sigma_identity(const OmegaSkeleton& sk);
std::vector<SigmaOmega> all_sigmas(const OmegaSkeleton& sk);
SigmaOmega sigma_mult(const OmegaSkeleton& sk, const SigmaOmega& a,
                      const SigmaOmega& b);
SigmaOmega sigma_inv(const OmegaSkeleton& sk, const SigmaOmega& a);

// f conjugated: sigma_tgt . f . sigma_src^{-1}.
OmegaMor apply_F_sigma(const OmegaSkeleton& sk, const SigmaOmega& sigma,
                       const OmegaMor& f);
FunctorData build_F_sigma(const OmegaSkeleton& sk, const SigmaOmega& sigma);

struct SigmaExtract {
  std::optional<SigmaOmega> sigma;
  std::string error;
};

// The unique automorphism family with sigma_T . c = F(c) for every colour c,
// or an error when none exists at some object.
SigmaExtract sigma_of_functor(const OmegaSkeleton& sk, const FunctorData& F);

FunctorData build_mirror_functor(const OmegaSkeleton& planar_sk);

struct PlanarSignature {
  std::vector<std::vector<int>> sigma_n;  // per requested arity
  bool compose_with_mirror = false;       // true when sigma_2 is the swap
  std::string error;
};

// Reads the arity-n leaf permutations off a planar skeleton functor; fails
// when a corolla root map is not preserved.
PlanarSignature planar_signature(const OmegaSkeleton& planar_sk,
                                 const FunctorData& F,
                                 const std::vector<int>& arities);

}  // namespace dendro
