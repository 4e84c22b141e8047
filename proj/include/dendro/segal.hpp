#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dendro/finop.hpp"
#include "dendro/omega.hpp"
#include "dendro/theta.hpp"

namespace dendro {

// Set-valued presheaf on a finite skeleton: a cardinality per object and a
// table per skeleton morphism, acting contravariantly.
struct FinitePresheaf {
  std::vector<int> card;
  // (s, t, morphism index) -> table X(t) -> X(s)
  std::map<std::tuple<int, int, int>, std::vector<int>> act;

  const std::vector<int>& action(int s, int t, int f) const {
    return act.at({s, t, f});
  }
};

// Contravariant functoriality over the given finite category view.
std::vector<Violation> validate_presheaf(const FinCatView& cat,
                                         const FinitePresheaf& X);

struct SegalReport {
  bool applicable = false;
  bool bijective = false;
  size_t object_count = 0;
  size_t family_count = 0;
  std::string detail;
};

// Segal map at a tree: X(T) against compatible families over the corolla
// slice of T.  Requires the bare edge and the relevant corollas to be in
// the skeleton.
SegalReport segal_check_tree(const OmegaSkeleton& sk, const FinitePresheaf& X,
                             int obj);

// Segal map at a table: X(T) against the iterated fibre product of the
// column disks over the glue disks.
SegalReport segal_check_table(const ThetaSkeleton& sk, const FinitePresheaf& X,
                              int obj);

// Nerve of an operad: value at T is the set of operad maps free(T) -> p,
// acting by precomposition.
FinitePresheaf nerve_presheaf(const FinOperad& p, const OmegaSkeleton& sk);

// Nerve of a category over a table skeleton: value at T is the set of
// composable chains of length the number of top blocks of T.
FinitePresheaf cat_nerve_presheaf(const FinCategory& c,
                                  const ThetaSkeleton& sk);

// Levelwise injection of presheaves over a common skeleton.
struct PresheafMono {
  FinitePresheaf sub;
  FinitePresheaf total;
  std::vector<std::vector<int>> inj;  // per object: X(i) -> Y(i)
};

std::vector<Violation> validate_mono(const FinCatView& cat,
                                     const PresheafMono& m);

struct NormalityReport {
  bool normal = false;
  std::string witness;  // first fixed point, when not normal
};

// Checks that tree automorphisms act freely on the complement of the image
// at every object.  Planar skeleta have trivial groups, hence are normal.
NormalityReport normality_check(const OmegaSkeleton& sk,
                                const PresheafMono& m);

std::string presheaf_to_json(const OmegaSkeleton& sk, const FinitePresheaf& X);
std::pair<OmegaSkeleton, FinitePresheaf> presheaf_from_json(
    const std::string& text);

}  // namespace dendro
