#pragma once

#include "dendro/omega.hpp"
#include "dendro/theta.hpp"

namespace dendro {

// Outcome of comparing functor data against the reference families:
// conjugations for the tree category, identity/mirror for planar trees,
// orientation reversals for tables.
struct AutoeqClassification {
  enum class Kind {
    identity,
    conjugation,   // F_sigma for the returned sigma
    reversal,      // op_delta for the returned delta
    mirror,
    not_of_form,
    indeterminate,
  };
  Kind kind = Kind::indeterminate;
  SigmaOmega sigma;
  std::vector<int> delta;
  std::string detail;
};

// Decides by exhaustive table comparison, never by spot checks.
AutoeqClassification classify_omega_functor(const OmegaSkeleton& sk,
                                            const FunctorData& F);
AutoeqClassification classify_planar_functor(const OmegaSkeleton& sk,
                                             const FunctorData& F);
AutoeqClassification classify_theta_functor(const ThetaSkeleton& sk,
                                            const FunctorData& F);

enum class ReferenceKind { identity, f_sigma, op_delta, mirror };

FunctorData build_reference_functor(const OmegaSkeleton& sk,
                                    ReferenceKind kind,
                                    const SigmaOmega* sigma = nullptr);
FunctorData build_reference_functor(const ThetaSkeleton& sk,
                                    ReferenceKind kind,
                                    const std::vector<int>* delta = nullptr);

}  // namespace dendro
