#include "dendro/autoeq.hpp"

namespace dendro {

namespace {
bool same_tables(const FunctorData& a, const FunctorData& b) {
  return a.obj == b.obj && a.mor == b.mor;
}

std::string first_mismatch(const FinCatView& view, const FunctorData& a,
                           const FunctorData& b) {
  if (a.obj != b.obj)
    for (size_t o = 0; o < a.obj.size(); ++o)
      if (a.obj[o] != b.obj[o])
        return "object " + view.object_names[o] + " maps differently";
  for (const auto& [key, table] : a.mor) {
    auto it = b.mor.find(key);
    if (it == b.mor.end() || it->second != table)
      return "tables differ on hom(" + view.object_names[size_t(key.first)] +
             ", " + view.object_names[size_t(key.second)] + ")";
  }
  return "tables differ";
}
}  // namespace

AutoeqClassification classify_omega_functor(const OmegaSkeleton& sk,
                                            const FunctorData& F) {
  AutoeqClassification out;
  if (!F.skeleton_id.empty() && F.skeleton_id != sk.content_hash()) {
    out.detail = "unknown skeleton reference " + F.skeleton_id;
    return out;
  }
  auto ext = sigma_of_functor(sk, F);
  if (!ext.sigma) {
    out.kind = AutoeqClassification::Kind::not_of_form;
    out.detail = ext.error;
    return out;
  }
  FunctorData ref = build_F_sigma(sk, *ext.sigma);
  if (!same_tables(ref, F)) {
    out.kind = AutoeqClassification::Kind::not_of_form;
    out.detail = "colour action matches a conjugation but " +
                 first_mismatch(sk.view(), F, ref);
    return out;
  }
  out.sigma = *ext.sigma;
  out.kind = *ext.sigma == sigma_identity(sk)
                 ? AutoeqClassification::Kind::identity
                 : AutoeqClassification::Kind::conjugation;
  return out;
}

AutoeqClassification classify_planar_functor(const OmegaSkeleton& sk,
                                             const FunctorData& F) {
  AutoeqClassification out;
  if (!F.skeleton_id.empty() && F.skeleton_id != sk.content_hash()) {
    out.detail = "unknown skeleton reference " + F.skeleton_id;
    return out;
  }
  FunctorData id = identity_functor(sk.view(), sk.content_hash());
  FunctorData m = build_mirror_functor(sk);
  bool is_id = same_tables(F, id);
  bool is_m = same_tables(F, m);
  if (is_id && is_m) {
    out.kind = AutoeqClassification::Kind::indeterminate;
    out.detail = "skeleton too small to separate the identity from the mirror";
  } else if (is_id) {
    out.kind = AutoeqClassification::Kind::identity;
  } else if (is_m) {
    out.kind = AutoeqClassification::Kind::mirror;
  } else {
    out.kind = AutoeqClassification::Kind::not_of_form;
    out.detail = first_mismatch(sk.view(), F, id);
  }
  return out;
}

AutoeqClassification classify_theta_functor(const ThetaSkeleton& sk,
                                            const FunctorData& F) {
  AutoeqClassification out;
  if (!F.skeleton_id.empty() && F.skeleton_id != sk.content_hash()) {
    out.detail = "unknown skeleton reference " + F.skeleton_id;
    return out;
  }
  auto ext = delta_of_functor(sk, F);
  if (!ext.delta) {
    out.kind = AutoeqClassification::Kind::not_of_form;
    out.detail = ext.error;
    return out;
  }
  FunctorData ref = build_op_delta(sk, *ext.delta);
  if (!same_tables(ref, F)) {
    out.kind = AutoeqClassification::Kind::not_of_form;
    out.detail = "disk behaviour matches a reversal but " +
                 first_mismatch(sk.view(), F, ref);
    return out;
  }
  out.delta = *ext.delta;
  bool trivial = true;
  for (int d : out.delta) trivial = trivial && d == 0;
  out.kind = trivial ? AutoeqClassification::Kind::identity
                     : AutoeqClassification::Kind::reversal;
  return out;
}

FunctorData build_reference_functor(const OmegaSkeleton& sk,
                                    ReferenceKind kind,
                                    const SigmaOmega* sigma) {
  switch (kind) {
    case ReferenceKind::identity:
      return identity_functor(sk.view(), sk.content_hash());
    case ReferenceKind::f_sigma:
      if (!sigma) throw std::invalid_argument("conjugation needs a sigma");
      return build_F_sigma(sk, *sigma);
    case ReferenceKind::mirror:
      return build_mirror_functor(sk);
    case ReferenceKind::op_delta:
      break;
  }
  throw std::invalid_argument("reference kind needs a table skeleton");
}

FunctorData build_reference_functor(const ThetaSkeleton& sk,
                                    ReferenceKind kind,
                                    const std::vector<int>* delta) {
  switch (kind) {
    case ReferenceKind::identity:
      return identity_functor(sk.view(), sk.content_hash());
    case ReferenceKind::op_delta:
      if (!delta) throw std::invalid_argument("reversal needs a delta");
      return build_op_delta(sk, *delta);
    case ReferenceKind::f_sigma:
    case ReferenceKind::mirror:
      break;
  }
  throw std::invalid_argument("reference kind needs a tree skeleton");
}

}  // namespace dendro
