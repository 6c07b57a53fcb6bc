#pragma once

#include "hopfseq/sequence.hpp"

namespace hopfseq {

/// Algebra center {x : x e_i = e_i x for all i}, cross-checked against the
/// adjoint characterization {x : Ad_{e_i}(x) = eps(e_i) x}; a disagreement
/// raises an internal-consistency error.
Subspace algebra_center(const HopfAlgebra& h);

/// Ad_x(y) = x_(1) y S(x_(2)).
Vec adjoint_action(const HopfAlgebra& h, std::span<const Scalar> x, std::span<const Scalar> y);
Matrix adjoint_action_matrix(const HopfAlgebra& h, std::span<const Scalar> x);

/// The Hopf center computed three ways: {x : Delta x in A (x) Z},
/// {x : Delta x in Z (x) A}, and {x in Z : Delta x in Z (x) Z}; certifies
/// their agreement and the Hopf-subalgebra flags of the result.
struct HopfCenterResult {
  Subspace subspace;
  Subspace center;
  Certificate cert;
};
HopfCenterResult hopf_center_full(const HopfPtr& h);
Subspace hopf_center(const HopfPtr& h);

/// Corestriction of a right coaction rho: V -> V (x) A with image in
/// V (x) Z(A) down to the Hopf center. rho is (v*n) x v with flattened rows
/// (v_index * n + a_index); the corestricted matrix has rows over the HZ
/// coordinates. Throws when rho is not a coaction or its image leaves
/// V (x) Z(A).
struct CorestrictResult {
  Matrix corestricted;  // (v * dim HZ) x v
  SubHopf hz;
  Certificate cert;
};
CorestrictResult corestrict_comodule(const HopfPtr& h, const Matrix& rho, int vdim);

/// The central exact sequence k -> HZ(A) -> A -> B -> k with its full
/// four-condition certificate and a freeness certificate attempt.
struct CentralReport {
  HopfPtr algebra;
  Subspace center;
  HopfCenterResult hz;
  SubHopf hz_sub;
  Quotient quotient;
  ExactSequence sequence;
  Certificate exactness;
  bool pi_normal = false;
  FreenessOutcome freeness;
  Certificate consistency;  // A HZ+ = A HZ+ A and friends
};
CentralReport central_sequence(const HopfPtr& h, std::uint64_t freeness_budget = 1000000,
                               std::uint64_t seed = 0);

}  // namespace hopfseq
