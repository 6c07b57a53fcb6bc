#pragma once

#include "hopfseq/morphism.hpp"

namespace hopfseq {

/// The one-dimensional Hopf algebra k.
HopfPtr trivial_algebra(const Field* f);

/// The dual Hopf algebra: all structure tensors transposed. The double dual
/// has the original structure constants under the canonical identification.
HopfPtr dual_hopf(const HopfPtr& h);

/// Quotient by the subspace S: coordinates of the classes of the non-pivot
/// basis vectors. Rows are indexed by the non-pivot columns of S's RREF.
Matrix quotient_map_matrix(const Subspace& s);

/// Checks the Hopf-ideal conditions: two-sided ideal, counit kills it,
/// antipode-stable, and Delta(I) inside I (x) A + A (x) I.
Certificate certify_hopf_ideal(const HopfAlgebra& h, const Subspace& ideal);

struct Quotient {
  HopfPtr algebra;
  HopfMorphism projection;
  Subspace ideal;
  Certificate ideal_cert;
};

/// Hopf quotient by a certified Hopf ideal; throws naming the violated
/// condition when the ideal certification fails.
Quotient quotient_hopf(const HopfPtr& h, const Subspace& ideal);

struct SubHopf {
  HopfPtr algebra;
  HopfMorphism inclusion;
  Certificate cert;  // unital, mult-closed, coalgebra-closed, antipode-stable
};

/// Hopf subalgebra on the subspace M; throws when M is not a Hopf subalgebra.
SubHopf sub_hopf(const HopfPtr& h, const Subspace& m, const std::string& label_tag = "u");

/// Smallest subspace containing the seed that is a two-sided ideal stable
/// under the antipode (iterated closure; finite dimension guarantees
/// termination).
Subspace hopf_ideal_closure(const HopfAlgebra& h, const Subspace& seed);

/// Left ideal A * span(v) as a subspace (and the two-sided variant).
Subspace left_ideal(const HopfAlgebra& h, const Subspace& s);
Subspace two_sided_ideal(const HopfAlgebra& h, const Subspace& s);

// ----- Drinfeld twists -----

/// Checks invertibility, (eps (x) id) Psi = 1 = (id (x) eps) Psi, and the
/// identity (Psi (x) 1) ((Delta (x) id) Psi) = (1 (x) Psi) ((id (x) Delta) Psi)
/// that makes the conjugated coproduct coassociative.
Certificate verify_two_cocycle(const HopfAlgebra& h, std::span<const Scalar> psi);

/// Coboundary cocycle (u (x) u) Delta(u^{-1}) of an invertible u with
/// eps(u) = 1.
Vec coboundary_cocycle(const HopfAlgebra& h, std::span<const Scalar> u);

struct Twist {
  HopfPtr algebra;
  Certificate cert;
  bool antipode_by_conjugation = true;
};

/// Same multiplication, conjugated comultiplication Psi Delta(.) Psi^{-1}.
/// The antipode candidate U S(.) U^{-1} with U = m(id (x) S)(Psi) is verified;
/// if it fails the axiom suite, the antipode equation is solved linearly.
Twist drinfeld_twist(const HopfPtr& h, std::span<const Scalar> psi);

}  // namespace hopfseq
