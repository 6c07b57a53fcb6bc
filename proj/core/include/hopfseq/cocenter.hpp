#pragma once

#include "hopfseq/center.hpp"
#include "hopfseq/grouplikes.hpp"

namespace hopfseq {

/// ad(x) = x_(2) (x) S(x_(1)) x_(3), as a coefficient vector over A (x) A.
Vec ad_apply(const HopfAlgebra& h, std::span<const Scalar> x);

/// The adjoint coaction matrix (n^2 x n) with its coaction-law certificate:
/// (ad (x) id) ad = (id (x) Delta) ad and (id (x) eps) ad = id.
struct AdCoaction {
  Matrix matrix;
  Certificate laws;
};
AdCoaction adjoint_coaction(const HopfPtr& h);

/// {x : ad(x) = x (x) 1} and {x : Delta x = (id (x) S^2) Delta^op x}, computed
/// independently and certified equal.
struct AdInvariants {
  Subspace ad_fixed;
  Subspace twisted_flip_fixed;
  Certificate cert;
};
AdInvariants ad_invariants(const HopfPtr& h);

/// Multiplicativity of ad versus the containment ad(A) inside A (x) Z(A);
/// the two booleans are certified to agree, and on the positive side the
/// containment is strengthened to A (x) HZ(A).
struct AdHomomorphism {
  bool multiplicative = false;
  bool lands_in_center = false;
  std::string witness;
  Certificate cert;
};
AdHomomorphism ad_is_homomorphism(const HopfPtr& h);

/// C = span of the right tensor legs of ad; certified subcoalgebra with
/// ad(A) inside A (x) C.
struct CoefficientCoalgebra {
  Subspace c;
  Certificate cert;
};
CoefficientCoalgebra coefficient_coalgebra(const HopfPtr& h);

/// D = unital multiplicative closure of C, with flags: Delta(D) in D (x) D
/// (always certified), S(D) in D (reported, may fail), and stability under
/// y -> S(x_(1)) y x_(2) (always certified).
struct GeneratedSubalgebra {
  Subspace d;
  bool bialgebra = false;
  bool antipode_stable = false;
  Certificate cert;
};
GeneratedSubalgebra generated_subalgebra(const HopfPtr& h, const Subspace& c);

/// W = span{ f(x_(1)) x_(2) - f(x_(2)) x_(1) } over dual-basis functionals f;
/// a quotient is cocentral iff its kernel contains W.
Subspace cocentral_subspace(const HopfPtr& h);

/// Whether (id (x) q) Delta = (id (x) q) Delta^op for a morphism q out of h.
bool is_cocentral(const HopfMorphism& q);

/// The Hopf cocenter computed by finite-dimensional duality: ker pi is the
/// annihilator of the Hopf center of the dual. Certifies that pi is
/// cocentral, that W and its ideal-antipode closure sit inside ker pi, and
/// that the quotient is cocommutative.
struct Cocenter {
  HopfPtr hc;
  HopfMorphism pi;
  Subspace kernel_subspace;
  HopfPtr dual;
  Subspace dual_hopf_center;
  Certificate cert;
};
Cocenter hopf_cocenter(const HopfPtr& h);

/// Factors a cocentral q through the cocenter projection: h with h pi = q.
/// Throws when q is not cocentral or no factorization exists; the solver
/// certifies uniqueness via the surjectivity of pi.
HopfMorphism factor_through_cocenter(const Cocenter& coc, const HopfMorphism& q,
                                     Certificate* cert_out = nullptr);

/// The cocentral exact sequence k -> C' -> A -> HC -> k where C' is the left
/// Hopf kernel of pi; checks normality, D inside C' (with the equality
/// reported), runs the four-condition verifier, and attempts freeness.
struct CocenterReport {
  HopfPtr algebra;
  AdCoaction ad;
  CoefficientCoalgebra coeff;
  GeneratedSubalgebra gen;
  Subspace w;
  Cocenter cocenter;
  HopfKernels kernels;
  bool normal = false;
  bool d_equals_hopf_kernel = false;
  SubHopf kernel_sub;
  ExactSequence sequence;
  Certificate exactness;
  FreenessOutcome freeness;
  Certificate consistency;
};
CocenterReport cocentral_sequence(const HopfPtr& h, std::uint64_t freeness_budget = 1000000,
                                  std::uint64_t seed = 0);

/// Cocenter of a subcoalgebra C of h: the dual of the center of the dual
/// algebra C*. Returns the kernel of C -> cz(C) inside the ambient space and
/// the dimension of cz(C).
struct CoalgebraCocenter {
  Subspace kernel_in_ambient;
  std::size_t cz_dim = 0;
  Certificate cert;
};
CoalgebraCocenter coalgebra_cocenter(const HopfPtr& h, const Subspace& c);

}  // namespace hopfseq
