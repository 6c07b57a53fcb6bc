#pragma once

#include <cstdint>

#include "hopfseq/constructions.hpp"

namespace hopfseq {

/// k -> C -> A -> B -> k with iota: C -> A and pi: A -> B. (Some texts letter
/// the middle algebra differently; this project fixes the C -> A -> B order.)
struct ExactSequence {
  HopfMorphism iota;
  HopfMorphism pi;
};

/// The four exactness conditions, each decided by exact linear algebra:
///  (1) iota injective, (2) pi surjective, (3) ker pi = A iota(C)^+,
///  (4) iota(C) = {x : (pi (x) id) Delta x = 1 (x) x};
/// plus structure verification of both morphisms.
Certificate verify_exact(const ExactSequence& seq);

/// Left and right one-sided Hopf kernels of a surjection.
struct HopfKernels {
  Subspace left;   // {x : (pi (x) id) Delta x = 1 (x) x}
  Subspace right;  // {x : (id (x) pi) Delta x = x (x) 1}
};
HopfKernels hopf_kernels(const HopfMorphism& pi);
bool is_normal(const HopfMorphism& pi);

/// A / (A iota(C)^+ A), after checking that the image is an ad-stable Hopf
/// subalgebra (S(x_(1)) im x_(2) inside im); throws on precondition failure.
struct Cokernel {
  Quotient quotient;
  Certificate precondition;
};
Cokernel hopf_cokernel(const HopfMorphism& iota);

/// Witness that A is free of rank r over the unital subalgebra C: elements
/// a_1 = 1, ..., a_r with C a_1 + ... + C a_r = A as a direct sum.
struct FreenessCertificate {
  Subspace subalgebra;
  std::vector<Vec> cofactors;
  std::size_t rank() const { return cofactors.size(); }
};

struct FreenessOutcome {
  std::optional<FreenessCertificate> certificate;
  std::string failure;  // "divisibility", "budget", "exhausted" when absent
  bool found() const { return certificate.has_value(); }
};

/// Greedy search with backtracking over basis vectors followed by seeded
/// pseudorandom candidates; a found certificate is re-verified by one rank
/// computation. The budget bounds candidate evaluations.
FreenessOutcome freeness_certificate(const HopfAlgebra& h, const Subspace& c,
                                     std::uint64_t budget = 1000000, std::uint64_t seed = 0);

}  // namespace hopfseq
