#pragma once

#include "hopfseq/hopf.hpp"

namespace hopfseq {

/// A linear map between Hopf algebras; matrix is target_dim x source_dim.
/// Structure preservation is certified by verify_morphism.
struct HopfMorphism {
  HopfPtr source;
  HopfPtr target;
  Matrix matrix;

  Vec apply(std::span<const Scalar> v) const { return matrix.apply(v); }
};

HopfMorphism identity_morphism(HopfPtr h);
HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f);  // g after f

/// Certifies the five structure-preservation identities on basis elements:
/// multiplicative, unital, comultiplicative, counital, antipode-compatible.
Certificate verify_morphism(const HopfMorphism& f);

Subspace morphism_image(const HopfMorphism& f);
Subspace morphism_kernel(const HopfMorphism& f);
bool is_injective(const HopfMorphism& f);
bool is_surjective(const HopfMorphism& f);

}  // namespace hopfseq
