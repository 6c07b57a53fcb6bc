#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hopfseq {

using Rat = mpq_class;

/// Builds a canonical rational (reduced, positive denominator).
Rat make_rat(long num, long den = 1);

enum class FieldKind { rationals, prime, cyclotomic };

/// An exact base field: Q, F_p, or the cyclotomic field Q(z_n) presented as
/// Q[z]/(Phi_n). Instances are interned; compare by pointer.
class Field {
 public:
  static const Field* rationals();
  static const Field* prime(std::uint32_t p);
  static const Field* cyclotomic(std::uint32_t n);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }
  std::uint32_t prime_modulus() const { return p_; }
  std::uint32_t conductor() const { return n_; }

  /// Degree of the canonical representatives: 1 for Q and F_p, deg Phi_n otherwise.
  std::uint32_t degree() const { return degree_; }

  /// Monic Phi_n as a coefficient vector c[0..d], c[d] = 1 (cyclotomic only).
  const std::vector<Rat>& modulus() const { return phi_; }

  std::string description() const;

 private:
  Field() = default;
  FieldKind kind_ = FieldKind::rationals;
  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t degree_ = 1;
  std::vector<Rat> phi_;
};

/// Coefficients of the n-th cyclotomic polynomial, computed by the recursive
/// division formula and cached per n.
std::vector<Rat> cyclotomic_polynomial(std::uint32_t n);

bool is_prime(std::uint64_t p);

}  // namespace hopfseq
