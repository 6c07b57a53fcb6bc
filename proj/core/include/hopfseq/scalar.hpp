#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfseq/field.hpp"

namespace hopfseq {

/// An exact field element in canonical form:
///   rationals  — reduced fraction with positive denominator,
///   F_p        — residue in [0, p),
///   Q(z_n)     — polynomial in z of degree < deg Phi_n, reduced mod Phi_n.
class Scalar {
 public:
  static Scalar zero(const Field* f);
  static Scalar one(const Field* f);
  static Scalar of(const Field* f, long value);
  static Scalar of(const Field* f, const Rat& value);
  /// The class of z in Q(z_n); rejects other field kinds.
  static Scalar generator(const Field* f);
  /// Parses the literal syntax: "a/b" or "a" (rationals, prime fields),
  /// polynomials in z such as "1/2 + 3*z^2" (cyclotomic).
  static Scalar parse(const Field* f, const std::string& text);

  const Field* field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  Scalar inverse() const;  // throws on zero
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  /// Coefficient of z^i in the canonical representative (rationals: i = 0).
  Rat coeff(std::size_t i) const;

 private:
  explicit Scalar(const Field* f) : field_(f) {}
  void reduce_cyclotomic();
  void check_same_field(const Scalar& o) const;

  const Field* field_ = nullptr;
  std::vector<Rat> c_;     // rationals (size 1) and cyclotomic (size deg)
  std::uint64_t r_ = 0;    // prime-field residue
};

/// Returns z in Q(z_m) with z^n = 1 and z^k != 1 for 0 < k < n. Requires the
/// field to contain an order-n root: cyclotomic(m) with n | m, or any field
/// when n <= 2.
Scalar primitive_root_of_unity(const Field* f, std::uint32_t n);

/// One family of ring checks used by tests: a*(b+c) == a*b + a*c etc. are
/// exercised directly via the operators above.

}  // namespace hopfseq
