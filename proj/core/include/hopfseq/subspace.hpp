#pragma once

#include "hopfseq/matrix.hpp"

namespace hopfseq {

/// A subspace of k^n held as an RREF basis with no zero rows, so two
/// subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  static Subspace zero(const Field* f, std::size_t ambient);
  static Subspace full(const Field* f, std::size_t ambient);
  static Subspace span(const Field* f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  const Field* field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> nonpivots() const;

  bool contains_vector(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  /// v reduced modulo the subspace; zero iff v is a member.
  Vec reduce(std::span<const Scalar> v) const;
  /// Coordinates of a member vector in the RREF basis (pivot entries).
  Vec coords(std::span<const Scalar> v) const;
  /// Basis of the annihilator {phi : phi(v) = 0 for all v here} in dual
  /// coordinates; realized as the kernel of the basis matrix.
  Subspace annihilator() const;

 private:
  Subspace(const Field* f, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : field_(f), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  const Field* field_;
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of m as a subspace of k^cols, in RREF canonical form.
Subspace kernel(const Matrix& m);

}  // namespace hopfseq
