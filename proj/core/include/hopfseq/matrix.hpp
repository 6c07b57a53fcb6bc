#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopfseq/scalar.hpp"

namespace hopfseq {

using Vec = std::vector<Scalar>;

/// Dense matrix with all entries in one field. Row-major.
class Matrix {
 public:
  Matrix(const Field* f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field* f, std::size_t n);
  static Matrix from_rows(const Field* f, const std::vector<Vec>& rows, std::size_t cols);

  const Field* field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec apply(std::span<const Scalar> v) const;  // matrix * column vector
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix stacked_onto(const Matrix& below) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

/// Reduced row echelon form with deterministic leftmost-pivot elimination.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Particular solution of m x = rhs (free variables set to zero), or nullopt
/// when the system is infeasible.
std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> rhs);

std::optional<Matrix> inverse(const Matrix& m);

// Vector helpers used throughout the engines.
Vec zero_vec(const Field* f, std::size_t n);
bool is_zero_vec(std::span<const Scalar> v);
void axpy(Vec& acc, const Scalar& c, std::span<const Scalar> v);  // acc += c*v
Vec scaled(std::span<const Scalar> v, const Scalar& c);

}  // namespace hopfseq
