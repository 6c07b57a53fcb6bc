#include "hopfseq/matrix.hpp"

#include <stdexcept>

#include "hopfseq/subspace.hpp"

namespace hopfseq {

Matrix::Matrix(const Field* f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (rows_ * cols_ > 0) a_.assign(rows_ * cols_, Scalar::zero(f));
}

Matrix Matrix::identity(const Field* f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field* f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged row");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& m = at(i, j);
      if (!m.is_zero() && !v[j].is_zero()) acc += m * v[j];
    }
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: dimension mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& m = at(i, k);
      if (m.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += m * o.at(k, j);
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::stacked_onto(const Matrix& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("Matrix::stacked_onto: column mismatch");
  Matrix out(field_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

RrefResult rref(Matrix m) {
  const Field* f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Scalar c = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= c * m.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  RrefResult r = rref(std::move(aug));
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t t = 0; t < r.pivots.size(); ++t) {
    if (r.pivots[t] == m.cols()) return std::nullopt;  // pivot in augmented column
    x[r.pivots[t]] = r.mat.at(t, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  if (m.rows() == 0) return m;
  Matrix aug(m.field(), m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols() + i) = Scalar::one(m.field());
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < m.rows() || r.pivots.back() >= m.cols()) return std::nullopt;
  Matrix inv(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) inv.at(i, j) = r.mat.at(i, m.cols() + j);
  return inv;
}

Vec zero_vec(const Field* f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void axpy(Vec& acc, const Scalar& c, std::span<const Scalar> v) {
  if (acc.size() != v.size()) throw std::invalid_argument("axpy: dimension mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += c * v[i];
}

Vec scaled(std::span<const Scalar> v, const Scalar& c) {
  Vec out(v.begin(), v.end());
  for (auto& s : out) s *= c;
  return out;
}

}  // namespace hopfseq
