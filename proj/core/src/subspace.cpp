#include "hopfseq/subspace.hpp"

#include <stdexcept>

namespace hopfseq {

Subspace Subspace::zero(const Field* f, std::size_t ambient) {
  return Subspace(f, ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(const Field* f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(f, ambient, Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix basis(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis.at(i, j) = r.mat.at(i, j);
  return Subspace(m.field(), m.cols(), std::move(basis), std::move(r.pivots));
}

Subspace Subspace::span(const Field* f, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(f, vectors, ambient));
}

std::vector<std::size_t> Subspace::nonpivots() const {
  std::vector<std::size_t> out;
  std::size_t t = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (t < pivots_.size() && pivots_[t] == j)
      ++t;
    else
      out.push_back(j);
  }
  return out;
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: ambient mismatch");
  Vec out(v.begin(), v.end());
  for (std::size_t t = 0; t < pivots_.size(); ++t) {
    Scalar c = out[pivots_[t]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_.at(t, j).is_zero()) out[j] -= c * basis_.at(t, j);
  }
  return out;
}

Vec Subspace::coords(std::span<const Scalar> v) const {
  if (!contains_vector(v)) throw std::invalid_argument("Subspace::coords: vector not a member");
  Vec out;
  out.reserve(dim());
  for (std::size_t t = 0; t < pivots_.size(); ++t) out.push_back(v[pivots_[t]]);
  return out;
}

bool Subspace::contains_vector(std::span<const Scalar> v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  return row_space(basis_.stacked_onto(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // Kernel of the stacked system [U^T | -V^T]: a solution (a, b) gives a
  // common vector U^T a = V^T b.
  const std::size_t ku = dim(), kv = o.dim();
  if (ku == 0 || kv == 0) return zero(field_, ambient_);
  Matrix m(field_, ambient_, ku + kv);
  for (std::size_t j = 0; j < ambient_; ++j) {
    for (std::size_t t = 0; t < ku; ++t) m.at(j, t) = basis_.at(t, j);
    for (std::size_t t = 0; t < kv; ++t) m.at(j, ku + t) = -o.basis_.at(t, j);
  }
  Subspace ker = kernel(m);
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec x = zero_vec(field_, ambient_);
    for (std::size_t t = 0; t < ku; ++t) axpy(x, ker.basis().at(i, t), basis_.row(t));
    vecs.push_back(std::move(x));
  }
  return span(field_, ambient_, vecs);
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const Field* f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(f, m.cols());
    v[j] = Scalar::one(f);
    for (std::size_t t = 0; t < r.pivots.size(); ++t) v[r.pivots[t]] = -r.mat.at(t, j);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vecs);
}

}  // namespace hopfseq
