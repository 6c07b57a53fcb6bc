#include "hopfseq/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfseq {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_legs(const std::vector<int>& legs, int order) {
  if (legs.empty()) throw std::invalid_argument("leg indices: empty set");
  std::vector<bool> seen(order + 1, false);
  for (int l : legs) {
    if (l < 1 || l > order) throw std::invalid_argument("leg index out of range");
    if (seen[l]) throw std::invalid_argument("leg index repeated");
    seen[l] = true;
  }
}

}  // namespace

Vec leg_apply(const Matrix& t, const std::vector<int>& legs, std::span<const Scalar> x,
              std::size_t n, int order) {
  check_legs(legs, order);
  const int arity = static_cast<int>(legs.size());
  if (t.rows() != t.cols() || t.rows() != ipow(n, arity))
    throw std::invalid_argument("leg_apply: map arity does not match number of legs");
  if (x.size() != ipow(n, order)) throw std::invalid_argument("leg_apply: tensor size mismatch");

  const Field* f = t.field();
  // Strides of each leg position in the flattened index (leg 1 is leftmost).
  std::vector<std::size_t> stride(order + 1);
  for (int l = 1; l <= order; ++l) stride[l] = ipow(n, order - l);

  std::vector<int> rest;
  for (int l = 1; l <= order; ++l)
    if (std::find(legs.begin(), legs.end(), l) == legs.end()) rest.push_back(l);

  const std::size_t slice = ipow(n, arity);
  Vec out = zero_vec(f, x.size());
  std::vector<std::size_t> rest_idx(rest.size(), 0);
  while (true) {
    std::size_t base = 0;
    for (std::size_t r = 0; r < rest.size(); ++r) base += rest_idx[r] * stride[rest[r]];

    // Gather the slice over the leg positions, in listed leg order.
    Vec in_slice = zero_vec(f, slice);
    for (std::size_t s = 0; s < slice; ++s) {
      std::size_t idx = base, rem = s;
      for (int a = arity - 1; a >= 0; --a) {
        idx += (rem % n) * stride[legs[a]];
        rem /= n;
      }
      in_slice[s] = x[idx];
    }
    Vec out_slice = t.apply(in_slice);
    for (std::size_t s = 0; s < slice; ++s) {
      std::size_t idx = base, rem = s;
      for (int a = arity - 1; a >= 0; --a) {
        idx += (rem % n) * stride[legs[a]];
        rem /= n;
      }
      out[idx] = out_slice[s];
    }

    // Advance the multi-index over the untouched legs.
    std::size_t r = rest.size();
    while (r > 0) {
      if (++rest_idx[r - 1] < n) break;
      rest_idx[r - 1] = 0;
      --r;
    }
    if (r == 0) break;
  }
  return out;
}

Vec embed_legs(std::span<const Scalar> x, const std::vector<int>& legs,
               std::span<const Scalar> unit, std::size_t n, int order) {
  check_legs(legs, order);
  const int m = static_cast<int>(legs.size());
  if (x.size() != ipow(n, m)) throw std::invalid_argument("embed_legs: tensor size mismatch");
  if (unit.size() != n) throw std::invalid_argument("embed_legs: unit vector size mismatch");
  const Field* f = unit.empty() ? nullptr : unit[0].field();

  std::vector<std::size_t> stride(order + 1);
  for (int l = 1; l <= order; ++l) stride[l] = ipow(n, order - l);
  std::vector<int> rest;
  for (int l = 1; l <= order; ++l)
    if (std::find(legs.begin(), legs.end(), l) == legs.end()) rest.push_back(l);

  Vec out = zero_vec(f, ipow(n, order));
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (x[s].is_zero()) continue;
    std::size_t base = 0, rem = s;
    for (int a = m - 1; a >= 0; --a) {
      base += (rem % n) * stride[legs[a]];
      rem /= n;
    }
    // Distribute the unit over the remaining legs.
    std::vector<std::size_t> rest_idx(rest.size(), 0);
    while (true) {
      std::size_t idx = base;
      Scalar c = x[s];
      for (std::size_t r = 0; r < rest.size(); ++r) {
        idx += rest_idx[r] * stride[rest[r]];
        c *= unit[rest_idx[r]];
      }
      if (!c.is_zero()) out[idx] += c;
      std::size_t r = rest.size();
      while (r > 0) {
        if (++rest_idx[r - 1] < n) break;
        rest_idx[r - 1] = 0;
        --r;
      }
      if (r == 0) break;
    }
  }
  return out;
}

Vec tensor_apply_pair(const Matrix& f, const Matrix& g, std::span<const Scalar> x, std::size_t n) {
  if (f.cols() != n || g.cols() != n) throw std::invalid_argument("tensor_apply_pair: shape mismatch");
  if (x.size() != n * n) throw std::invalid_argument("tensor_apply_pair: tensor size mismatch");
  const Field* fl = f.field();
  Vec out = zero_vec(fl, f.rows() * g.rows());
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    std::size_t i = p / n, j = p % n;
    for (std::size_t a = 0; a < f.rows(); ++a) {
      if (f.at(a, i).is_zero()) continue;
      Scalar c = x[p] * f.at(a, i);
      for (std::size_t b = 0; b < g.rows(); ++b)
        if (!g.at(b, j).is_zero()) out[a * g.rows() + b] += c * g.at(b, j);
    }
  }
  return out;
}

}  // namespace hopfseq
