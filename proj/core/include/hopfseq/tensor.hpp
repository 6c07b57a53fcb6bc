#pragma once

#include "hopfseq/matrix.hpp"

namespace hopfseq {

/// Row-major flattening (i, j) -> i*n + j, fixed globally and by the file
/// format contract. Higher orders nest the same way.
inline std::size_t flatten(std::size_t i, std::size_t j, std::size_t n) { return i * n + j; }
inline std::pair<std::size_t, std::size_t> unflatten(std::size_t idx, std::size_t n) {
  return {idx / n, idx % n};
}

/// Applies a linear map T on n^t (t = legs.size(), 1 or 2) to the given legs
/// of an order-k tensor x in k^(n^k), identity on the remaining legs. Legs
/// are 1-based and applied in the order listed.
Vec leg_apply(const Matrix& t, const std::vector<int>& legs, std::span<const Scalar> x,
              std::size_t n, int order);

/// Embeds an order-m tensor into the given legs of an order-k tensor, placing
/// `unit` on every other leg; e.g. legs {2,3} of order 3 sends x to 1 (x) x.
Vec embed_legs(std::span<const Scalar> x, const std::vector<int>& legs,
               std::span<const Scalar> unit, std::size_t n, int order);

/// (f (x) g) applied to a dense order-2 tensor over k^n; f and g may be
/// rectangular (rows f.rows() x g.rows()).
Vec tensor_apply_pair(const Matrix& f, const Matrix& g, std::span<const Scalar> x, std::size_t n);

}  // namespace hopfseq
