#pragma once

#include <optional>

#include "hopfseq/hopf.hpp"

namespace hopfseq {

/// Monic characteristic polynomial (ascending coefficients) via Hessenberg
/// reduction; works over any of the exact fields.
std::vector<Scalar> char_poly(Matrix a);

/// Roots of the polynomial that lie in its coefficient field. Exhaustive for
/// prime fields; rational-root search over Q; over Q(z_n) the candidates are
/// rational-root values of the Galois-norm polynomial times roots of unity,
/// every candidate verified exactly.
std::vector<Scalar> roots_in_field(const Field* f, const std::vector<Scalar>& poly);

/// All grouplikes with coordinates in the base field, found by simultaneous
/// eigenspace refinement of the slice operators (e_i^* (x) id) Delta and
/// verified against Delta g = g (x) g, eps(g) = 1.
std::vector<Vec> find_grouplikes(const HopfAlgebra& h);

/// Semisimplicity of the dual algebra via the trace-form radical; only
/// decided in characteristic zero (nullopt over F_p).
std::optional<bool> is_cosemisimple(const HopfAlgebra& h);

enum class GroupAlgebraStatus { yes, no, extension_required };

struct GroupAlgebraCheck {
  GroupAlgebraStatus status;
  std::vector<Vec> grouplikes;
  bool independent = true;
  bool span = false;
  std::string note;
};

/// Decides whether B is spanned by its grouplikes over the base field. When
/// they fail to span but B is cocommutative and cosemisimple, the verdict is
/// "field extension required" rather than a refusal.
GroupAlgebraCheck group_algebra_check(const HopfPtr& b);

}  // namespace hopfseq
