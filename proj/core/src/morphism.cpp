#include "hopfseq/morphism.hpp"

#include <stdexcept>

namespace hopfseq {

HopfMorphism identity_morphism(HopfPtr h) {
  Matrix m = Matrix::identity(h->field(), h->dim());
  return {h, h, std::move(m)};
}

HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f) {
  if (g.source.get() != f.target.get())
    throw std::invalid_argument("compose: middle algebras differ");
  return {f.source, g.target, g.matrix * f.matrix};
}

Certificate verify_morphism(const HopfMorphism& f) {
  Certificate cert;
  const HopfAlgebra& a = *f.source;
  const HopfAlgebra& b = *f.target;
  if (f.matrix.rows() != static_cast<std::size_t>(b.dim()) ||
      f.matrix.cols() != static_cast<std::size_t>(a.dim()))
    throw std::invalid_argument("verify_morphism: matrix shape mismatch");
  if (a.field() != b.field()) throw std::invalid_argument("verify_morphism: field mismatch");
  const int n = a.dim();

  std::vector<Vec> fe(n);
  for (int i = 0; i < n; ++i) fe[i] = f.apply(a.basis_vec(i));

  {  // multiplicative
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = f.apply(a.mul(a.basis_vec(i), a.basis_vec(j)));
        Vec rhs = b.mul(fe[i], fe[j]);
        if (lhs != rhs) {
          ok = false;
          w = "(" + a.label(i) + ", " + a.label(j) + ")";
          break;
        }
      }
    cert.add("multiplicative", ok, w);
  }

  cert.add("unital", f.apply(a.unit_vec()) == b.unit_vec(), "");

  {  // comultiplicative: Delta_B f = (f (x) f) Delta_A
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec lhs = b.comult_of(fe[i]);
      Vec rhs = zero_vec(a.field(), static_cast<std::size_t>(b.dim()) * b.dim());
      for (const auto& [jk, c] : a.comult_sparse(i)) {
        auto [j, k] = unflatten(jk, n);
        for (int p = 0; p < b.dim(); ++p) {
          if (fe[j][p].is_zero()) continue;
          for (int q = 0; q < b.dim(); ++q)
            if (!fe[k][q].is_zero()) rhs[flatten(p, q, b.dim())] += c * fe[j][p] * fe[k][q];
        }
      }
      if (lhs != rhs) {
        ok = false;
        w = a.label(i);
      }
    }
    cert.add("comultiplicative", ok, w);
  }

  {  // counital
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      if (b.counit_of(fe[i]) != a.counit_vec()[i]) {
        ok = false;
        w = a.label(i);
      }
    cert.add("counital", ok, w);
  }

  {  // antipode-compatible
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec lhs = f.apply(a.antipode_of(a.basis_vec(i)));
      Vec rhs = b.antipode_of(fe[i]);
      if (lhs != rhs) {
        ok = false;
        w = a.label(i);
      }
    }
    cert.add("antipode_compatible", ok, w);
  }
  return cert;
}

Subspace morphism_image(const HopfMorphism& f) {
  return Subspace::row_space(f.matrix.transpose());
}

Subspace morphism_kernel(const HopfMorphism& f) { return kernel(f.matrix); }

bool is_injective(const HopfMorphism& f) { return rank(f.matrix) == f.matrix.cols(); }
bool is_surjective(const HopfMorphism& f) { return rank(f.matrix) == f.matrix.rows(); }

}  // namespace hopfseq
