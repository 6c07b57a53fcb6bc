#include <map>
#include <stdexcept>

#include "hopfseq/hopf.hpp"

namespace hopfseq {

namespace {

SparseVec dense_to_sparse(std::span<const Scalar> v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

}  // namespace

AxiomReport verify_axioms(const HopfAlgebra& h) {
  AxiomReport rep;
  const int n = h.dim();
  const Field* f = h.field();

  auto wit = [&](int i) { return h.label(i); };
  auto wit2 = [&](int i, int j) { return "(" + h.label(i) + ", " + h.label(j) + ")"; };

  {  // unit laws
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec ei = h.basis_vec(i);
      if (h.mul(h.unit_vec(), ei) != ei || h.mul(ei, h.unit_vec()) != ei) {
        ok = false;
        w = wit(i);
      }
    }
    rep.cert.add("unit_laws", ok, w);
  }

  {  // associativity
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec ei = h.basis_vec(i);
      for (int j = 0; j < n && ok; ++j) {
        Vec eij = h.mul(ei, h.basis_vec(j));
        Vec ej = h.basis_vec(j);
        for (int k = 0; k < n; ++k) {
          Vec lhs = h.mul(eij, h.basis_vec(k));
          Vec rhs = h.mul(ei, h.mul(ej, h.basis_vec(k)));
          if (lhs != rhs) {
            ok = false;
            w = "(" + h.label(i) + ", " + h.label(j) + ", " + h.label(k) + ")";
            break;
          }
        }
      }
    }
    rep.cert.add("associativity", ok, w);
  }

  {  // counit laws
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec left = zero_vec(f, n), right = zero_vec(f, n);
      for (const auto& [jk, c] : h.comult_sparse(i)) {
        auto [j, k] = unflatten(jk, n);
        left[k] += c * h.counit_vec()[j];
        right[j] += c * h.counit_vec()[k];
      }
      if (left != h.basis_vec(i) || right != h.basis_vec(i)) {
        ok = false;
        w = wit(i);
      }
    }
    rep.cert.add("counit_laws", ok, w);
  }

  {  // coassociativity
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      std::map<int, Scalar> lhs, rhs;
      for (const auto& [jk, c] : h.comult_sparse(i)) {
        auto [j, k] = unflatten(jk, n);
        for (const auto& [ab, d] : h.comult_sparse(static_cast<int>(j))) {
          auto [a, b] = unflatten(ab, n);
          int key = static_cast<int>((flatten(a, b, n)) * n + k);
          auto it = lhs.find(key);
          if (it == lhs.end())
            lhs.emplace(key, c * d);
          else
            it->second += c * d;
        }
        for (const auto& [ab, d] : h.comult_sparse(static_cast<int>(k))) {
          auto [a, b] = unflatten(ab, n);
          int key = static_cast<int>((flatten(j, a, n)) * n + b);
          auto it = rhs.find(key);
          if (it == rhs.end())
            rhs.emplace(key, c * d);
          else
            it->second += c * d;
        }
      }
      if (sparse_normalize(std::move(lhs)) != sparse_normalize(std::move(rhs))) {
        ok = false;
        w = wit(i);
      }
    }
    rep.cert.add("coassociativity", ok, w);
  }

  {  // comultiplication is an algebra map, and Delta(1) = 1 (x) 1
    bool ok = true;
    std::string w;
    Vec delta_unit = h.comult_of(h.unit_vec());
    if (delta_unit != h.t2_unit()) {
      ok = false;
      w = "unit";
    }
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n; ++j) {
        SparseVec lhs = sparse_t2_mul(h, h.comult_sparse(i), h.comult_sparse(j));
        Vec mij = h.mul(h.basis_vec(i), h.basis_vec(j));
        SparseVec rhs = dense_to_sparse(h.comult_of(mij));
        if (lhs != rhs) {
          ok = false;
          w = wit2(i, j);
          break;
        }
      }
    }
    rep.cert.add("comult_is_algebra_map", ok, w);
  }

  {  // counit is an algebra map
    bool ok = h.counit_of(h.unit_vec()).is_one();
    std::string w = ok ? "" : "unit";
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar lhs = h.counit_of(h.mul(h.basis_vec(i), h.basis_vec(j)));
        if (lhs != h.counit_vec()[i] * h.counit_vec()[j]) {
          ok = false;
          w = wit2(i, j);
          break;
        }
      }
    rep.cert.add("counit_is_algebra_map", ok, w);
  }

  {  // antipode axiom
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec left = zero_vec(f, n), right = zero_vec(f, n);
      for (const auto& [jk, c] : h.comult_sparse(i)) {
        auto [j, k] = unflatten(jk, n);
        axpy(left, c, h.mul(h.antipode_of(h.basis_vec(static_cast<int>(j))), h.basis_vec(static_cast<int>(k))));
        axpy(right, c, h.mul(h.basis_vec(static_cast<int>(j)), h.antipode_of(h.basis_vec(static_cast<int>(k)))));
      }
      Vec expect = scaled(h.unit_vec(), h.counit_vec()[i]);
      if (left != expect || right != expect) {
        ok = false;
        w = wit(i);
      }
    }
    rep.cert.add("antipode_axiom", ok, w);
  }

  rep.cert.add("antipode_invertible", true, "");  // enforced at construction
  return rep;
}

void require_verified(const HopfAlgebra& h) {
  switch (h.verify_state()) {
    case HopfAlgebra::VerifyState::ok: return;
    case HopfAlgebra::VerifyState::failed:
      throw std::runtime_error("algebra failed axiom verification");
    case HopfAlgebra::VerifyState::unknown: break;
  }
  AxiomReport rep = verify_axioms(h);
  h.set_verify_state(rep.pass() ? HopfAlgebra::VerifyState::ok : HopfAlgebra::VerifyState::failed);
  if (!rep.pass())
    throw std::runtime_error("algebra failed axiom verification: " + rep.cert.first_failure());
}

}  // namespace hopfseq
