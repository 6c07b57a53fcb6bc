#include "hopfseq/cocenter.hpp"

#include <map>
#include <stdexcept>

namespace hopfseq {

namespace {

// Sparse triples of ad(e_i) from the two-step coproduct expansion.
SparseVec ad_column_sparse(const HopfAlgebra& h, int i) {
  const int n = h.dim();
  std::map<int, Scalar> acc;
  for (const auto& [ab, c] : h.comult_sparse(i)) {
    auto [a, b] = unflatten(ab, n);
    for (const auto& [jk, d] : h.comult_sparse(static_cast<int>(a))) {
      auto [j, k] = unflatten(jk, n);
      // term e_k (x) S(e_j) e_b
      Vec tail = h.mul(h.antipode_of(h.basis_vec(static_cast<int>(j))), h.basis_vec(static_cast<int>(b)));
      for (int t = 0; t < n; ++t) {
        if (tail[t].is_zero()) continue;
        int key = static_cast<int>(flatten(k, t, n));
        Scalar v = c * d * tail[t];
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, v);
        else
          it->second += v;
      }
    }
  }
  return sparse_normalize(std::move(acc));
}

Matrix counit_row(const HopfAlgebra& h) {
  Matrix eps(h.field(), 1, h.dim());
  for (int i = 0; i < h.dim(); ++i) eps.at(0, i) = h.counit_vec()[i];
  return eps;
}

}  // namespace

Vec ad_apply(const HopfAlgebra& h, std::span<const Scalar> x) {
  const int n = h.dim();
  Vec out = zero_vec(h.field(), static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [key, c] : ad_column_sparse(h, i)) out[key] += x[i] * c;
  }
  return out;
}

AdCoaction adjoint_coaction(const HopfPtr& h) {
  require_verified(*h);
  const int n = h->dim();
  const Field* f = h->field();
  std::vector<SparseVec> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = ad_column_sparse(*h, i);

  AdCoaction res{Matrix(f, static_cast<std::size_t>(n) * n, n), {}};
  for (int i = 0; i < n; ++i)
    for (const auto& [key, c] : cols[i]) res.matrix.at(key, i) += c;

  auto add = [](std::map<long long, Scalar>& m, long long key, const Scalar& c) {
    auto it = m.find(key);
    if (it == m.end())
      m.emplace(key, c);
    else
      it->second += c;
  };

  {  // (ad (x) id) ad = (id (x) Delta) ad, on every basis element
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      std::map<long long, Scalar> lhs, rhs;
      for (const auto& [key, c] : cols[i]) {
        auto [a, b] = unflatten(key, n);
        for (const auto& [key2, d] : cols[static_cast<int>(a)]) {
          auto [u, v] = unflatten(key2, n);
          add(lhs, (static_cast<long long>(u) * n + v) * n + static_cast<long long>(b), c * d);
        }
        for (const auto& [jk, d] : h->comult_sparse(static_cast<int>(b))) {
          auto [j, k] = unflatten(jk, n);
          add(rhs, (static_cast<long long>(a) * n + j) * n + static_cast<long long>(k), c * d);
        }
      }
      for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
      for (auto it = rhs.begin(); it != rhs.end();)
        it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
      if (!(lhs == rhs)) {
        ok = false;
        w = h->label(i);
      }
    }
    res.laws.add("coaction_law", ok, w);
  }

  {  // (id (x) eps) ad = id
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec img = zero_vec(f, n);
      for (const auto& [key, c] : cols[i]) {
        auto [a, b] = unflatten(key, n);
        img[a] += c * h->counit_vec()[b];
      }
      if (img != h->basis_vec(i)) {
        ok = false;
        w = h->label(i);
      }
    }
    res.laws.add("counit_law", ok, w);
  }
  if (!res.laws.all_pass())
    throw std::runtime_error("adjoint_coaction: coaction law failed: " + res.laws.first_failure());
  return res;
}

AdInvariants ad_invariants(const HopfPtr& h) {
  require_verified(*h);
  const int n = h->dim();
  const Field* f = h->field();
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  Matrix sys1(f, nn, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [key, c] : ad_column_sparse(*h, i)) sys1.at(key, i) += c;
    for (int u = 0; u < n; ++u)
      if (!h->unit_vec()[u].is_zero()) sys1.at(flatten(i, u, n), i) -= h->unit_vec()[u];
  }
  Subspace fixed = kernel(sys1);

  // Delta x - (id (x) S^2) Delta^op x
  const Matrix s2 = h->antipode_matrix() * h->antipode_matrix();
  Matrix sys2(f, nn, n);
  for (int i = 0; i < n; ++i)
    for (const auto& [jk, c] : h->comult_sparse(i)) {
      auto [j, k] = unflatten(jk, n);
      sys2.at(flatten(j, k, n), i) += c;
      // flip to e_k (x) e_j then S^2 on the second leg
      for (int u = 0; u < n; ++u)
        if (!s2.at(u, j).is_zero()) sys2.at(flatten(k, u, n), i) -= c * s2.at(u, static_cast<int>(j));
    }
  Subspace twisted = kernel(sys2);

  AdInvariants res{fixed, twisted, {}};
  res.cert.add("characterizations_agree", fixed == twisted,
               fixed == twisted ? "" : "dims " + std::to_string(fixed.dim()) + " vs " +
                                           std::to_string(twisted.dim()));
  if (!res.cert.all_pass())
    throw std::runtime_error("ad_invariants: characterizations disagree");
  return res;
}

AdHomomorphism ad_is_homomorphism(const HopfPtr& h) {
  require_verified(*h);
  const int n = h->dim();
  AdHomomorphism res;

  std::vector<SparseVec> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = ad_column_sparse(*h, i);

  {  // multiplicativity on all basis pairs
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        Vec prod_vec = h->mul(h->basis_vec(i), h->basis_vec(j));
        std::map<int, Scalar> expect;
        for (int t = 0; t < n; ++t) {
          if (prod_vec[t].is_zero()) continue;
          for (const auto& [key, c] : cols[t]) {
            auto it = expect.find(key);
            if (it == expect.end())
              expect.emplace(key, prod_vec[t] * c);
            else
              it->second += prod_vec[t] * c;
          }
        }
        SparseVec lhs = sparse_normalize(std::move(expect));
        SparseVec rhs = sparse_t2_mul(*h, cols[i], cols[j]);
        if (lhs != rhs) {
          ok = false;
          w = "(" + h->label(i) + ", " + h->label(j) + ")";
          break;
        }
      }
    res.multiplicative = ok;
    if (!ok) res.witness = w;
  }

  Subspace z = algebra_center(*h);
  {  // containment ad(A) inside A (x) Z(A)
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      // second legs must lie in Z
      std::vector<Vec> slices(n, zero_vec(h->field(), n));
      for (const auto& [key, c] : cols[i]) {
        auto [a, b] = unflatten(key, n);
        slices[a][b] += c;
      }
      for (int a = 0; a < n && ok; ++a)
        if (!is_zero_vec(slices[a]) && !z.contains_vector(slices[a])) ok = false;
    }
    res.lands_in_center = ok;
  }

  res.cert.add("criterion_agreement", res.multiplicative == res.lands_in_center,
               res.multiplicative != res.lands_in_center ? res.witness : "");
  if (res.multiplicative) {
    Subspace hz = hopf_center(h);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<Vec> slices(n, zero_vec(h->field(), n));
      for (const auto& [key, c] : cols[i]) {
        auto [a, b] = unflatten(key, n);
        slices[a][b] += c;
      }
      for (int a = 0; a < n && ok; ++a)
        if (!is_zero_vec(slices[a]) && !hz.contains_vector(slices[a])) ok = false;
    }
    res.cert.add("coaction_of_hopf_center", ok, "");
  }
  if (!res.cert.all_pass())
    throw std::runtime_error("ad_is_homomorphism: criterion certificate failed");
  return res;
}

CoefficientCoalgebra coefficient_coalgebra(const HopfPtr& h) {
  require_verified(*h);
  const int n = h->dim();
  const Field* f = h->field();
  std::vector<Vec> slices;
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> rows(n, zero_vec(f, n));
    for (const auto& [key, c] : ad_column_sparse(*h, i)) {
      auto [a, b] = unflatten(key, n);
      rows[a][b] += c;
    }
    for (auto& r : rows)
      if (!is_zero_vec(r)) slices.push_back(std::move(r));
  }
  CoefficientCoalgebra res{Subspace::span(f, n, slices), {}};

  {  // subcoalgebra: Delta(C) in C (x) C
    Matrix q = quotient_map_matrix(res.c);
    Matrix id = Matrix::identity(f, n);
    bool ok = true;
    std::string w;
    for (std::size_t t = 0; t < res.c.dim() && ok; ++t) {
      Vec dv = h->comult_of(res.c.basis().row(t));
      if (!is_zero_vec(tensor_apply_pair(q, id, dv, n)) ||
          !is_zero_vec(tensor_apply_pair(id, q, dv, n))) {
        ok = false;
        w = "row " + std::to_string(t);
      }
    }
    res.cert.add("subcoalgebra", ok, w);
  }
  {  // ad(A) inside A (x) C
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<Vec> rows(n, zero_vec(f, n));
      for (const auto& [key, c] : ad_column_sparse(*h, i)) {
        auto [a, b] = unflatten(key, n);
        rows[a][b] += c;
      }
      for (int a = 0; a < n; ++a)
        if (!is_zero_vec(rows[a]) && !res.c.contains_vector(rows[a])) {
          ok = false;
          w = h->label(i);
          break;
        }
    }
    res.cert.add("ad_lands_in_coefficients", ok, w);
  }
  if (!res.cert.all_pass())
    throw std::runtime_error("coefficient_coalgebra: certification failed: " +
                             res.cert.first_failure());
  return res;
}

GeneratedSubalgebra generated_subalgebra(const HopfPtr& h, const Subspace& c) {
  require_verified(*h);
  const int n = h->dim();
  const Field* f = h->field();

  std::vector<Vec> gens;
  gens.push_back(h->unit_vec());
  for (std::size_t t = 0; t < c.dim(); ++t) gens.push_back(c.basis().row(t));
  Subspace d = Subspace::span(f, n, gens);
  while (true) {
    std::vector<Vec> vecs;
    for (std::size_t s = 0; s < d.dim(); ++s) {
      vecs.push_back(d.basis().row(s));
      for (std::size_t t = 0; t < d.dim(); ++t)
        vecs.push_back(h->mul(d.basis().row(s), d.basis().row(t)));
    }
    Subspace next = Subspace::span(f, n, vecs);
    if (next.dim() == d.dim()) break;
    d = std::move(next);
  }

  GeneratedSubalgebra res{d, false, false, {}};
  {
    Matrix q = quotient_map_matrix(d);
    Matrix id = Matrix::identity(f, n);
    bool ok = true;
    for (std::size_t t = 0; t < d.dim() && ok; ++t) {
      Vec dv = h->comult_of(d.basis().row(t));
      if (!is_zero_vec(tensor_apply_pair(q, id, dv, n)) ||
          !is_zero_vec(tensor_apply_pair(id, q, dv, n)))
        ok = false;
    }
    res.bialgebra = ok;
    res.cert.add("bialgebra", ok, "");
  }
  {
    // Reported flag only: stability under S can genuinely fail.
    bool ok = true;
    for (std::size_t t = 0; t < d.dim() && ok; ++t)
      if (!d.contains_vector(h->antipode_of(d.basis().row(t)))) ok = false;
    res.antipode_stable = ok;
  }
  {  // S(x_(1)) y x_(2) stays in D
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (std::size_t t = 0; t < d.dim(); ++t) {
        Vec acc = zero_vec(f, n);
        for (const auto& [jk, cc] : h->comult_sparse(i)) {
          auto [j, k] = unflatten(jk, n);
          Vec u = h->mul(h->antipode_of(h->basis_vec(static_cast<int>(j))), d.basis().row(t));
          axpy(acc, cc, h->mul(u, h->basis_vec(static_cast<int>(k))));
        }
        if (!d.contains_vector(acc)) {
          ok = false;
          w = "(" + h->label(i) + ", row " + std::to_string(t) + ")";
          break;
        }
      }
    res.cert.add("ad_stable", ok, w);
  }
  return res;
}

Subspace cocentral_subspace(const HopfPtr& h) {
  require_verified(*h);
  const int n = h->dim();
  std::vector<Vec> slices;
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> rows(n, zero_vec(h->field(), n));
    for (const auto& [jk, c] : h->comult_sparse(i)) {
      auto [j, k] = unflatten(jk, n);
      rows[j][k] += c;  // f = e_j^* slice of Delta
      rows[k][j] -= c;  // minus the slice of Delta^op
    }
    for (auto& r : rows)
      if (!is_zero_vec(r)) slices.push_back(std::move(r));
  }
  return Subspace::span(h->field(), n, slices);
}

bool is_cocentral(const HopfMorphism& q) {
  const HopfAlgebra& a = *q.source;
  const int n = a.dim();
  Matrix id = Matrix::identity(a.field(), n);
  for (int i = 0; i < n; ++i) {
    Vec di = a.comult_of(a.basis_vec(i));
    Vec lhs = tensor_apply_pair(id, q.matrix, di, n);
    Vec rhs = tensor_apply_pair(id, q.matrix, a.t2_flip(di), n);
    if (lhs != rhs) return false;
  }
  return true;
}

Cocenter hopf_cocenter(const HopfPtr& h) {
  require_verified(*h);
  const int n = h->dim();

  HopfPtr dual = dual_hopf(h);
  HopfCenterResult dual_hz = hopf_center_full(dual);
  // Annihilator of HZ(A*) inside A: pairing is coordinatewise in dual bases.
  Subspace ker = dual_hz.subspace.dim() == 0 ? Subspace::full(h->field(), n)
                                             : kernel(dual_hz.subspace.basis());

  Quotient q = quotient_hopf(h, ker);
  Cocenter res{q.algebra, q.projection, ker, dual, dual_hz.subspace, {}};
  for (const auto& item : dual_hz.cert.items)
    res.cert.add("dual_hopf_center_" + item.name, item.pass, item.witness);
  for (const auto& item : q.ideal_cert.items) res.cert.add("kernel_" + item.name, item.pass, item.witness);

  res.cert.add("pi_cocentral", is_cocentral(res.pi), "");

  Subspace w = cocentral_subspace(h);
  res.cert.add("w_inside_kernel", ker.contains(w), "");
  Subspace wc = hopf_ideal_closure(*h, w);
  res.cert.add("w_closure_inside_kernel", ker.contains(wc), "");

  {  // cocommutative quotient
    bool ok = true;
    for (int i = 0; i < res.hc->dim() && ok; ++i) {
      Vec di = res.hc->comult_of(res.hc->basis_vec(i));
      if (di != res.hc->t2_flip(di)) ok = false;
    }
    res.cert.add("cocenter_cocommutative", ok, "");
  }
  if (!res.cert.all_pass())
    throw std::runtime_error("hopf_cocenter: certification failed: " + res.cert.first_failure());
  return res;
}

HopfMorphism factor_through_cocenter(const Cocenter& coc, const HopfMorphism& q,
                                     Certificate* cert_out) {
  Certificate cert;
  if (q.source.get() != coc.pi.source.get())
    throw std::invalid_argument("factor_through_cocenter: q must start at the same algebra");
  if (!is_cocentral(q)) throw std::invalid_argument("factor_through_cocenter: q is not cocentral");

  Subspace ker_q = morphism_kernel(q);
  if (!ker_q.contains(coc.kernel_subspace))
    throw std::runtime_error(
        "factor_through_cocenter: ker pi is not inside ker q (universality violation)");

  // h(class of e_{nonpivot[t]}) = q(e_{nonpivot[t]}).
  const HopfAlgebra& b = *q.target;
  auto rest = coc.kernel_subspace.nonpivots();
  Matrix hm(b.field(), b.dim(), rest.size());
  for (std::size_t t = 0; t < rest.size(); ++t) {
    Vec col = q.apply(q.source->basis_vec(static_cast<int>(rest[t])));
    for (int r = 0; r < b.dim(); ++r) hm.at(r, t) = col[r];
  }
  HopfMorphism hmor{coc.hc, q.target, std::move(hm)};

  cert.add("factorization", compose(hmor, coc.pi).matrix == q.matrix, "");
  Certificate vm = verify_morphism(hmor);
  cert.add("factor_is_hopf_morphism", vm.all_pass(), vm.first_failure());
  cert.add("uniqueness_pi_surjective", is_surjective(coc.pi), "");
  if (!cert.all_pass())
    throw std::runtime_error("factor_through_cocenter: " + cert.first_failure());
  if (cert_out) *cert_out = std::move(cert);
  return hmor;
}

CocenterReport cocentral_sequence(const HopfPtr& h, std::uint64_t freeness_budget,
                                  std::uint64_t seed) {
  require_verified(*h);
  AdCoaction ad = adjoint_coaction(h);
  CoefficientCoalgebra coeff = coefficient_coalgebra(h);
  GeneratedSubalgebra gen = generated_subalgebra(h, coeff.c);
  Subspace w = cocentral_subspace(h);
  Cocenter coc = hopf_cocenter(h);
  HopfKernels kers = hopf_kernels(coc.pi);
  bool normal = kers.left == kers.right;

  Certificate consistency;
  consistency.add("pi_normal", normal, "");
  consistency.add("d_inside_hopf_kernel", kers.left.contains(gen.d), "");
  bool d_eq = kers.left == gen.d;

  SubHopf ksub = sub_hopf(h, kers.left, "c");
  ExactSequence seq{ksub.inclusion, coc.pi};
  Certificate exact = verify_exact(seq);
  FreenessOutcome freeness = freeness_certificate(*h, kers.left, freeness_budget, seed);
  if (freeness.found())
    consistency.add("dim_product_law",
                    kers.left.dim() * freeness.certificate->rank() ==
                        static_cast<std::size_t>(h->dim()),
                    "");

  return CocenterReport{h,
                        std::move(ad),
                        std::move(coeff),
                        std::move(gen),
                        std::move(w),
                        std::move(coc),
                        std::move(kers),
                        normal,
                        d_eq,
                        std::move(ksub),
                        std::move(seq),
                        std::move(exact),
                        std::move(freeness),
                        std::move(consistency)};
}

CoalgebraCocenter coalgebra_cocenter(const HopfPtr& h, const Subspace& c) {
  require_verified(*h);
  const int n = h->dim();
  const Field* f = h->field();
  const std::size_t k = c.dim();
  Certificate cert;

  {  // subcoalgebra precondition
    Matrix q = quotient_map_matrix(c);
    Matrix id = Matrix::identity(f, n);
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      Vec dv = h->comult_of(c.basis().row(t));
      if (!is_zero_vec(tensor_apply_pair(q, id, dv, n)) ||
          !is_zero_vec(tensor_apply_pair(id, q, dv, n)))
        ok = false;
    }
    cert.add("subcoalgebra", ok, "");
    if (!ok) throw std::invalid_argument("coalgebra_cocenter: C is not a subcoalgebra");
  }

  // Dual algebra structure constants on C^*: (e_s^* e_u^*) = sum_t gamma_t[(s,u)] e_t^*.
  const auto& piv = c.pivots();
  std::vector<Vec> dual_mult(k * k, zero_vec(f, k));
  for (std::size_t t = 0; t < k; ++t) {
    Vec dv = h->comult_of(c.basis().row(t));
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t u = 0; u < k; ++u) {
        const Scalar& coeffv = dv[flatten(piv[s], piv[u], n)];
        if (!coeffv.is_zero()) dual_mult[s * k + u][t] += coeffv;
      }
  }
  // Center of the dual algebra by the commutant system.
  Matrix sys(f, k * k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t x = 0; x < k; ++x) {
        // coefficient of e_r^* in e_i^* e_x^* - e_x^* e_i^*
        Scalar v = dual_mult[i * k + x][r] - dual_mult[x * k + i][r];
        sys.at((i * k + r), x) = v;
      }
  Subspace z_dual = kernel(sys);
  // Kernel of C -> cz(C) = annihilator of Z(C^*) inside C, pulled to ambient.
  Subspace ann_coords =
      z_dual.dim() == 0 ? Subspace::full(f, k) : kernel(z_dual.basis());
  std::vector<Vec> ambient_vecs;
  for (std::size_t t = 0; t < ann_coords.dim(); ++t) {
    Vec v = zero_vec(f, n);
    for (std::size_t s = 0; s < k; ++s) axpy(v, ann_coords.basis().at(t, s), c.basis().row(s));
    ambient_vecs.push_back(std::move(v));
  }
  CoalgebraCocenter res{Subspace::span(f, n, ambient_vecs), z_dual.dim(), std::move(cert)};
  return res;
}

}  // namespace hopfseq
