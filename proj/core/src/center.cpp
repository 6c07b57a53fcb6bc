#include "hopfseq/center.hpp"

#include <map>
#include <stdexcept>

namespace hopfseq {

namespace {

Matrix counit_row(const HopfAlgebra& h) {
  Matrix eps(h.field(), 1, h.dim());
  for (int i = 0; i < h.dim(); ++i) eps.at(0, i) = h.counit_vec()[i];
  return eps;
}

}  // namespace

Subspace algebra_center(const HopfAlgebra& h) {
  require_verified(h);
  const int n = h.dim();
  const Field* f = h.field();

  // Commutant: stack L_i - R_i over all basis elements.
  Matrix sys(f, static_cast<std::size_t>(n) * n, n);
  for (int i = 0; i < n; ++i) {
    Matrix li = h.left_mult_matrix(h.basis_vec(i));
    Matrix ri = h.right_mult_matrix(h.basis_vec(i));
    for (int r = 0; r < n; ++r)
      for (int cidx = 0; cidx < n; ++cidx)
        sys.at(static_cast<std::size_t>(i) * n + r, cidx) = li.at(r, cidx) - ri.at(r, cidx);
  }
  Subspace commutant = kernel(sys);

  // Adjoint characterization: Ad_{e_i}(x) = eps(e_i) x for all i.
  Matrix sys2(f, static_cast<std::size_t>(n) * n, n);
  for (int i = 0; i < n; ++i) {
    Matrix ad = adjoint_action_matrix(h, h.basis_vec(i));
    for (int r = 0; r < n; ++r)
      for (int cidx = 0; cidx < n; ++cidx) {
        Scalar v = ad.at(r, cidx);
        if (r == cidx) v -= h.counit_vec()[i];
        sys2.at(static_cast<std::size_t>(i) * n + r, cidx) = v;
      }
  }
  Subspace by_adjoint = kernel(sys2);

  if (!(commutant == by_adjoint))
    throw std::runtime_error(
        "algebra_center: commutant and adjoint characterizations disagree (corrupt input)");
  return commutant;
}

Vec adjoint_action(const HopfAlgebra& h, std::span<const Scalar> x, std::span<const Scalar> y) {
  const int n = h.dim();
  Vec out = zero_vec(h.field(), n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [jk, c] : h.comult_sparse(i)) {
      auto [j, k] = unflatten(jk, n);
      Vec t = h.mul(h.basis_vec(static_cast<int>(j)), y);
      axpy(out, x[i] * c, h.mul(t, h.antipode_of(h.basis_vec(static_cast<int>(k)))));
    }
  }
  return out;
}

Matrix adjoint_action_matrix(const HopfAlgebra& h, std::span<const Scalar> x) {
  const int n = h.dim();
  Matrix m(h.field(), n, n);
  for (int b = 0; b < n; ++b) {
    Vec col = adjoint_action(h, x, h.basis_vec(b));
    for (int r = 0; r < n; ++r) m.at(r, b) = col[r];
  }
  return m;
}

HopfCenterResult hopf_center_full(const HopfPtr& h) {
  require_verified(*h);
  const int n = h->dim();
  const Field* f = h->field();
  Subspace z = algebra_center(*h);
  Matrix q = quotient_map_matrix(z);
  const std::size_t m = q.rows();
  Matrix id = Matrix::identity(f, n);

  // M_R = ker (id (x) Q) Delta, M_L = ker (Q (x) id) Delta.
  Matrix right_sys(f, static_cast<std::size_t>(n) * m, n);
  Matrix left_sys(f, m * static_cast<std::size_t>(n), n);
  for (int i = 0; i < n; ++i) {
    Vec di = h->comult_of(h->basis_vec(i));
    Vec r = tensor_apply_pair(id, q, di, n);
    for (std::size_t t = 0; t < r.size(); ++t) right_sys.at(t, i) = r[t];
    Vec l = tensor_apply_pair(q, id, di, n);
    for (std::size_t t = 0; t < l.size(); ++t) left_sys.at(t, i) = l[t];
  }
  Subspace m_right = kernel(right_sys);
  Subspace m_left = kernel(left_sys);
  Subspace m_central = z.intersect(m_left).intersect(m_right);

  HopfCenterResult res{m_right, z, {}};
  res.cert.add("right_equals_left", m_right == m_left,
               m_right == m_left ? "" : "dims " + std::to_string(m_right.dim()) + " vs " +
                                            std::to_string(m_left.dim()));
  res.cert.add("right_equals_central_form", m_right == m_central, "");
  res.cert.add("inside_center", z.contains(m_right), "");

  // Hopf-subalgebra flags.
  const Subspace& hz = res.subspace;
  res.cert.add("contains_unit", hz.contains_vector(h->unit_vec()), "");
  {
    bool ok = true;
    for (std::size_t a = 0; a < hz.dim() && ok; ++a)
      for (std::size_t b = 0; b < hz.dim(); ++b)
        if (!hz.contains_vector(h->mul(hz.basis().row(a), hz.basis().row(b)))) {
          ok = false;
          break;
        }
    res.cert.add("closed_under_mult", ok, "");
  }
  {
    Matrix qm = quotient_map_matrix(hz);
    bool ok = true;
    for (std::size_t a = 0; a < hz.dim() && ok; ++a) {
      Vec dv = h->comult_of(hz.basis().row(a));
      if (!is_zero_vec(tensor_apply_pair(qm, id, dv, n)) ||
          !is_zero_vec(tensor_apply_pair(id, qm, dv, n)))
        ok = false;
    }
    res.cert.add("comult_into_tensor_square", ok, "");
  }
  {
    bool into = true;
    for (std::size_t a = 0; a < hz.dim() && into; ++a)
      if (!hz.contains_vector(h->antipode_of(hz.basis().row(a)))) into = false;
    // S is injective, so S(M) inside M already gives S(M) = M.
    res.cert.add("antipode_fixes_subspace", into, "");
  }
  return res;
}

Subspace hopf_center(const HopfPtr& h) {
  HopfCenterResult r = hopf_center_full(h);
  if (!r.cert.all_pass())
    throw std::runtime_error("hopf_center: characterization certificate failed: " +
                             r.cert.first_failure());
  return r.subspace;
}

CorestrictResult corestrict_comodule(const HopfPtr& h, const Matrix& rho, int vdim) {
  require_verified(*h);
  const int n = h->dim();
  const Field* f = h->field();
  if (rho.cols() != static_cast<std::size_t>(vdim) ||
      rho.rows() != static_cast<std::size_t>(vdim) * n)
    throw std::invalid_argument("corestrict_comodule: coaction matrix shape mismatch");

  auto add = [](std::map<int, Scalar>& m, int key, const Scalar& c) {
    auto it = m.find(key);
    if (it == m.end())
      m.emplace(key, c);
    else
      it->second += c;
  };

  // Coaction laws: (rho (x) id) rho = (id (x) Delta) rho and (id (x) eps) rho = id.
  for (int t = 0; t < vdim; ++t) {
    std::map<int, Scalar> lhs, rhs;
    Vec counit_img = zero_vec(f, vdim);
    for (int s = 0; s < vdim; ++s)
      for (int a = 0; a < n; ++a) {
        const Scalar& c = rho.at(static_cast<std::size_t>(s) * n + a, t);
        if (c.is_zero()) continue;
        counit_img[s] += c * h->counit_vec()[a];
        for (int u = 0; u < vdim; ++u)
          for (int b = 0; b < n; ++b) {
            const Scalar& d = rho.at(static_cast<std::size_t>(u) * n + b, s);
            if (!d.is_zero()) add(lhs, (u * n + b) * n + a, c * d);
          }
        for (const auto& [jk, d] : h->comult_sparse(a)) {
          auto [j, k] = unflatten(jk, n);
          add(rhs, (s * n + static_cast<int>(j)) * n + static_cast<int>(k), c * d);
        }
      }
    if (sparse_normalize(std::move(lhs)) != sparse_normalize(std::move(rhs)))
      throw std::invalid_argument("corestrict_comodule: rho is not a right coaction (column " +
                                  std::to_string(t) + ")");
    Vec et = zero_vec(f, vdim);
    et[t] = Scalar::one(f);
    if (counit_img != et)
      throw std::invalid_argument("corestrict_comodule: counit law fails (column " +
                                  std::to_string(t) + ")");
  }

  Subspace z = algebra_center(*h);
  for (int t = 0; t < vdim; ++t)
    for (int s = 0; s < vdim; ++s) {
      Vec slice = zero_vec(f, n);
      for (int a = 0; a < n; ++a) slice[a] = rho.at(static_cast<std::size_t>(s) * n + a, t);
      if (!z.contains_vector(slice))
        throw std::invalid_argument("corestrict_comodule: image leg escapes the center (column " +
                                    std::to_string(t) + ", slot " + std::to_string(s) + ")");
    }

  HopfCenterResult hzr = hopf_center_full(h);
  const Subspace& hz = hzr.subspace;
  CorestrictResult res{Matrix(f, static_cast<std::size_t>(vdim) * hz.dim(), vdim),
                       sub_hopf(h, hz, "z"),
                       {}};
  bool inside = true;
  std::string w;
  for (int t = 0; t < vdim && inside; ++t)
    for (int s = 0; s < vdim; ++s) {
      Vec slice = zero_vec(f, n);
      for (int a = 0; a < n; ++a) slice[a] = rho.at(static_cast<std::size_t>(s) * n + a, t);
      if (!hz.contains_vector(slice)) {
        inside = false;
        w = "column " + std::to_string(t);
        break;
      }
      Vec coords = hz.coords(slice);
      for (std::size_t u = 0; u < coords.size(); ++u)
        res.corestricted.at(static_cast<std::size_t>(s) * hz.dim() + u, t) = coords[u];
    }
  res.cert.add("image_in_hopf_center", inside, w);
  if (!inside)
    throw std::runtime_error(
        "corestrict_comodule: central coaction escapes the Hopf center (theorem violation)");
  return res;
}

CentralReport central_sequence(const HopfPtr& h, std::uint64_t freeness_budget, std::uint64_t seed) {
  require_verified(*h);
  Subspace z = algebra_center(*h);
  HopfCenterResult hz = hopf_center_full(h);
  SubHopf sub = sub_hopf(h, hz.subspace, "z");
  Certificate consistency;

  Subspace m_plus = hz.subspace.intersect(kernel(counit_row(*h)));
  Subspace ideal_left = left_ideal(*h, m_plus);
  Subspace ideal_two = two_sided_ideal(*h, m_plus);
  consistency.add("left_ideal_equals_two_sided", ideal_left == ideal_two, "");

  Quotient q = quotient_hopf(h, ideal_two);
  ExactSequence seq{sub.inclusion, q.projection};
  Certificate exactness = verify_exact(seq);
  bool normal = is_normal(q.projection);
  FreenessOutcome freeness = freeness_certificate(*h, hz.subspace, freeness_budget, seed);
  if (freeness.found())
    consistency.add("dim_product_law",
                    hz.subspace.dim() * freeness.certificate->rank() ==
                        static_cast<std::size_t>(h->dim()),
                    "");
  return CentralReport{h,   z,      hz,          std::move(sub), std::move(q),
                       seq, exactness, normal, std::move(freeness), std::move(consistency)};
}

}  // namespace hopfseq
