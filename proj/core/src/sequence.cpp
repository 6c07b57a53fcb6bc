#include "hopfseq/sequence.hpp"

#include <random>
#include <stdexcept>

namespace hopfseq {

namespace {

// Column i of the map x -> (pi (x) id) Delta x - 1_B (x) x, as a dense vector
// over B (x) A.
Vec left_kernel_column(const HopfAlgebra& a, const HopfAlgebra& b, const Matrix& pi, int i) {
  const int n = a.dim(), m = b.dim();
  Vec out = zero_vec(a.field(), static_cast<std::size_t>(m) * n);
  for (const auto& [jk, c] : a.comult_sparse(i)) {
    auto [j, k] = unflatten(jk, n);
    for (int r = 0; r < m; ++r)
      if (!pi.at(r, j).is_zero()) out[flatten(r, k, n)] += c * pi.at(r, j);
  }
  for (int r = 0; r < m; ++r)
    if (!b.unit_vec()[r].is_zero()) out[flatten(r, i, n)] -= b.unit_vec()[r];
  return out;
}

Vec right_kernel_column(const HopfAlgebra& a, const HopfAlgebra& b, const Matrix& pi, int i) {
  const int n = a.dim(), m = b.dim();
  Vec out = zero_vec(a.field(), static_cast<std::size_t>(n) * m);
  for (const auto& [jk, c] : a.comult_sparse(i)) {
    auto [j, k] = unflatten(jk, n);
    for (int r = 0; r < m; ++r)
      if (!pi.at(r, k).is_zero()) out[flatten(j, r, m)] += c * pi.at(r, k);
  }
  for (int r = 0; r < m; ++r)
    if (!b.unit_vec()[r].is_zero()) out[flatten(i, r, m)] -= b.unit_vec()[r];
  return out;
}

Subspace kernel_of_columns(const Field* f, int n, const std::vector<Vec>& cols) {
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  Matrix m(f, rows, n);
  for (int i = 0; i < n; ++i)
    for (std::size_t r = 0; r < rows; ++r) m.at(r, i) = cols[i][r];
  return kernel(m);
}

}  // namespace

HopfKernels hopf_kernels(const HopfMorphism& pi) {
  const HopfAlgebra& a = *pi.source;
  const HopfAlgebra& b = *pi.target;
  const int n = a.dim();
  std::vector<Vec> lcols, rcols;
  for (int i = 0; i < n; ++i) {
    lcols.push_back(left_kernel_column(a, b, pi.matrix, i));
    rcols.push_back(right_kernel_column(a, b, pi.matrix, i));
  }
  return {kernel_of_columns(a.field(), n, lcols), kernel_of_columns(a.field(), n, rcols)};
}

bool is_normal(const HopfMorphism& pi) {
  HopfKernels k = hopf_kernels(pi);
  return k.left == k.right;
}

Certificate verify_exact(const ExactSequence& seq) {
  Certificate cert;
  if (seq.iota.target.get() != seq.pi.source.get())
    throw std::invalid_argument("verify_exact: middle algebras differ");
  const HopfAlgebra& a = *seq.iota.target;

  {
    Certificate mi = verify_morphism(seq.iota);
    cert.add("iota_is_hopf_morphism", mi.all_pass(), mi.first_failure());
    Certificate mp = verify_morphism(seq.pi);
    cert.add("pi_is_hopf_morphism", mp.all_pass(), mp.first_failure());
  }

  cert.add("iota_injective", is_injective(seq.iota), "");
  cert.add("pi_surjective", is_surjective(seq.pi), "");

  {  // ker pi = A iota(C)^+
    Subspace ker_pi = morphism_kernel(seq.pi);
    Subspace img = morphism_image(seq.iota);
    Matrix eps(a.field(), 1, a.dim());
    for (int i = 0; i < a.dim(); ++i) eps.at(0, i) = a.counit_vec()[i];
    Subspace img_plus = img.intersect(kernel(eps));
    Subspace ideal = left_ideal(a, img_plus);
    bool ok = ker_pi == ideal;
    std::string w;
    if (!ok)
      w = "dim ker pi = " + std::to_string(ker_pi.dim()) +
          ", dim A iota(C)+ = " + std::to_string(ideal.dim());
    cert.add("ker_pi_equals_a_times_augmentation", ok, w);
  }

  {  // iota(C) = left Hopf kernel of pi
    Subspace img = morphism_image(seq.iota);
    HopfKernels hk = hopf_kernels(seq.pi);
    bool ok = img == hk.left;
    std::string w;
    if (!ok)
      w = "dim iota(C) = " + std::to_string(img.dim()) +
          ", dim hopf kernel = " + std::to_string(hk.left.dim());
    cert.add("iota_image_equals_hopf_kernel", ok, w);
  }
  return cert;
}

Cokernel hopf_cokernel(const HopfMorphism& iota) {
  const HopfAlgebra& a = *iota.target;
  Subspace img = morphism_image(iota);
  Certificate pre;

  pre.add("image_contains_unit", img.contains_vector(a.unit_vec()), "");
  {
    bool ok = true;
    std::string w;
    for (std::size_t s = 0; s < img.dim() && ok; ++s)
      for (std::size_t t = 0; t < img.dim(); ++t)
        if (!img.contains_vector(a.mul(img.basis().row(s), img.basis().row(t)))) {
          ok = false;
          w = "rows (" + std::to_string(s) + ", " + std::to_string(t) + ")";
          break;
        }
    pre.add("image_mult_closed", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t s = 0; s < img.dim() && ok; ++s)
      if (!img.contains_vector(a.antipode_of(img.basis().row(s)))) {
        ok = false;
        w = "row " + std::to_string(s);
      }
    pre.add("image_antipode_stable", ok, w);
  }
  {  // S(x_(1)) v x_(2) stays in the image for all basis x
    bool ok = true;
    std::string w;
    for (int i = 0; i < a.dim() && ok; ++i) {
      for (std::size_t s = 0; s < img.dim(); ++s) {
        Vec acc = zero_vec(a.field(), a.dim());
        for (const auto& [jk, c] : a.comult_sparse(i)) {
          auto [j, k] = unflatten(jk, a.dim());
          Vec t = a.mul(a.antipode_of(a.basis_vec(static_cast<int>(j))), img.basis().row(s));
          axpy(acc, c, a.mul(t, a.basis_vec(static_cast<int>(k))));
        }
        if (!img.contains_vector(acc)) {
          ok = false;
          w = "(" + a.label(i) + ", image row " + std::to_string(s) + ")";
          break;
        }
      }
    }
    pre.add("image_ad_stable", ok, w);
  }
  if (!pre.all_pass())
    throw std::runtime_error("hopf_cokernel: image is not an ad-stable Hopf subalgebra: " +
                             pre.first_failure());

  Matrix eps(a.field(), 1, a.dim());
  for (int i = 0; i < a.dim(); ++i) eps.at(0, i) = a.counit_vec()[i];
  Subspace img_plus = img.intersect(kernel(eps));
  Subspace ideal = two_sided_ideal(a, img_plus);
  HopfPtr aptr = iota.target;
  Quotient q = quotient_hopf(aptr, ideal);
  return {std::move(q), std::move(pre)};
}

FreenessOutcome freeness_certificate(const HopfAlgebra& h, const Subspace& c, std::uint64_t budget,
                                     std::uint64_t seed) {
  const int n = h.dim();
  const Field* f = h.field();
  FreenessOutcome out;
  if (c.dim() == 0 || !c.contains_vector(h.unit_vec())) {
    out.failure = "subalgebra must contain the unit";
    return out;
  }
  if (n % c.dim() != 0) {
    out.failure = "divisibility: dim C = " + std::to_string(c.dim()) +
                  " does not divide dim A = " + std::to_string(n);
    return out;
  }
  const std::size_t r = static_cast<std::size_t>(n) / c.dim();

  // Candidate pool: basis vectors, then seeded pseudorandom small-entry vectors.
  std::vector<Vec> pool;
  for (int i = 0; i < n; ++i) pool.push_back(h.basis_vec(i));
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  const std::size_t extra = 8 * r + 16;
  for (std::size_t t = 0; t < extra; ++t) {
    Vec v = zero_vec(f, n);
    for (int i = 0; i < n; ++i) v[i] = Scalar::of(f, static_cast<long>(rng() % 5));
    pool.push_back(std::move(v));
  }

  auto span_of = [&](std::span<const Scalar> a) {
    std::vector<Vec> vecs;
    for (std::size_t s = 0; s < c.dim(); ++s) vecs.push_back(h.mul(c.basis().row(s), a));
    return Subspace::span(f, n, vecs);
  };

  std::uint64_t steps = 0;
  std::vector<Vec> chosen{h.unit_vec()};
  std::vector<Subspace> stack{c};           // C * 1 = C
  std::vector<std::size_t> next_try{0};     // resume position per depth
  bool budget_hit = false;

  while (chosen.size() < r && !chosen.empty()) {
    std::size_t pos = next_try.back();
    bool advanced = false;
    for (; pos < pool.size(); ++pos) {
      if (++steps > budget) {
        budget_hit = true;
        break;
      }
      Subspace cand = span_of(pool[pos]);
      if (cand.dim() != c.dim()) continue;
      Subspace joined = stack.back().sum(cand);
      if (joined.dim() != stack.back().dim() + c.dim()) continue;
      next_try.back() = pos + 1;
      chosen.push_back(pool[pos]);
      stack.push_back(std::move(joined));
      next_try.push_back(0);
      advanced = true;
      break;
    }
    if (budget_hit) break;
    if (!advanced) {
      next_try.pop_back();
      chosen.pop_back();
      stack.pop_back();
    }
  }

  if (chosen.size() != r) {
    out.failure = budget_hit ? "budget" : "exhausted";
    return out;
  }

  // Re-verify with a single rank computation on the n x n matrix of c_s a_t.
  Matrix m(f, n, n);
  std::size_t col = 0;
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t s = 0; s < c.dim(); ++s) {
      Vec prod = h.mul(c.basis().row(s), chosen[t]);
      for (int i = 0; i < n; ++i) m.at(i, col) = prod[i];
      ++col;
    }
  if (rank(m) != static_cast<std::size_t>(n)) {
    out.failure = "verification rank check failed";
    return out;
  }
  out.certificate = FreenessCertificate{c, std::move(chosen)};
  return out;
}

}  // namespace hopfseq
