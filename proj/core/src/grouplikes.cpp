#include "hopfseq/grouplikes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hopfseq {

namespace {

using Poly = std::vector<Scalar>;  // ascending coefficients

int pdeg(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly ptrim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Poly pmul(const Poly& a, const Poly& b, const Field* f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Remainder of a mod b (b nonzero).
Poly pmod(Poly a, const Poly& b) {
  int db = pdeg(b);
  if (db < 0) throw std::domain_error("pmod: division by zero polynomial");
  Scalar lead = b[db];
  for (int i = pdeg(a); i >= db; --i) {
    if (a[i].is_zero()) continue;
    Scalar c = a[i] / lead;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return ptrim(std::move(a));
}

Poly pdiv(Poly a, const Poly& b, const Field* f) {
  int db = pdeg(b), da = pdeg(a);
  if (db < 0) throw std::domain_error("pdiv: division by zero polynomial");
  if (da < db) return {};
  Poly q(da - db + 1, Scalar::zero(f));
  Scalar lead = b[db];
  for (int i = da; i >= db; --i) {
    if (a[i].is_zero()) continue;
    Scalar c = a[i] / lead;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly pgcd(Poly a, Poly b) {
  a = ptrim(std::move(a));
  b = ptrim(std::move(b));
  while (pdeg(b) >= 0) {
    Poly r = pmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly derivative(const Poly& p, const Field* f) {
  if (p.size() <= 1) return {};
  Poly out(p.size() - 1, Scalar::zero(f));
  for (std::size_t i = 1; i < p.size(); ++i)
    out[i - 1] = p[i] * Scalar::of(f, static_cast<long>(i));
  return out;
}

Scalar peval(const Poly& p, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Prime factorization by trial division plus Pollard rho on what remains.
void factor_into(mpz_class n, std::vector<mpz_class>& primes) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (long d : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % d == 0) {
      primes.emplace_back(d);
      n /= d;
    }
  }
  mpz_class d(17);
  while (d * d <= n && d < 100000) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
    d += 2;
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    primes.push_back(n);
    return;
  }
  // Pollard rho.
  mpz_class x(2), y(2), c(1), g(1);
  while (true) {
    x = (x * x + c) % n;
    y = (y * y + c) % n;
    y = (y * y + c) % n;
    mpz_class diff = x > y ? x - y : y - x;
    if (diff == 0) {
      c += 1;
      x = 2;
      y = 2;
      continue;
    }
    mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    if (g > 1 && g < n) break;
  }
  factor_into(g, primes);
  factor_into(n / g, primes);
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::vector<mpz_class> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<mpz_class> divs{1};
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    std::size_t mult = j - i;
    std::size_t base = divs.size();
    mpz_class pw(1);
    for (std::size_t e = 1; e <= mult; ++e) {
      pw *= primes[i];
      for (std::size_t t = 0; t < base; ++t) divs.push_back(divs[t] * pw);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

// Rational root candidates of a polynomial with rational coefficients
// (given as exact Rats): +- (divisor of constant)/(divisor of leading).
std::vector<Rat> rational_root_candidates(const std::vector<Rat>& coeffs) {
  // Scale to integers.
  mpz_class den_lcm(1);
  for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> zc;
  for (const auto& c : coeffs) zc.push_back(c.get_num() * (den_lcm / c.get_den()));
  // Strip trailing zeros (roots at 0 handled by caller's candidate 0).
  std::size_t lo = 0;
  while (lo < zc.size() && zc[lo] == 0) ++lo;
  std::size_t hi = zc.size();
  while (hi > lo && zc[hi - 1] == 0) --hi;
  if (hi <= lo) return {};
  mpz_class a0 = zc[lo], am = zc[hi - 1];
  std::vector<Rat> out;
  for (const auto& p : divisors_of(a0))
    for (const auto& q : divisors_of(am)) {
      Rat r(p, q);
      r.canonicalize();
      out.push_back(r);
      out.push_back(-r);
    }
  return out;
}

}  // namespace

std::vector<Scalar> char_poly(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const int n = static_cast<int>(a.rows());
  const Field* f = a.field();
  // Hessenberg reduction by similarity.
  for (int col = 0; col + 2 < n; ++col) {
    int piv = -1;
    for (int r = col + 1; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(a.at(i, piv), a.at(i, col + 1));
    }
    for (int r = col + 2; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Scalar m = a.at(r, col) / a.at(col + 1, col);
      for (int j = 0; j < n; ++j) a.at(r, j) -= m * a.at(col + 1, j);
      for (int i = 0; i < n; ++i) a.at(i, col + 1) += m * a.at(i, r);
    }
  }
  // Leading-minor recurrence for Hessenberg characteristic polynomials.
  std::vector<Poly> p(n + 1);
  p[0] = {Scalar::one(f)};
  for (int k = 1; k <= n; ++k) {
    Poly shifted(p[k - 1].size() + 1, Scalar::zero(f));
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      shifted[i + 1] += p[k - 1][i];
      shifted[i] -= a.at(k - 1, k - 1) * p[k - 1][i];
    }
    Scalar chain = Scalar::one(f);
    for (int m = 1; m <= k - 1; ++m) {
      chain *= a.at(k - m, k - m - 1);
      if (chain.is_zero()) break;
      Scalar c = a.at(k - 1 - m, k - 1) * chain;
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < p[k - 1 - m].size(); ++i) shifted[i] -= c * p[k - 1 - m][i];
    }
    p[k] = std::move(shifted);
  }
  return p[n];
}

std::vector<Scalar> roots_in_field(const Field* f, const std::vector<Scalar>& poly) {
  Poly p = ptrim(poly);
  if (pdeg(p) <= 0) return {};
  Poly sf = pdiv(p, pgcd(p, derivative(p, f)), f);

  std::vector<Scalar> candidates;
  candidates.push_back(Scalar::zero(f));
  switch (f->kind()) {
    case FieldKind::prime: {
      if (f->prime_modulus() > 4096)
        throw std::domain_error("roots_in_field: prime field too large for exhaustive search");
      for (std::uint32_t r = 0; r < f->prime_modulus(); ++r)
        candidates.push_back(Scalar::of(f, static_cast<long>(r)));
      break;
    }
    case FieldKind::rationals: {
      std::vector<Rat> coeffs;
      for (const auto& s : sf) coeffs.push_back(s.coeff(0));
      for (const auto& r : rational_root_candidates(coeffs)) candidates.push_back(Scalar::of(f, r));
      break;
    }
    case FieldKind::cyclotomic: {
      const std::uint32_t n = f->conductor();
      // Norm polynomial: product over the Galois conjugates z -> z^j.
      Poly norm{Scalar::one(f)};
      for (std::uint32_t j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        Scalar zj = Scalar::generator(f).pow(j);
        Poly conj;
        conj.reserve(sf.size());
        for (const auto& s : sf) {
          // Apply z -> z^j coefficientwise.
          Scalar img = Scalar::zero(f);
          for (std::size_t kdeg = 0; kdeg < f->degree(); ++kdeg) {
            Rat c = s.coeff(kdeg);
            if (c != 0) img += Scalar::of(f, c) * zj.pow(static_cast<long>(kdeg));
          }
          conj.push_back(img);
        }
        norm = pmul(norm, conj, f);
      }
      std::vector<Rat> coeffs;
      bool rational = true;
      for (const auto& s : norm) {
        for (std::size_t kdeg = 1; kdeg < f->degree(); ++kdeg)
          if (s.coeff(kdeg) != 0) rational = false;
        coeffs.push_back(s.coeff(0));
      }
      std::vector<Rat> rc;
      if (rational) rc = rational_root_candidates(coeffs);
      rc.push_back(Rat(1));
      rc.push_back(Rat(-1));
      Scalar z = Scalar::generator(f);
      for (const auto& a : rc)
        for (std::uint32_t j = 0; j < n; ++j) candidates.push_back(Scalar::of(f, a) * z.pow(j));
      break;
    }
  }

  std::vector<Scalar> roots;
  for (const auto& c : candidates) {
    if (!peval(sf, c).is_zero()) continue;
    if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
  }
  return roots;
}

namespace {

// T_i = (e_i^* (x) id) Delta as a matrix.
Matrix slice_operator(const HopfAlgebra& h, int i) {
  const int n = h.dim();
  Matrix t(h.field(), n, n);
  for (int b = 0; b < n; ++b)
    for (const auto& [jk, c] : h.comult_sparse(b)) {
      auto [j, k] = unflatten(jk, n);
      if (static_cast<int>(j) == i) t.at(k, b) += c;
    }
  return t;
}

bool verify_grouplike(const HopfAlgebra& h, const Vec& g) {
  if (!h.counit_of(g).is_one()) return false;
  const int n = h.dim();
  Vec dg = h.comult_of(g);
  Vec gg = zero_vec(h.field(), static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (g[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!g[j].is_zero()) gg[flatten(i, j, n)] += g[i] * g[j];
  }
  return dg == gg;
}

void refine(const HopfAlgebra& h, const std::vector<Matrix>& ops,
            const std::vector<std::vector<Scalar>>& root_sets, std::size_t level, Subspace v,
            Vec& tuple, std::vector<Vec>& out) {
  const int n = h.dim();
  if (level == static_cast<std::size_t>(n)) {
    if (verify_grouplike(h, tuple)) {
      if (std::find(out.begin(), out.end(), tuple) == out.end()) out.push_back(tuple);
    }
    return;
  }
  for (const Scalar& lambda : root_sets[level]) {
    Matrix shifted = ops[level];
    for (int d = 0; d < n; ++d) shifted.at(d, d) -= lambda;
    Subspace eig = kernel(shifted);
    Subspace next = v.intersect(eig);
    if (next.dim() == 0) continue;
    tuple[level] = lambda;
    refine(h, ops, root_sets, level + 1, std::move(next), tuple, out);
    tuple[level] = Scalar::zero(h.field());
  }
}

}  // namespace

std::vector<Vec> find_grouplikes(const HopfAlgebra& h) {
  require_verified(h);
  const int n = h.dim();
  std::vector<Matrix> ops;
  std::vector<std::vector<Scalar>> root_sets;
  for (int i = 0; i < n; ++i) {
    Matrix t = slice_operator(h, i);
    root_sets.push_back(roots_in_field(h.field(), char_poly(t)));
    ops.push_back(std::move(t));
  }
  std::vector<Vec> out;
  Vec tuple = zero_vec(h.field(), n);
  refine(h, ops, root_sets, 0, Subspace::full(h.field(), n), tuple, out);
  return out;
}

std::optional<bool> is_cosemisimple(const HopfAlgebra& h) {
  if (h.field()->characteristic() != 0) return std::nullopt;
  // Dual multiplication: (e_i* e_j*)(e_k) = coefficient of e_i (x) e_j in Delta e_k.
  const int n = h.dim();
  const Field* f = h.field();
  std::vector<Vec> dual_mult(static_cast<std::size_t>(n) * n, zero_vec(f, n));
  for (int k = 0; k < n; ++k)
    for (const auto& [ij, c] : h.comult_sparse(k)) {
      auto [i, j] = unflatten(ij, n);
      dual_mult[i * n + j][k] += c;
    }
  // trace(L_v) in the dual algebra.
  Vec tvec = zero_vec(f, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) tvec[i] += dual_mult[static_cast<std::size_t>(i) * n + k][k];
  Matrix gram(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& prod = dual_mult[static_cast<std::size_t>(i) * n + j];
      Scalar acc = Scalar::zero(f);
      for (int k = 0; k < n; ++k)
        if (!prod[k].is_zero()) acc += prod[k] * tvec[k];
      gram.at(i, j) = acc;
    }
  return kernel(gram).dim() == 0;
}

GroupAlgebraCheck group_algebra_check(const HopfPtr& b) {
  require_verified(*b);
  const int n = b->dim();
  GroupAlgebraCheck res{GroupAlgebraStatus::no, find_grouplikes(*b), true, false, ""};

  Subspace spanned = Subspace::span(b->field(), n, res.grouplikes);
  res.independent = spanned.dim() == res.grouplikes.size();
  res.span = spanned.dim() == static_cast<std::size_t>(n);
  if (res.span && res.independent) {
    res.status = GroupAlgebraStatus::yes;
    res.note = "spanned by " + std::to_string(res.grouplikes.size()) + " grouplikes";
    return res;
  }

  bool cocomm = true;
  for (int i = 0; i < n && cocomm; ++i) {
    Vec di = b->comult_of(b->basis_vec(i));
    if (di != b->t2_flip(di)) cocomm = false;
  }
  if (!cocomm) {
    res.status = GroupAlgebraStatus::no;
    res.note = "not cocommutative";
    return res;
  }
  std::optional<bool> coss = is_cosemisimple(*b);
  if (coss.has_value() && !*coss) {
    res.status = GroupAlgebraStatus::no;
    res.note = "not cosemisimple";
    return res;
  }
  res.status = GroupAlgebraStatus::extension_required;
  res.note = coss.has_value()
                 ? "cocommutative and cosemisimple; remaining characters live in a field extension"
                 : "undecided over a field of positive characteristic";
  return res;
}

}  // namespace hopfseq
