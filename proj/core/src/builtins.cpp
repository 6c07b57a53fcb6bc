#include "hopfseq/builtins.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hopfseq {

namespace {

const Field* default_group_field(const Group& g) {
  int e = g.exponent();
  return e <= 2 ? Field::rationals() : Field::cyclotomic(e);
}

// Multiplication table under construction, with just enough algebra to
// normal-order products and expand coproduct powers before the HopfAlgebra
// object exists.
struct RawAlgebra {
  const Field* f;
  int n;
  std::vector<Vec> mult;  // mult[i*n+j]

  Vec mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
    Vec out = zero_vec(f, n);
    for (int i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        axpy(out, a[i] * b[j], mult[static_cast<std::size_t>(i) * n + j]);
      }
    }
    return out;
  }

  Vec t2_mul(std::span<const Scalar> x, std::span<const Scalar> y) const {
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::size_t> nzx, nzy;
    for (std::size_t p = 0; p < nn; ++p)
      if (!x[p].is_zero()) nzx.push_back(p);
    for (std::size_t q = 0; q < nn; ++q)
      if (!y[q].is_zero()) nzy.push_back(q);
    Vec out = zero_vec(f, nn);
    for (std::size_t p : nzx) {
      std::size_t i = p / n, j = p % n;
      for (std::size_t q : nzy) {
        std::size_t k = q / n, l = q % n;
        Scalar c = x[p] * y[q];
        const Vec& m1 = mult[i * n + k];
        const Vec& m2 = mult[j * n + l];
        for (int a = 0; a < n; ++a) {
          if (m1[a].is_zero()) continue;
          for (int b = 0; b < n; ++b)
            if (!m2[b].is_zero()) out[flatten(a, b, n)] += c * m1[a] * m2[b];
        }
      }
    }
    return out;
  }

  void fill(HopfAlgebra::Data& d) const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec& v = mult[static_cast<std::size_t>(i) * n + j];
        for (int k = 0; k < n; ++k)
          if (!v[k].is_zero()) d.mult.emplace_back(i, j, k, v[k]);
      }
  }
};

void fill_comult(HopfAlgebra::Data& d, int i, std::span<const Scalar> t, int n) {
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Scalar& c = t[flatten(j, k, n)];
      if (!c.is_zero()) d.comult.emplace_back(i, j, k, c);
    }
}

void fill_antipode(HopfAlgebra::Data& d, int i, std::span<const Scalar> v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) d.antipode.emplace_back(i, static_cast<int>(j), v[j]);
}

}  // namespace

HopfPtr group_algebra(const Group& g, const Field* f) {
  if (!f) f = default_group_field(g);
  const int n = g.order();
  HopfAlgebra::Data d;
  d.field = f;
  for (int i = 0; i < n; ++i) d.labels.push_back("e_" + g.element_names[i]);
  d.unit = zero_vec(f, n);
  d.unit[g.identity] = Scalar::one(f);
  d.counit = Vec(n, Scalar::one(f));
  const Scalar one = Scalar::one(f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d.mult.emplace_back(i, j, g.mul(i, j), one);
    d.comult.emplace_back(i, i, i, one);
    d.antipode.emplace_back(i, g.inverse(i), one);
  }
  auto h = HopfAlgebra::make(std::move(d));
  require_verified(*h);
  return h;
}

HopfPtr function_algebra(const Group& g, const Field* f) {
  if (!f) f = default_group_field(g);
  HopfPtr ka = group_algebra(g, f);
  HopfPtr dual = dual_hopf(ka);
  // Rebuild with delta-function labels.
  const int n = dual->dim();
  HopfAlgebra::Data d;
  d.field = dual->field();
  for (int i = 0; i < n; ++i) d.labels.push_back("d_" + g.element_names[i]);
  d.unit = dual->unit_vec();
  d.counit = dual->counit_vec();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : dual->mult_sparse(i, j)) d.mult.emplace_back(i, j, k, c);
    for (const auto& [jk, c] : dual->comult_sparse(i)) {
      auto [j, k] = unflatten(jk, n);
      d.comult.emplace_back(i, static_cast<int>(j), static_cast<int>(k), c);
    }
    Vec sv = dual->antipode_of(dual->basis_vec(i));
    fill_antipode(d, i, sv);
  }
  auto h = HopfAlgebra::make(std::move(d));
  require_verified(*h);
  return h;
}

HopfPtr taft(int n, long qpow, const Field* f) {
  if (n < 2) throw std::invalid_argument("taft: n must be >= 2");
  if (std::gcd(qpow % n + n, static_cast<long>(n)) != 1)
    throw std::invalid_argument("taft: qpow must be coprime to n for a primitive root");
  if (!f) f = (n <= 2) ? Field::rationals() : Field::cyclotomic(n);
  Scalar q = primitive_root_of_unity(f, n).pow(qpow);

  const int dim = n * n;
  auto idx = [n](int i, int j) { return i * n + j; };  // g^i x^j
  RawAlgebra raw{f, dim, {}};
  raw.mult.assign(static_cast<std::size_t>(dim) * dim, zero_vec(f, dim));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
          if (j1 + j2 >= n) continue;  // x^n = 0
          // x^{j1} g^{i2} = q^{i2 j1} g^{i2} x^{j1}
          Scalar c = q.pow(static_cast<long>(i2) * j1);
          raw.mult[static_cast<std::size_t>(idx(i1, j1)) * dim + idx(i2, j2)]
                  [idx((i1 + i2) % n, j1 + j2)] += c;
        }

  HopfAlgebra::Data d;
  d.field = f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string nm;
      if (i == 1) nm += "g";
      if (i > 1) nm += "g^" + std::to_string(i);
      if (j == 1) nm += nm.empty() ? "x" : "x";
      if (j > 1) nm += "x^" + std::to_string(j);
      if (nm.empty()) nm = "1";
      d.labels.push_back(nm);
    }
  d.unit = zero_vec(f, dim);
  d.unit[idx(0, 0)] = Scalar::one(f);
  d.counit = zero_vec(f, dim);
  for (int i = 0; i < n; ++i) d.counit[idx(i, 0)] = Scalar::one(f);
  raw.fill(d);

  // Delta(g^i x^j) = (g (x) g)^i (x (x) 1 + g (x) x)^j
  const std::size_t nn = static_cast<std::size_t>(dim) * dim;
  Vec dg = zero_vec(f, nn);
  dg[flatten(idx(1, 0), idx(1, 0), dim)] = Scalar::one(f);
  Vec dx = zero_vec(f, nn);
  dx[flatten(idx(0, 1), idx(0, 0), dim)] = Scalar::one(f);
  dx[flatten(idx(1, 0), idx(0, 1), dim)] = Scalar::one(f);
  std::vector<Vec> dgp(n), dxp(n);
  Vec t2one = zero_vec(f, nn);
  t2one[flatten(idx(0, 0), idx(0, 0), dim)] = Scalar::one(f);
  dgp[0] = t2one;
  dxp[0] = t2one;
  for (int k = 1; k < n; ++k) {
    dgp[k] = raw.t2_mul(dgp[k - 1], dg);
    dxp[k] = raw.t2_mul(dxp[k - 1], dx);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fill_comult(d, idx(i, j), raw.t2_mul(dgp[i], dxp[j]), dim);

  // S(g^i x^j) = S(x)^j g^{-i} with S(x) = -g^{n-1} x
  Vec sx = zero_vec(f, dim);
  sx[idx(n - 1, 1)] = -Scalar::one(f);
  std::vector<Vec> sxp(n);
  Vec one_vec = zero_vec(f, dim);
  one_vec[idx(0, 0)] = Scalar::one(f);
  sxp[0] = one_vec;
  for (int k = 1; k < n; ++k) sxp[k] = raw.mul(sxp[k - 1], sx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ginv = zero_vec(f, dim);
      ginv[idx((n - i) % n, 0)] = Scalar::one(f);
      fill_antipode(d, idx(i, j), raw.mul(sxp[j], ginv));
    }

  auto h = HopfAlgebra::make(std::move(d));
  require_verified(*h);
  return h;
}

HopfPtr sweedler_h4() {
  static HopfPtr h = taft(2);
  return h;
}

HopfPtr small_quantum_sl2(int p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("small_quantum_sl2: p must be odd and >= 3");
  const Field* f = Field::cyclotomic(static_cast<std::uint32_t>(p));
  Scalar q = primitive_root_of_unity(f, static_cast<std::uint32_t>(p));
  const int dim = p * p * p;
  auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };  // F^a K^b E^c

  // qdiff = q - q^{-1}, nonzero since p >= 3.
  Scalar qdiff = q - q.inverse();
  Scalar qdiff_inv = qdiff.inverse();

  // ef1[alpha] = E F^alpha, normal ordered.
  std::vector<Vec> ef1(p);
  ef1[0] = zero_vec(f, dim);
  ef1[0][idx(0, 0, 1)] = Scalar::one(f);
  for (int alpha = 1; alpha < p; ++alpha) {
    Vec cur = zero_vec(f, dim);
    // F * (E F^{alpha-1}): shift the F exponent
    for (int t = 0; t < dim; ++t) {
      if (ef1[alpha - 1][t].is_zero()) continue;
      int a = t / (p * p), rest = t % (p * p);
      if (a + 1 < p) cur[(a + 1) * p * p + rest] += ef1[alpha - 1][t];
    }
    // + (K - K^{-1})/(q - q^{-1}) F^{alpha-1}
    //   = (q^{-2(alpha-1)} F^{alpha-1} K - q^{2(alpha-1)} F^{alpha-1} K^{-1}) / (q - q^{-1})
    cur[idx(alpha - 1, 1, 0)] += q.pow(-2L * (alpha - 1)) * qdiff_inv;
    cur[idx(alpha - 1, p - 1, 0)] -= q.pow(2L * (alpha - 1)) * qdiff_inv;
    ef1[alpha] = std::move(cur);
  }

  // Left multiplication by E on a normal-ordered monomial.
  auto left_e = [&](const Vec& v) {
    Vec out = zero_vec(f, dim);
    for (int t = 0; t < dim; ++t) {
      if (v[t].is_zero()) continue;
      int a = t / (p * p), b = (t / p) % p, c = t % p;
      // E F^a K^b E^c = (E F^a) K^b E^c
      for (int s = 0; s < dim; ++s) {
        if (ef1[a][s].is_zero()) continue;
        int a2 = s / (p * p), b2 = (s / p) % p, c2 = s % p;
        // (F^{a2} K^{b2} E^{c2}) K^b E^c: E^{c2} K^b = q^{-2 c2 b} K^b E^{c2}
        if (c2 + c >= p) continue;
        Scalar coeff = v[t] * ef1[a][s] * q.pow(-2L * c2 * b);
        out[idx(a2, (b2 + b) % p, c2 + c)] += coeff;
      }
    }
    return out;
  };

  // ef[c][a] = E^c F^a normal ordered.
  std::vector<std::vector<Vec>> ef(p, std::vector<Vec>());
  for (int c = 0; c < p; ++c) ef[c].resize(p, zero_vec(f, dim));
  for (int a = 0; a < p; ++a) {
    Vec base = zero_vec(f, dim);
    base[idx(a, 0, 0)] = Scalar::one(f);
    ef[0][a] = base;
    for (int c = 1; c < p; ++c) ef[c][a] = left_e(ef[c - 1][a]);
  }

  RawAlgebra raw{f, dim, {}};
  raw.mult.assign(static_cast<std::size_t>(dim) * dim, zero_vec(f, dim));
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2) {
              Vec& slot = raw.mult[static_cast<std::size_t>(idx(a1, b1, c1)) * dim + idx(a2, b2, c2)];
              // F^{a1} K^{b1} (E^{c1} F^{a2}) K^{b2} E^{c2}
              const Vec& x = ef[c1][a2];
              for (int t = 0; t < dim; ++t) {
                if (x[t].is_zero()) continue;
                int al = t / (p * p), be = (t / p) % p, ga = t % p;
                if (a1 + al >= p || ga + c2 >= p) continue;
                // K^{b1} F^{al} = q^{-2 al b1} F^{al} K^{b1};  E^{ga} K^{b2} = q^{-2 ga b2} K^{b2} E^{ga}
                Scalar coeff = x[t] * q.pow(-2L * al * b1) * q.pow(-2L * ga * b2);
                slot[idx(a1 + al, (b1 + be + b2) % p, ga + c2)] += coeff;
              }
            }

  HopfAlgebra::Data d;
  d.field = f;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        std::string nm;
        if (a == 1) nm += "F";
        if (a > 1) nm += "F^" + std::to_string(a);
        if (b == 1) nm += nm.empty() ? "K" : " K";
        if (b > 1) nm += (nm.empty() ? "K^" : " K^") + std::to_string(b);
        if (c == 1) nm += nm.empty() ? "E" : " E";
        if (c > 1) nm += (nm.empty() ? "E^" : " E^") + std::to_string(c);
        if (nm.empty()) nm = "1";
        d.labels.push_back(nm);
      }
  d.unit = zero_vec(f, dim);
  d.unit[idx(0, 0, 0)] = Scalar::one(f);
  d.counit = zero_vec(f, dim);
  for (int b = 0; b < p; ++b) d.counit[idx(0, b, 0)] = Scalar::one(f);
  raw.fill(d);

  // Coproducts of the generators:
  //   Delta(F) = F (x) 1 + K^{-1} (x) F, Delta(K) = K (x) K, Delta(E) = E (x) K + 1 (x) E.
  const std::size_t nn = static_cast<std::size_t>(dim) * dim;
  Vec dF = zero_vec(f, nn), dK = zero_vec(f, nn), dE = zero_vec(f, nn), t2one = zero_vec(f, nn);
  t2one[flatten(idx(0, 0, 0), idx(0, 0, 0), dim)] = Scalar::one(f);
  dF[flatten(idx(1, 0, 0), idx(0, 0, 0), dim)] = Scalar::one(f);
  dF[flatten(idx(0, p - 1, 0), idx(1, 0, 0), dim)] = Scalar::one(f);
  dK[flatten(idx(0, 1, 0), idx(0, 1, 0), dim)] = Scalar::one(f);
  dE[flatten(idx(0, 0, 1), idx(0, 1, 0), dim)] = Scalar::one(f);
  dE[flatten(idx(0, 0, 0), idx(0, 0, 1), dim)] = Scalar::one(f);
  std::vector<Vec> dFp(p), dKp(p), dEp(p);
  dFp[0] = dKp[0] = dEp[0] = t2one;
  for (int k = 1; k < p; ++k) {
    dFp[k] = raw.t2_mul(dFp[k - 1], dF);
    dKp[k] = raw.t2_mul(dKp[k - 1], dK);
    dEp[k] = raw.t2_mul(dEp[k - 1], dE);
  }
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        fill_comult(d, idx(a, b, c), raw.t2_mul(raw.t2_mul(dFp[a], dKp[b]), dEp[c]), dim);

  // S(F^a K^b E^c) = S(E)^c S(K)^b S(F)^a with S(E) = -E K^{-1}, S(K) = K^{-1}, S(F) = -K F.
  Vec sE = zero_vec(f, dim), sF = zero_vec(f, dim), sK = zero_vec(f, dim), onev = zero_vec(f, dim);
  onev[idx(0, 0, 0)] = Scalar::one(f);
  {
    // -E K^{-1} = -q^{-2(p-1)} ... normal order via raw.mul on monomials
    Vec e = zero_vec(f, dim);
    e[idx(0, 0, 1)] = Scalar::one(f);
    Vec kinv = zero_vec(f, dim);
    kinv[idx(0, p - 1, 0)] = Scalar::one(f);
    sE = scaled(raw.mul(e, kinv), -Scalar::one(f));
    sK = kinv;
    Vec kk = zero_vec(f, dim);
    kk[idx(0, 1, 0)] = Scalar::one(f);
    Vec ff = zero_vec(f, dim);
    ff[idx(1, 0, 0)] = Scalar::one(f);
    sF = scaled(raw.mul(kk, ff), -Scalar::one(f));
  }
  std::vector<Vec> sEp(p), sKp(p), sFp(p);
  sEp[0] = sKp[0] = sFp[0] = onev;
  for (int k = 1; k < p; ++k) {
    sEp[k] = raw.mul(sEp[k - 1], sE);
    sKp[k] = raw.mul(sKp[k - 1], sK);
    sFp[k] = raw.mul(sFp[k - 1], sF);
  }
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        fill_antipode(d, idx(a, b, c), raw.mul(raw.mul(sEp[c], sKp[b]), sFp[a]));

  auto h = HopfAlgebra::make(std::move(d));
  require_verified(*h);
  return h;
}

Twist sweedler_coboundary_twist() {
  HopfPtr h4 = sweedler_h4();
  // u = 1 + x: invertible (x^2 = 0) with eps(u) = 1.
  Vec u = h4->basis_vec(0);
  for (int i = 0; i < h4->dim(); ++i)
    if (h4->label(i) == "x") u[i] = Scalar::one(h4->field());
  Vec psi = coboundary_cocycle(*h4, u);
  return drinfeld_twist(h4, psi);
}

namespace {

std::map<std::string, std::string> parse_params(const std::string& rest, std::string& positional) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start <= rest.size() && !rest.empty()) {
    std::size_t comma = rest.find(',', start);
    std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) {
      std::size_t eq = tok.find('=');
      if (eq == std::string::npos)
        positional = tok;
      else
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

const Field* parse_field_name(const std::string& name) {
  if (name == "Q" || name == "rationals") return Field::rationals();
  if (name.size() > 1 && name[0] == 'F') return Field::prime(std::stoul(name.substr(1)));
  if (name.rfind("Qz", 0) == 0) return Field::cyclotomic(std::stoul(name.substr(2)));
  if (name.rfind("Q(z", 0) == 0 && name.back() == ')')
    return Field::cyclotomic(std::stoul(name.substr(3, name.size() - 4)));
  throw std::invalid_argument("unknown field '" + name + "' (expected Q, F<p>, or Qz<n>)");
}

namespace {

HopfPtr builtin_uncached(const std::string& spec);

}  // namespace

HopfPtr builtin(const std::string& spec) {
  static std::map<std::string, HopfPtr> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(spec); it != cache.end()) return it->second;
  }
  HopfPtr h = builtin_uncached(spec);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(spec, h);
  return h;
}

namespace {

HopfPtr builtin_uncached(const std::string& spec) {
  std::string name = spec, rest;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    rest = spec.substr(colon + 1);
  }
  std::string positional;
  auto params = parse_params(rest, positional);
  const Field* field = nullptr;
  if (params.count("field")) field = parse_field_name(params.at("field"));

  if (name == "trivial") return trivial_algebra(field ? field : Field::rationals());
  if (name == "sweedler") return sweedler_h4();
  if (name == "sweedler-twist") return sweedler_coboundary_twist().algebra;
  if (name == "group-algebra") {
    std::string g = params.count("group") ? params.at("group") : positional;
    if (g.empty()) throw std::invalid_argument("group-algebra: missing group name");
    return group_algebra(named_group(g), field);
  }
  if (name == "function-algebra") {
    std::string g = params.count("group") ? params.at("group") : positional;
    if (g.empty()) throw std::invalid_argument("function-algebra: missing group name");
    return function_algebra(named_group(g), field);
  }
  if (name == "taft") {
    std::string n = params.count("n") ? params.at("n") : positional;
    if (n.empty()) throw std::invalid_argument("taft: missing parameter n");
    long qpow = params.count("qpow") ? std::stol(params.at("qpow")) : 1;
    return taft(std::stoi(n), qpow, field);
  }
  if (name == "small-quantum-sl2") {
    std::string p = params.count("p") ? params.at("p") : positional;
    if (p.empty()) throw std::invalid_argument("small-quantum-sl2: missing parameter p");
    return small_quantum_sl2(std::stoi(p));
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"trivial",        "sweedler", "sweedler-twist", "group-algebra:<G>",
          "function-algebra:<G>", "taft:n=<n>", "small-quantum-sl2:p=<p>"};
}

}  // namespace hopfseq
