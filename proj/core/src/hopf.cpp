#include "hopfseq/hopf.hpp"

#include <stdexcept>

namespace hopfseq {

void Certificate::add(std::string name, bool pass, std::string witness) {
  items.push_back({std::move(name), pass, std::move(witness)});
}

bool Certificate::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string Certificate::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return it.name + (it.witness.empty() ? "" : " [" + it.witness + "]");
  return "";
}

void sparse_add(SparseVec& acc, int idx, const Scalar& c) {
  if (c.is_zero()) return;
  for (auto& [i, v] : acc) {
    if (i == idx) {
      v += c;
      return;
    }
  }
  acc.emplace_back(idx, c);
}

SparseVec sparse_normalize(std::map<int, Scalar>&& acc) {
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [i, v] : acc)
    if (!v.is_zero()) out.emplace_back(i, std::move(v));
  return out;
}

Vec sparse_to_dense(const SparseVec& v, const Field* f, std::size_t n) {
  Vec out = zero_vec(f, n);
  for (const auto& [i, c] : v) out[i] += c;
  return out;
}

namespace {

SparseVec sorted_clean(SparseVec v) {
  std::map<int, Scalar> acc;
  for (auto& [i, c] : v) {
    auto it = acc.find(i);
    if (it == acc.end())
      acc.emplace(i, c);
    else
      it->second += c;
  }
  return sparse_normalize(std::move(acc));
}

}  // namespace

HopfPtr HopfAlgebra::make(Data d) {
  auto h = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  const Field* f = d.field;
  if (!f) throw std::invalid_argument("HopfAlgebra: missing field");
  const int n = static_cast<int>(d.unit.size());
  if (n <= 0) throw std::invalid_argument("HopfAlgebra: dimension must be positive");
  if (d.counit.size() != d.unit.size())
    throw std::invalid_argument("HopfAlgebra: unit/counit length mismatch");
  h->field_ = f;
  h->n_ = n;
  if (d.labels.empty()) {
    for (int i = 0; i < n; ++i) d.labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(d.labels.size()) != n)
    throw std::invalid_argument("HopfAlgebra: label count mismatch");
  h->labels_ = std::move(d.labels);
  h->unit_ = std::move(d.unit);
  h->counit_ = std::move(d.counit);

  auto check_index = [n](int i, const char* what) {
    if (i < 0 || i >= n)
      throw std::invalid_argument(std::string("HopfAlgebra: ") + what + " index out of range: " +
                                  std::to_string(i));
  };

  h->mult_.assign(static_cast<std::size_t>(n) * n, {});
  for (auto& [i, j, k, c] : d.mult) {
    check_index(i, "mult");
    check_index(j, "mult");
    check_index(k, "mult");
    if (c.field() != f) throw std::invalid_argument("HopfAlgebra: mult coefficient in wrong field");
    sparse_add(h->mult_[static_cast<std::size_t>(i) * n + j], k, c);
  }
  for (auto& sv : h->mult_) sv = sorted_clean(std::move(sv));

  h->comult_.assign(n, {});
  for (auto& [i, j, k, c] : d.comult) {
    check_index(i, "comult");
    check_index(j, "comult");
    check_index(k, "comult");
    if (c.field() != f) throw std::invalid_argument("HopfAlgebra: comult coefficient in wrong field");
    sparse_add(h->comult_[i], static_cast<int>(flatten(j, k, n)), c);
  }
  for (auto& sv : h->comult_) sv = sorted_clean(std::move(sv));

  Matrix s(f, n, n);
  for (auto& [i, j, c] : d.antipode) {
    check_index(i, "antipode");
    check_index(j, "antipode");
    s.at(j, i) += c;  // column i holds S(e_i)
  }
  h->antipode_ = s;
  auto inv = inverse(s);
  if (!inv)
    throw std::invalid_argument(
        "HopfAlgebra: antipode matrix is singular (finite-dimensional antipodes are bijective)");
  h->antipode_inv_ = std::move(*inv);
  return h;
}

Vec HopfAlgebra::basis_vec(int i) const {
  Vec v = zero_vec(field_, n_);
  v[i] = Scalar::one(field_);
  return v;
}

Vec HopfAlgebra::mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
  if (a.size() != static_cast<std::size_t>(n_) || b.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("HopfAlgebra::mul: dimension mismatch");
  Vec out = zero_vec(field_, n_);
  for (int i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, m] : mult_sparse(i, j)) out[k] += c * m;
    }
  }
  return out;
}

Scalar HopfAlgebra::counit_of(std::span<const Scalar> a) const {
  Scalar acc = Scalar::zero(field_);
  for (int i = 0; i < n_; ++i)
    if (!a[i].is_zero()) acc += a[i] * counit_[i];
  return acc;
}

Vec HopfAlgebra::antipode_of(std::span<const Scalar> a) const { return antipode_.apply(a); }
Vec HopfAlgebra::antipode_inv_of(std::span<const Scalar> a) const { return antipode_inv_.apply(a); }

Vec HopfAlgebra::sweedler(std::span<const Scalar> a, int legs) const {
  if (legs < 1) throw std::invalid_argument("sweedler: legs must be >= 1");
  Vec cur(a.begin(), a.end());
  for (int order = 1; order < legs; ++order) {
    // Apply Delta on leg 1: out[(j,k), rest] += Delta(e_i)[(j,k)] * cur[i, rest]
    std::size_t rest = cur.size() / n_;
    Vec out = zero_vec(field_, cur.size() * n_);
    for (int i = 0; i < n_; ++i) {
      const SparseVec& di = comult_[i];
      for (std::size_t r = 0; r < rest; ++r) {
        const Scalar& c = cur[i * rest + r];
        if (c.is_zero()) continue;
        for (const auto& [jk, d] : di) out[static_cast<std::size_t>(jk) * rest + r] += c * d;
      }
    }
    cur = std::move(out);
  }
  return cur;
}

Vec HopfAlgebra::comult_op_of(std::span<const Scalar> a) const { return t2_flip(comult_of(a)); }

Vec HopfAlgebra::t2_unit() const {
  Vec out = zero_vec(field_, static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    if (unit_[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j)
      if (!unit_[j].is_zero()) out[flatten(i, j, n_)] += unit_[i] * unit_[j];
  }
  return out;
}

Vec HopfAlgebra::t2_mul(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  if (x.size() != nn || y.size() != nn)
    throw std::invalid_argument("t2_mul: tensor-square dimension mismatch");
  std::vector<std::size_t> nzx, nzy;
  for (std::size_t p = 0; p < nn; ++p)
    if (!x[p].is_zero()) nzx.push_back(p);
  for (std::size_t q = 0; q < nn; ++q)
    if (!y[q].is_zero()) nzy.push_back(q);
  Vec out = zero_vec(field_, nn);
  for (std::size_t p : nzx) {
    auto [i, j] = unflatten(p, n_);
    for (std::size_t q : nzy) {
      auto [k, l] = unflatten(q, n_);
      Scalar c = x[p] * y[q];
      for (const auto& [a, ca] : mult_sparse(static_cast<int>(i), static_cast<int>(k)))
        for (const auto& [b, cb] : mult_sparse(static_cast<int>(j), static_cast<int>(l)))
          out[flatten(a, b, n_)] += c * ca * cb;
    }
  }
  return out;
}

std::optional<Vec> HopfAlgebra::t2_inverse(std::span<const Scalar> x) const {
  // Left-multiplication matrix of x on A (x) A, solved against 1 (x) 1; the
  // two-sided check is the caller's responsibility (x y = 1 and y x = 1).
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  Matrix lm(field_, nn, nn);
  for (std::size_t p = 0; p < nn; ++p) {
    if (x[p].is_zero()) continue;
    auto [i, j] = unflatten(p, n_);
    for (std::size_t q = 0; q < nn; ++q) {
      auto [k, l] = unflatten(q, n_);
      for (const auto& [a, ca] : mult_sparse(static_cast<int>(i), static_cast<int>(k)))
        for (const auto& [b, cb] : mult_sparse(static_cast<int>(j), static_cast<int>(l)))
          lm.at(flatten(a, b, n_), q) += x[p] * ca * cb;
    }
  }
  auto sol = solve(lm, t2_unit());
  if (!sol) return std::nullopt;
  Vec check = t2_mul(*sol, x);
  if (check != t2_unit()) return std::nullopt;
  return sol;
}

Vec HopfAlgebra::t2_flip(std::span<const Scalar> x) const {
  Vec out = zero_vec(field_, x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    auto [i, j] = unflatten(p, n_);
    out[flatten(j, i, n_)] = x[p];
  }
  return out;
}

Vec HopfAlgebra::t2_apply_pair(const Matrix& f, const Matrix& g, std::span<const Scalar> x) const {
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  Vec out = zero_vec(field_, nn);
  for (std::size_t p = 0; p < nn; ++p) {
    if (x[p].is_zero()) continue;
    auto [i, j] = unflatten(p, n_);
    for (std::size_t a = 0; a < f.rows(); ++a) {
      if (f.at(a, i).is_zero()) continue;
      for (std::size_t b = 0; b < g.rows(); ++b)
        if (!g.at(b, j).is_zero()) out[flatten(a, b, n_)] += x[p] * f.at(a, i) * g.at(b, j);
    }
  }
  return out;
}

Matrix HopfAlgebra::left_mult_matrix(std::span<const Scalar> v) const {
  Matrix m(field_, n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j)
      for (const auto& [k, c] : mult_sparse(i, j)) m.at(k, j) += v[i] * c;
  }
  return m;
}

Matrix HopfAlgebra::right_mult_matrix(std::span<const Scalar> v) const {
  Matrix m(field_, n_, n_);
  for (int j = 0; j < n_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < n_; ++i)
      for (const auto& [k, c] : mult_sparse(i, j)) m.at(k, i) += v[j] * c;
  }
  return m;
}

// ----- Element / Tensor2 -----

Element::Element(HopfPtr h, Vec v) : h_(std::move(h)), v_(std::move(v)) {
  if (v_.size() != static_cast<std::size_t>(h_->dim()))
    throw std::invalid_argument("Element: coefficient vector length mismatch");
}

Element Element::basis(HopfPtr h, int i) {
  Vec v = h->basis_vec(i);
  return Element(std::move(h), std::move(v));
}

Element Element::unit(HopfPtr h) {
  Vec v = h->unit_vec();
  return Element(std::move(h), std::move(v));
}

namespace {
void check_same(const HopfPtr& a, const HopfPtr& b) {
  if (a.get() != b.get())
    throw std::invalid_argument("operands belong to different algebras");
}
}  // namespace

Element Element::operator*(const Element& o) const {
  check_same(h_, o.h_);
  return Element(h_, h_->mul(v_, o.v_));
}

Element Element::operator+(const Element& o) const {
  check_same(h_, o.h_);
  Vec v = v_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v_[i];
  return Element(h_, std::move(v));
}

Element Element::operator-(const Element& o) const {
  check_same(h_, o.h_);
  Vec v = v_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v_[i];
  return Element(h_, std::move(v));
}

Element Element::scaled_by(const Scalar& c) const { return Element(h_, scaled(v_, c)); }

bool Element::operator==(const Element& o) const { return h_.get() == o.h_.get() && v_ == o.v_; }

Tensor2::Tensor2(HopfPtr h, Vec v) : h_(std::move(h)), v_(std::move(v)) {
  const std::size_t nn = static_cast<std::size_t>(h_->dim()) * h_->dim();
  if (v_.size() != nn) throw std::invalid_argument("Tensor2: grid length mismatch");
}

Tensor2 Tensor2::of(const Element& a, const Element& b) {
  check_same(a.algebra(), b.algebra());
  const HopfPtr& h = a.algebra();
  const int n = h->dim();
  Vec out = zero_vec(h->field(), static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (a.vec()[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!b.vec()[j].is_zero()) out[flatten(i, j, n)] += a.vec()[i] * b.vec()[j];
  }
  return Tensor2(h, std::move(out));
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
  check_same(h_, o.h_);
  return Tensor2(h_, h_->t2_mul(v_, o.v_));
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  check_same(h_, o.h_);
  Vec v = v_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v_[i];
  return Tensor2(h_, std::move(v));
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
  check_same(h_, o.h_);
  Vec v = v_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v_[i];
  return Tensor2(h_, std::move(v));
}

bool Tensor2::operator==(const Tensor2& o) const { return h_.get() == o.h_.get() && v_ == o.v_; }

SparseVec sparse_t2_mul(const HopfAlgebra& h, const SparseVec& x, const SparseVec& y) {
  const int n = h.dim();
  std::map<int, Scalar> acc;
  for (const auto& [p, cp] : x) {
    auto [i, j] = unflatten(p, n);
    for (const auto& [q, cq] : y) {
      auto [k, l] = unflatten(q, n);
      Scalar c = cp * cq;
      for (const auto& [a, ca] : h.mult_sparse(static_cast<int>(i), static_cast<int>(k)))
        for (const auto& [b, cb] : h.mult_sparse(static_cast<int>(j), static_cast<int>(l))) {
          Scalar v = c * ca * cb;
          if (v.is_zero()) continue;
          auto key = static_cast<int>(flatten(a, b, n));
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

// ----- Convolution -----

Matrix convolution(const HopfAlgebra& h, const Matrix& f, const Matrix& g) {
  const int n = h.dim();
  if (f.rows() != static_cast<std::size_t>(n) || f.cols() != static_cast<std::size_t>(n) ||
      g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("convolution: endomorphism shape mismatch");
  Matrix out(h.field(), n, n);
  for (int i = 0; i < n; ++i) {
    Vec col = zero_vec(h.field(), n);
    for (const auto& [jk, c] : h.comult_sparse(i)) {
      auto [j, k] = unflatten(jk, n);
      Vec fj = f.apply(h.basis_vec(static_cast<int>(j)));
      Vec gk = g.apply(h.basis_vec(static_cast<int>(k)));
      axpy(col, c, h.mul(fj, gk));
    }
    for (int r = 0; r < n; ++r) out.at(r, i) = col[r];
  }
  return out;
}

std::optional<Matrix> convolution_inverse(const HopfAlgebra& h, const Matrix& f) {
  // Unknown g (n^2 entries, column-major g_{r,k}); equations from
  // (f*g)(e_i) = eps(e_i) 1 and (g*f)(e_i) = eps(e_i) 1.
  const int n = h.dim();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  Matrix sys(h.field(), 2 * nn, nn);
  Vec rhs = zero_vec(h.field(), 2 * nn);
  auto unknown = [n](int r, int k) { return static_cast<std::size_t>(k) * n + r; };
  for (int i = 0; i < n; ++i) {
    for (const auto& [jk, c] : h.comult_sparse(i)) {
      auto [j, k] = unflatten(jk, n);
      // (f*g): f(e_j) * g(e_k): coefficient of g_{s,k} in row (i, out-coord r)
      Vec fj = f.apply(h.basis_vec(static_cast<int>(j)));
      Matrix lf = h.left_mult_matrix(fj);
      for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r)
          if (!lf.at(r, s).is_zero())
            sys.at(static_cast<std::size_t>(i) * n + r, unknown(s, static_cast<int>(k))) +=
                c * lf.at(r, s);
      // (g*f): g(e_j) * f(e_k): coefficient of g_{s,j}
      Vec fk = f.apply(h.basis_vec(static_cast<int>(k)));
      Matrix rf = h.right_mult_matrix(fk);
      for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r)
          if (!rf.at(r, s).is_zero())
            sys.at(nn + static_cast<std::size_t>(i) * n + r, unknown(s, static_cast<int>(j))) +=
                c * rf.at(r, s);
    }
    for (int r = 0; r < n; ++r) {
      Scalar e = h.counit_vec()[i] * h.unit_vec()[r];
      rhs[static_cast<std::size_t>(i) * n + r] = e;
      rhs[nn + static_cast<std::size_t>(i) * n + r] = e;
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix g(h.field(), n, n);
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < n; ++r) g.at(r, k) = (*sol)[unknown(r, k)];
  return g;
}

// ----- W operator -----

namespace {

using Sparse3 = std::map<std::array<int, 3>, Scalar>;

void s3_add(Sparse3& acc, std::array<int, 3> key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(key);
  if (it == acc.end())
    acc.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// Applies W (or W^{-1}) to legs (la, lb) of an order-3 sparse tensor.
Sparse3 w_apply(const HopfAlgebra& h, const Sparse3& v, int la, int lb, bool inv) {
  Sparse3 out;
  const int n = h.dim();
  for (const auto& [key, c] : v) {
    int x = key[la - 1], y = key[lb - 1];
    for (const auto& [jk, d] : h.comult_sparse(x)) {
      auto [j, k] = unflatten(jk, n);
      Vec second;
      if (inv)
        second = h.mul(h.antipode_of(h.basis_vec(static_cast<int>(k))), h.basis_vec(y));
      else
        second = h.mul(h.basis_vec(static_cast<int>(k)), h.basis_vec(y));
      for (int t = 0; t < n; ++t) {
        if (second[t].is_zero()) continue;
        std::array<int, 3> nk = key;
        nk[la - 1] = static_cast<int>(j);
        nk[lb - 1] = t;
        s3_add(out, nk, c * d * second[t]);
      }
    }
  }
  return out;
}

}  // namespace

Matrix WOperator::dense() const {
  const int n = algebra->dim();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  Matrix m(algebra->field(), nn, nn);
  for (std::size_t col = 0; col < nn; ++col)
    for (const auto& [r, c] : columns[col]) m.at(r, col) += c;
  return m;
}

Matrix WOperator::dense_inverse() const {
  const int n = algebra->dim();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  Matrix m(algebra->field(), nn, nn);
  for (std::size_t col = 0; col < nn; ++col)
    for (const auto& [r, c] : inv_columns[col]) m.at(r, col) += c;
  return m;
}

WOperator w_operator(HopfPtr h) {
  require_verified(*h);
  const int n = h->dim();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  WOperator w;
  w.algebra = h;
  w.columns.resize(nn);
  w.inv_columns.resize(nn);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::map<int, Scalar> col, icol;
      for (const auto& [jk, c] : h->comult_sparse(a)) {
        auto [j, k] = unflatten(jk, n);
        Vec kb = h->mul(h->basis_vec(static_cast<int>(k)), h->basis_vec(b));
        for (int t = 0; t < n; ++t)
          if (!kb[t].is_zero()) {
            auto key = static_cast<int>(flatten(j, t, n));
            auto it = col.find(key);
            if (it == col.end())
              col.emplace(key, c * kb[t]);
            else
              it->second += c * kb[t];
          }
        Vec skb = h->mul(h->antipode_of(h->basis_vec(static_cast<int>(k))), h->basis_vec(b));
        for (int t = 0; t < n; ++t)
          if (!skb[t].is_zero()) {
            auto key = static_cast<int>(flatten(j, t, n));
            auto it = icol.find(key);
            if (it == icol.end())
              icol.emplace(key, c * skb[t]);
            else
              it->second += c * skb[t];
          }
      }
      w.columns[flatten(a, b, n)] = sparse_normalize(std::move(col));
      w.inv_columns[flatten(a, b, n)] = sparse_normalize(std::move(icol));
    }
  }

  // W W^{-1} = id = W^{-1} W on all basis pairs.
  bool inv_ok = true;
  std::string inv_witness;
  for (std::size_t p = 0; p < nn && inv_ok; ++p) {
    std::map<int, Scalar> acc1, acc2;
    for (const auto& [q, c] : w.inv_columns[p])
      for (const auto& [r, d] : w.columns[q]) {
        auto it = acc1.find(r);
        if (it == acc1.end())
          acc1.emplace(r, c * d);
        else
          it->second += c * d;
      }
    for (const auto& [q, c] : w.columns[p])
      for (const auto& [r, d] : w.inv_columns[q]) {
        auto it = acc2.find(r);
        if (it == acc2.end())
          acc2.emplace(r, c * d);
        else
          it->second += c * d;
      }
    SparseVec s1 = sparse_normalize(std::move(acc1));
    SparseVec s2 = sparse_normalize(std::move(acc2));
    SparseVec expect{{static_cast<int>(p), Scalar::one(h->field())}};
    if (s1 != expect || s2 != expect) {
      inv_ok = false;
      inv_witness = "basis pair " + std::to_string(p);
    }
  }
  w.cert.add("w_inverse_formula", inv_ok, inv_witness);

  // Braid-type identity, certified in the product form W23 W12 = W12 W13 W23.
  bool pent_ok = true;
  std::string pent_witness;
  for (int a = 0; a < n && pent_ok; ++a)
    for (int b = 0; b < n && pent_ok; ++b)
      for (int c0 = 0; c0 < n && pent_ok; ++c0) {
        Sparse3 v;
        v.emplace(std::array<int, 3>{a, b, c0}, Scalar::one(h->field()));
        Sparse3 lhs = w_apply(*h, w_apply(*h, v, 1, 2, false), 2, 3, false);
        Sparse3 rhs = w_apply(*h, w_apply(*h, w_apply(*h, v, 2, 3, false), 1, 3, false), 1, 2, false);
        if (lhs != rhs) {
          pent_ok = false;
          pent_witness = "basis triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c0) + ")";
        }
      }
  w.cert.add("w_pentagon", pent_ok, pent_witness);
  return w;
}

}  // namespace hopfseq
