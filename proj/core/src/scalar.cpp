#include "hopfseq/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace hopfseq {

namespace {

int poly_deg(const std::vector<Rat>& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

// Remainder of a modulo the monic polynomial m.
void poly_mod(std::vector<Rat>& a, const std::vector<Rat>& m) {
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) {
    a.resize(dm, Rat(0));
    return;
  }
  for (std::size_t i = a.size(); i-- > dm;) {
    Rat c = a[i];
    if (c != 0)
      for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
  }
  a.resize(dm);
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Bezout coefficient u with u*a + v*m = gcd(a, m), for m monic irreducible and
// a nonzero of smaller degree; returns u / gcd so that u*a = 1 mod m.
std::vector<Rat> poly_inverse_mod(const std::vector<Rat>& a, const std::vector<Rat>& m) {
  // Extended Euclid on (m, a).
  std::vector<Rat> r0 = m, r1 = a;
  std::vector<Rat> u0 = {Rat(0)}, u1 = {Rat(1)};  // coefficients of a
  while (poly_deg(r1) > 0) {
    // r0 = q*r1 + r2
    std::vector<Rat> q(std::max<int>(poly_deg(r0) - poly_deg(r1) + 1, 1), Rat(0));
    std::vector<Rat> r2 = r0;
    int d1 = poly_deg(r1);
    Rat lead = r1[d1];
    for (int i = poly_deg(r2); i >= d1; --i) {
      Rat c = r2[i] / lead;
      if (c == 0) continue;
      q[i - d1] = c;
      for (int j = 0; j <= d1; ++j) r2[i - d1 + j] -= c * r1[j];
    }
    std::vector<Rat> u2 = u0;
    {
      std::vector<Rat> qu1 = poly_mul(q, u1);
      if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rat(0));
      for (std::size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  int d = poly_deg(r1);
  if (d != 0) throw std::domain_error("poly_inverse_mod: element not invertible");
  Rat g = r1[0];
  for (auto& c : u1) c /= g;
  std::vector<Rat> out = u1;
  out.resize(std::max(out.size(), m.size() - 1), Rat(0));
  poly_mod(out, m);
  return out;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
    // after swaps: (t, newt) and (r, newr) advanced one step
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  long long res = t % static_cast<long long>(p);
  if (res < 0) res += static_cast<long long>(p);
  return static_cast<std::uint64_t>(res);
}

}  // namespace

Scalar Scalar::zero(const Field* f) {
  Scalar s(f);
  if (f->kind() != FieldKind::prime) s.c_.assign(f->degree(), Rat(0));
  return s;
}

Scalar Scalar::one(const Field* f) {
  Scalar s = zero(f);
  if (f->kind() == FieldKind::prime)
    s.r_ = 1 % f->prime_modulus();
  else
    s.c_[0] = Rat(1);
  return s;
}

Scalar Scalar::of(const Field* f, long value) {
  Scalar s = zero(f);
  if (f->kind() == FieldKind::prime) {
    long long p = f->prime_modulus();
    long long v = value % p;
    if (v < 0) v += p;
    s.r_ = static_cast<std::uint64_t>(v);
  } else {
    s.c_[0] = Rat(value);
  }
  return s;
}

Scalar Scalar::of(const Field* f, const Rat& value) {
  if (f->kind() == FieldKind::prime) {
    // num/den mod p
    mpz_class p(f->prime_modulus());
    mpz_class num = value.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = value.get_den() % p;
    Scalar s = zero(f);
    std::uint64_t d = den.get_ui();
    if (d == 0) throw std::domain_error("Scalar::of: denominator divisible by p");
    s.r_ = num.get_ui() * mod_inverse(d, f->prime_modulus()) % f->prime_modulus();
    return s;
  }
  Scalar s = zero(f);
  s.c_[0] = value;
  return s;
}

Scalar Scalar::generator(const Field* f) {
  if (f->kind() != FieldKind::cyclotomic)
    throw std::invalid_argument("Scalar::generator: field has no distinguished generator");
  Scalar s = zero(f);
  if (f->degree() == 1) {
    // Phi_1 = z - 1, Phi_2 = z + 1: z reduces to a rational.
    s.c_[0] = (f->conductor() == 1) ? Rat(1) : Rat(-1);
  } else {
    s.c_[1] = Rat(1);
  }
  return s;
}

void Scalar::reduce_cyclotomic() {
  if (field_->kind() == FieldKind::cyclotomic && c_.size() >= field_->modulus().size())
    poly_mod(c_, field_->modulus());
  c_.resize(field_->degree(), Rat(0));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw std::invalid_argument("scalar operands belong to different fields");
}

bool Scalar::is_zero() const {
  if (field_->kind() == FieldKind::prime) return r_ == 0;
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (field_->kind() == FieldKind::prime) return r_ == 1 % field_->prime_modulus();
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_->kind() == FieldKind::prime) {
    s.r_ = r_ == 0 ? 0 : field_->prime_modulus() - r_;
  } else {
    for (auto& c : s.c_) c = -c;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_->kind() == FieldKind::prime) {
    r_ = (r_ + o.r_) % field_->prime_modulus();
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_->kind() == FieldKind::prime) {
    r_ = (r_ + field_->prime_modulus() - o.r_) % field_->prime_modulus();
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s -= o;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  switch (field_->kind()) {
    case FieldKind::prime:
      s.r_ = r_ * o.r_ % field_->prime_modulus();
      break;
    case FieldKind::rationals:
      s.c_ = {c_[0] * o.c_[0]};
      break;
    case FieldKind::cyclotomic:
      s.c_ = poly_mul(c_, o.c_);
      s.reduce_cyclotomic();
      break;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar inverse of zero");
  Scalar s(field_);
  switch (field_->kind()) {
    case FieldKind::prime:
      s.r_ = mod_inverse(r_, field_->prime_modulus());
      break;
    case FieldKind::rationals:
      s.c_ = {Rat(1) / c_[0]};
      break;
    case FieldKind::cyclotomic:
      if (field_->degree() == 1) {
        s.c_ = {Rat(1) / c_[0]};
      } else {
        s.c_ = poly_inverse_mod(c_, field_->modulus());
      }
      break;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = one(field_);
  Scalar base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_->kind() == FieldKind::prime) return r_ == o.r_;
  return c_ == o.c_;
}

Rat Scalar::coeff(std::size_t i) const {
  if (field_->kind() == FieldKind::prime) return i == 0 ? Rat(static_cast<long>(r_)) : Rat(0);
  return i < c_.size() ? c_[i] : Rat(0);
}

std::string Scalar::str() const {
  if (field_->kind() == FieldKind::prime) return std::to_string(r_);
  if (field_->kind() == FieldKind::rationals || field_->degree() == 1) return c_[0].get_str();
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat a = c_[k];
    bool neg = a < 0;
    Rat mag = neg ? Rat(-a) : a;
    std::string piece;
    if (k == 0) {
      piece = mag.get_str();
    } else {
      std::string zp = (k == 1) ? "z" : "z^" + std::to_string(k);
      piece = (mag == 1) ? zp : mag.get_str() + "*" + zp;
    }
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
};

mpz_class parse_integer(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  if (cur.i == start) throw std::invalid_argument("scalar parse: expected digits in '" + cur.s + "'");
  return mpz_class(cur.s.substr(start, cur.i - start));
}

Rat parse_rational(Cursor& cur) {
  mpz_class num = parse_integer(cur);
  if (cur.eat('/')) {
    mpz_class den = parse_integer(cur);
    if (den == 0) throw std::invalid_argument("scalar parse: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  return Rat(num);
}

}  // namespace

Scalar Scalar::parse(const Field* f, const std::string& text) {
  Cursor cur{text};
  if (f->kind() == FieldKind::prime) {
    bool neg = cur.eat('-');
    if (!neg) cur.eat('+');
    mpz_class v = parse_integer(cur);
    if (!cur.done()) throw std::invalid_argument("scalar parse: trailing characters in '" + text + "'");
    mpz_class p(f->prime_modulus());
    mpz_class r = v % p;
    if (neg && r != 0) r = p - r;
    Scalar s = zero(f);
    s.r_ = r.get_ui();
    return s;
  }

  // Sum of terms: [+-] coeff [* z[^k]] | [+-] z[^k]
  Scalar acc = zero(f);
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.eat('-'))
      neg = true;
    else if (!cur.eat('+') && !first)
      throw std::invalid_argument("scalar parse: expected '+' or '-' in '" + text + "'");
    first = false;
    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = parse_rational(cur);
      have_coeff = true;
    }
    long zpow = 0;
    if (cur.peek() == 'z') {
      cur.eat('z');
      zpow = 1;
      if (cur.eat('^')) zpow = parse_integer(cur).get_si();
    } else if (have_coeff && cur.peek() == '*') {
      cur.eat('*');
      if (!cur.eat('z')) throw std::invalid_argument("scalar parse: expected z after '*' in '" + text + "'");
      zpow = 1;
      if (cur.eat('^')) zpow = parse_integer(cur).get_si();
    } else if (!have_coeff) {
      throw std::invalid_argument("scalar parse: expected term in '" + text + "'");
    }
    if (neg) coeff = -coeff;
    if (zpow == 0) {
      acc += Scalar::of(f, coeff);
    } else {
      if (f->kind() != FieldKind::cyclotomic)
        throw std::invalid_argument("scalar parse: symbol z requires a cyclotomic field");
      Scalar term = Scalar::generator(f).pow(zpow);
      term *= Scalar::of(f, coeff);
      acc += term;
    }
  }
  return acc;
}

Scalar primitive_root_of_unity(const Field* f, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("primitive_root_of_unity: n must be >= 1");
  if (n == 1) return Scalar::one(f);
  if (n == 2) return -Scalar::one(f);
  if (f->kind() != FieldKind::cyclotomic || f->conductor() % n != 0)
    throw std::domain_error("field " + f->description() + " contains no primitive root of order " +
                            std::to_string(n) + " (field extension required)");
  Scalar z = Scalar::generator(f);
  Scalar w = z.pow(f->conductor() / n);
  return w;
}

}  // namespace hopfseq
