#include "hopfseq/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hopfseq {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Divides a by the monic polynomial b, requiring zero remainder.
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<Rat> q(a.size() - db, Rat(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rat c = a[k + db];
    q[k] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j) a[k + j] -= c * b[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (a[j] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

std::vector<Rat> cyclotomic_polynomial(std::uint32_t n) {
  static std::map<std::uint32_t, std::vector<Rat>> cache;
  static std::mutex mu;
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Phi_m = (t^m - 1) / prod_{e | m, e < m} Phi_e, built up over the divisors
  // of n in increasing order (every divisor of m also divides n).
  for (std::uint32_t m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    std::vector<Rat> poly(m + 1, Rat(0));
    poly[0] = Rat(-1);
    poly[m] = Rat(1);
    for (std::uint32_t e = 1; e < m; ++e)
      if (m % e == 0) poly = poly_div_exact(std::move(poly), cache.at(e));
    cache[m] = std::move(poly);
  }
  return cache.at(n);
}

const Field* Field::rationals() {
  static Field f = [] {
    Field g;
    g.kind_ = FieldKind::rationals;
    g.degree_ = 1;
    return g;
  }();
  return &f;
}

const Field* Field::prime(std::uint32_t p) {
  static std::map<std::uint32_t, std::unique_ptr<Field>> cache;
  static std::mutex mu;
  if (!is_prime(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("Field::prime: modulus too large");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) {
    slot.reset(new Field());
    slot->kind_ = FieldKind::prime;
    slot->p_ = p;
    slot->degree_ = 1;
  }
  return slot.get();
}

const Field* Field::cyclotomic(std::uint32_t n) {
  static std::map<std::uint32_t, std::unique_ptr<Field>> cache;
  static std::mutex mu;
  if (n == 0) throw std::invalid_argument("Field::cyclotomic: n must be >= 1");
  auto phi = cyclotomic_polynomial(n);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot.reset(new Field());
    slot->kind_ = FieldKind::cyclotomic;
    slot->n_ = n;
    slot->phi_ = std::move(phi);
    slot->degree_ = static_cast<std::uint32_t>(slot->phi_.size() - 1);
  }
  return slot.get();
}

std::string Field::description() const {
  switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "F" + std::to_string(p_);
    case FieldKind::cyclotomic: return "Q(z" + std::to_string(n_) + ")";
  }
  return "?";
}

}  // namespace hopfseq
