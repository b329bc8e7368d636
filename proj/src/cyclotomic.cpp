#include "qharm/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace qharm {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

// Quotient and remainder of a by b (b nonzero, trimmed).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  const int db = deg(b);
  if (deg(a) < db) return {RatPoly{}, a};
  RatPoly quot(static_cast<std::size_t>(deg(a) - db + 1));
  const Rational& lead = b.back();
  for (int j = deg(a); j >= db; --j) {
    if (a[j] == 0) continue;
    Rational c = a[j] / lead;
    quot[j - db] = c;
    for (int i = 0; i <= db; ++i) a[j - db + i] -= c * b[i];
  }
  a.resize(static_cast<std::size_t>(db));
  trim(a);
  trim(quot);
  return {quot, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

IntPolynomial compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  RatPoly num(static_cast<std::size_t>(n) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPolynomial& pd = cyclotomic_polynomial(d);
    RatPoly den(pd.coeffs.begin(), pd.coeffs.end());
    auto [q, r] = divmod(num, den);
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    num = std::move(q);
  }
  IntPolynomial out;
  for (const auto& c : num) {
    if (c.get_den() != 1) throw std::logic_error("non-integral cyclotomic coefficient");
    out.coeffs.push_back(c.get_num());
  }
  return out;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPolynomial& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const IntPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // Computed outside the lock: the construction recurses into smaller moduli.
  auto poly = std::make_unique<const IntPolynomial>(compute_cyclotomic(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return *it->second;
}

// ---------------------------------------------------------------------------
// CyclotomicField

const CyclotomicField& CyclotomicField::get(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic field: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  std::unique_ptr<const CyclotomicField> field(new CyclotomicField(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(field));
  return *it->second;
}

CyclotomicField::CyclotomicField(int n)
    : n_(n), degree_(euler_phi(n)), phi_(&cyclotomic_polynomial(n)) {
  zeta_powers_.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    RatPoly mono(static_cast<std::size_t>(e) + 1);
    mono[static_cast<std::size_t>(e)] = 1;
    zeta_powers_.emplace_back(*this, std::move(mono));
  }
  inv_q_integers_.reserve(static_cast<std::size_t>(n));
  inv_q_integers_.emplace_back();  // [0] unused
  CyclotomicNumber qint(*this);
  for (int m = 1; m < n; ++m) {
    qint += zeta_powers_[static_cast<std::size_t>(m - 1)];
    inv_q_integers_.push_back(qint.inverse());
  }
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
  const auto& phi = phi_->coeffs;
  const int d = degree_;
  for (int j = static_cast<int>(poly.size()) - 1; j >= d; --j) {
    if (poly[j] == 0) continue;
    const Rational c = poly[j];  // Phi_n is monic
    for (int i = 0; i <= d; ++i) {
      if (phi[i] != 0) poly[j - d + i] -= c * phi[i];
    }
  }
  poly.resize(static_cast<std::size_t>(d));
  return poly;
}

const CyclotomicNumber& CyclotomicField::zeta_power(std::int64_t e) const {
  const std::int64_t r = ((e % n_) + n_) % n_;
  return zeta_powers_[static_cast<std::size_t>(r)];
}

CyclotomicNumber CyclotomicField::one_minus_zeta_pow(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("one_minus_zeta_pow: k must be >= 0");
  CyclotomicNumber base(*this, Rational(1));
  base -= zeta();
  return base.pow(k);
}

const CyclotomicNumber& CyclotomicField::inv_q_integer(int m) const {
  if (m < 1 || m >= n_) throw std::out_of_range("inv_q_integer: need 1 <= m < n");
  return inv_q_integers_[static_cast<std::size_t>(m)];
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

CyclotomicNumber::CyclotomicNumber(const CyclotomicField& field)
    : field_(&field), coeffs_(static_cast<std::size_t>(field.degree())) {}

CyclotomicNumber::CyclotomicNumber(const CyclotomicField& field, const Rational& value)
    : CyclotomicNumber(field) {
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(const CyclotomicField& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(field.reduce(std::move(coeffs))) {}

CyclotomicNumber CyclotomicNumber::zero(int n) { return CyclotomicNumber(CyclotomicField::get(n)); }

CyclotomicNumber CyclotomicNumber::from_rational(int n, const Rational& value) {
  return CyclotomicNumber(CyclotomicField::get(n), value);
}

int CyclotomicNumber::modulus() const {
  if (!field_) throw std::logic_error("cyclotomic number without modulus");
  return field_->n();
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CyclotomicNumber::rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

const CyclotomicField* CyclotomicNumber::adopt(const CyclotomicNumber& other) {
  if (!other.field_) return field_;
  if (!field_) {
    field_ = other.field_;
    coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  } else if (field_ != other.field_) {
    throw std::invalid_argument("cyclotomic modulus mismatch: " + std::to_string(field_->n()) +
                                " vs " + std::to_string(other.field_->n()));
  }
  return field_;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
  if (!adopt(other) || !other.field_) return *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
  if (!adopt(other) || !other.field_) return *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other) {
  if (!adopt(other)) return *this;
  if (!other.field_) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  const std::size_t d = coeffs_.size();
  if (d == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  RatPoly prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (other.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = field_->reduce(std::move(prod));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& other) {
  return *this *= other.inverse();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (!field_ || is_zero()) throw std::domain_error("division by zero in Q(zeta_n)");
  if (is_rational()) return CyclotomicNumber(*field_, Rational(1) / coeffs_[0]);
  // Extended Euclid: track s with s * x == r (mod Phi_n).
  const auto& phi = field_->minimal_polynomial().coeffs;
  RatPoly r0(phi.begin(), phi.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (deg(r1) > 0) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("non-invertible element in a field");
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return CyclotomicNumber(*field_, std::move(s1));
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t e) const {
  if (!field_) throw std::logic_error("pow of cyclotomic number without modulus");
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(*field_, Rational(1));
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (!a.field_) return b.is_zero();
  if (!b.field_) return a.is_zero();
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------

CyclotomicNumber zeta(int n) { return CyclotomicField::get(n).zeta(); }

CyclotomicNumber q_integer(int m, int n) {
  if (m < 1) throw std::invalid_argument("q_integer: m must be >= 1");
  if (m % n == 0) throw std::domain_error("q_integer: [m] vanishes when n divides m");
  const auto& field = CyclotomicField::get(n);
  CyclotomicNumber out(field);
  for (int i = 0; i < m; ++i) out += field.zeta_power(i);
  return out;
}

CyclotomicNumber one_minus_zeta_pow(int n, std::int64_t k) {
  return CyclotomicField::get(n).one_minus_zeta_pow(k);
}

std::variant<Rational, NotRational> rational_multiple_of(const CyclotomicNumber& x,
                                                         std::int64_t k) {
  const int n = x.modulus();
  if (n < 2) throw std::invalid_argument("rational_multiple_of: need n >= 2");
  CyclotomicNumber y = x;
  if (!x.is_zero()) y *= one_minus_zeta_pow(n, k).inverse();
  if (y.is_rational()) return y.rational_part();
  return NotRational{std::move(y)};
}

}  // namespace qharm
