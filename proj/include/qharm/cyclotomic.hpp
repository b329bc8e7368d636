#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "qharm/exact_arith.hpp"

namespace qharm {

/// Dense integer polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the highest coefficient is nonzero.
struct IntPolynomial {
  std::vector<Integer> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// Phi_n. Results are cached; safe to call concurrently.
const IntPolynomial& cyclotomic_polynomial(int n);

int euler_phi(int n);

class CyclotomicField;

/// An element of Q(zeta_n), stored as its coefficient vector in the power
/// basis 1, zeta, ..., zeta^{phi(n)-1} after reduction modulo Phi_n.
///
/// A default-constructed value has no modulus and behaves as zero in
/// arithmetic against any field; it adopts the other operand's modulus.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  explicit CyclotomicNumber(const CyclotomicField& field);
  CyclotomicNumber(const CyclotomicField& field, const Rational& value);
  CyclotomicNumber(const CyclotomicField& field, std::vector<Rational> coeffs);

  static CyclotomicNumber zero(int n);
  static CyclotomicNumber from_rational(int n, const Rational& value);

  int modulus() const;
  const CyclotomicField* field() const { return field_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coefficient of zeta^0. Only meaningful when is_rational().
  Rational rational_part() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& other);
  CyclotomicNumber& operator-=(const CyclotomicNumber& other);
  CyclotomicNumber& operator*=(const CyclotomicNumber& other);
  CyclotomicNumber& operator*=(const Rational& scalar);
  CyclotomicNumber& operator/=(const CyclotomicNumber& other);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
  friend CyclotomicNumber operator*(const Rational& b, CyclotomicNumber a) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  CyclotomicNumber operator-() const;

  /// Throws std::domain_error for the zero element.
  CyclotomicNumber inverse() const;
  /// Any integer exponent; negative exponents invert first.
  CyclotomicNumber pow(std::int64_t e) const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  const CyclotomicField* adopt(const CyclotomicNumber& other);

  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> coeffs_;
};

/// Per-modulus tables shared by every element of Q(zeta_n). Instances live
/// for the whole program and are immutable once published by get().
class CyclotomicField {
 public:
  static const CyclotomicField& get(int n);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const IntPolynomial& minimal_polynomial() const { return *phi_; }

  CyclotomicNumber zeta() const { return zeta_power(1); }
  /// zeta^e for any integer e.
  const CyclotomicNumber& zeta_power(std::int64_t e) const;
  /// (1 - zeta)^k for k >= 0.
  CyclotomicNumber one_minus_zeta_pow(std::int64_t k) const;
  /// 1/[m] for 1 <= m < n.
  const CyclotomicNumber& inv_q_integer(int m) const;

  /// Reduce a dense rational polynomial in zeta modulo Phi_n.
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

 private:
  explicit CyclotomicField(int n);

  int n_;
  int degree_;
  const IntPolynomial* phi_;
  std::vector<CyclotomicNumber> zeta_powers_;
  std::vector<CyclotomicNumber> inv_q_integers_;
};

CyclotomicNumber zeta(int n);

/// (1 - zeta_n^m)/(1 - zeta_n) = 1 + zeta_n + ... + zeta_n^{m-1}.
/// Throws std::domain_error when n divides m (the q-integer vanishes) and
/// std::invalid_argument for m < 1.
CyclotomicNumber q_integer(int m, int n);

/// (1 - zeta_n)^k; for n == 1 this is 1 when k == 0 and 0 otherwise.
CyclotomicNumber one_minus_zeta_pow(int n, std::int64_t k);

struct NotRational {
  /// x * (1 - zeta_n)^{-k}, which has a nonzero irrational part.
  CyclotomicNumber witness;
};

/// Decide whether x lies in (1 - zeta_n)^k Q, returning the rational factor.
std::variant<Rational, NotRational> rational_multiple_of(const CyclotomicNumber& x,
                                                         std::int64_t k);

}  // namespace qharm
