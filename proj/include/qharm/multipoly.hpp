#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qharm/cyclotomic.hpp"
#include "qharm/report.hpp"

namespace qharm {

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const CyclotomicNumber& c) { return c.is_zero(); }
inline Rational unit_like(const Rational&) { return 1; }
inline CyclotomicNumber unit_like(const CyclotomicNumber& x) {
  if (!x.field()) throw std::logic_error("unit_like: cyclotomic value without modulus");
  return CyclotomicNumber(*x.field(), Rational(1));
}

template <std::size_t N>
using Monomial = std::array<int, N>;

/// Graded lexicographic: total degree first, then exponents compared
/// variable by variable in declaration order.
template <std::size_t N>
struct GradedLex {
  bool operator()(const Monomial<N>& a, const Monomial<N>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse polynomial in N variables. Zero coefficients are never stored.
template <typename Coeff, std::size_t N>
class SparsePoly {
 public:
  using Mono = Monomial<N>;
  using Terms = std::map<Mono, Coeff, GradedLex<N>>;

  SparsePoly() = default;

  static SparsePoly constant(const Coeff& c) {
    SparsePoly p;
    p.add_term(Mono{}, c);
    return p;
  }
  static SparsePoly variable(std::size_t var, int exponent = 1) {
    Mono m{};
    m[var] = exponent;
    SparsePoly p;
    p.add_term(m, Coeff(1));
    return p;
  }
  static SparsePoly monomial(const Mono& m, const Coeff& c) {
    SparsePoly p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const Mono& m, const Coeff& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  template <typename Scalar>
  SparsePoly& scale(const Scalar& s) {
    Terms out;
    for (const auto& [m, c] : terms_) {
      Coeff v = c * s;
      if (!is_zero_coeff(v)) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Mono m;
        for (std::size_t i = 0; i < N; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("SparsePoly::pow: negative exponent");
    if (e == 0) {
      if (terms_.empty()) return constant(unit_like(Coeff()));
      return constant(unit_like(terms_.begin()->second));
    }
    SparsePoly result;
    bool have = false;
    SparsePoly base = *this;
    while (e > 0) {
      if (e & 1) {
        result = have ? result * base : base;
        have = true;
      }
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  int max_degree(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  int min_degree(std::size_t var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
    return d;
  }

  /// Divide by the monomial `m`; throws std::domain_error if some term is
  /// not divisible.
  SparsePoly divide_monomial(const Mono& div) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
      Mono q;
      for (std::size_t i = 0; i < N; ++i) {
        q[i] = m[i] - div[i];
        if (q[i] < 0) throw std::domain_error("polynomial not divisible by monomial");
      }
      out.terms_.emplace(q, c);
    }
    return out;
  }

  /// Terms whose exponent on `var` equals `exponent`, with that exponent
  /// cleared.
  SparsePoly slice(std::size_t var, int exponent) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
      if (m[var] != exponent) continue;
      Mono q = m;
      q[var] = 0;
      out.terms_.emplace(q, c);
    }
    return out;
  }

  /// Substitute a scalar value for `var`.
  SparsePoly evaluate(std::size_t var, const Coeff& value) const {
    SparsePoly out;
    std::vector<Coeff> powers{unit_like(value)};
    for (const auto& [m, c] : terms_) {
      while (static_cast<int>(powers.size()) <= m[var]) powers.push_back(powers.back() * value);
      Mono q = m;
      q[var] = 0;
      out.add_term(q, c * powers[static_cast<std::size_t>(m[var])]);
    }
    return out;
  }

  /// Substitute var -> var + shift.
  SparsePoly shift(std::size_t var, const Rational& delta) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
      const int e = m[var];
      Rational dpow = 1;
      for (int i = e; i >= 0; --i) {
        // term: C(e, i) var^i delta^(e-i)
        Mono q = m;
        q[var] = i;
        out.add_term(q, c * Rational(binom(e, i) * dpow));
        dpow *= delta;
      }
    }
    return out;
  }

  template <typename Fn>
  auto map_coefficients(Fn&& fn) const {
    using Out = std::decay_t<decltype(fn(std::declval<const Coeff&>()))>;
    SparsePoly<Out, N> out;
    for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Variables of the main polynomial ring, in ordering priority.
enum Var : std::size_t { kU = 0, kV = 1, kT = 2, kW = 3, kBigT = 4 };
inline constexpr std::size_t kRingVars = 5;
inline constexpr std::array<const char*, kRingVars> kRingVarNames = {"u", "v", "t", "w", "T"};

using MultiPoly = SparsePoly<Rational, kRingVars>;
using CycloMultiPoly = SparsePoly<CyclotomicNumber, kRingVars>;

inline MultiPoly var_u() { return MultiPoly::variable(kU); }
inline MultiPoly var_v() { return MultiPoly::variable(kV); }
inline MultiPoly var_t() { return MultiPoly::variable(kT); }
inline MultiPoly var_T() { return MultiPoly::variable(kBigT); }
inline MultiPoly constant_poly(const Rational& c) { return MultiPoly::constant(c); }

/// Lift rational coefficients into Q(zeta_n).
CycloMultiPoly to_cyclotomic(const MultiPoly& p, int n);

/// Substitute `var` -> value, lifting into Q(zeta_n).
CycloMultiPoly evaluate_at(const MultiPoly& p, std::size_t var, const CyclotomicNumber& value);

/// Every coefficient must be rational; throws std::logic_error otherwise.
MultiPoly collapse_rational(const CycloMultiPoly& p);

/// [{"exp": {"u":i,"v":j,"t":k[, "w":.., "T":..]}, "coeff": "p/q"}, ...] in
/// term order. w and T are written only when nonzero.
Json to_json(const MultiPoly& p);

std::string to_string(const MultiPoly& p);

}  // namespace qharm
