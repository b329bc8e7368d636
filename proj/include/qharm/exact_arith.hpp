#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qharm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" (or "p" when q == 1) text form.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);
/// num/den in lowest terms (mpq_class(num, den) does not reduce).
Rational ratio(const Integer& num, const Integer& den);

/// Generalized binomial coefficient.
///
/// Zero for b < 0. For b >= 0 this is the falling factorial
/// a(a-1)...(a-b+1)/b!, so negative upper arguments are allowed:
/// binom(-2, 3) == -4.
Integer binom(std::int64_t a, std::int64_t b);

/// i! / (parts[0]! parts[1]! ...). Throws std::invalid_argument when the
/// parts are negative or do not sum to i.
Integer multinomial(std::int64_t i, std::span<const std::int64_t> parts);

Integer factorial(std::int64_t m);

/// x^e for e >= 0 with 0^0 == 1.
Rational ipow(const Rational& x, std::int64_t e);

inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// An ordered tuple (d_0, ..., d_s) of non-negative integers.
struct Composition {
  std::vector<int> parts;

  int s() const { return static_cast<int>(parts.size()) - 1; }
  int total() const;
  /// Cyclic access: part(j) == part(j mod (s+1)).
  int part(std::int64_t j) const;
  Composition rotated(int shift) const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Advance `parts` to the lexicographic successor among tuples with the same
/// sum. Returns false (leaving `parts` untouched) at the last tuple.
bool next_composition(std::span<int> parts);

/// All tuples of `parts_count` non-negative integers summing to `l`, in
/// lexicographic order.
std::vector<Composition> compositions(int l, int parts_count);

/// Both sides of
///   sum_{k=0}^{n} (-1)^k C(n,k) C(p-k,q) = C(p-n,q-n).
std::pair<Integer, Integer> gould_identity_sides(std::int64_t n, std::int64_t p,
                                                 std::int64_t q);

/// Both sides of
///   sum_{k=1}^{n} (1/k) C(k,n-k) C(p-k,q-2k)
///     = (1/n) C(p,q-n) + ((-1)^n/n) C(p-n,q-n).
std::pair<Rational, Rational> lemma31_sides(std::int64_t n, std::int64_t p,
                                            std::int64_t q);

}  // namespace qharm
