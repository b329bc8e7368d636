#include "qharm/exact_arith.hpp"

#include <numeric>
#include <stdexcept>

namespace qharm {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binom(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  Integer top = static_cast<long>(a);
  Integer out;
  // mpz_bin_ui uses bin(-n,k) = (-1)^k bin(n+k-1,k), i.e. the falling factorial.
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

Integer factorial(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("factorial of negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m));
  return out;
}

Integer multinomial(std::int64_t i, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != i) throw std::invalid_argument("multinomial: parts do not sum to i");
  Integer out = 1;
  std::int64_t running = 0;
  for (auto p : parts) {
    running += p;
    out *= binom(running, p);
  }
  return out;
}

Rational ipow(const Rational& x, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::part(std::int64_t j) const {
  const auto len = static_cast<std::int64_t>(parts.size());
  return parts[static_cast<std::size_t>(((j % len) + len) % len)];
}

Composition Composition::rotated(int shift) const {
  Composition out;
  out.parts.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.parts.push_back(part(static_cast<std::int64_t>(i) + shift));
  }
  return out;
}

bool next_composition(std::span<int> parts) {
  const std::size_t c = parts.size();
  if (c < 2) return false;
  int tail = parts[c - 1];
  for (std::size_t i = c - 1; i-- > 0;) {
    if (tail > 0) {
      ++parts[i];
      for (std::size_t j = i + 1; j + 1 < c; ++j) parts[j] = 0;
      parts[c - 1] = tail - 1;
      return true;
    }
    tail += parts[i];
  }
  return false;
}

std::vector<Composition> compositions(int l, int parts_count) {
  if (l < 0 || parts_count < 1) throw std::invalid_argument("compositions: need l >= 0, parts >= 1");
  std::vector<Composition> out;
  Composition cur;
  cur.parts.assign(static_cast<std::size_t>(parts_count), 0);
  cur.parts.back() = l;
  do {
    out.push_back(cur);
  } while (next_composition(cur.parts));
  return out;
}

std::pair<Integer, Integer> gould_identity_sides(std::int64_t n, std::int64_t p,
                                                 std::int64_t q) {
  if (n < 0) throw std::invalid_argument("gould identity: n must be >= 0");
  Integer lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    lhs += sign_pow(k) * binom(n, k) * binom(p - k, q);
  }
  return {lhs, binom(p - n, q - n)};
}

std::pair<Rational, Rational> lemma31_sides(std::int64_t n, std::int64_t p,
                                            std::int64_t q) {
  if (n < 1) throw std::invalid_argument("lemma31: n must be >= 1");
  Rational lhs = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    lhs += ratio(binom(k, n - k) * binom(p - k, q - 2 * k), k);
  }
  const Rational rhs = ratio(binom(p, q - n), n) + ratio(sign_pow(n) * binom(p - n, q - n), n);
  return {lhs, rhs};
}

}  // namespace qharm
