#include "qharm/harmonic_sums.hpp"

#include <stdexcept>
#include <string>

namespace qharm {

void SumParams::validate() const {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (l < 0 || s < 0) throw std::invalid_argument("l and s must be >= 0");
}

Json SumParams::to_json() const {
  Json j;
  j["r"] = r;
  j["n"] = n;
  j["l"] = l;
  j["s"] = s;
  return j;
}

void CyclicParams::validate() const {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (comp.parts.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : comp.parts) {
    if (p < 0) throw std::invalid_argument("composition parts must be >= 0");
  }
}

Json CyclicParams::to_json() const {
  Json j;
  j["r"] = r;
  j["n"] = n;
  j["composition"] = qharm::to_json(comp);
  return j;
}

Index build_index(int r, const Composition& comp) {
  if (r < 1) throw std::invalid_argument("build_index: r must be >= 1");
  std::vector<int> parts;
  for (std::size_t j = 0; j < comp.parts.size(); ++j) {
    if (j > 0) parts.push_back(r + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(comp.parts[j]), r);
  }
  return Index(std::move(parts));
}

CyclotomicNumber w_brute(const SumParams& p) {
  p.validate();
  CyclotomicNumber total = CyclotomicNumber::zero(p.n);
  for (const auto& comp : compositions(p.l, p.s + 1)) total += eval_z(build_index(p.r, comp), p.n);
  return total;
}

namespace {

CyclotomicNumber scaled_power(int n, const Rational& factor, std::int64_t k) {
  if (factor == 0) return CyclotomicNumber::zero(n);
  return one_minus_zeta_pow(n, k) * factor;
}

void require_r(const SumParams& p, int r) {
  p.validate();
  if (p.r != r) throw std::invalid_argument("closed form for r = " + std::to_string(r) + " called with r = " + std::to_string(p.r));
}

}  // namespace

CyclotomicNumber w_closed_r1(const SumParams& p) {
  require_r(p, 1);
  const auto [r, n, l, s] = p;
  Rational c(sign_pow(s) * binom(s + l, l) * binom(n + s, 2 * s + l + 1), Integer(n * (s + 1)));
  c.canonicalize();
  return scaled_power(n, c, 2 * s + l);
}

CyclotomicNumber w_closed_r2(const SumParams& p) {
  require_r(p, 2);
  const auto [r, n, l, s] = p;
  Integer bracket = binom(n + 2 * s + l + 1, 3 * s + 2 * l + 2) + sign_pow(s) * binom(n + s + l, 3 * s + 2 * l + 2);
  Rational c(sign_pow(l) * binom(s + l, l) * bracket, Integer(n) * n * (s + 1));
  c.canonicalize();
  return scaled_power(n, c, 3 * s + 2 * l);
}

Rational a_term(int n, int l, int s) {
  if (n < 1 || l < 0 || s < 0) throw std::invalid_argument("a_term: need n >= 1, l, s >= 0");
  const std::int64_t m = s + l;
  Rational total = 0;
  for (std::int64_t i = 1; i <= m + 1; ++i) {
    const std::int64_t top = 2 * i - m - 1;
    Integer inner = 0;
    for (std::int64_t j = 0; j <= top; ++j) {
      Integer four_pow;
      mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(j));
      inner += sign_pow(j) * four_pow * binom(top, j) * binom(n + 2 * m + 1 - i + j, 4 * m + 3 - 2 * i + 2 * j) *
               binom(2 * m + 2 - 2 * i, s + 1 - j);
    }
    if (inner == 0) continue;
    Rational cell(-(s + 1) * binom(i, m + 1 - i) * inner, i * binom(m, l));
    cell.canonicalize();
    total += cell;
  }
  return total;
}

CyclotomicNumber w_closed_r3(const SumParams& p) {
  require_r(p, 3);
  const auto [r, n, l, s] = p;
  Rational bracket = Rational(binom(n + 3 * s + 2 * l + 2, 4 * s + 3 * l + 3) +
                              sign_pow(l) * binom(n + s + l, 4 * s + 3 * l + 3)) +
                     a_term(n, l, s);
  Rational c = bracket * Rational(sign_pow(s) * binom(s + l, l), Integer(n) * n * n * (s + 1));
  c.canonicalize();
  return scaled_power(n, c, 4 * s + 3 * l);
}

CyclotomicNumber w_closed(const SumParams& p) {
  switch (p.r) {
    case 1:
      return w_closed_r1(p);
    case 2:
      return w_closed_r2(p);
    case 3:
      return w_closed_r3(p);
    default:
      throw std::invalid_argument("no closed form for r = " + std::to_string(p.r));
  }
}

CyclotomicNumber cyclic_sum(const CyclicParams& p) {
  p.validate();
  CyclotomicNumber total = CyclotomicNumber::zero(p.n);
  for (int j = 0; j <= p.s(); ++j) total += eval_z(build_index(p.r, p.comp.rotated(j)), p.n);
  return total;
}

CyclotomicNumber conjecture1_value(const CyclicParams& p) {
  p.validate();
  const int k = p.k();
  const int s = p.s();
  Rational c(sign_pow(s) * binom(p.n + s, k + 1), Integer(p.n));
  c.canonicalize();
  return scaled_power(p.n, c, k);
}

CyclotomicNumber guess_c2_value(const CyclicParams& p) {
  p.validate();
  if (p.r != 2) throw std::invalid_argument("guess_c2_value: r must be 2");
  const int k = p.k();
  const int d = p.d();
  const int s = p.s();
  const int n = p.n;
  Integer bracket = binom(n + k - d + 1, k + 2) + sign_pow(s) * binom(n + d, k + 2);
  Rational c(sign_pow(d - s) * bracket, Integer(n) * n);
  c.canonicalize();
  return scaled_power(n, c, k);
}

CyclotomicNumber guess_c3_value(const CyclicParams& p) {
  p.validate();
  if (p.r != 3) throw std::invalid_argument("guess_c3_value: r must be 3");
  const int k = p.k();
  const int d = p.d();
  const int s = p.s();
  const int n = p.n;
  Rational bracket = Rational(binom(n + k - d + 2, k + 3) + sign_pow(d - s) * binom(n + d, k + 3)) + a_term(n, d - s, s);
  Rational c = bracket * Rational(sign_pow(s), Integer(n) * n * n);
  c.canonicalize();
  return scaled_power(n, c, k);
}

namespace {

Report skeleton(const char* id, const CyclicParams& p) {
  Report rep;
  rep.check_id = id;
  rep.params = p.to_json();
  rep.params["k"] = p.k();
  return rep;
}

}  // namespace

Report conjecture1_check(const CyclicParams& p) {
  p.validate();
  if (p.r != 1) throw std::invalid_argument("conjecture1_check: r must be 1");
  Report rep = skeleton("c1", p);
  if (p.n <= p.k()) return rep;
  const auto lhs = cyclic_sum(p);
  const auto rhs = conjecture1_value(p);
  rep.status = lhs == rhs ? Status::pass : Status::fail;
  rep.lhs = to_json(lhs);
  rep.rhs = to_json(rhs);
  return rep;
}

Report conjecture2_check(const CyclicParams& p) {
  p.validate();
  if (p.r != 2) throw std::invalid_argument("conjecture2_check: r must be 2");
  Report rep = skeleton("c2-rational", p);
  if (p.n <= p.k()) return rep;
  const auto lhs = cyclic_sum(p);
  rep.lhs = to_json(lhs);
  auto extracted = rational_multiple_of(lhs, p.k());
  if (auto* q = std::get_if<Rational>(&extracted)) {
    rep.status = Status::pass;
    rep.rhs = to_json(*q);
  } else {
    rep.status = Status::fail;
    rep.rhs = to_json(std::get<NotRational>(extracted).witness);
  }
  return rep;
}

Report guess_check(const CyclicParams& p) {
  p.validate();
  if (p.r != 2 && p.r != 3) throw std::invalid_argument("guess_check: r must be 2 or 3");
  Report rep = skeleton(p.r == 2 ? "c2-guess" : "c3-guess", p);
  if (p.n <= p.k()) return rep;
  const auto lhs = cyclic_sum(p);
  const auto rhs = p.r == 2 ? guess_c2_value(p) : guess_c3_value(p);
  rep.status = lhs == rhs ? Status::pass : Status::fail;
  rep.lhs = to_json(lhs);
  rep.rhs = to_json(rhs);
  return rep;
}

}  // namespace qharm
