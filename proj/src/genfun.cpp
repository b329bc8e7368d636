#include "qharm/genfun.hpp"

#include <stdexcept>
#include <string>

#include "qharm/harmonic_sums.hpp"
#include "qharm/qseries.hpp"

namespace qharm {

// ---------------------------------------------------------------------------
// SeriesUV / LaurentPoly

SeriesUV::SeriesUV(int L, int S) : L_(L), S_(S) {
  if (L < 0 || S < 0) throw std::invalid_argument("series orders must be >= 0");
  cells_.resize(static_cast<std::size_t>((L + 1) * (S + 1)));
}

const MultiPoly& SeriesUV::at(int l, int s) const {
  if (l < 0 || l > L_ || s < 0 || s > S_) throw std::out_of_range("series cell out of range");
  return cells_[static_cast<std::size_t>(l * (S_ + 1) + s)];
}

MultiPoly& SeriesUV::at(int l, int s) {
  return const_cast<MultiPoly&>(std::as_const(*this).at(l, s));
}

Json to_json(const SeriesUV& series) {
  Json out = Json::array();
  for (int l = 0; l <= series.L(); ++l) {
    for (int s = 0; s <= series.S(); ++s) {
      Json cell;
      cell["l"] = l;
      cell["s"] = s;
      cell["value"] = to_json(series.at(l, s));
      out.push_back(std::move(cell));
    }
  }
  return out;
}

LaurentCoeff LaurentPoly::coefficient(int exponent) const {
  if (exponent >= precision) throw std::out_of_range("Laurent coefficient beyond truncation");
  auto it = terms.find(exponent);
  return it == terms.end() ? LaurentCoeff() : it->second;
}

void LaurentPoly::add(int exponent, const LaurentCoeff& c) {
  if (exponent >= precision) return;
  auto& slot = terms[exponent];
  slot += c;
  if (slot.is_zero()) terms.erase(exponent);
}

Json to_json(const LaurentCoeff& c) {
  Json out = Json::array();
  for (const auto& [m, coeff] : c.terms()) {
    Json exp = Json::object();
    for (std::size_t i = 0; i < kLaurentVars; ++i) {
      if (m[i] != 0) exp["u" + std::to_string(i + 2)] = m[i];
    }
    Json term;
    term["exp"] = std::move(exp);
    term["coeff"] = coeff.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generating polynomials

MultiPoly p_tilde(int r) {
  if (r < 1) throw std::invalid_argument("p_tilde: r must be >= 1");
  const MultiPoly one = constant_poly(1);
  const MultiPoly one_minus_T = one - var_T();
  const MultiPoly t = var_t();
  return one_minus_T.pow(r + 1) - t * one_minus_T * var_T().pow(r - 1) * var_u() - t * var_T().pow(r) * var_v();
}

Report elementary_symmetric_check(int r) {
  Report rep;
  rep.check_id = "esym";
  rep.params["r"] = r;
  const MultiPoly p = p_tilde(r);
  const MultiPoly t = var_t();
  Json lhs = Json::array();
  Json rhs = Json::array();
  bool ok = true;
  for (int j = 0; j <= r + 1; ++j) {
    MultiPoly extracted = p.slice(kBigT, r + 1 - j);
    extracted.scale(Rational(sign_pow(r + 1 - j)));
    MultiPoly expected;
    if (j == 0) {
      expected = constant_poly(1);
    } else if (j == 1) {
      expected = constant_poly(Rational(r + 1)) + (t * (var_u() - var_v())).scale(Rational(sign_pow(r)));
    } else if (j == 2) {
      expected = constant_poly(Rational(binom(r + 1, 2))) + (t * var_u()).scale(Rational(sign_pow(r)));
    } else {
      expected = constant_poly(Rational(binom(r + 1, j)));
    }
    ok = ok && extracted == expected;
    lhs.push_back(to_json(extracted));
    rhs.push_back(to_json(expected));
  }
  if (p.max_degree(kBigT) != r + 1) ok = false;
  rep.status = ok ? Status::pass : Status::fail;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

namespace {

// prod_{j=1}^{n-1} poly(T -> value_j), collapsed to rational coefficients.
template <typename ValueFn>
MultiPoly galois_product(const MultiPoly& poly, int n, ValueFn&& value_at) {
  const auto& field = CyclotomicField::get(n);
  CycloMultiPoly acc = CycloMultiPoly::constant(CyclotomicNumber(field, Rational(1)));
  for (int j = 1; j < n; ++j) acc *= evaluate_at(poly, kBigT, value_at(field, j));
  return collapse_rational(acc);
}

MultiPoly monomial(int u, int v, int t, const Rational& c) {
  return MultiPoly::monomial({u, v, t, 0, 0}, c);
}

}  // namespace

MultiPoly h_product(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("h_product: need n >= 1, r >= 1");
  MultiPoly prod = galois_product(p_tilde(r), n, [](const CyclotomicField& f, int j) { return f.zeta_power(j); });
  return prod * monomial(0, 1, 0, Rational(-1, n));
}

MultiPoly h_closed(int n, int r) {
  if (n < 1) throw std::invalid_argument("h_closed: n must be >= 1");
  const MultiPoly u = var_u();
  const MultiPoly u_minus_v = var_u() - var_v();
  std::vector<MultiPoly> umv_pow{constant_poly(1)};
  std::vector<MultiPoly> u_pow{constant_poly(1)};
  for (int i = 1; i <= 2 * n + 1; ++i) {
    umv_pow.push_back(umv_pow.back() * u_minus_v);
    u_pow.push_back(u_pow.back() * u);
  }
  auto tpow = [](int e, const Rational& c) { return monomial(0, 0, e, c); };

  MultiPoly h;
  switch (r) {
    case 1:
      for (int i = 1; i <= n; ++i) {
        for (int m = 0; m <= i; ++m) {
          const Rational c = ratio(sign_pow(i - m + 1) * binom(i, m) * binom(n + i - 1 - m, 2 * i - 1), i);
          if (c == 0) continue;
          h += tpow(i - 1, c) * (u_pow[m] * umv_pow[i - m] - u_pow[i]);
        }
      }
      return h;
    case 2:
      for (int i = 1; i <= n; ++i) {
        for (int m = 0; m <= i; ++m) {
          const Rational c = ratio(sign_pow(m) * binom(i, m) * binom(n + 2 * i - 1 - m, 3 * i - 1), i);
          if (c == 0) continue;
          h += tpow(i - 1, c) * (u_pow[m] * umv_pow[i - m] - u_pow[i - m] * umv_pow[m]);
        }
      }
      return h;
    case 3: {
      const MultiPoly v = var_v();
      for (int i = 1; i <= n; ++i) {
        // Coefficient of w^n in -(1/t) log(1 + t[u w (1-w)^4 + 4 v w^2 (1-w)^2 - t w^3 (u-v)^2]/(1-w)^6).
        for (const auto& a : compositions(i, 3)) {
          const int a1 = a.parts[0], a2 = a.parts[1], a3 = a.parts[2];
          const std::int64_t parts[] = {a1, a2, a3};
          const int span = 4 * a1 + 2 * a2;
          Integer inner = 0;
          for (int k = 0; k <= span; ++k) {
            inner += sign_pow(k) * binom(span, k) * binom(n + 5 * i - a2 - 2 * a3 - 1 - k, 6 * i - 1);
          }
          if (inner == 0) continue;
          Integer four_pow;
          mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(a2));
          const Rational c = ratio(sign_pow(i + a3) * four_pow * multinomial(i, parts) * inner, i);
          h += tpow(i + a3 - 1, c) * u_pow[a1] * v.pow(a2) * umv_pow[2 * a3];
        }
        for (int m = 0; m <= i; ++m) {
          // Coefficients of w^n in (1/t) log(1 - t(u w^2 - (u-v) w)/(1-w)^4)
          // and (1/t) log(1 - t(u w^2 - (u-v) w^3)/(1-w)^4).
          const Rational c2 = ratio(sign_pow(i + m + 1) * binom(i, m) * binom(n + 3 * i - 1 - m, 4 * i - 1), i);
          if (c2 != 0) h += tpow(i - 1, c2) * u_pow[m] * umv_pow[i - m];
          const Rational c3 = ratio(sign_pow(m + 1) * binom(i, m) * binom(n + 2 * i - 1 - m, 4 * i - 1), i);
          if (c3 != 0) h += tpow(i - 1, c3) * u_pow[i - m] * umv_pow[m];
        }
      }
      return h;
    }
    default:
      throw std::invalid_argument("h_closed: r must be 1, 2 or 3");
  }
}

// ---------------------------------------------------------------------------
// Series division

SeriesUV series_ratio(const MultiPoly& num, const MultiPoly& den, int L, int S) {
  if (den.is_zero()) throw std::domain_error("series_ratio: zero denominator");
  MultiPoly::Mono common{};
  for (std::size_t var : {kU, kV}) {
    common[var] = num.is_zero() ? den.min_degree(var) : std::min(num.min_degree(var), den.min_degree(var));
  }
  const MultiPoly a = num.divide_monomial(common);
  const MultiPoly b = den.divide_monomial(common);

  SeriesUV numer(L, S);
  SeriesUV denom(L, S);
  auto scatter = [](const MultiPoly& p, SeriesUV& grid) {
    for (const auto& [m, c] : p.terms()) {
      if (m[kU] > grid.L() || m[kV] > grid.S()) continue;
      MultiPoly::Mono rest = m;
      rest[kU] = 0;
      rest[kV] = 0;
      grid.at(m[kU], m[kV]).add_term(rest, c);
    }
  };
  scatter(a, numer);
  scatter(b, denom);

  const MultiPoly& lead = denom.at(0, 0);
  if (lead.size() != 1 || lead.terms().begin()->first != MultiPoly::Mono{}) {
    throw std::domain_error("series_ratio: (u,v)-constant term of denominator is not a nonzero rational");
  }
  const Rational inv_lead = Rational(1) / lead.terms().begin()->second;

  SeriesUV out(L, S);
  for (int l = 0; l <= L; ++l) {
    for (int s = 0; s <= S; ++s) {
      MultiPoly acc = numer.at(l, s);
      for (int x = 0; x <= l; ++x) {
        for (int y = 0; y <= s; ++y) {
          if (x == 0 && y == 0) continue;
          const MultiPoly& d = denom.at(x, y);
          if (d.is_zero()) continue;
          acc -= d * out.at(l - x, s - y);
        }
      }
      out.at(l, s) = std::move(acc.scale(inv_lead));
    }
  }
  return out;
}

namespace {

// Rational polynomial in t from a TPoly whose coefficients must be rational.
MultiPoly collapse_tpoly(const TPoly& p) {
  MultiPoly out;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    const auto& c = p.coeffs[j];
    if (!c.is_rational()) throw std::logic_error("Galois collapse failed on a generating-function coefficient");
    out.add_term({0, 0, static_cast<int>(j), 0, 0}, c.rational_part());
  }
  return out;
}

void accumulate(TPoly& acc, const TPoly& term) {
  if (acc.coeffs.size() < term.coeffs.size()) acc.coeffs.resize(term.coeffs.size());
  for (std::size_t j = 0; j < term.coeffs.size(); ++j) acc.coeffs[j] += term.coeffs[j];
}

}  // namespace

Report cor23_check(int n, int r, int L, int S) {
  if (n < 2) throw std::invalid_argument("cor23_check: need n >= 2");
  if (r < 1) throw std::invalid_argument("cor23_check: need r >= 1");
  Report rep;
  rep.check_id = "cor23";
  rep.params["r"] = r;
  rep.params["n"] = n;
  rep.params["L"] = L;
  rep.params["S"] = S;

  SeriesUV lhs(L, S);
  for (int l = 0; l <= L; ++l) {
    for (int s = 0; s <= S; ++s) {
      TPoly acc;
      for (const auto& comp : compositions(l, s + 1)) accumulate(acc, eval_zbar_t(build_index(r, comp), n));
      lhs.at(l, s) = collapse_tpoly(acc);
    }
  }
  const MultiPoly h = h_product(n, r);
  const SeriesUV rhs = series_ratio(h.shift(kT, Rational(-1)), h, L, S);
  rep.status = lhs == rhs ? Status::pass : Status::fail;
  rep.lhs = to_json(lhs);
  rep.rhs = to_json(rhs);
  return rep;
}

std::map<std::pair<int, int>, CyclotomicNumber> thm25_w_extract(int n, int r, int L, int S) {
  if (n < 2) throw std::invalid_argument("thm25_w_extract: need n >= 2");
  const MultiPoly at_minus_one = h_product(n, r).evaluate(kT, Rational(-1));
  MultiPoly series;
  try {
    series = at_minus_one.divide_monomial({0, 1, 0, 0, 0});
  } catch (const std::domain_error&) {
    throw std::logic_error("H(n, r, -1) is not divisible by v");
  }
  Integer nr;
  mpz_ui_pow_ui(nr.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  series.scale(Rational(Integer(-1), nr));

  const auto& field = CyclotomicField::get(n);
  std::map<std::pair<int, int>, CyclotomicNumber> grid;
  for (int l = 0; l <= L; ++l) {
    for (int s = 0; s <= S; ++s) {
      const Rational c = series.coefficient({l, s, 0, 0, 0});
      grid[{l, s}] = c == 0 ? CyclotomicNumber(field) : field.one_minus_zeta_pow((r + 1) * s + r * l) * c;
    }
  }
  return grid;
}

Report thm25_check(int n, int r, int L, int S) {
  Report rep;
  rep.check_id = "thm25";
  rep.params["r"] = r;
  rep.params["n"] = n;
  rep.params["L"] = L;
  rep.params["S"] = S;
  const auto extracted = thm25_w_extract(n, r, L, S);
  Json lhs = Json::array();
  Json rhs = Json::array();
  bool ok = true;
  for (const auto& [ls, value] : extracted) {
    const SumParams p{r, n, ls.first, ls.second};
    const CyclotomicNumber brute = w_brute(p);
    bool cell_ok = value == brute;
    if (r <= 3) cell_ok = cell_ok && w_closed(p) == brute;
    ok = ok && cell_ok;
    Json a;
    a["l"] = ls.first;
    a["s"] = ls.second;
    a["value"] = to_json(value);
    lhs.push_back(std::move(a));
    Json b;
    b["l"] = ls.first;
    b["s"] = ls.second;
    b["value"] = to_json(brute);
    rhs.push_back(std::move(b));
  }
  rep.status = ok ? Status::pass : Status::fail;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

// ---------------------------------------------------------------------------
// Restricted generating function in weight, depth and heights

LaurentPoly x_general(int r, int i, int order) {
  if (r < 1 || r + 2 > static_cast<int>(kLaurentVars) + 1) throw std::invalid_argument("x_general: r out of range");
  if (i < 1 || i > r + 2) throw std::invalid_argument("x_general: need 1 <= i <= r + 2");
  if (order < 0) order = r + 3;
  auto u = [](int j) { return LaurentCoeff::variable(static_cast<std::size_t>(j - 2)); };
  const LaurentCoeff one = LaurentCoeff::constant(1);

  LaurentPoly x;
  if (i == 1) {
    // u_1 / (1 + u_1)
    x.precision = order + 1;
    for (int m = 1; m <= order; ++m) x.add(m, LaurentCoeff::constant(Rational(sign_pow(m - 1))));
    return x;
  }
  x.precision = -(r + 2 - i) + order + 1;
  for (int j = i; j <= r + 1; ++j) {
    const Rational c(sign_pow(j - i) * binom(j - 2, i - 2));
    if (c == 0) continue;
    LaurentCoeff uj = u(j);
    x.add(0, uj.scale(c));
    LaurentCoeff top = u(r + 2);
    x.add(-(r + 2 - j), top.scale(-c));
  }
  // u_{r+2} u_1^{-(r+2-i)} (1 + u_1)^{-(i-1)}
  for (int m = 0; m <= order; ++m) {
    LaurentCoeff top = u(r + 2);
    x.add(-(r + 2 - i) + m, top.scale(Rational(binom(-(i - 1), m))));
  }
  return x;
}

namespace {

// Drop every term involving u_2, ..., u_r.
LaurentCoeff kill_low_vars(const LaurentCoeff& c, int r) {
  LaurentCoeff out;
  for (const auto& [m, coeff] : c.terms()) {
    bool keep = true;
    for (int j = 2; j <= r; ++j) keep = keep && m[static_cast<std::size_t>(j - 2)] == 0;
    if (keep) out.add_term(m, coeff);
  }
  return out;
}

struct SpecializedX {
  bool negative_powers_cancel = true;
  LaurentCoeff limit;
};

SpecializedX specialize(int r, int i) {
  const LaurentPoly x = x_general(r, i);
  if (x.precision < 1) throw std::logic_error("x_general truncated below the constant term");
  SpecializedX out;
  for (const auto& [e, c] : x.terms) {
    if (e >= 0) continue;
    if (!kill_low_vars(c, r).is_zero()) out.negative_powers_cancel = false;
  }
  out.limit = kill_low_vars(x.coefficient(0), r);
  return out;
}

LaurentCoeff lemma22_closed_form(int r, int i) {
  if (i == 1) return LaurentCoeff();
  LaurentCoeff a = LaurentCoeff::variable(static_cast<std::size_t>(r - 1));
  LaurentCoeff b = LaurentCoeff::variable(static_cast<std::size_t>(r));
  a.scale(Rational(sign_pow(r + 1 - i) * binom(r - 1, i - 2)));
  b.scale(Rational(sign_pow(r - i) * binom(r, i - 2)));
  return a + b;
}

}  // namespace

Report lemma22_check(int r) {
  Report rep;
  rep.check_id = "lemma22";
  rep.params["r"] = r;
  Json lhs = Json::array();
  Json rhs = Json::array();
  bool ok = true;
  for (int i = 1; i <= r + 2; ++i) {
    const SpecializedX x = specialize(r, i);
    const LaurentCoeff expected = lemma22_closed_form(r, i);
    ok = ok && x.negative_powers_cancel && x.limit == expected;
    Json a;
    a["i"] = i;
    a["negative_powers_cancel"] = x.negative_powers_cancel;
    a["limit"] = to_json(x.limit);
    lhs.push_back(std::move(a));
    Json b;
    b["i"] = i;
    b["limit"] = to_json(expected);
    rhs.push_back(std::move(b));
  }
  rep.status = ok ? Status::pass : Status::fail;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

MultiPoly x_specialized(int r, int i) {
  const SpecializedX x = specialize(r, i);
  if (!x.negative_powers_cancel) throw std::logic_error("x_i keeps negative powers of u_1 after specialisation");
  MultiPoly out;
  for (const auto& [m, c] : x.limit.terms()) {
    int deg = 0;
    for (int e : m) deg += e;
    if (deg != 1) throw std::logic_error("specialised x_i is not linear");
    if (m[static_cast<std::size_t>(r - 1)] == 1) {
      out.add_term({1, 0, 0, 0, 0}, c);
    } else if (m[static_cast<std::size_t>(r)] == 1) {
      out.add_term({0, 1, 0, 0, 0}, c);
    } else {
      throw std::logic_error("specialised x_i involves u_2..u_r");
    }
  }
  return out;
}

MultiPoly p_general_specialized(int r) {
  std::vector<MultiPoly> x(static_cast<std::size_t>(r + 3));
  for (int i = 1; i <= r + 2; ++i) x[i] = x_specialized(r, i);
  const MultiPoly t = var_t();
  const MultiPoly T = var_T();
  MultiPoly p = T.pow(r + 1) - (x[1] + t * x[2]) * T.pow(r);
  for (int i = 0; i <= r - 1; ++i) p -= t * (x[r + 2 - i] - x[1] * x[r + 1 - i]) * T.pow(i);
  return p;
}

Report thm21_check(int n, int r, int max_weight) {
  if (n < 2) throw std::invalid_argument("thm21_check: need n >= 2");
  if (r < 1 || max_weight < 0) throw std::invalid_argument("thm21_check: need r >= 1, max_weight >= 0");
  Report rep;
  rep.check_id = "thm21";
  rep.params["r"] = r;
  rep.params["n"] = n;
  rep.params["max_weight"] = max_weight;

  const int L = max_weight / r;
  const int S = max_weight / (r + 1);
  const MultiPoly p = p_general_specialized(r);
  const MultiPoly den = galois_product(p, n, [](const CyclotomicField& f, int j) {
    return CyclotomicNumber(f, Rational(1)) - f.zeta_power(j);
  });
  const SeriesUV ratio = series_ratio(den.shift(kT, Rational(-1)), den, L, S);

  Json lhs = Json::array();
  Json rhs = Json::array();
  bool ok = true;
  for (int d = 0; r * d <= max_weight; ++d) {
    for (int s = 0; s <= d && r * d + s <= max_weight; ++s) {
      // u_1 .. u_r exponents vanish exactly when h_1 = ... = h_{r-1} = d and
      // the weight is r d + h_r; then u_{r+1}^{d - h_r} u_{r+2}^{h_r}.
      std::vector<int> heights(static_cast<std::size_t>(r), d);
      heights.back() = s;
      const int k = r * d + s;
      TPoly acc;
      for (const auto& idx : enumerate_indices(k, d, heights)) accumulate(acc, eval_zbar_t(idx, n));
      const MultiPoly left = collapse_tpoly(acc);
      const MultiPoly& right = ratio.at(d - s, s);
      ok = ok && left == right;
      Json a;
      a["k"] = k;
      a["d"] = d;
      a["h_r"] = s;
      a["value"] = to_json(left);
      lhs.push_back(a);
      a["value"] = to_json(right);
      rhs.push_back(std::move(a));
    }
  }
  rep.status = ok ? Status::pass : Status::fail;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

// ---------------------------------------------------------------------------

Report lemma24_check(int n, int r) {
  Report rep;
  rep.check_id = "lemma24";
  rep.params["r"] = r;
  rep.params["n"] = n;
  const MultiPoly at_zero = h_product(n, r).evaluate(kT, Rational(0));
  Integer nr;
  mpz_ui_pow_ui(nr.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  const MultiPoly expected = monomial(0, 1, 0, Rational(-nr));
  rep.status = at_zero == expected ? Status::pass : Status::fail;
  rep.lhs = to_json(at_zero);
  rep.rhs = to_json(expected);
  return rep;
}

Report h_cross_check(int n, int r) {
  Report rep;
  rep.check_id = "h-cross";
  rep.params["r"] = r;
  rep.params["n"] = n;
  const MultiPoly a = h_product(n, r);
  const MultiPoly b = h_closed(n, r);
  rep.status = a == b ? Status::pass : Status::fail;
  rep.lhs = to_json(a);
  rep.rhs = to_json(b);
  return rep;
}

Report v_vanish_check(int n) {
  Report rep;
  rep.check_id = "v-vanish";
  rep.params["r"] = 3;
  rep.params["n"] = n;
  const MultiPoly constant_in_v = h_closed(n, 3).evaluate(kT, Rational(-1)).slice(kV, 0);
  rep.status = constant_in_v.is_zero() ? Status::pass : Status::fail;
  rep.lhs = to_json(constant_in_v);
  rep.rhs = Json::array();
  return rep;
}

}  // namespace qharm
