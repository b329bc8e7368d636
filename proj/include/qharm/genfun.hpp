#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qharm/multipoly.hpp"
#include "qharm/report.hpp"

namespace qharm {

/// Truncated bivariate series sum_{l <= L, s <= S} c_{l,s} u^l v^s whose
/// coefficients are polynomials in t (other variables unused).
class SeriesUV {
 public:
  SeriesUV(int L, int S);

  int L() const { return L_; }
  int S() const { return S_; }
  const MultiPoly& at(int l, int s) const;
  MultiPoly& at(int l, int s);

  friend bool operator==(const SeriesUV&, const SeriesUV&) = default;

 private:
  int L_;
  int S_;
  std::vector<MultiPoly> cells_;
};

Json to_json(const SeriesUV& series);

/// Coefficients of a Laurent polynomial in u_1 are polynomials in
/// u_2, ..., u_{kLaurentVars+1}; variable index j - 2 holds u_j.
inline constexpr std::size_t kLaurentVars = 8;
using LaurentCoeff = SparsePoly<Rational, kLaurentVars>;

/// Laurent expansion in u_1. Terms with exponent >= precision were dropped
/// by series truncation; all lower exponents are exact.
struct LaurentPoly {
  int precision = 0;
  std::map<int, LaurentCoeff> terms;

  LaurentCoeff coefficient(int exponent) const;
  void add(int exponent, const LaurentCoeff& c);
};

Json to_json(const LaurentCoeff& c);

/// (1-T)^{r+1} - t (1-T) T^{r-1} u - t T^r v.
MultiPoly p_tilde(int r);

/// Expand p_tilde(r) as prod (beta_i - T) and compare the extracted
/// elementary symmetric functions with their closed forms.
Report elementary_symmetric_check(int r);

/// H(n, r, t) = -(v/n) prod_{j=1}^{n-1} p_tilde(zeta_n^j), evaluated in
/// Q(zeta_n)[u, v, t] and collapsed to rational coefficients. Throws
/// std::logic_error if any coefficient stays irrational.
MultiPoly h_product(int n, int r);

/// H(n, r, t) from the explicit finite coefficient sums (r in 1..3).
MultiPoly h_closed(int n, int r);

/// Truncated power-series quotient num/den in (u, v) after cancelling the
/// common monomial factor in u and v. The remaining (u, v)-constant term of
/// den must be a nonzero rational; throws std::domain_error otherwise.
SeriesUV series_ratio(const MultiPoly& num, const MultiPoly& den, int L, int S);

/// Brute-force generating-function coefficients against H(n,r,t-1)/H(n,r,t).
Report cor23_check(int n, int r, int L, int S);

/// W_n^r(l, s) read off from -H(n, r, -1)/(n^r v).
std::map<std::pair<int, int>, CyclotomicNumber> thm25_w_extract(int n, int r, int L, int S);

/// Extracted W grid against w_brute (and the closed form when r <= 3).
Report thm25_check(int n, int r, int L, int S);

/// x_i as a Laurent series in u_1, with (1 + u_1)^{-1} expanded to `order`
/// terms (default r + 3).
LaurentPoly x_general(int r, int i, int order = -1);

/// Specialise u_2 = ... = u_r = 0 in x_general, check that negative powers
/// of u_1 cancel and that the u_1 -> 0 limit matches the closed form.
Report lemma22_check(int r);

/// x_i at u_1 = ... = u_r = 0 expressed in u = u_{r+1}, v = u_{r+2}, taken
/// from the Laurent expansion.
MultiPoly x_specialized(int r, int i);

/// P^t(T) = T^{r+1} - (x_1 + t x_2) T^r - t sum_{i<r} (x_{r+2-i} - x_1 x_{r+1-i}) T^i
/// with the specialised x_i.
MultiPoly p_general_specialized(int r);

/// Generating function of interpolated sums grouped by weight, depth and
/// heights, restricted to r-(r+1) indices, against the product ratio built
/// from p_general_specialized at T = 1 - zeta_n^j.
Report thm21_check(int n, int r, int max_weight);

Report lemma24_check(int n, int r);
Report h_cross_check(int n, int r);
/// The v^0 part of H(n, 3, -1) vanishes identically.
Report v_vanish_check(int n);

}  // namespace qharm
