#pragma once

#include "qharm/cyclotomic.hpp"
#include "qharm/qseries.hpp"
#include "qharm/report.hpp"

namespace qharm {

/// Parameters (r, n, l, s) of W_n^r(l, s), the sum of z_n over all
/// r-(r+1) indices with l copies of r and s separators r+1.
struct SumParams {
  int r = 1;
  int n = 1;
  int l = 0;
  int s = 0;

  void validate() const;
  Json to_json() const;
};

/// Cyclic-sum cell: an r-(r+1) block pattern (d_0, ..., d_s) at modulus n.
struct CyclicParams {
  int r = 1;
  int n = 1;
  Composition comp;

  int s() const { return comp.s(); }
  /// Weight of the underlying index: r * sum(d_j) + (r + 1) s.
  int k() const { return r * comp.total() + (r + 1) * s(); }
  /// Depth of the underlying index: sum(d_j) + s.
  int d() const { return comp.total() + s(); }

  void validate() const;
  Json to_json() const;
};

/// ({r}^{d_0}, r+1, {r}^{d_1}, ..., r+1, {r}^{d_s}).
Index build_index(int r, const Composition& comp);

CyclotomicNumber w_brute(const SumParams& p);
CyclotomicNumber w_closed_r1(const SumParams& p);
CyclotomicNumber w_closed_r2(const SumParams& p);
CyclotomicNumber w_closed_r3(const SumParams& p);
/// Dispatches on p.r; throws std::invalid_argument outside 1..3.
CyclotomicNumber w_closed(const SumParams& p);

/// The double sum A(n, l, s) entering the r = 3 closed form.
Rational a_term(int n, int l, int s);

/// Sum of z_n over all s+1 rotations of the block pattern, counted with
/// multiplicity even when rotations coincide.
CyclotomicNumber cyclic_sum(const CyclicParams& p);

/// Conjectured value of C_n^1: (-1)^s / n * C(n+s, k+1) (1 - zeta_n)^k.
CyclotomicNumber conjecture1_value(const CyclicParams& p);
CyclotomicNumber guess_c2_value(const CyclicParams& p);
CyclotomicNumber guess_c3_value(const CyclicParams& p);

/// r = 1 cyclic sum against conjecture1_value; skip unless n > k.
Report conjecture1_check(const CyclicParams& p);
/// r = 2 cyclic sum lies in (1 - zeta_n)^k Q; skip unless n > k.
Report conjecture2_check(const CyclicParams& p);
/// r = 2 or 3 cyclic sum against the guessed closed form; skip unless n > k.
Report guess_check(const CyclicParams& p);

}  // namespace qharm
