#pragma once

#include <span>
#include <string>
#include <vector>

#include "qharm/cyclotomic.hpp"

namespace qharm {

/// Multi-index (k_1, ..., k_d) of positive integers. The empty index is
/// allowed and has weight 0, depth 0.
class Index {
 public:
  Index() = default;
  /// Throws std::invalid_argument if any part is < 1.
  explicit Index(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  /// Number of parts >= i + 1.
  int height(int i) const;

  std::string to_string() const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

/// Polynomial in t with cyclotomic coefficients; coeffs[j] multiplies t^j.
struct TPoly {
  std::vector<CyclotomicNumber> coeffs;

  CyclotomicNumber at(const Rational& t) const;
  CyclotomicNumber coefficient(std::size_t j) const;
  friend bool operator==(const TPoly& a, const TPoly& b);
};

struct Contraction {
  Index index;
  int weight_drop = 0;
  int depth_drop = 0;
};

/// z_n(k; zeta_n): sum over n > m_1 > ... > m_d > 0 of
/// prod zeta^{(k_i - 1) m_i} / [m_i]^{k_i}. The empty index gives 1.
CyclotomicNumber eval_z(const Index& k, int n);

/// Star version, summing over n > m_1 >= ... >= m_d > 0.
CyclotomicNumber eval_z_star(const Index& k, int n);

/// All 3^{d-1} ways of filling the gaps of k with ",", "+" or "-1+".
/// Gap choices are enumerated with the first gap most significant, in the
/// order "," < "+" < "-1+".
std::vector<Contraction> contractions(const Index& k);

/// Interpolated series: sum over contractions p of
/// (1 - zeta)^{wt(k) - wt(p)} z_n(p) t^{dep(k) - dep(p)}.
TPoly eval_z_t(const Index& k, int n);

/// (1 - zeta_n)^{-wt(k)} eval_z_t(k, n). Requires n >= 2.
TPoly eval_zbar_t(const Index& k, int n);

/// Every index of weight k and depth d whose i-height equals heights[i-1],
/// in descending lexicographic order.
std::vector<Index> enumerate_indices(int k, int d, std::span<const int> heights);

}  // namespace qharm
