#include "qharm/qseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qharm {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("index parts must be >= 1");
  }
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Index::height(int i) const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i + 1; }));
}

std::string Index::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

CyclotomicNumber TPoly::at(const Rational& t) const {
  CyclotomicNumber out;
  Rational power = 1;
  for (const auto& c : coeffs) {
    out += c * power;
    power *= t;
  }
  return out;
}

CyclotomicNumber TPoly::coefficient(std::size_t j) const {
  return j < coeffs.size() ? coeffs[j] : CyclotomicNumber();
}

bool operator==(const TPoly& a, const TPoly& b) {
  const std::size_t len = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t j = 0; j < len; ++j) {
    if (!(a.coefficient(j) == b.coefficient(j))) return false;
  }
  return true;
}

namespace {

// Nested chain sum evaluated from the innermost part outwards:
//   f_d(m) = term(k_d, m),  f_i(m) = term(k_i, m) * sum_{m' < m (or <=)} f_{i+1}(m').
// Each level keeps prefix sums, so the whole index costs O(d n) field products.
CyclotomicNumber chain_sum(const Index& k, int n, bool weak) {
  const auto& field = CyclotomicField::get(n);
  const int d = k.depth();
  if (d == 0) return CyclotomicNumber(field, Rational(1));
  if (n < 2 || (!weak && d > n - 1)) return CyclotomicNumber(field);

  std::map<int, std::vector<CyclotomicNumber>> terms;  // part -> term(part, m)
  for (int part : k.parts()) {
    if (terms.contains(part)) continue;
    std::vector<CyclotomicNumber> row(static_cast<std::size_t>(n));
    for (int m = 1; m < n; ++m) {
      row[m] = field.inv_q_integer(m).pow(part) * field.zeta_power(static_cast<std::int64_t>(part - 1) * m);
    }
    terms.emplace(part, std::move(row));
  }

  const auto parts = k.parts();
  std::vector<CyclotomicNumber> level = terms.at(parts[d - 1]);
  for (int i = d - 2; i >= 0; --i) {
    const auto& row = terms.at(parts[i]);
    std::vector<CyclotomicNumber> next(static_cast<std::size_t>(n));
    CyclotomicNumber prefix(field);
    for (int m = 1; m < n; ++m) {
      if (weak) prefix += level[m];
      if (!prefix.is_zero()) next[m] = row[m] * prefix;
      if (!weak) prefix += level[m];
    }
    level = std::move(next);
  }
  CyclotomicNumber total(field);
  for (int m = 1; m < n; ++m) total += level[m];
  return total;
}

}  // namespace

CyclotomicNumber eval_z(const Index& k, int n) { return chain_sum(k, n, false); }

CyclotomicNumber eval_z_star(const Index& k, int n) { return chain_sum(k, n, true); }

std::vector<Contraction> contractions(const Index& k) {
  const int d = k.depth();
  if (d < 1) throw std::invalid_argument("contractions: index must be non-empty");
  const auto parts = k.parts();
  const int gaps = d - 1;
  int total = 1;
  for (int i = 0; i < gaps; ++i) total *= 3;

  std::vector<Contraction> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> fill(static_cast<std::size_t>(gaps));
  for (int code = 0; code < total; ++code) {
    int rest = code;
    for (int g = gaps - 1; g >= 0; --g) {
      fill[g] = rest % 3;
      rest /= 3;
    }
    std::vector<int> merged{parts[0]};
    Contraction c;
    for (int g = 0; g < gaps; ++g) {
      const int next = parts[g + 1];
      if (fill[g] == 0) {
        merged.push_back(next);
        continue;
      }
      merged.back() += next;
      ++c.depth_drop;
      if (fill[g] == 2) {
        merged.back() -= 1;
        ++c.weight_drop;
      }
    }
    for (int p : merged) {
      if (p < 1) throw std::logic_error("contraction produced a non-positive part");
    }
    c.index = Index(std::move(merged));
    out.push_back(std::move(c));
  }
  return out;
}

TPoly eval_z_t(const Index& k, int n) {
  const auto& field = CyclotomicField::get(n);
  if (k.depth() == 0) return TPoly{{CyclotomicNumber(field, Rational(1))}};
  TPoly out;
  out.coeffs.assign(static_cast<std::size_t>(k.depth()), CyclotomicNumber(field));
  for (const auto& c : contractions(k)) {
    CyclotomicNumber z = eval_z(c.index, n);
    if (z.is_zero()) continue;
    if (c.weight_drop > 0) z *= field.one_minus_zeta_pow(c.weight_drop);
    out.coeffs[c.depth_drop] += z;
  }
  return out;
}

TPoly eval_zbar_t(const Index& k, int n) {
  if (n < 2) throw std::invalid_argument("eval_zbar_t: need n >= 2");
  TPoly out = eval_z_t(k, n);
  if (k.weight() == 0) return out;
  const CyclotomicNumber scale = CyclotomicField::get(n).one_minus_zeta_pow(k.weight()).inverse();
  for (auto& c : out.coeffs) c *= scale;
  return out;
}

std::vector<Index> enumerate_indices(int k, int d, std::span<const int> heights) {
  std::vector<Index> out;
  if (k < 0 || d < 0 || k < d) return out;
  if (d == 0) {
    if (k == 0 && std::all_of(heights.begin(), heights.end(), [](int h) { return h == 0; })) {
      out.emplace_back();
    }
    return out;
  }
  auto slack = compositions(k - d, d);
  for (auto it = slack.rbegin(); it != slack.rend(); ++it) {
    std::vector<int> parts = it->parts;
    for (int& p : parts) ++p;
    Index idx(std::move(parts));
    bool ok = true;
    for (std::size_t i = 0; i < heights.size() && ok; ++i) {
      ok = idx.height(static_cast<int>(i) + 1) == heights[i];
    }
    if (ok) out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace qharm
