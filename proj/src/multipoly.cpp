#include "qharm/multipoly.hpp"

#include <sstream>

namespace qharm {

CycloMultiPoly to_cyclotomic(const MultiPoly& p, int n) {
  const auto& field = CyclotomicField::get(n);
  return p.map_coefficients([&](const Rational& c) { return CyclotomicNumber(field, c); });
}

CycloMultiPoly evaluate_at(const MultiPoly& p, std::size_t var, const CyclotomicNumber& value) {
  return to_cyclotomic(p, value.modulus()).evaluate(var, value);
}

MultiPoly collapse_rational(const CycloMultiPoly& p) {
  return p.map_coefficients([](const CyclotomicNumber& c) {
    if (!c.is_rational()) throw std::logic_error("Galois collapse failed: irrational coefficient");
    return c.rational_part();
  });
}

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exp;
    for (std::size_t i = 0; i < kRingVars; ++i) {
      if (i <= kT || m[i] != 0) exp[kRingVarNames[i]] = m[i];
    }
    Json term;
    term["exp"] = std::move(exp);
    term["coeff"] = c.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    bool unit = true;
    for (int e : m) unit = unit && e == 0;
    if (mag != 1 || unit) os << mag.get_str();
    bool star = mag != 1;
    for (std::size_t i = 0; i < kRingVars; ++i) {
      if (m[i] == 0) continue;
      if (star) os << "*";
      star = true;
      os << kRingVarNames[i];
      if (m[i] != 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace qharm
