#include "qharm/report.hpp"

#include <stdexcept>

namespace qharm {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "skip";
}

Json Report::to_json() const {
  Json j;
  j["check_id"] = check_id;
  j["params"] = params;
  j["status"] = std::string(qharm::to_string(status));
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string param_text(const Json& params, const char* key) {
  if (!params.contains(key)) return "";
  const Json& v = params.at(key);
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += v[i].dump();
    }
    return out;
  }
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::string Report::csv_header() {
  return "check_id,r,n,l,s,composition,extra,status,lhs,rhs,elapsed_ms";
}

std::string Report::to_csv() const {
  static constexpr const char* kFlat[] = {"r", "n", "l", "s", "composition"};
  std::string out = csv_quote(check_id);
  for (const char* key : kFlat) out += "," + csv_quote(param_text(params, key));
  Json extra = Json::object();
  for (const auto& [key, value] : params.items()) {
    bool flat = false;
    for (const char* f : kFlat) flat = flat || key == f;
    if (!flat) extra[key] = value;
  }
  out += "," + csv_quote(extra.empty() ? "" : extra.dump());
  out += "," + std::string(qharm::to_string(status));
  out += "," + csv_quote(lhs.is_null() ? "" : lhs.dump());
  out += "," + csv_quote(rhs.is_null() ? "" : rhs.dump());
  out += "," + std::to_string(elapsed_ms);
  return out;
}

Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(const CyclotomicNumber& x) {
  Json j;
  j["n"] = x.modulus();
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const TPoly& p, int n) {
  Json j;
  j["n"] = n;
  Json t = Json::array();
  for (const auto& c : p.coeffs) t.push_back(to_json(c.field() ? c : CyclotomicNumber::zero(n)));
  j["t"] = std::move(t);
  return j;
}

Json to_json(const Index& k) {
  Json j = Json::array();
  for (int p : k.parts()) j.push_back(p);
  return j;
}

Json to_json(const Composition& c) {
  Json j = Json::array();
  for (int p : c.parts) j.push_back(p);
  return j;
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const auto& field = CyclotomicField::get(n);
  const auto& arr = j.at("coeffs");
  if (static_cast<int>(arr.size()) != field.degree()) {
    throw std::invalid_argument("cyclotomic json: expected " + std::to_string(field.degree()) + " coefficients");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : arr) coeffs.push_back(parse_rational(c.get<std::string>()));
  return CyclotomicNumber(field, std::move(coeffs));
}

}  // namespace qharm
