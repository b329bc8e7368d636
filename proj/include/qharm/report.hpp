#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qharm/cyclotomic.hpp"
#include "qharm/qseries.hpp"

namespace qharm {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

/// Outcome of one verification cell. A failing report always carries both
/// sides so the cell can be reproduced from its params.
struct Report {
  std::string check_id;
  Json params = Json::object();
  Status status = Status::skip;
  Json lhs;
  Json rhs;
  std::int64_t elapsed_ms = 0;

  Json to_json() const;
  /// Comma-separated row matching csv_header().
  std::string to_csv() const;
  static std::string csv_header();
};

Json to_json(const Rational& x);
Json to_json(const Integer& x);
/// {"n": <int>, "coeffs": ["p/q", ...]} with phi(n) entries, lowest power first.
Json to_json(const CyclotomicNumber& x);
/// {"n": <int>, "t": [<cyclotomic coeffs of t^0>, ...]}.
Json to_json(const TPoly& p, int n);
Json to_json(const Index& k);
Json to_json(const Composition& c);

CyclotomicNumber cyclotomic_from_json(const Json& j);

}  // namespace qharm
