#include "qharm/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "qharm/genfun.hpp"
#include "qharm/harmonic_sums.hpp"

namespace qharm {

namespace {

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

IntRange IntRange::parse(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

void ScanManifest::set(const std::string& key, const std::string& value) {
  if (key == "suite") suite = value;
  else if (key == "n") n = IntRange::parse(value);
  else if (key == "r") r = IntRange::parse(value);
  else if (key == "n-max") n_max = parse_int(value);
  else if (key == "n-min") n_min = parse_int(value);
  else if (key == "l-max") l_max = parse_int(value);
  else if (key == "s-max") s_max = parse_int(value);
  else if (key == "block-sum-max") block_sum_max = parse_int(value);
  else if (key == "L") series_L = parse_int(value);
  else if (key == "S") series_S = parse_int(value);
  else if (key == "max-weight") max_weight = parse_int(value);
  else if (key == "range") range = parse_int(value);
  else if (key == "p-max") p_max = parse_int(value);
  else if (key == "jobs") jobs = parse_int(value);
  else if (key == "timing") timing = value == "1" || value == "true";
  else throw std::invalid_argument("unknown manifest key '" + key + "'");
}

void ScanManifest::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.starts_with("--")) key = key.substr(2);
    set(key, trim(line.substr(eq + 1)));
  }
}

void ScanManifest::validate() const {
  auto check_range = [](const std::optional<IntRange>& r, const char* name, int min) {
    if (!r) return;
    if (r->lo > r->hi) throw std::invalid_argument(std::string("empty range for ") + name);
    if (r->lo < min) throw std::invalid_argument(std::string(name) + " must be >= " + std::to_string(min));
  };
  check_range(n, "n", 1);
  check_range(r, "r", 1);
  for (const auto& [value, name] : {std::pair{n_max, "n-max"}, {n_min, "n-min"}, {l_max, "l-max"},
                                    {s_max, "s-max"}, {block_sum_max, "block-sum-max"}, {series_L, "L"},
                                    {series_S, "S"}, {max_weight, "max-weight"}, {range, "range"},
                                    {p_max, "p-max"}}) {
    if (value && *value < 0) throw std::invalid_argument(std::string(name) + " must be >= 0");
  }
  if (n_min && n_max && *n_min > *n_max) throw std::invalid_argument("empty range: n-min > n-max");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

const std::vector<std::string> kVerifySuites = {"thm11",   "thm12",    "thm13",      "cor23",    "thm25",
                                                "thm21",   "lemma22",  "lemma24",    "esym",     "identities",
                                                "h-cross", "v-vanish", "rotation-identity"};
const std::vector<std::string> kScanSuites = {"c1", "c2-rational", "c2-guess", "c3-guess"};

std::vector<Report> run_cells(const std::vector<Cell>& cells, int jobs, bool timing) {
  std::vector<Report> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      Report rep;
      try {
        rep = cells[i].run();
      } catch (const std::exception& e) {
        rep = cells[i].header;
        rep.status = Status::fail;
        rep.lhs = Json{{"error", e.what()}};
        rep.rhs = nullptr;
      }
      if (timing) {
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      }
      out[i] = std::move(rep);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  if (threads == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return out;
}

bool any_failed(const std::vector<Report>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::fail; });
}

namespace {

Report header(const std::string& id, Json params) {
  Report rep;
  rep.check_id = id;
  rep.params = std::move(params);
  return rep;
}

Json nr_params(int r, int n) {
  Json j;
  j["r"] = r;
  j["n"] = n;
  return j;
}

struct Grid {
  IntRange n;
  int l_max;
  int s_max;
};

Grid closed_form_grid(int r) {
  switch (r) {
    case 1:
      return {{2, 10}, 4, 2};
    case 2:
      return {{2, 10}, 3, 2};
    default:
      return {{2, 8}, 2, 1};
  }
}

Grid resolve_grid(const ScanManifest& m, int r) {
  Grid g = closed_form_grid(r);
  if (m.n) g.n = *m.n;
  if (m.l_max) g.l_max = *m.l_max;
  if (m.s_max) g.s_max = *m.s_max;
  return g;
}

void closed_form_cells(std::vector<Cell>& cells, const std::string& id, int r, const Grid& g) {
  for (int n = g.n.lo; n <= g.n.hi; ++n) {
    for (int s = 0; s <= g.s_max; ++s) {
      for (int l = 0; l <= g.l_max; ++l) {
        const SumParams p{r, n, l, s};
        Report head = header(id, p.to_json());
        cells.push_back({head, [p, head] {
                           Report rep = head;
                           const auto lhs = w_brute(p);
                           const auto rhs = w_closed(p);
                           rep.status = lhs == rhs ? Status::pass : Status::fail;
                           rep.lhs = to_json(lhs);
                           rep.rhs = to_json(rhs);
                           return rep;
                         }});
      }
    }
  }
}

void rotation_cells(std::vector<Cell>& cells, int r, const Grid& g) {
  for (int n = g.n.lo; n <= g.n.hi; ++n) {
    for (int s = 0; s <= g.s_max; ++s) {
      for (int l = 0; l <= g.l_max; ++l) {
        const SumParams p{r, n, l, s};
        Report head = header("rotation-identity", p.to_json());
        cells.push_back({head, [p, head] {
                           Report rep = head;
                           CyclotomicNumber lhs = CyclotomicNumber::zero(p.n);
                           for (const auto& comp : compositions(p.l, p.s + 1)) lhs += cyclic_sum({p.r, p.n, comp});
                           const CyclotomicNumber rhs = w_brute(p) * Rational(p.s + 1);
                           rep.status = lhs == rhs ? Status::pass : Status::fail;
                           rep.lhs = to_json(lhs);
                           rep.rhs = to_json(rhs);
                           return rep;
                         }});
      }
    }
  }
}

template <typename Fn>
void nr_cells(std::vector<Cell>& cells, const std::string& id, IntRange ns, IntRange rs, Fn fn) {
  for (int r = rs.lo; r <= rs.hi; ++r) {
    for (int n = ns.lo; n <= ns.hi; ++n) {
      cells.push_back({header(id, nr_params(r, n)), [fn, n, r] { return fn(n, r); }});
    }
  }
}

void identity_cells(std::vector<Cell>& cells, int range, int p_max) {
  for (int n = 0; n <= range; ++n) {
    for (int p = 0; p <= p_max; ++p) {
      for (int q = 0; q <= p; ++q) {
        Json params;
        params["n"] = n;
        params["p"] = p;
        params["q"] = q;
        Report head = header("gould", params);
        cells.push_back({head, [head, n, p, q] {
                           Report rep = head;
                           auto [lhs, rhs] = gould_identity_sides(n, p, q);
                           rep.status = lhs == rhs ? Status::pass : Status::fail;
                           rep.lhs = to_json(lhs);
                           rep.rhs = to_json(rhs);
                           return rep;
                         }});
      }
    }
  }
  for (int n = 1; n <= range; ++n) {
    for (int p = 0; p <= p_max; ++p) {
      for (int q = 0; q <= p; ++q) {
        Json params;
        params["n"] = n;
        params["p"] = p;
        params["q"] = q;
        Report head = header("lemma31", params);
        cells.push_back({head, [head, n, p, q] {
                           Report rep = head;
                           auto [lhs, rhs] = lemma31_sides(n, p, q);
                           rep.status = lhs == rhs ? Status::pass : Status::fail;
                           rep.lhs = to_json(lhs);
                           rep.rhs = to_json(rhs);
                           return rep;
                         }});
      }
    }
  }
}

}  // namespace

std::vector<Report> run_verify(const ScanManifest& m) {
  m.validate();
  std::vector<Cell> cells;
  const std::string& suite = m.suite;
  if (suite == "thm11" || suite == "thm12" || suite == "thm13") {
    const int r = suite[4] - '0';
    closed_form_cells(cells, suite, r, resolve_grid(m, r));
  } else if (suite == "rotation-identity") {
    const IntRange rs = m.r.value_or(IntRange{1, 3});
    for (int r = rs.lo; r <= rs.hi; ++r) rotation_cells(cells, r, resolve_grid(m, std::min(r, 3)));
  } else if (suite == "cor23" || suite == "thm25") {
    const int L = m.series_L.value_or(3);
    const int S = m.series_S.value_or(2);
    IntRange ns = m.n.value_or(IntRange{2, 6});
    if (ns.lo < 2) throw std::invalid_argument(suite + " needs n >= 2");
    const IntRange rs = m.r.value_or(IntRange{1, 3});
    if (suite == "cor23") {
      nr_cells(cells, suite, ns, rs, [L, S](int n, int r) { return cor23_check(n, r, L, S); });
    } else {
      nr_cells(cells, suite, ns, rs, [L, S](int n, int r) { return thm25_check(n, r, L, S); });
    }
  } else if (suite == "thm21") {
    const int w = m.max_weight.value_or(6);
    const IntRange ns = m.n.value_or(IntRange{3, 4});
    if (ns.lo < 2) throw std::invalid_argument("thm21 needs n >= 2");
    nr_cells(cells, suite, ns, m.r.value_or(IntRange{1, 2}), [w](int n, int r) { return thm21_check(n, r, w); });
  } else if (suite == "lemma22" || suite == "esym") {
    const IntRange rs = m.r.value_or(IntRange{1, 4});
    if (rs.hi > 7) throw std::invalid_argument(suite + " supports r <= 7");
    for (int r = rs.lo; r <= rs.hi; ++r) {
      Json params;
      params["r"] = r;
      if (suite == "lemma22") {
        cells.push_back({header(suite, params), [r] { return lemma22_check(r); }});
      } else {
        cells.push_back({header(suite, params), [r] { return elementary_symmetric_check(r); }});
      }
    }
  } else if (suite == "lemma24") {
    nr_cells(cells, suite, m.n.value_or(IntRange{1, 12}), m.r.value_or(IntRange{1, 4}), lemma24_check);
  } else if (suite == "h-cross") {
    const IntRange rs = m.r.value_or(IntRange{1, 3});
    if (rs.hi > 3) throw std::invalid_argument("h-cross supports r <= 3");
    nr_cells(cells, suite, m.n.value_or(IntRange{2, 8}), rs, h_cross_check);
  } else if (suite == "v-vanish") {
    nr_cells(cells, suite, m.n.value_or(IntRange{2, 10}), IntRange{3, 3},
             [](int n, int) { return v_vanish_check(n); });
  } else if (suite == "identities") {
    identity_cells(cells, m.range.value_or(8), m.p_max.value_or(14));
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  return run_cells(cells, m.jobs, m.timing);
}

std::vector<Report> run_scan(const ScanManifest& m) {
  m.validate();
  const std::string& suite = m.suite;
  int r = 0;
  int n_max = 0;
  int s_max = 0;
  int block_max = 0;
  std::function<Report(const CyclicParams&)> check;
  if (suite == "c1") {
    r = 1, n_max = 10, s_max = 2, block_max = 4;
    check = conjecture1_check;
  } else if (suite == "c2-rational") {
    r = 2, n_max = 10, s_max = 1, block_max = 2;
    check = conjecture2_check;
  } else if (suite == "c2-guess") {
    r = 2, n_max = 10, s_max = 1, block_max = 2;
    check = guess_check;
  } else if (suite == "c3-guess") {
    r = 3, n_max = 9, s_max = 1, block_max = 1;
    check = guess_check;
  } else {
    throw std::invalid_argument("unknown scan '" + suite + "'");
  }
  n_max = m.n_max.value_or(m.n ? m.n->hi : n_max);
  const int n_min = m.n_min.value_or(m.n ? m.n->lo : 2);
  if (n_min < 2) throw std::invalid_argument("conjecture scans need n >= 2");
  s_max = m.s_max.value_or(s_max);
  block_max = m.block_sum_max.value_or(block_max);

  std::vector<Cell> cells;
  for (int n = n_min; n <= n_max; ++n) {
    for (int s = 0; s <= s_max; ++s) {
      for (int l = 0; l <= block_max; ++l) {
        for (auto& comp : compositions(l, s + 1)) {
          const CyclicParams p{r, n, std::move(comp)};
          Report head = header(suite, p.to_json());
          head.params["k"] = p.k();
          cells.push_back({head, [p, check] { return check(p); }});
        }
      }
    }
  }
  return run_cells(cells, m.jobs, m.timing);
}

}  // namespace qharm
