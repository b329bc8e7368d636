// qharm: exact evaluation and verification of finite multiple harmonic
// q-series at primitive roots of unity.
//
//   qharm compute z --n 4 --index 1
//   qharm verify thm11 --n 2..10 --l-max 4 --s-max 2
//   qharm scan c1 --n-max 10 --s-max 2 --block-sum-max 4 --jobs 4
//
// Exit codes: 0 all cells pass/skip, 1 at least one fail, 2 usage error.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qharm/genfun.hpp"
#include "qharm/harmonic_sums.hpp"
#include "qharm/qseries.hpp"
#include "qharm/suites.hpp"

namespace {

using namespace qharm;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct ComputeArgs {
  std::string kind;
  int n = 0;
  int r = 1;
  int l = 0;
  int s = 0;
  std::string index;
  std::string comp;
  std::string method = "product";
};

Json compute(const ComputeArgs& a, CLI::App& cmd) {
  auto need = [&](const char* flag) {
    if (cmd.count(flag) == 0) throw std::invalid_argument(a.kind + " requires " + flag);
  };
  need("--n");
  if (a.n < 1) throw std::invalid_argument("--n must be >= 1");

  if (a.kind == "z" || a.kind == "zstar" || a.kind == "zt" || a.kind == "zbar") {
    need("--index");
    const Index k(parse_list(a.index));
    if (a.kind == "z") return to_json(eval_z(k, a.n));
    if (a.kind == "zstar") return to_json(eval_z_star(k, a.n));
    if (a.kind == "zt") return to_json(eval_z_t(k, a.n), a.n);
    return to_json(eval_zbar_t(k, a.n), a.n);
  }
  if (a.kind == "w-brute" || a.kind == "w-closed") {
    need("--r");
    const SumParams p{a.r, a.n, a.l, a.s};
    return to_json(a.kind == "w-brute" ? w_brute(p) : w_closed(p));
  }
  if (a.kind == "cyclic" || a.kind == "cyclic-scaled" || a.kind == "conj") {
    need("--r");
    need("--comp");
    CyclicParams p{a.r, a.n, Composition{parse_list(a.comp)}};
    p.validate();
    if (a.kind == "cyclic") return to_json(cyclic_sum(p));
    if (a.kind == "cyclic-scaled") return to_json(cyclic_sum(p) * one_minus_zeta_pow(a.n, p.k()).inverse());
    switch (p.r) {
      case 1:
        return to_json(conjecture1_value(p));
      case 2:
        return to_json(guess_c2_value(p));
      case 3:
        return to_json(guess_c3_value(p));
      default:
        throw std::invalid_argument("conj: r must be 1, 2 or 3");
    }
  }
  if (a.kind == "h") {
    need("--r");
    if (a.method == "product") return to_json(h_product(a.n, a.r));
    if (a.method == "closed") return to_json(h_closed(a.n, a.r));
    throw std::invalid_argument("--method must be product or closed");
  }
  throw std::invalid_argument("unknown compute kind '" + a.kind + "'");
}

int emit(const std::vector<Report>& reports, const std::string& format) {
  if (format == "csv") {
    std::cout << Report::csv_header() << '\n';
    for (const auto& r : reports) std::cout << r.to_csv() << '\n';
  } else {
    for (const auto& r : reports) std::cout << r.to_json().dump() << '\n';
  }
  std::cout.flush();
  return any_failed(reports) ? kExitFail : 0;
}

// Manifest keys that can also be given as --key flags.
const std::vector<std::string> kManifestKeys = {"n",  "r", "n-max",      "n-min", "l-max", "s-max", "block-sum-max",
                                                "L",  "S", "max-weight", "range", "p-max", "jobs"};

struct RunArgs {
  std::string suite;
  std::string manifest_file;
  std::string format = "json";
  bool timing = false;
  std::map<std::string, std::string> values;
};

void add_run_options(CLI::App& cmd, RunArgs& args, const std::vector<std::string>& suites) {
  cmd.add_option("suite", args.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  cmd.add_option("--manifest", args.manifest_file, "key=value manifest file; flags override it");
  cmd.add_option("--format", args.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_flag("--timing", args.timing, "Record elapsed_ms per cell (output is no longer byte-stable)");
  for (const auto& key : kManifestKeys) cmd.add_option("--" + key, args.values[key]);
}

ScanManifest build_manifest(CLI::App& cmd, const RunArgs& args) {
  ScanManifest m;
  if (!args.manifest_file.empty()) m.load_file(args.manifest_file);
  m.suite = args.suite;
  for (const auto& key : kManifestKeys) {
    if (cmd.count("--" + key) > 0) m.set(key, args.values.at(key));
  }
  if (args.timing) m.timing = true;
  m.validate();
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite multiple harmonic q-series at roots of unity"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute_cmd = app.add_subcommand("compute", "Print one exact value as JSON");
  compute_cmd
      ->add_option("kind", ca.kind, "z | zstar | zt | zbar | w-brute | w-closed | cyclic | cyclic-scaled | conj | h")
      ->required()
      ->check(CLI::IsMember({"z", "zstar", "zt", "zbar", "w-brute", "w-closed", "cyclic", "cyclic-scaled", "conj", "h"}));
  compute_cmd->add_option("--n", ca.n, "Modulus of the root of unity");
  compute_cmd->add_option("--r", ca.r, "Block value r");
  compute_cmd->add_option("--l", ca.l, "Number of r entries");
  compute_cmd->add_option("--s", ca.s, "Number of r+1 separators");
  compute_cmd->add_option("--index", ca.index, "Multi-index as a comma list (empty for the empty index)");
  compute_cmd->add_option("--comp", ca.comp, "Block pattern d_0,...,d_s");
  compute_cmd->add_option("--method", ca.method, "h: product | closed");

  RunArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite over a parameter grid");
  add_run_options(*verify_cmd, va, kVerifySuites);

  RunArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a conjecture for counterexamples");
  add_run_options(*scan_cmd, sa, kScanSuites);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute_cmd) {
      std::cout << compute(ca, *compute_cmd).dump() << '\n';
      return 0;
    }
    if (*verify_cmd) return emit(run_verify(build_manifest(*verify_cmd, va)), va.format);
    if (*scan_cmd) return emit(run_scan(build_manifest(*scan_cmd, sa)), sa.format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
