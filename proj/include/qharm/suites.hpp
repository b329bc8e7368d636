#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qharm/report.hpp"

namespace qharm {

struct IntRange {
  int lo = 0;
  int hi = 0;

  /// "a..b" or a single integer "a".
  static IntRange parse(const std::string& text);
};

/// Parameter grid for one verify or scan run. Unset fields fall back to the
/// suite's default grid.
struct ScanManifest {
  std::string suite;
  std::optional<IntRange> n;
  std::optional<IntRange> r;
  std::optional<int> n_max;
  std::optional<int> n_min;
  std::optional<int> l_max;
  std::optional<int> s_max;
  std::optional<int> block_sum_max;
  std::optional<int> series_L;
  std::optional<int> series_S;
  std::optional<int> max_weight;
  std::optional<int> range;
  std::optional<int> p_max;
  int jobs = 1;
  bool timing = false;

  /// Apply one key=value setting; keys mirror the CLI flags without dashes
  /// ("n", "r", "n-max", "l-max", ...). Throws std::invalid_argument.
  void set(const std::string& key, const std::string& value);
  /// Read a flat key=value file ('#' starts a comment).
  void load_file(const std::string& path);
  /// Throws std::invalid_argument on empty or negative ranges.
  void validate() const;
};

extern const std::vector<std::string> kVerifySuites;
extern const std::vector<std::string> kScanSuites;

/// One unit of work. `header` holds check_id and params; it is reported
/// with an "error" witness if `run` throws.
struct Cell {
  Report header;
  std::function<Report()> run;
};

/// Evaluate cells on `jobs` worker threads; the result order always matches
/// the cell order.
std::vector<Report> run_cells(const std::vector<Cell>& cells, int jobs, bool timing);

/// Throws std::invalid_argument for an unknown suite or invalid manifest.
std::vector<Report> run_verify(const ScanManifest& manifest);
std::vector<Report> run_scan(const ScanManifest& manifest);

bool any_failed(const std::vector<Report>& reports);

}  // namespace qharm
