#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critcheck/theorems.hpp"

namespace critcheck {

struct ScanConfig {
  std::vector<std::string> checks;
  CheckOptions options;
};

/// Result for one input line: either the check reports or a decode error.
struct ScanRow {
  std::size_t line = 0;  // 1-based input line number
  std::string text;      // the graph6 token as read
  std::optional<std::string> error;
  std::vector<Report> reports;
};

/// Decodes one line and runs the configured checks after the criticality
/// triage. Never throws; failures become an error row.
ScanRow scan_line(std::string_view text, std::size_t line, const ScanConfig& config);

/// Reference implementation: one line after another.
std::vector<ScanRow> scan_serial(const std::vector<std::pair<std::size_t, std::string>>& lines,
                                 const ScanConfig& config);

/// Same rows as scan_serial, computed by `jobs` OpenMP threads.
std::vector<ScanRow> scan_parallel(const std::vector<std::pair<std::size_t, std::string>>& lines,
                                   const ScanConfig& config, int jobs);

/// Reads graph6 lines (blank lines skipped) and emits rows in input order.
/// Work is done in batches so at most a few rows per worker are buffered.
void scan_stream(std::istream& in, const ScanConfig& config, int jobs,
                 const std::function<void(const ScanRow&)>& emit);

}  // namespace critcheck
