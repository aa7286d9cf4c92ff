#include "critcheck/scan.hpp"

#include <istream>

#include <omp.h>

#include "critcheck/graph6.hpp"

namespace critcheck {

ScanRow scan_line(std::string_view text, std::size_t line, const ScanConfig& config) {
  ScanRow row;
  row.line = line;
  row.text = std::string(text);
  try {
    const Graph g = decode_graph6(text);
    CheckContext ctx(g, config.options);
    if (g.m() > 0) ctx.is_delta_critical();  // triage before the checks
    for (const std::string& id : config.checks) row.reports.push_back(run_check(id, ctx));
  } catch (const std::exception& ex) {
    row.reports.clear();
    row.error = ex.what();
  }
  return row;
}

std::vector<ScanRow> scan_serial(const std::vector<std::pair<std::size_t, std::string>>& lines,
                                 const ScanConfig& config) {
  std::vector<ScanRow> rows;
  rows.reserve(lines.size());
  for (const auto& [line, text] : lines) rows.push_back(scan_line(text, line, config));
  return rows;
}

std::vector<ScanRow> scan_parallel(const std::vector<std::pair<std::size_t, std::string>>& lines,
                                   const ScanConfig& config, int jobs) {
  std::vector<ScanRow> rows(lines.size());
  const long count = static_cast<long>(lines.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs < 1 ? 1 : jobs)
  for (long i = 0; i < count; ++i) {
    rows[static_cast<std::size_t>(i)] = scan_line(lines[i].second, lines[i].first, config);
  }
  return rows;
}

void scan_stream(std::istream& in, const ScanConfig& config, int jobs,
                 const std::function<void(const ScanRow&)>& emit) {
  const std::size_t batch = jobs <= 1 ? 1 : static_cast<std::size_t>(jobs) * 4;
  std::vector<std::pair<std::size_t, std::string>> pending;
  auto flush = [&] {
    const auto rows = jobs <= 1 ? scan_serial(pending, config) : scan_parallel(pending, config, jobs);
    for (const ScanRow& r : rows) emit(r);
    pending.clear();
  };
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    pending.emplace_back(line, text);
    if (pending.size() >= batch) flush();
  }
  if (!pending.empty()) flush();
}

}  // namespace critcheck
