#pragma once

#include <string>

#include "critcheck/scan.hpp"

namespace critcheck {

/// "graph6,check,checked,skipped,violations,millis"
std::string csv_header();

/// One CSV line per report (or one error line), each ending in '\n'.
/// Without `timing` the millis column is 0 so output is reproducible.
std::string to_csv(const ScanRow& row, bool timing);

/// One JSON object per row, witnesses and notes included.
std::string to_json(const ScanRow& row, bool timing);

}  // namespace critcheck
