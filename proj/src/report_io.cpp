#include "critcheck/report_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace critcheck {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string millis_text(double ms, bool timing) {
  if (!timing) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::string csv_header() { return "graph6,check,checked,skipped,violations,millis"; }

std::string to_csv(const ScanRow& row, bool timing) {
  if (row.error) return csv_field(row.text) + "," + csv_field("error: " + *row.error) + ",0,0,0,0\n";
  std::string out;
  for (const Report& r : row.reports) {
    out += csv_field(r.graph6) + "," + r.check + "," + std::to_string(r.checked) + "," +
           std::to_string(r.skipped) + "," + std::to_string(r.violations.size()) + "," +
           millis_text(r.millis, timing) + "\n";
  }
  return out;
}

std::string to_json(const ScanRow& row, bool timing) {
  nlohmann::ordered_json j;
  j["line"] = row.line;
  j["graph6"] = row.text;
  if (row.error) {
    j["error"] = *row.error;
    return j.dump();
  }
  j["reports"] = nlohmann::ordered_json::array();
  for (const Report& r : row.reports) {
    nlohmann::ordered_json o;
    o["check"] = r.check;
    o["checked"] = r.checked;
    o["skipped"] = r.skipped;
    o["violations"] = r.violations.size();
    o["sampled"] = r.sampled;
    o["millis"] = timing ? r.millis : 0.0;
    o["witnesses"] = r.violations;
    o["notes"] = r.notes;
    j["reports"].push_back(std::move(o));
  }
  return j.dump();
}

}  // namespace critcheck
