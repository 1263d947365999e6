// Report documents: a scenario echo plus one CheckReport per executed check,
// each with a quadrature-refinement estimate (full grid vs. half grid).
// JSON output has a fixed key order; CSV carries one row per check.
#ifndef ISODISK_REPORT_HPP
#define ISODISK_REPORT_HPP

#include <cstdio>
#include <fstream>
#include <iostream>

#include "isodisk/check_report.hpp"
#include "isodisk/scenario.hpp"
#include "isodisk/version.hpp"

namespace isodisk {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckEntry {
  CheckReport report;
  bool has_refinement = false;
  double refine_lhs = 0.0;  // |lhs(grid) - lhs(half grid)|
  double refine_rhs = 0.0;
};

struct ReportDocument {
  json scenario_echo;
  std::vector<CheckEntry> checks;
  double wall_time_ms = 0.0;

  bool all_pass() const {
    for (const CheckEntry& e : checks)
      if (!e.report.pass) return false;
    return true;
  }
};

inline json report_to_json(const ReportDocument& doc) {
  json out;
  out["toolkit"] = "isodisk";
  out["version"] = kVersion;
  out["scenario"] = doc.scenario_echo;
  json checks = json::array();
  for (const CheckEntry& e : doc.checks) {
    json c;
    c["name"] = e.report.name;
    c["lhs"] = e.report.lhs;
    c["rhs"] = e.report.rhs;
    c["slack"] = e.report.slack;
    c["tolerance"] = e.report.tolerance;
    c["pass"] = e.report.pass;
    json meta;
    for (const auto& [k, v] : e.report.metadata) meta[k] = v;
    c["metadata"] = meta;
    if (e.has_refinement)
      c["refinement"] = {{"lhs", e.refine_lhs}, {"rhs", e.refine_rhs}};
    checks.push_back(c);
  }
  out["checks"] = checks;
  out["all_pass"] = doc.all_pass();
  out["wall_time_ms"] = doc.wall_time_ms;
  return out;
}

inline std::string report_to_csv(const ReportDocument& doc) {
  std::string out = "name,lhs,rhs,slack,tolerance,pass\n";
  for (const CheckEntry& e : doc.checks) {
    out += e.report.name + "," + fmt_double(e.report.lhs) + "," +
           fmt_double(e.report.rhs) + "," + fmt_double(e.report.slack) + "," +
           fmt_double(e.report.tolerance) + "," +
           (e.report.pass ? "true" : "false") + "\n";
  }
  return out;
}

/// Writes to out_path, "-" meaning stdout. File output is atomic: a sibling
/// temp file is renamed into place, so a crash never leaves half a report.
inline void emit(const ReportDocument& doc, const std::string& format,
                 const std::string& out_path) {
  std::string payload;
  if (format == "json") {
    payload = report_to_json(doc).dump(2);
    payload += "\n";
  } else if (format == "csv") {
    payload = report_to_csv(doc);
  } else {
    throw InvalidInput("emit: format must be 'json' or 'csv'");
  }
  if (out_path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("emit: cannot open '" + tmp + "' for writing");
    f << payload;
    if (!f) throw IoError("emit: write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
    throw IoError("emit: cannot rename '" + tmp + "' to '" + out_path + "'");
}

}  // namespace isodisk

#endif
