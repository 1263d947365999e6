// Uniform result record for every inequality checked by the toolkit.
//
// Slack orientation is per check: inequality checks report the signed margin
// (favorable side minus binding side), equality checks report -|lhs - rhs|.
// Either way pass <=> slack >= -tolerance.
#ifndef ISODISK_CHECK_REPORT_HPP
#define ISODISK_CHECK_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "isodisk/common.hpp"

namespace isodisk {

struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> metadata;  // insertion order

  static CheckReport make(std::string name, double lhs, double rhs,
                          double slack, double tolerance) {
    if (!finite(lhs) || !finite(rhs))
      throw InconsistencyError("CheckReport '" + name + "': non-finite lhs/rhs");
    if (!(tolerance > 0.0))
      throw InvalidInput("CheckReport '" + name + "': tolerance must be > 0");
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = slack;
    r.tolerance = tolerance;
    r.pass = slack >= -tolerance;
    return r;
  }

  CheckReport& meta(const std::string& key, const std::string& value) {
    metadata.emplace_back(key, value);
    return *this;
  }
  CheckReport& meta(const std::string& key, double value) {
    return meta(key, fmt_double(value));
  }
  CheckReport& meta(const std::string& key, int value) {
    return meta(key, std::to_string(value));
  }
};

}  // namespace isodisk

#endif
