// Shared scalar types, constants, and the error taxonomy used by every
// checker. The CLI maps these exception types onto its exit codes.
#ifndef ISODISK_COMMON_HPP
#define ISODISK_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace isodisk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Bad argument or violated precondition.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two internally computed quantities disagree beyond what roundoff allows.
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation requested exactly at a pole/atom of a potential.
struct SingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

// A field without enough variation to carry a level-set analysis.
struct DegenerateFieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A scenario outside the regime a checker supports.
struct UnsupportedScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest distinguishing decimal form; stable across runs (C locale).
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace isodisk

#endif
