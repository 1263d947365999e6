// Scenario files: JSON documents naming one check plus its data. Parsing is
// strict — unknown fields are rejected with a field-path message, and each
// check declares which fields it requires.
#ifndef ISODISK_SCENARIO_HPP
#define ISODISK_SCENARIO_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "isodisk/fourier.hpp"
#include "isodisk/green.hpp"
#include "isodisk/version.hpp"

namespace isodisk {

using json = nlohmann::ordered_json;

/// Schema violations carry the path of the offending field; the CLI maps
/// them to exit code 2 (checker precondition failures are exit code 3).
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what) {}
};

struct GridSpec {
  int nr = 128;
  int ntheta = 256;
  int nlevels = 64;
};

struct Scenario {
  std::string check;

  enum class BoundaryKind { none, fourier, preset };
  BoundaryKind boundary_kind = BoundaryKind::none;
  std::vector<std::tuple<int, double, double>> fourier_entries;  // as given
  std::string preset_name;
  double beta = 1.0;

  std::optional<double> lambda;
  std::optional<double> K0;
  std::optional<double> alpha;
  std::optional<cplx> pole;
  std::optional<double> level;
  std::optional<double> r0;
  std::optional<double> p_max;
  std::string direction = "outward";
  bool has_measure = false;
  PointMassMeasure measure;

  GridSpec grid;
  std::optional<double> tolerance;

  /// Hermitian completion of the coefficient list: entries may give either
  /// or both of a conjugate pair; a missing mirror is filled in, an
  /// inconsistent one rejected.
  FourierCoeffs boundary_coeffs() const {
    int n_max = 0;
    for (const auto& [n, re, im] : fourier_entries)
      n_max = std::max(n_max, std::abs(n));
    std::map<int, cplx> given;
    for (const auto& [n, re, im] : fourier_entries) {
      const cplx v(re, im);
      auto [it, fresh] = given.emplace(n, v);
      if (!fresh && std::abs(it->second - v) > 0.0)
        throw SchemaError("boundary.coeffs", "duplicate entry for n=" +
                                                 std::to_string(n));
    }
    if (given.count(0) && std::abs(given[0].imag()) > 1e-12 * (1.0 + std::abs(given[0])))
      throw SchemaError("boundary.coeffs", "c_0 must be real");
    FourierCoeffs out(n_max);
    for (int n = 0; n <= n_max; ++n) {
      const bool hp = given.count(n) > 0, hm = given.count(-n) > 0;
      cplx cp = hp ? given[n] : cplx(0, 0);
      cplx cm = hm ? given[-n] : cplx(0, 0);
      if (hp && hm && std::abs(cm - std::conj(cp)) >
                          1e-12 * (1.0 + std::abs(cp))) {
        throw SchemaError("boundary.coeffs",
                          "entries for n=" + std::to_string(n) +
                              " and n=" + std::to_string(-n) +
                              " are not conjugate");
      }
      if (hp && !hm) cm = std::conj(cp);
      if (hm && !hp) cp = std::conj(cm);
      out.set_coeff(n, n == 0 ? cplx(cp.real(), 0.0) : cp);
      if (n > 0) out.set_coeff(-n, cm);
    }
    return out;
  }
};

namespace detail {

inline void reject_unknown(const json& obj, const std::string& path,
                           const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw SchemaError(path.empty() ? key : path + "." + key, "unknown field");
  }
}

inline double require_number(const json& obj, const std::string& path,
                             const std::string& key) {
  if (!obj.contains(key)) throw SchemaError(path + key, "missing field");
  if (!obj[key].is_number()) throw SchemaError(path + key, "expected a number");
  return obj[key].get<double>();
}

inline double optional_number(const json& obj, const std::string& path,
                              const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw SchemaError(path + key, "expected a number");
  return obj[key].get<double>();
}

inline cplx parse_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw SchemaError(path, "expected [x, y]");
  return cplx(v[0].get<double>(), v[1].get<double>());
}

inline PointMassMeasure parse_measure(const json& v, const std::string& path) {
  if (!v.is_object()) throw SchemaError(path, "expected an object");
  reject_unknown(v, path, {"atoms", "alpha0"});
  PointMassMeasure m;
  m.alpha0 = optional_number(v, path + ".", "alpha0", 0.0);
  if (v.contains("atoms")) {
    if (!v["atoms"].is_array()) throw SchemaError(path + ".atoms", "expected an array");
    std::size_t i = 0;
    for (const json& a : v["atoms"]) {
      const std::string apath = path + ".atoms[" + std::to_string(i++) + "]";
      if (!a.is_object()) throw SchemaError(apath, "expected an object");
      reject_unknown(a, apath, {"alpha", "y", "sign"});
      const double alpha = require_number(a, apath + ".", "alpha");
      if (!a.contains("y")) throw SchemaError(apath + ".y", "missing field");
      const cplx y = parse_point(a["y"], apath + ".y");
      double sign = optional_number(a, apath + ".", "sign", 1.0);
      if (sign != 1.0 && sign != -1.0)
        throw SchemaError(apath + ".sign", "expected 1 or -1");
      if (sign > 0)
        m.positive.push_back({alpha, y});
      else
        m.negative.push_back({alpha, y});
    }
  }
  return m;
}

struct CheckFields {
  std::set<std::string> required;
  std::set<std::string> optional;
  std::set<std::string> boundary_types;  // accepted boundary kinds
};

inline const std::map<std::string, CheckFields>& check_field_table() {
  static const std::map<std::string, CheckFields> table = {
      {"nehari", {{"boundary"}, {}, {"fourier"}}},
      {"conformal_residual", {{"boundary"}, {}, {"fourier"}}},
      {"bol", {{"boundary", "lambda"}, {}, {"preset"}}},
      {"huber_point", {{"boundary", "alpha", "pole"}, {}, {"fourier"}}},
      {"huber_measure", {{"boundary", "measure"}, {}, {"fourier"}}},
      {"huber_superlevel", {{"boundary"}, {"level", "measure"}, {"preset"}}},
      {"alexandrov", {{"boundary", "K0"}, {}, {"preset"}}},
      {"green_bound", {{"boundary", "pole"}, {}, {"fourier"}}},
      {"fiala", {{"boundary", "r0"}, {"p_max", "direction"}, {"preset"}}},
      {"gauss_bonnet", {{"boundary", "r0"}, {}, {"preset"}}},
  };
  return table;
}

}  // namespace detail

inline Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw SchemaError("<document>", "expected a JSON object");
  if (!doc.contains("spec")) throw SchemaError("spec", "missing field");
  if (!doc["spec"].is_number_integer())
    throw SchemaError("spec", "expected an integer");
  const int spec = doc["spec"].get<int>();
  if (spec != kScenarioSpecVersion)
    throw SchemaError("spec", "unsupported schema version " +
                                  std::to_string(spec) + " (this build reads " +
                                  std::to_string(kScenarioSpecVersion) + ")");
  if (!doc.contains("check") || !doc["check"].is_string())
    throw SchemaError("check", "missing or non-string field");

  Scenario sc;
  sc.check = doc["check"].get<std::string>();
  const auto& table = detail::check_field_table();
  const auto entry = table.find(sc.check);
  if (entry == table.end()) throw SchemaError("check", "unknown check '" + sc.check + "'");
  const detail::CheckFields& fields = entry->second;

  std::set<std::string> allowed = {"spec", "check", "grid", "tolerance"};
  allowed.insert(fields.required.begin(), fields.required.end());
  allowed.insert(fields.optional.begin(), fields.optional.end());
  detail::reject_unknown(doc, "", allowed);
  for (const std::string& key : fields.required)
    if (!doc.contains(key)) throw SchemaError(key, "required for check '" + sc.check + "'");

  // boundary
  {
    const json& b = doc["boundary"];
    if (!b.is_object()) throw SchemaError("boundary", "expected an object");
    if (!b.contains("type") || !b["type"].is_string())
      throw SchemaError("boundary.type", "missing or non-string field");
    const std::string type = b["type"].get<std::string>();
    if (!fields.boundary_types.count(type))
      throw SchemaError("boundary.type",
                        "check '" + sc.check + "' does not accept '" + type + "'");
    if (type == "fourier") {
      sc.boundary_kind = Scenario::BoundaryKind::fourier;
      detail::reject_unknown(b, "boundary", {"type", "coeffs"});
      if (!b.contains("coeffs") || !b["coeffs"].is_array())
        throw SchemaError("boundary.coeffs", "missing or non-array field");
      std::size_t i = 0;
      for (const json& c : b["coeffs"]) {
        const std::string cpath = "boundary.coeffs[" + std::to_string(i++) + "]";
        if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() ||
            !c[1].is_number() || !c[2].is_number())
          throw SchemaError(cpath, "expected [n, re, im]");
        const int n = c[0].get<int>();
        if (std::abs(n) > 512) throw SchemaError(cpath, "|n| must be <= 512");
        sc.fourier_entries.emplace_back(n, c[1].get<double>(), c[2].get<double>());
      }
      sc.boundary_coeffs();  // validate Hermitian consistency now
    } else if (type == "preset") {
      sc.boundary_kind = Scenario::BoundaryKind::preset;
      detail::reject_unknown(b, "boundary", {"type", "name", "beta"});
      if (!b.contains("name") || !b["name"].is_string())
        throw SchemaError("boundary.name", "missing or non-string field");
      sc.preset_name = b["name"].get<std::string>();
      if (sc.preset_name != "bubble" && sc.preset_name != "flat" &&
          sc.preset_name != "sphere" && sc.preset_name != "hyperbolic")
        throw SchemaError("boundary.name", "unknown preset '" + sc.preset_name + "'");
      sc.beta = detail::optional_number(b, "boundary.", "beta", 1.0);
      if (b.contains("beta") && sc.preset_name != "bubble")
        throw SchemaError("boundary.beta", "only the bubble preset takes beta");
      if (!(sc.beta > 0.0)) throw SchemaError("boundary.beta", "must be > 0");
    } else {
      throw SchemaError("boundary.type", "expected 'fourier' or 'preset'");
    }
  }

  if (doc.contains("lambda")) {
    sc.lambda = detail::require_number(doc, "", "lambda");
    if (*sc.lambda < 0.0) throw SchemaError("lambda", "must be >= 0");
  }
  if (doc.contains("K0")) {
    sc.K0 = detail::require_number(doc, "", "K0");
    if (*sc.K0 < 0.0) throw SchemaError("K0", "must be >= 0");
  }
  if (doc.contains("alpha")) sc.alpha = detail::require_number(doc, "", "alpha");
  if (doc.contains("pole")) sc.pole = detail::parse_point(doc["pole"], "pole");
  if (doc.contains("level")) sc.level = detail::require_number(doc, "", "level");
  if (doc.contains("r0")) sc.r0 = detail::require_number(doc, "", "r0");
  if (doc.contains("p_max")) {
    sc.p_max = detail::require_number(doc, "", "p_max");
    if (!(*sc.p_max > 0.0)) throw SchemaError("p_max", "must be > 0");
  }
  if (doc.contains("direction")) {
    if (!doc["direction"].is_string())
      throw SchemaError("direction", "expected a string");
    sc.direction = doc["direction"].get<std::string>();
    if (sc.direction != "outward" && sc.direction != "inward")
      throw SchemaError("direction", "expected 'outward' or 'inward'");
  }
  if (doc.contains("measure")) {
    sc.measure = detail::parse_measure(doc["measure"], "measure");
    sc.has_measure = true;
  }
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object()) throw SchemaError("grid", "expected an object");
    detail::reject_unknown(g, "grid", {"nr", "ntheta", "nlevels"});
    const auto geti = [&](const char* key, int fallback, int minimum) {
      if (!g.contains(key)) return fallback;
      if (!g[key].is_number_integer())
        throw SchemaError(std::string("grid.") + key, "expected an integer");
      const int v = g[key].get<int>();
      if (v < minimum)
        throw SchemaError(std::string("grid.") + key,
                          "must be >= " + std::to_string(minimum));
      return v;
    };
    sc.grid.nr = geti("nr", sc.grid.nr, 32);
    sc.grid.ntheta = geti("ntheta", sc.grid.ntheta, 64);
    sc.grid.nlevels = geti("nlevels", sc.grid.nlevels, 16);
  }
  if (doc.contains("tolerance")) {
    sc.tolerance = detail::require_number(doc, "", "tolerance");
    if (!(*sc.tolerance > 0.0)) throw SchemaError("tolerance", "must be > 0");
  }
  return sc;
}

/// Normalized echo of a parsed scenario, key order fixed.
inline json scenario_to_json(const Scenario& sc) {
  json out;
  out["spec"] = kScenarioSpecVersion;
  out["check"] = sc.check;
  json b;
  if (sc.boundary_kind == Scenario::BoundaryKind::fourier) {
    b["type"] = "fourier";
    json coeffs = json::array();
    for (const auto& [n, re, im] : sc.fourier_entries)
      coeffs.push_back(json::array({n, re, im}));
    b["coeffs"] = coeffs;
  } else if (sc.boundary_kind == Scenario::BoundaryKind::preset) {
    b["type"] = "preset";
    b["name"] = sc.preset_name;
    if (sc.preset_name == "bubble") b["beta"] = sc.beta;
  }
  out["boundary"] = b;
  if (sc.lambda) out["lambda"] = *sc.lambda;
  if (sc.K0) out["K0"] = *sc.K0;
  if (sc.alpha) out["alpha"] = *sc.alpha;
  if (sc.pole) out["pole"] = json::array({sc.pole->real(), sc.pole->imag()});
  if (sc.level) out["level"] = *sc.level;
  if (sc.r0) out["r0"] = *sc.r0;
  if (sc.p_max) out["p_max"] = *sc.p_max;
  if (sc.check == "fiala") out["direction"] = sc.direction;
  if (sc.has_measure) {
    json m;
    json atoms = json::array();
    for (const auto& a : sc.measure.positive)
      atoms.push_back({{"alpha", a.alpha},
                       {"y", json::array({a.y.real(), a.y.imag()})},
                       {"sign", 1}});
    for (const auto& a : sc.measure.negative)
      atoms.push_back({{"alpha", a.alpha},
                       {"y", json::array({a.y.real(), a.y.imag()})},
                       {"sign", -1}});
    m["atoms"] = atoms;
    m["alpha0"] = sc.measure.alpha0;
    out["measure"] = m;
  }
  out["grid"] = {{"nr", sc.grid.nr},
                 {"ntheta", sc.grid.ntheta},
                 {"nlevels", sc.grid.nlevels}};
  if (sc.tolerance) out["tolerance"] = *sc.tolerance;
  return out;
}

}  // namespace isodisk

#endif
