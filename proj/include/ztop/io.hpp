#pragma once

// JSON forms of the exact values: rationals as {"num", "den"}, polynomials
// in s as ascending coefficient lists, and the resolution-file document.

#include "ztop/analysis.hpp"
#include "ztop/curve_data.hpp"
#include "ztop/errors.hpp"
#include "ztop/rational_function.hpp"
#include "ztop/resolution_data.hpp"
#include "ztop/zeta.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace ztop {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Input-format error in a JSON document.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("format error: " + what) {}
};

namespace detail {

inline void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw FormatError("unknown field '" + key + "' in " + where);
}

inline const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError("missing field '" + key + "' in " + where);
  return *it;
}

inline std::int64_t require_int(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw FormatError("field '" + key + "' in " + where + " must be an integer");
  return v.get<std::int64_t>();
}

inline bool require_bool(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_boolean()) throw FormatError("field '" + key + "' in " + where + " must be a boolean");
  return v.get<bool>();
}

}  // namespace detail

inline Json to_json(const Rational& r) { return Json{{"num", to_int64(numer(r))}, {"den", to_int64(denom(r))}}; }

inline Rational rational_from_json(const Json& j) {
  detail::reject_unknown(j, {"num", "den"}, "rational");
  std::int64_t num = detail::require_int(j, "num", "rational");
  std::int64_t den = detail::require_int(j, "den", "rational");
  if (den <= 0) throw FormatError("rational denominator must be positive");
  if (gcd(Integer(num), Integer(den)) != 1) throw FormatError("rational must be in lowest terms");
  return Rational(num, den);
}

inline Json to_json(const ZPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_int64(c));
  return a;
}

inline ZPoly zpoly_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be an array of integers");
  std::vector<Integer> c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw FormatError("polynomial coefficients must be integers");
    c.emplace_back(v.get<std::int64_t>());
  }
  ZPoly p(std::move(c));
  if (p.coeffs().size() != j.size()) throw FormatError("polynomial has trailing zero coefficients");
  return p;
}

inline Json to_json(const RationalFunction& z) {
  return Json{{"num", to_json(z.numerator())}, {"den", to_json(z.denominator())}};
}

/// Reads a rational function and checks it is in canonical form.
inline RationalFunction rational_function_from_json(const Json& j) {
  detail::reject_unknown(j, {"num", "den"}, "rational function");
  ZPoly num = zpoly_from_json(detail::require(j, "num", "rational function"));
  ZPoly den = zpoly_from_json(detail::require(j, "den", "rational function"));
  if (den.is_zero()) throw FormatError("zero denominator");
  RationalFunction z(to_q(num), to_q(den));
  if (!(z.numerator() == num && z.denominator() == den)) throw FormatError("rational function is not canonical");
  return z;
}

inline Json to_json(const PoleTable& pt) {
  Json a = Json::array();
  for (const auto& p : pt) a.push_back(Json{{"location", to_json(p.location)}, {"order", p.order}});
  return a;
}

inline PoleTable poles_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("pole table must be an array");
  PoleTable pt;
  for (const auto& e : j) {
    detail::reject_unknown(e, {"location", "order"}, "pole");
    pt.push_back({rational_from_json(detail::require(e, "location", "pole")),
                  static_cast<int>(detail::require_int(e, "order", "pole"))});
  }
  return pt;
}

inline Json to_json(const RootMultiset& roots) {
  Json a = Json::array();
  for (const auto& r : roots) a.push_back(Json{{"root", to_json(r.root)}, {"multiplicity", r.multiplicity}});
  return a;
}

inline RootMultiset roots_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("root multiset must be an array");
  RootMultiset out;
  for (const auto& e : j) {
    detail::reject_unknown(e, {"root", "multiplicity"}, "root");
    out.push_back({rational_from_json(detail::require(e, "root", "root")),
                   static_cast<int>(detail::require_int(e, "multiplicity", "root"))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resolution files

struct ResolutionFile {
  ResolutionData data;
  Scope scope = Scope::local;
  std::optional<std::string> name;
  std::optional<bool> reduced;
  std::optional<bool> isolated;  // user assertion of an isolated singularity
  friend bool operator==(const ResolutionFile&, const ResolutionFile&) = default;
};

inline ResolutionFile resolution_file_from_json(const Json& j) {
  using namespace detail;
  const std::string where = "resolution file";
  reject_unknown(j, {"schema_version", "scope", "ambient_dim", "components", "strata", "empty_stratum", "name",
                     "reduced", "isolated"},
                 where);
  if (require_int(j, "schema_version", where) != kSchemaVersion)
    throw FormatError("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  ResolutionFile f;
  const Json& scope = require(j, "scope", where);
  if (scope == "local") f.scope = Scope::local;
  else if (scope == "global") f.scope = Scope::global;
  else throw FormatError("scope must be \"local\" or \"global\"");
  f.data.ambient_dim = static_cast<int>(require_int(j, "ambient_dim", where));
  const Json& comps = require(j, "components", where);
  if (!comps.is_array()) throw FormatError("components must be an array");
  for (const auto& c : comps) {
    reject_unknown(c, {"id", "N", "nu", "meets_origin_fiber"}, "component");
    f.data.components.push_back({static_cast<int>(require_int(c, "id", "component")), require_int(c, "N", "component"),
                                 require_int(c, "nu", "component"), require_bool(c, "meets_origin_fiber", "component")});
  }
  const Json& strata = require(j, "strata", where);
  if (!strata.is_array()) throw FormatError("strata must be an array");
  for (const auto& s : strata) {
    reject_unknown(s, {"ids", "chi_total", "chi_origin"}, "stratum");
    Stratum st;
    const Json& ids = require(s, "ids", "stratum");
    if (!ids.is_array()) throw FormatError("stratum ids must be an array");
    for (const auto& id : ids) {
      if (!id.is_number_integer()) throw FormatError("stratum ids must be integers");
      st.ids.push_back(id.get<int>());
    }
    st.chi_total = require_int(s, "chi_total", "stratum");
    st.chi_origin = require_int(s, "chi_origin", "stratum");
    f.data.strata.push_back(std::move(st));
  }
  if (auto it = j.find("empty_stratum"); it != j.end()) {
    reject_unknown(*it, {"chi_total", "chi_origin"}, "empty_stratum");
    f.data.empty_chi_total = require_int(*it, "chi_total", "empty_stratum");
    f.data.empty_chi_origin = require_int(*it, "chi_origin", "empty_stratum");
  }
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw FormatError("name must be a string");
    f.name = it->get<std::string>();
  }
  if (j.contains("reduced")) f.reduced = require_bool(j, "reduced", where);
  if (j.contains("isolated")) f.isolated = require_bool(j, "isolated", where);
  f.data.validate();
  return f;
}

inline Json to_json(const ResolutionFile& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["scope"] = f.scope == Scope::local ? "local" : "global";
  j["ambient_dim"] = f.data.ambient_dim;
  j["components"] = Json::array();
  for (const auto& c : f.data.components)
    j["components"].push_back({{"id", c.id}, {"N", c.N}, {"nu", c.nu}, {"meets_origin_fiber", c.meets_origin_fiber}});
  j["strata"] = Json::array();
  for (const auto& s : f.data.strata)
    j["strata"].push_back({{"ids", s.ids}, {"chi_total", s.chi_total}, {"chi_origin", s.chi_origin}});
  j["empty_stratum"] = {{"chi_total", f.data.empty_chi_total}, {"chi_origin", f.data.empty_chi_origin}};
  if (f.name) j["name"] = *f.name;
  if (f.reduced) j["reduced"] = *f.reduced;
  if (f.isolated) j["isolated"] = *f.isolated;
  return j;
}

inline ResolutionFile load_resolution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return resolution_file_from_json(j);
}

// ---------------------------------------------------------------------------
// Report pieces

inline Json to_json(const Prediction& p) {
  Json j;
  j["n"] = p.n;
  j["scope"] = p.scope == Scope::local ? "local" : "global";
  j["lct"] = to_json(p.lct);
  j["s0"] = p.s0 ? to_json(*p.s0) : Json(nullptr);
  j["N"] = p.N ? Json(*p.N) : Json(nullptr);
  j["isolated_hypothesis_met"] = to_string(p.isolated_hypothesis_met);
  j["divisor_roots"] = p.divisor_roots ? to_json(*p.divisor_roots) : Json(nullptr);
  j["grw_eigenvalues"] = Json::array();
  for (const auto& q : p.grw_eigenvalues) j["grw_eigenvalues"].push_back(to_json(q));
  j["notes"] = p.notes;
  return j;
}

inline Json to_json(const Conjecture4Result& r) {
  return Json{{"order_n_poles", r.order_n_poles},
              {"at_most_one", r.at_most_one},
              {"closest_to_origin", r.closest_to_origin},
              {"equals_minus_lct", r.equals_minus_lct},
              {"pass", r.pass()}};
}

inline Json to_json(const std::vector<Conjecture3Result>& rs) {
  Json a = Json::array();
  for (const auto& r : rs)
    a.push_back(Json{{"pole", to_json(r.pole)},
                     {"eigenvalue", to_json(r.eigenvalue)},
                     {"status", r.certified ? "certified" : "inconclusive"}});
  return a;
}

inline Json to_json(const CyclotomicRF& z) {
  Json a = Json::array();
  for (const auto& [m, e] : z) a.push_back(Json{{"m", m}, {"e", e}});
  return a;
}

}  // namespace ztop
