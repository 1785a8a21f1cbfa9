#pragma once

// Everything computed from one set of resolution data: the zeta function,
// its poles, the thresholds, the prediction record and the conjecture
// checks, plus the structural invariants every run must satisfy.

#include "ztop/analysis.hpp"
#include "ztop/curve_data.hpp"
#include "ztop/io.hpp"
#include "ztop/zeta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ztop {

struct Report {
  Scope scope = Scope::local;
  int n = 2;
  RationalFunction zeta;
  PoleTable poles;
  Rational lct;
  Prediction prediction;
  Conjecture4Result conjecture4;
  CyclotomicRF acampo;
  EigenvalueSet eigenvalues;
  std::vector<Conjecture3Result> conjecture3;
  std::optional<bool> conjecture2;
  std::vector<std::string> invariant_failures;
};

/// Structural checks that hold for every valid resolution: pole containment, order bound,
/// nothing between -lct and 0, step-wise recursions, Euler characteristic additivity.
inline std::vector<std::string> structural_failures(const Report& r, const ResolutionData& rd,
                                                    const CurveResolution* curve) {
  std::vector<std::string> out;
  auto cands = candidate_poles(rd);
  for (const auto& p : r.poles) {
    if (std::find(cands.begin(), cands.end(), p.location) == cands.end())
      out.push_back("pole " + to_string(p.location) + " is not a candidate -nu/N");
    if (p.order > r.n) out.push_back("pole " + to_string(p.location) + " has order above n");
    if (p.location > -r.lct && p.location < 0)
      out.push_back("pole " + to_string(p.location) + " lies between -lct and 0");
  }
  if (curve) {
    for (const auto& rec : curve->history) {
      std::int64_t N = rec.multiplicity, nu = 2;
      for (int id : rec.through) {
        N += rd.component(id).N;
        nu += rd.component(id).nu - 1;
      }
      if (N != rec.N || nu != rec.nu || rd.component(rec.component).N != N || rd.component(rec.component).nu != nu)
        out.push_back("blowup step " + std::to_string(rec.step) + " breaks the (N, nu) recursion");
    }
    for (const auto& [id, sum] : curve->exceptional_chi_sums())
      if (sum != 2) out.push_back("Euler characteristics on E" + std::to_string(id) + " sum to " + std::to_string(sum));
  }
  return out;
}

/// Throws TheoremViolation from the maximal-order analysis; other checks land in the report.
inline Report analyze(const ResolutionData& rd, Scope scope, TriState isolated,
                      const std::vector<int>& branch_multiplicities, const CurveResolution* curve = nullptr,
                      const std::optional<RootMultiset>& b_roots = std::nullopt) {
  Report r;
  r.scope = scope;
  r.n = rd.ambient_dim;
  r.zeta = zeta(rd, scope);
  r.poles = poles(r.zeta, rd);
  r.lct = lct(rd, scope);
  r.conjecture4 = check_conjecture4(r.poles, r.n, r.lct);
  r.prediction = max_order_pole_report(r.poles, rd, isolated, scope);
  if (scope == Scope::local) {
    r.acampo = acampo_zeta(rd);
    r.eigenvalues = monodromy_eigenvalues_germ(rd, branch_multiplicities);
    r.conjecture3 = check_conjecture3(r.poles, r.eigenvalues);
  }
  if (b_roots) r.conjecture2 = check_conjecture2(r.zeta, *b_roots);
  r.invariant_failures = structural_failures(r, rd, curve);
  return r;
}

inline Json components_json(const CurveResolution& res) {
  Json a = Json::array();
  for (std::size_t i = 0; i < res.data.components.size(); ++i) {
    const auto& c = res.data.components[i];
    a.push_back(Json{{"id", c.id},
                     {"kind", to_string(res.kinds[i])},
                     {"N", c.N},
                     {"nu", c.nu},
                     {"orbit_degree", res.orbit_degrees[i]}});
  }
  return a;
}

inline Json to_json(const Report& r) {
  Json j;
  j["scope"] = r.scope == Scope::local ? "local" : "global";
  j["n"] = r.n;
  j["zeta"] = to_json(r.zeta);
  j["zeta_text"] = to_string(r.zeta);
  j["poles"] = to_json(r.poles);
  j["lct"] = to_json(r.lct);
  j["prediction"] = to_json(r.prediction);
  j["conjecture4"] = to_json(r.conjecture4);
  if (r.scope == Scope::local) {
    j["acampo"] = to_json(r.acampo);
    Json ev = Json::array();
    for (const auto& [q, why] : r.eigenvalues) ev.push_back(to_json(q));
    j["eigenvalues"] = ev;
    j["conjecture3"] = to_json(r.conjecture3);
  }
  j["conjecture2"] = r.conjecture2 ? Json(*r.conjecture2) : Json(nullptr);
  j["invariant_failures"] = r.invariant_failures;
  return j;
}

inline std::string pole_table_text(const PoleTable& pt) {
  std::string out = "[";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ", ";
    out += "(" + to_string(pt[i].location) + ", " + std::to_string(pt[i].order) + ")";
  }
  return out + "]";
}

inline std::string roots_text(const RootMultiset& roots) {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ", ";
    out += to_string(roots[i].root) + ":" + std::to_string(roots[i].multiplicity);
  }
  return out + "}";
}

inline std::string human_text(const Report& r) {
  std::string out;
  out += "Z" + std::string(r.scope == Scope::local ? "_top,0" : "_top") + "(s) = " + to_string(r.zeta) + "\n";
  out += "poles: " + pole_table_text(r.poles) + "\n";
  out += std::string(r.scope == Scope::local ? "lct c_0" : "lct c") + " = " + to_string(r.lct) + "\n";
  const auto& p = r.prediction;
  if (p.s0) {
    out += "maximal-order pole: s0 = " + to_string(*p.s0) + " (order " + std::to_string(p.n) +
           ", N = " + std::to_string(*p.N) + ")\n";
    out += "predicted b-function divisor: " + (p.divisor_roots ? roots_text(*p.divisor_roots) : "withheld") + "\n";
    out += "weight-graded eigenvalues exp(2 pi i (-q)), q in {";
    for (std::size_t i = 0; i < p.grw_eigenvalues.size(); ++i)
      out += (i ? ", " : "") + to_string(p.grw_eigenvalues[i]);
    out += "}\n";
  } else {
    out += "maximal-order pole: none\n";
  }
  out += "isolated hypothesis: " + std::string(to_string(p.isolated_hypothesis_met)) + "\n";
  for (const auto& note : p.notes) out += "  note: " + note + "\n";
  const auto& c4 = r.conjecture4;
  out += "conjecture 4: " + std::string(c4.pass() ? "pass" : "FAIL") + " (order-n poles: " +
         std::to_string(c4.order_n_poles) + ", at most one: " + (c4.at_most_one ? "yes" : "no") +
         ", closest to origin: " + (c4.closest_to_origin ? "yes" : "no") +
         ", equals -lct: " + (c4.equals_minus_lct ? "yes" : "no") + ")\n";
  if (r.scope == Scope::local) {
    out += "A'Campo zeta: " + to_string(r.acampo) + "\n";
    out += "conjecture 3:";
    if (r.conjecture3.empty()) out += " no poles";
    for (const auto& c : r.conjecture3)
      out += " " + to_string(c.pole) + " -> " + (c.certified ? "certified" : "inconclusive") + ";";
    out += "\n";
  }
  if (r.conjecture2) out += std::string("conjecture 2: ") + (*r.conjecture2 ? "holds" : "FAILS") + "\n";
  for (const auto& f : r.invariant_failures) out += "INVARIANT FAILURE: " + f + "\n";
  return out;
}

}  // namespace ztop
