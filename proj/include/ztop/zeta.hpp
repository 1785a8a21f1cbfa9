#pragma once

// Topological zeta functions from resolution data, their poles and the
// log canonical thresholds.

#include "ztop/rational_function.hpp"
#include "ztop/resolution_data.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace ztop {

enum class Scope { local, global };

struct Pole {
  Rational location;
  int order = 0;
  friend bool operator==(const Pole&, const Pole&) = default;
};

/// Poles sorted by location descending: index 0 is the pole closest to the origin.
using PoleTable = std::vector<Pole>;

namespace detail {

inline RationalFunction zeta_sum(const ResolutionData& rd, Scope scope) {
  rd.validate();
  RationalFunction z = RationalFunction::constant(scope == Scope::local ? rd.empty_chi_origin : rd.empty_chi_total);
  for (const auto& s : rd.strata) {
    std::int64_t chi = scope == Scope::local ? s.chi_origin : s.chi_total;
    if (chi == 0) continue;
    QPoly den = QPoly::constant(Rational(1));
    for (int id : s.ids) {
      const auto& c = rd.component(id);
      den = den * QPoly::linear(Rational(c.N), Rational(c.nu));
    }
    z = z + RationalFunction(QPoly::constant(Rational(chi)), den);
  }
  return z;
}

}  // namespace detail

/// Local topological zeta function: sum over strata of chi(E_I° ∩ pi^-1(0)) prod 1/(nu_i + N_i s).
inline RationalFunction zeta_local(const ResolutionData& rd) { return detail::zeta_sum(rd, Scope::local); }

/// Global topological zeta function: the same sum weighted by chi(E_I°).
inline RationalFunction zeta_global(const ResolutionData& rd) { return detail::zeta_sum(rd, Scope::global); }

inline RationalFunction zeta(const ResolutionData& rd, Scope scope) { return detail::zeta_sum(rd, scope); }

/// Candidate pole locations -nu_i/N_i, descending, without repetition.
inline std::vector<Rational> candidate_poles(const ResolutionData& rd) {
  std::set<Rational> c;
  for (const auto& comp : rd.components) c.insert(Rational(-comp.nu, comp.N));
  return {c.rbegin(), c.rend()};
}

/// Pole orders of z read off its canonical denominator at every candidate location.
inline PoleTable poles(const RationalFunction& z, const ResolutionData& rd) {
  PoleTable out;
  QPoly den = to_q(z.denominator());
  int found = 0;
  for (const auto& loc : candidate_poles(rd)) {
    int m = root_multiplicity(den, loc);
    if (m > 0) out.push_back({loc, m});
    found += m;
  }
  if (found != den.degree()) throw std::logic_error("denominator has roots outside the candidate poles");
  return out;
}

/// c_0(f): min nu_i/N_i over components meeting the fibre over the origin.
inline Rational lct_local(const ResolutionData& rd) {
  std::optional<Rational> best;
  for (const auto& c : rd.components) {
    if (!c.meets_origin_fiber) continue;
    Rational q(c.nu, c.N);
    if (!best || q < *best) best = q;
  }
  if (!best) throw NoQualifyingComponent();
  return *best;
}

/// c(f): min nu_i/N_i over all components.
inline Rational lct_global(const ResolutionData& rd) {
  std::optional<Rational> best;
  for (const auto& c : rd.components) {
    Rational q(c.nu, c.N);
    if (!best || q < *best) best = q;
  }
  if (!best) throw NoQualifyingComponent();
  return *best;
}

inline Rational lct(const ResolutionData& rd, Scope scope) {
  return scope == Scope::local ? lct_local(rd) : lct_global(rd);
}

}  // namespace ztop
