#pragma once

// Embedded resolution of a plane-curve germ by iterated point blowups.
//
// Every pending center is the origin of a local chart with coordinates
// (u, v). A chart carries the strict-transform factors that vanish at its
// origin, the exceptional (or old) divisors through it as coordinate axes,
// and the full total transform, which is used to check the recorded
// multiplicities by exact division.
//
// Blowing up the origin of a chart uses the two standard charts
//   A: (u, v) = (u, u (w + t0))   new divisor u = 0, one chart per direction t0,
//   B: (u, v) = (s v, v)          new divisor v = 0, the direction u = 0.
// Directions hit by the strict transform at irrational points are kept as
// Galois orbits (an irreducible polynomial in t); they are leaves when the
// strict transform crosses the new divisor transversally there, and raise
// IrrationalCenter otherwise.

#include "ztop/bivariate.hpp"
#include "ztop/curve_data.hpp"
#include "ztop/errors.hpp"
#include "ztop/factor.hpp"
#include "ztop/newton.hpp"
#include "ztop/poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ztop {

struct StrictFactor {
  Poly poly;             // reduced, vanishes at the chart origin
  int multiplicity = 1;  // exponent in f
};

/// Divisor through a chart origin, given as the coordinate axis {coordinate `axis` = 0}.
struct LocalDivisor {
  int component = 0;
  int axis = 0;
};

struct Chart {
  int id = 0;
  std::string label;
  std::vector<StrictFactor> factors;
  std::vector<LocalDivisor> divisors;  // at most two
  Poly total{2};
};

/// A blowup center: the origin of a chart (rational, degree 1) or a conjugate point orbit.
struct CenterOrbit {
  int chart = 0;
  QPoly defining;  // t for a chart origin; irreducible in t otherwise
  int degree = 1;
};

struct BlowupOptions {
  bool allow_nonreduced = false;
  int max_steps = 1000;
};

struct BlowupState {
  std::vector<Chart> charts;  // charts whose origin still violates normal crossings
  std::vector<Component> components;
  std::vector<ComponentKind> kinds;
  std::vector<int> orbit_degrees;
  std::vector<Incidence> incidences;
  std::vector<BlowupRecord> history;
  bool reduced = true;
  int next_chart = 0;
  int max_steps = 1000;

  std::vector<CenterOrbit> pending_centers() const {
    std::vector<CenterOrbit> out;
    for (const auto& c : charts) out.push_back({c.id, QPoly::monomial(Rational(1), 1), 1});
    return out;
  }
  bool resolved() const noexcept { return charts.empty(); }

  const Component& component(int id) const {
    for (const auto& c : components)
      if (c.id == id) return c;
    throw std::out_of_range("unknown component");
  }
};

namespace detail {

inline int strict_order(const Chart& c) {
  int m = 0;
  for (const auto& f : c.factors) m += f.multiplicity * f.poly.order();
  return m;
}

/// p(u, u (w + t0)).
inline Poly substitute_chart_a(const Poly& p, const Rational& t0) {
  Poly out(2);
  int maxj = std::max(p.degree_in(1), 0);
  // (w + t0)^j expanded once per j.
  std::vector<QPoly> powers{QPoly::constant(Rational(1))};
  QPoly base = QPoly::linear(Rational(1), t0);
  for (int j = 1; j <= maxj; ++j) powers.push_back(powers.back() * base);
  for (const auto& [e, c] : p.terms()) {
    const auto& pw = powers[e[1]];
    for (std::size_t k = 0; k < pw.coeffs().size(); ++k)
      out.add_term({e[0] + e[1], static_cast<unsigned>(k)}, c * pw.coeffs()[k]);
  }
  return out;
}

/// p(s v, v).
inline Poly substitute_chart_b(const Poly& p) {
  Poly out(2);
  for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[0] + e[1]}, c);
  return out;
}

inline std::string orbit_label(const ZPoly& q) { return to_string(q, "t") + " = 0"; }

inline int add_component(BlowupState& st, std::int64_t N, std::int64_t nu, ComponentKind kind, int degree) {
  int id = static_cast<int>(st.components.size()) + 1;
  st.components.push_back({id, N, nu, true});
  st.kinds.push_back(kind);
  st.orbit_degrees.push_back(degree);
  return id;
}

inline void add_incidence(BlowupState& st, std::vector<int> ids, std::int64_t count) {
  std::sort(ids.begin(), ids.end());
  st.incidences.push_back({std::move(ids), count});
}

inline bool transverse_to_axis(const Poly& smooth, int axis) {
  // Restricted to {coordinate axis = 0} the factor must vanish to order one.
  Exponent linear = axis == 0 ? Exponent{0, 1} : Exponent{1, 0};
  return smooth.coeff(linear) != 0;
}

/// Either queues the chart as a pending center or records its final incidence.
inline void classify(BlowupState& st, Chart chart) {
  std::vector<StrictFactor> active;
  for (auto& f : chart.factors)
    if (f.poly.value_at_origin() == 0) active.push_back(std::move(f));
  chart.factors = std::move(active);

  std::vector<int> through;
  for (const auto& d : chart.divisors) through.push_back(d.component);

  if (chart.factors.empty()) {
    if (through.size() == 2) add_incidence(st, through, 1);
    return;
  }
  bool smooth = chart.factors.size() == 1 && chart.factors[0].poly.order() == 1;
  if (smooth && (chart.divisors.empty() ||
                 (chart.divisors.size() == 1 && transverse_to_axis(chart.factors[0].poly, chart.divisors[0].axis)))) {
    int branch = add_component(st, chart.factors[0].multiplicity, 1, ComponentKind::strict, 1);
    through.push_back(branch);
    add_incidence(st, through, 1);
    return;
  }
  st.charts.push_back(std::move(chart));
}

inline void check_vanishing_order(const Poly& total, int axis, std::int64_t expected) {
  if (total.order_in(axis) != expected)
    throw std::logic_error("recorded multiplicity " + std::to_string(expected) +
                           " differs from the vanishing order of the total transform (" +
                           std::to_string(total.order_in(axis)) + ")");
}

}  // namespace detail

/// State before any blowup: the germ at the origin of C^2.
inline BlowupState initial_blowup_state(const Poly& f, const BlowupOptions& opts = {}) {
  require_germ(f);
  BlowupState st;
  st.max_steps = opts.max_steps;
  st.reduced = is_reduced_isolated(f);
  if (!st.reduced && !opts.allow_nonreduced) throw NotReduced();
  Chart root;
  root.id = st.next_chart++;
  root.label = "origin";
  root.total = f;
  for (auto& [g, k] : squarefree_decomposition(f)) root.factors.push_back({g, k});
  detail::classify(st, std::move(root));
  return st;
}

/// Blows up the given center and recomputes the pending centers.
inline BlowupState blowup_step(const BlowupState& state, const CenterOrbit& center) {
  using namespace detail;
  auto it = std::find_if(state.charts.begin(), state.charts.end(), [&](const Chart& c) { return c.id == center.chart; });
  if (it == state.charts.end()) throw std::invalid_argument("center is not pending");
  if (center.degree != 1) throw IrrationalCenter(to_string(center.defining, "t") + " = 0");
  if (static_cast<int>(state.history.size()) >= state.max_steps)
    throw Error("resolution did not terminate within " + std::to_string(state.max_steps) + " blowups");

  BlowupState st = state;
  Chart chart = *it;
  st.charts.erase(st.charts.begin() + (it - state.charts.begin()));

  // Numerical data of the new exceptional curve.
  std::int64_t m = strict_order(chart);
  std::int64_t N = m, nu = 2;
  std::optional<LocalDivisor> du, dv;  // old divisors on {u = 0} and {v = 0}
  BlowupRecord rec;
  rec.step = static_cast<int>(st.history.size()) + 1;
  rec.center = chart.label;
  rec.multiplicity = m;
  for (const auto& d : chart.divisors) {
    const auto& c = st.component(d.component);
    N += c.N;
    nu += c.nu - 1;
    rec.through.push_back(d.component);
    (d.axis == 0 ? du : dv) = d;
  }
  int E = add_component(st, N, nu, ComponentKind::exceptional, 1);
  rec.component = E;
  rec.N = N;
  rec.nu = nu;
  st.history.push_back(rec);

  // Tangent directions of the reduced strict transform, with intersection multiplicities.
  QPoly H = QPoly::constant(Rational(1));
  int infinite = 0;
  std::vector<QPoly> cones;
  for (const auto& f : chart.factors) {
    int mk = f.poly.order();
    QPoly h = dehomogenize_x(f.poly.homogeneous_part(mk));
    infinite += mk - h.degree();
    H = H * h;
    cones.push_back(h);
  }
  auto roots = rational_roots(H);

  // Irrational directions: conjugate orbits, which must be transverse crossings.
  QPoly irrational = H;
  for (const auto& [r, mult] : roots) irrational = exact_div(irrational, QPoly::linear(Rational(1), -r).pow(mult));
  for (const auto& [part, mult] : squarefree_decomposition(irrational)) {
    for (const auto& q : irreducible_factors(part)) {
      if (mult > 1) throw IrrationalCenter(orbit_label(q) + " on E" + std::to_string(E));
      int owner = -1;
      for (std::size_t k = 0; k < cones.size(); ++k)
        if (divmod(cones[k], to_q(q)).second.is_zero()) owner = static_cast<int>(k);
      int branch = add_component(st, chart.factors.at(owner).multiplicity, 1, ComponentKind::strict, q.degree());
      add_incidence(st, {E, branch}, q.degree());
    }
  }

  // Rational directions in chart A, plus the old divisor v = 0 at t = 0.
  std::vector<Rational> directions;
  for (const auto& [r, mult] : roots) directions.push_back(r);
  if (dv && std::find(directions.begin(), directions.end(), Rational(0)) == directions.end())
    directions.push_back(Rational(0));
  std::sort(directions.begin(), directions.end());
  for (const auto& t0 : directions) {
    Chart child;
    child.id = st.next_chart++;
    child.label = "E" + std::to_string(E) + " at t = " + to_string(t0);
    for (const auto& f : chart.factors)
      child.factors.push_back({substitute_chart_a(f.poly, t0).divide_by_variable_power(0, f.poly.order()), f.multiplicity});
    child.divisors.push_back({E, 0});
    if (dv && t0 == 0) child.divisors.push_back({dv->component, 1});
    child.total = substitute_chart_a(chart.total, t0);
    check_vanishing_order(child.total, 0, N);
    if (dv && t0 == 0) check_vanishing_order(child.total, 1, st.component(dv->component).N);
    classify(st, std::move(child));
  }
  // The direction u = 0 in chart B.
  if (infinite > 0 || du) {
    Chart child;
    child.id = st.next_chart++;
    child.label = "E" + std::to_string(E) + " at t = inf";
    for (const auto& f : chart.factors)
      child.factors.push_back({substitute_chart_b(f.poly).divide_by_variable_power(1, f.poly.order()), f.multiplicity});
    child.divisors.push_back({E, 1});
    if (du) child.divisors.push_back({du->component, 0});
    child.total = substitute_chart_b(chart.total);
    check_vanishing_order(child.total, 1, N);
    if (du) check_vanishing_order(child.total, 0, st.component(du->component).N);
    classify(st, std::move(child));
  }
  return st;
}

/// Stratum table of a resolved state.
inline CurveResolution euler_strata(const BlowupState& state) {
  if (!state.resolved()) throw UnresolvedState();
  CurveResolution res;
  res.data.ambient_dim = 2;
  res.data.components = state.components;
  res.kinds = state.kinds;
  res.orbit_degrees = state.orbit_degrees;
  res.history = state.history;
  res.reduced = state.reduced;
  assemble_strata(res, state.incidences);
  res.data.validate();
  return res;
}

/// Runs blowups at pending centers (first pending first) until the total transform has normal crossings.
inline CurveResolution resolve_curve_germ(const Poly& f, const BlowupOptions& opts = {}) {
  BlowupState st = initial_blowup_state(f, opts);
  while (!st.resolved()) st = blowup_step(st, st.pending_centers().front());
  return euler_strata(st);
}

}  // namespace ztop
