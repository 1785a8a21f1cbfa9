#pragma once

// Maximal-order poles and what they predict: the Bernstein-Sato divisor,
// the weight-graded eigenvalue chain, candidate b-function roots, the
// A'Campo monodromy zeta function, and checkers for the pole conjectures.

#include "ztop/errors.hpp"
#include "ztop/rational_function.hpp"
#include "ztop/resolution_data.hpp"
#include "ztop/zeta.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ztop {

enum class TriState { yes, no, unknown };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    case TriState::unknown: return "unknown";
  }
  return "?";
}

struct RootMultiplicity {
  Rational root;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// Multiset of roots, sorted by root descending.
using RootMultiset = std::vector<RootMultiplicity>;

struct Prediction {
  int n = 0;
  Scope scope = Scope::local;
  std::optional<Rational> s0;      // the pole of order n, -1/N
  std::optional<std::int64_t> N;
  Rational lct;
  TriState isolated_hypothesis_met = TriState::unknown;
  std::optional<RootMultiset> divisor_roots;  // predicted divisor of the b-function
  std::vector<Rational> grw_eigenvalues;      // j/N standing for exp(2 pi i (-j/N)), j = 1..N
  std::vector<std::string> notes;
};

/// {-j/N with multiplicity n : j = 1..N}, total degree n N.
inline RootMultiset predicted_bfunction_divisor(int n, std::int64_t N) {
  if (n < 1 || N < 1) throw std::invalid_argument("predicted_bfunction_divisor needs n, N >= 1");
  RootMultiset out;
  for (std::int64_t j = 1; j <= N; ++j) out.push_back({Rational(-j, N), n});
  return out;
}

/// Reads off the pole of order n (if any) and records the divisor and eigenvalue predictions.
/// Throws TheoremViolation when an order-n pole is not of the form -1/N or is not -lct.
inline Prediction max_order_pole_report(const PoleTable& pt, const ResolutionData& rd, TriState isolated,
                                        Scope scope = Scope::local) {
  Prediction p;
  p.n = rd.ambient_dim;
  p.scope = scope;
  p.lct = lct(rd, scope);
  p.isolated_hypothesis_met = isolated;
  std::vector<Pole> maximal;
  for (const auto& pole : pt)
    if (pole.order == p.n) maximal.push_back(pole);
  if (maximal.empty()) {
    p.notes.push_back("no pole of order " + std::to_string(p.n));
    return p;
  }
  for (const auto& pole : maximal) {
    if (numer(pole.location) != -1)
      throw TheoremViolation("pole " + to_string(pole.location) + " of maximal order " + std::to_string(p.n) +
                             " is not of the form -1/N");
    if (pole.location != -p.lct)
      throw TheoremViolation("pole " + to_string(pole.location) + " of maximal order " + std::to_string(p.n) +
                             " differs from minus the log canonical threshold " + to_string(p.lct));
  }
  const Pole& pole = maximal.front();
  std::int64_t N = to_int64(denom(pole.location));
  p.s0 = pole.location;
  p.N = N;
  for (std::int64_t j = 1; j <= N; ++j) p.grw_eigenvalues.push_back(Rational(j, N));
  p.notes.push_back("pole " + to_string(pole.location) + " of order " + std::to_string(p.n) +
                    " equals minus the log canonical threshold");
  if (isolated == TriState::yes) {
    p.divisor_roots = predicted_bfunction_divisor(p.n, N);
    if (scope == Scope::global)
      p.notes.push_back("the global b-function is the least common multiple of the local b-functions, "
                        "so the divisor applies to b_f");
  } else {
    p.notes.push_back("divisor withheld: isolated singularity hypothesis not established");
  }
  return p;
}

/// Roots -(nu_i + k)/N_i, k >= 0, strictly inside (lo, hi), descending.
inline std::vector<Rational> candidate_bfunction_roots(const ResolutionData& rd, const Rational& lo,
                                                       const Rational& hi) {
  if (!(lo < hi) || hi > 0) throw std::invalid_argument("candidate window must satisfy lo < hi <= 0");
  std::set<Rational> out;
  for (const auto& c : rd.components) {
    for (std::int64_t k = 0;; ++k) {
      Rational r(-(c.nu + k), c.N);
      if (r <= lo) break;
      if (r < hi) out.insert(r);
    }
  }
  return {out.rbegin(), out.rend()};
}

inline std::vector<Rational> candidate_bfunction_roots(const ResolutionData& rd) {
  return candidate_bfunction_roots(rd, Rational(-rd.ambient_dim), Rational(0));
}

/// prod (1 - t^m)^e over the map entries; exponents are non-zero.
using CyclotomicRF = std::map<std::int64_t, std::int64_t>;

/// A'Campo: prod over components of (1 - t^{N_i})^{-chi(E_i° ∩ pi^-1(0))}.
inline CyclotomicRF acampo_zeta(const ResolutionData& rd) {
  rd.validate();
  CyclotomicRF z;
  for (const auto& s : rd.strata) {
    if (s.ids.size() != 1 || s.chi_origin == 0) continue;
    z[rd.component(s.ids[0]).N] -= s.chi_origin;
  }
  std::erase_if(z, [](const auto& kv) { return kv.second == 0; });
  return z;
}

/// Degree of the A'Campo product: sum of m e.
inline std::int64_t degree(const CyclotomicRF& z) {
  std::int64_t d = 0;
  for (const auto& [m, e] : z) d += m * e;
  return d;
}

inline std::string to_string(const CyclotomicRF& z) {
  if (z.empty()) return "1";
  std::string out;
  for (const auto& [m, e] : z) {
    if (!out.empty()) out += " * ";
    out += "(1 - t^" + std::to_string(m) + ")^" + std::to_string(e);
  }
  return out;
}

/// Eigenvalues exp(2 pi i q) as reduced fractions q in [0, 1), each with where it came from.
using EigenvalueSet = std::map<Rational, std::string>;

/// Certified monodromy eigenvalues at the origin and at nearby points of the germ.
inline EigenvalueSet monodromy_eigenvalues_germ(const ResolutionData& rd, const std::vector<int>& branch_multiplicities) {
  EigenvalueSet ev;
  auto add_roots_of_unity = [&](std::int64_t m, const std::string& why) {
    for (std::int64_t k = 0; k < m; ++k) ev.emplace(Rational(k, m), why);
  };
  ev.emplace(Rational(0), "H^0 of the Milnor fibre at a nearby smooth point");
  for (const auto& [m, e] : acampo_zeta(rd))
    add_roots_of_unity(m, std::string(e > 0 ? "zero" : "pole") + " of the A'Campo zeta function, factor 1 - t^" +
                              std::to_string(m));
  for (int m : branch_multiplicities)
    add_roots_of_unity(m, "nearby point of a branch of multiplicity " + std::to_string(m));
  return ev;
}

struct Conjecture3Result {
  Rational pole;
  Rational eigenvalue;  // pole mod 1
  bool certified = false;
};

/// A pole s0 is certified when exp(2 pi i s0) is in the computed set; otherwise inconclusive.
inline std::vector<Conjecture3Result> check_conjecture3(const PoleTable& pt, const EigenvalueSet& ev) {
  std::vector<Conjecture3Result> out;
  for (const auto& p : pt) {
    Rational q = frac(p.location);
    out.push_back({p.location, q, ev.count(q) > 0});
  }
  return out;
}

struct Conjecture4Result {
  int order_n_poles = 0;
  bool at_most_one = true;         // part (1)
  bool closest_to_origin = true;   // part (2)
  bool equals_minus_lct = true;    // the pole is -lct
  bool pass() const { return at_most_one && closest_to_origin; }
};

inline Conjecture4Result check_conjecture4(const PoleTable& pt, int n, const Rational& lct) {
  Conjecture4Result r;
  for (const auto& p : pt) {
    if (p.order != n) continue;
    ++r.order_n_poles;
    if (p.location != pt.front().location) r.closest_to_origin = false;
    if (p.location != -lct) r.equals_minus_lct = false;
  }
  r.at_most_one = r.order_n_poles <= 1;
  return r;
}

/// True iff b(s) Z(s) is a polynomial, b having the given roots.
inline bool check_conjecture2(const RationalFunction& z, const RootMultiset& b_roots) {
  QPoly b = QPoly::constant(Rational(1));
  for (const auto& r : b_roots) b = b * QPoly::linear(Rational(1), -r.root).pow(r.multiplicity);
  return divmod(b, to_q(z.denominator())).second.is_zero();
}

}  // namespace ztop
