#pragma once

// Greatest common divisors and square-free decomposition of two-variable
// polynomials, computed in Q[x][y] with a primitive remainder sequence.

#include "ztop/poly.hpp"
#include "ztop/upoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ztop {

namespace detail {

// Polynomial in y whose coefficients are polynomials in x; no trailing zeros.
using YPoly = std::vector<QPoly>;

inline void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline YPoly to_ypoly(const Poly& p) {
  if (p.num_vars() != 2) throw std::invalid_argument("expected a two-variable polynomial");
  YPoly out(std::max(p.degree_in(1), 0) + 1);
  for (const auto& [e, c] : p.terms()) out[e[1]] = out[e[1]] + QPoly::monomial(c, e[0]);
  trim(out);
  return out;
}

inline Poly from_ypoly(const YPoly& p) {
  Poly out(2);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].coeffs().size(); ++i) out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, p[j].coeffs()[i]);
  return out;
}

inline QPoly ycontent(const YPoly& p) {
  QPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

inline YPoly scale(const YPoly& p, const QPoly& k) {
  YPoly out;
  for (const auto& c : p) out.push_back(c * k);
  trim(out);
  return out;
}

inline YPoly divide_coeffs(const YPoly& p, const QPoly& k) {
  YPoly out;
  for (const auto& c : p) out.push_back(exact_div(c, k));
  return out;
}

// Pseudo-remainder of a by b in y.
inline YPoly prem(YPoly a, const YPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const QPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    QPoly la = a.back();
    a = scale(a, lb);
    for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
    trim(a);
  }
  return a;
}

inline YPoly primitive(const YPoly& p) {
  if (p.empty()) return p;
  return divide_coeffs(p, ycontent(p));
}

// Normalizes so the leading coefficient (in y, then in x) is 1.
inline YPoly normalize(const YPoly& p) {
  if (p.empty()) return p;
  Rational l = p.back().lead();
  YPoly out;
  for (const auto& c : p) out.push_back(Rational(1) / l * c);
  return out;
}

}  // namespace detail

/// Greatest common divisor over Q, normalized to leading coefficient 1 (lex: y then x).
inline Poly gcd(const Poly& a, const Poly& b) {
  using namespace detail;
  YPoly pa = to_ypoly(a), pb = to_ypoly(b);
  if (pa.empty()) return from_ypoly(normalize(pb));
  if (pb.empty()) return from_ypoly(normalize(pa));
  QPoly cont = gcd(ycontent(pa), ycontent(pb));
  pa = primitive(pa);
  pb = primitive(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    YPoly r = prem(pa, pb);
    pa = std::move(pb);
    pb = primitive(r);
  }
  return from_ypoly(normalize(scale(pa, cont)));
}

/// Exact quotient a / b in Q[x, y]; throws std::logic_error if b does not divide a.
inline Poly exact_div(const Poly& a, const Poly& b) {
  using namespace detail;
  YPoly pa = to_ypoly(a), pb = to_ypoly(b);
  if (pb.empty()) throw std::domain_error("division by zero polynomial");
  if (pa.empty()) return Poly(2);
  const int db = static_cast<int>(pb.size()) - 1;
  YPoly q(std::max<int>(static_cast<int>(pa.size()) - db, 1));
  while (!pa.empty() && static_cast<int>(pa.size()) - 1 >= db) {
    int da = static_cast<int>(pa.size()) - 1;
    QPoly t = ztop::exact_div(pa.back(), pb.back());
    q[da - db] = t;
    for (int j = 0; j <= db; ++j) pa[da - db + j] = pa[da - db + j] - t * pb[j];
    trim(pa);
  }
  if (!pa.empty()) throw std::logic_error("inexact bivariate division");
  trim(q);
  return from_ypoly(q);
}

/// gcd(f, df/dx, df/dy): the product of the repeated factors of f, each to one power less.
inline Poly repeated_part(const Poly& f) { return gcd(gcd(f, f.derivative(0)), f.derivative(1)); }

/// Square-free decomposition f = c * prod g_k^k (g_k square-free, pairwise coprime, non-constant).
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.total_degree() <= 0) return out;
  // a_i = repeated_part^i(f); b_i = a_{i-1} / a_i collects factors of multiplicity >= i.
  std::vector<Poly> a{f};
  while (a.back().total_degree() > 0) a.push_back(repeated_part(a.back()));
  std::vector<Poly> b;
  for (std::size_t i = 1; i < a.size(); ++i) b.push_back(exact_div(a[i - 1], a[i]));
  b.push_back(Poly::constant(2, 1));
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    Poly g = exact_div(b[i], b[i + 1]);
    if (g.total_degree() > 0) out.emplace_back(g, static_cast<int>(i + 1));
  }
  return out;
}

}  // namespace ztop
