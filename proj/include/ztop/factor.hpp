#pragma once

// Rational roots and irreducible factorization of univariate polynomials
// over the rationals. Factorization uses Kronecker's interpolation method,
// which is adequate for the small degrees produced by tangent cones and
// Newton-polygon face polynomials.

#include "ztop/numeric.hpp"
#include "ztop/upoly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ztop {

namespace detail {

inline std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  if (n <= 1) return out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (p > 10000000) throw std::runtime_error("integer too large to factor by trial division");
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Positive divisors of |n| (n != 0), ascending.
inline std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline bool less_zpoly(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

inline std::optional<ZPoly> kronecker_factor(const ZPoly& g, int k) {
  // Evaluation points with few divisors keep the search small.
  struct Point {
    Integer x, value;
    std::size_t ndiv;
  };
  std::vector<Point> pts;
  const int bound = 4 * g.degree() + 8;
  for (int x = -bound; x <= bound; ++x) {
    Integer v = g.eval(Integer(x));
    if (v == 0) continue;
    pts.push_back({Integer(x), v, divisors(v).size()});
  }
  if (static_cast<int>(pts.size()) < k + 1) return std::nullopt;
  std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.ndiv < b.ndiv; });
  pts.resize(k + 1);

  // Lagrange basis over the chosen points.
  std::vector<QPoly> basis;
  for (int i = 0; i <= k; ++i) {
    QPoly li = QPoly::constant(Rational(1));
    for (int j = 0; j <= k; ++j) {
      if (i == j) continue;
      li = li * QPoly::linear(Rational(1), Rational(-pts[j].x));
      li = Rational(1) / Rational(pts[i].x - pts[j].x) * li;
    }
    basis.push_back(std::move(li));
  }
  std::vector<std::vector<Integer>> choices;
  for (int i = 0; i <= k; ++i) {
    std::vector<Integer> c;
    for (const auto& d : divisors(pts[i].value)) {
      c.push_back(d);
      if (i > 0) c.push_back(-d);
    }
    choices.push_back(std::move(c));
  }
  const QPoly gq = to_q(g);
  std::vector<std::size_t> idx(k + 1, 0);
  for (;;) {
    QPoly h;
    for (int i = 0; i <= k; ++i) h = h + Rational(choices[i][idx[i]]) * basis[i];
    if (h.degree() == k) {
      bool integral = std::all_of(h.coeffs().begin(), h.coeffs().end(),
                                  [](const Rational& c) { return denom(c) == 1; });
      if (integral && divmod(gq, h).second.is_zero()) return primitive_integer(h);
    }
    int pos = 0;
    while (pos <= k && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos > k) return std::nullopt;
  }
}

inline void factor_no_linear(const ZPoly& g, std::vector<ZPoly>& out) {
  if (g.degree() <= 3) {
    out.push_back(g);
    return;
  }
  for (int k = 2; k <= g.degree() / 2; ++k) {
    if (auto h = kronecker_factor(g, k)) {
      factor_no_linear(*h, out);
      factor_no_linear(primitive_integer(exact_div(to_q(g), to_q(*h))), out);
      return;
    }
  }
  out.push_back(g);
}

}  // namespace detail

/// Distinct rational roots of a non-zero polynomial with their multiplicities, ascending.
inline std::vector<std::pair<Rational, int>> rational_roots(const QPoly& a) {
  if (a.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  if (a.degree() <= 0) return roots;
  QPoly rest = a;
  int zero_mult = 0;
  while (rest.coeff(0) == 0) {
    rest = exact_div(rest, QPoly::monomial(Rational(1), 1));
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rational(0), zero_mult);
  if (rest.degree() > 0) {
    // Candidates come from the square-free part to keep coefficients small.
    QPoly sqf = exact_div(rest, gcd(rest, rest.derivative()));
    ZPoly z = primitive_integer(sqf);
    auto ps = detail::divisors(z.coeffs().front());
    auto qs = detail::divisors(z.lead());
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int sign : {1, -1}) {
          Rational r(Integer(sign) * p, q);
          if (z.eval(r) == 0 && std::none_of(roots.begin(), roots.end(), [&](const auto& e) { return e.first == r; }))
            roots.emplace_back(r, root_multiplicity(rest, r));
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Irreducible factors over Q of a square-free polynomial of positive degree, as primitive
/// integer polynomials with positive leading coefficient, sorted by degree then coefficients.
inline std::vector<ZPoly> irreducible_factors(const QPoly& squarefree) {
  if (squarefree.degree() <= 0) return {};
  std::vector<ZPoly> out;
  QPoly rest = squarefree;
  for (const auto& [r, m] : rational_roots(squarefree)) {
    if (m != 1) throw std::invalid_argument("irreducible_factors expects a square-free polynomial");
    QPoly lin = QPoly::linear(Rational(1), Rational(-r));
    out.push_back(primitive_integer(lin));
    rest = exact_div(rest, lin);
  }
  if (rest.degree() > 0) detail::factor_no_linear(primitive_integer(rest), out);
  std::sort(out.begin(), out.end(), detail::less_zpoly);
  return out;
}

}  // namespace ztop
