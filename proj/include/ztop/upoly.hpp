#pragma once

// Dense univariate polynomials over a ring, coefficients stored in
// ascending order with no trailing zeros. Field algorithms (division,
// gcd, square-free part) are provided for rational coefficients.

#include "ztop/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ztop {

template <typename T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(T v) { return UPoly(std::vector<T>{std::move(v)}); }
  /// a*s + b
  static UPoly linear(T a, T b) { return UPoly(std::vector<T>{std::move(b), std::move(a)}); }
  static UPoly monomial(T v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(v);
    return UPoly(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <typename S>
  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v = -v;
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const T& k, const UPoly& a) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v *= k;
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly pow(unsigned e) const {
    UPoly result = constant(T(1)), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using QPoly = UPoly<Rational>;
using ZPoly = UPoly<Integer>;

/// Quotient and remainder over the rationals.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {QPoly{}, a};
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  const Rational& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lb;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

inline QPoly monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return Rational(1) / a.lead() * a;
}

/// Monic gcd; gcd(0, 0) = 0.
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Exact quotient; throws if b does not divide a.
inline QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

/// Multiplicity of the root x0 in a (a != 0).
inline int root_multiplicity(QPoly a, const Rational& x0) {
  if (a.is_zero()) throw std::domain_error("root multiplicity in zero polynomial");
  QPoly lin = QPoly::linear(Rational(1), Rational(-x0));
  int m = 0;
  for (;;) {
    auto [q, r] = divmod(a, lin);
    if (!r.is_zero()) return m;
    a = std::move(q);
    ++m;
  }
}

/// Content-free integer polynomial proportional to a, with positive leading coefficient.
inline ZPoly primitive_integer(const QPoly& a) {
  if (a.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : a.coeffs()) l = lcm(l, denom(c));
  std::vector<Integer> z;
  z.reserve(a.coeffs().size());
  Integer g = 0;
  for (const auto& c : a.coeffs()) {
    z.push_back(numer(c) * (l / denom(c)));
    g = gcd(g, z.back());
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return ZPoly(std::move(z));
}

inline QPoly to_q(const ZPoly& a) {
  std::vector<Rational> c;
  c.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

inline Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) g = gcd(g, c);
  return g;
}

/// Square-free decomposition: returns {(g_k, k)} with a = lead * prod g_k^k, g_k monic square-free and coprime.
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& a) {
  std::vector<std::pair<QPoly, int>> out;
  if (a.degree() <= 0) return out;
  // Yun's algorithm.
  QPoly d = a.derivative();
  QPoly g = gcd(a, d);
  QPoly b = exact_div(a, g);
  QPoly c = exact_div(d, g);
  QPoly e = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    QPoly h = gcd(b, e);
    if (h.degree() > 0) out.emplace_back(monic(h), k);
    b = exact_div(b, h);
    c = exact_div(e, h);
    e = c - b.derivative();
    ++k;
  }
  return out;
}

/// Human-readable form in the variable `var`, highest degree first.
template <typename T>
std::string to_string(const UPoly<T>& p, const std::string& var = "s") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c(p.coeffs()[i]);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace ztop
