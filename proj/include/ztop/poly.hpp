#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include "ztop/numeric.hpp"
#include "ztop/upoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ztop {

using Exponent = std::vector<unsigned>;

/// Canonical sparse polynomial: a map from exponent vectors to non-zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) throw std::invalid_argument("Poly needs at least one variable");
  }

  static Poly constant(std::size_t num_vars, const Rational& c) {
    Poly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }
  static Poly variable(std::size_t num_vars, std::size_t index) {
    Exponent e(num_vars, 0);
    e.at(index) = 1;
    Poly p(num_vars);
    p.add_term(std::move(e), Rational(1));
    return p;
  }
  static Poly monomial(const Exponent& e, const Rational& c) {
    Poly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != num_vars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Lowest total degree of a term; -1 for zero.
  int order() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
      int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
      if (best < 0 || d < best) best = d;
    }
    return best;
  }

  int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return best;
  }

  /// Highest exponent of variable i; -1 for zero.
  int degree_in(std::size_t i) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[i]));
    return best;
  }

  /// Lowest exponent of variable i; -1 for zero.
  int order_in(std::size_t i) const {
    int best = -1;
    for (const auto& [e, c] : terms_)
      if (best < 0 || static_cast<int>(e[i]) < best) best = static_cast<int>(e[i]);
    return best;
  }

  /// Sum of the terms of total degree `degree`.
  Poly homogeneous_part(int degree) const {
    Poly out(num_vars_);
    for (const auto& [e, c] : terms_)
      if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)) == degree) out.terms_.emplace(e, c);
    return out;
  }

  Rational value_at_origin() const { return coeff(Exponent(num_vars_, 0)); }

  Rational eval(const std::vector<Rational>& point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  Poly derivative(std::size_t i) const {
    Poly out(num_vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent d = e;
      --d[i];
      out.terms_.emplace(std::move(d), c * Rational(e[i]));
    }
    return out;
  }

  /// Divides by x_i^k; every term must be divisible.
  Poly divide_by_variable_power(std::size_t i, unsigned k) const {
    Poly out(num_vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] < k) throw std::logic_error("monomial division is not exact");
      Exponent d = e;
      d[i] -= k;
      out.terms_.emplace(std::move(d), c);
    }
    return out;
  }

  Poly pow(unsigned e) const {
    Poly result = constant(num_vars_, 1), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly out(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend Poly operator*(const Rational& k, const Poly& a) {
    Poly out(a.num_vars_);
    if (k == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, k * c);
    return out;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  static void check_same(const Poly& a, const Poly& b) {
    if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomials over different variable sets");
  }

  std::size_t num_vars_;
  TermMap terms_;
};

/// Restriction of a two-variable polynomial to a univariate one by fixing x = 1: p(1, t).
inline QPoly dehomogenize_x(const Poly& p) {
  std::vector<Rational> c(std::max(p.degree_in(1), 0) + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) c[e[1]] += v;
  return QPoly(std::move(c));
}

/// Renders p over the given variable names in a form accepted by parse_poly.
inline std::string to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.num_vars()) throw std::invalid_argument("variable name count mismatch");
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace ztop
