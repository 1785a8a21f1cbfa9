#pragma once

#include "ztop/upoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ztop {

/// Element of Q(s) in canonical form: integer numerator and denominator, coprime over Q,
/// joint content 1, denominator with positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(ZPoly::constant(1)) {}
  RationalFunction(const QPoly& num, const QPoly& den) { assign(num, den); }
  static RationalFunction constant(const Rational& c) {
    return RationalFunction(QPoly::constant(c), QPoly::constant(Rational(1)));
  }
  /// 1 / (nu + N s)
  static RationalFunction inverse_linear(const Rational& N, const Rational& nu) {
    return RationalFunction(QPoly::constant(Rational(1)), QPoly::linear(N, nu));
  }

  const ZPoly& numerator() const noexcept { return num_; }
  const ZPoly& denominator() const noexcept { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational eval(const Rational& s) const {
    Rational d = den_.eval(Rational(s));
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(Rational(s)) / d;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    QPoly an = to_q(a.num_), ad = to_q(a.den_), bn = to_q(b.num_), bd = to_q(b.den_);
    return RationalFunction(an * bd + bn * ad, ad * bd);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(to_q(a.num_) * to_q(b.num_), to_q(a.den_) * to_q(b.den_));
  }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void assign(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = ZPoly{};
      den_ = ZPoly::constant(1);
      return;
    }
    QPoly g = gcd(num, den);
    QPoly n = exact_div(num, g), d = exact_div(den, g);
    // Clear all denominators jointly, then remove the joint content.
    Integer l = 1;
    for (const auto& c : n.coeffs()) l = lcm(l, denom(c));
    for (const auto& c : d.coeffs()) l = lcm(l, denom(c));
    std::vector<Integer> zn, zd;
    Integer content = 0;
    for (const auto& c : n.coeffs()) {
      zn.push_back(numer(c) * (l / denom(c)));
      content = gcd(content, zn.back());
    }
    for (const auto& c : d.coeffs()) {
      zd.push_back(numer(c) * (l / denom(c)));
      content = gcd(content, zd.back());
    }
    if (zd.back() < 0) content = -content;
    for (auto& v : zn) v /= content;
    for (auto& v : zd) v /= content;
    num_ = ZPoly(std::move(zn));
    den_ = ZPoly(std::move(zd));
  }

  ZPoly num_;
  ZPoly den_;
};

inline std::string to_string(const RationalFunction& z) {
  auto wrap = [](const ZPoly& p) {
    std::string t = to_string(p);
    std::size_t terms = 0;
    for (const auto& c : p.coeffs()) terms += c != 0;
    return terms > 1 ? "(" + t + ")" : t;
  };
  if (z.is_polynomial() && z.denominator().coeffs()[0] == 1) return to_string(z.numerator());
  return wrap(z.numerator()) + "/" + wrap(z.denominator());
}

}  // namespace ztop
