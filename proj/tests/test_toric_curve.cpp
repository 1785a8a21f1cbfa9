#include "oracle.hpp"

#include "ztop/curve_resolution.hpp"
#include "ztop/parser.hpp"
#include "ztop/toric_curve.hpp"
#include "ztop/zeta.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ztop;

namespace {

Poly P(const std::string& s) { return parse_curve(s); }

std::vector<Ray> rays_of(const Fan2D& fan) {
  std::vector<Ray> out;
  for (const auto& r : fan.rays) out.push_back({r.a, r.b});
  return out;
}

// Exhaustive oracle: repeatedly insert the sum of any non-unimodular adjacent pair's
// Farey neighbour by brute-force search over small lattice points.
std::vector<Ray> brute_subdivision(std::vector<Ray> rays) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
      Ray a = rays[i], b = rays[i + 1];
      if (det(a, b) == 1) continue;
      // a lattice point c strictly inside the cone with det(a, c) = 1 and smallest a-coordinate sum
      std::optional<Ray> best;
      for (long x = 0; x <= a.a + b.a; ++x)
        for (long y = 0; y <= a.b + b.b; ++y) {
          Ray c{x, y};
          if (det(a, c) == 1 && det(c, b) >= 1 && (!best || x + y < best->a + best->b)) best = c;
        }
      rays.insert(rays.begin() + i + 1, *best);
      changed = true;
      break;
    }
  }
  return rays;
}

}  // namespace

TEST(DualFan, Cusp) {
  Fan2D fan = dual_fan(newton_polygon_local(P("x^2+y^3")));
  EXPECT_EQ(rays_of(fan), (std::vector<Ray>{{1, 0}, {3, 2}, {0, 1}}));
  // N is the minimum of a.m over the support; sigma = a1 + a2
  EXPECT_EQ(fan.rays[0].N, 0);
  EXPECT_EQ(fan.rays[1].N, 6);
  EXPECT_EQ(fan.rays[2].N, 0);
  EXPECT_EQ(fan.rays[0].sigma, 1);
  EXPECT_EQ(fan.rays[1].sigma, 5);
  EXPECT_EQ(fan.rays[2].sigma, 1);
}

TEST(DualFan, NodeAndHomogeneous) {
  Fan2D xy = dual_fan(newton_polygon_local(P("x*y")));
  EXPECT_EQ(rays_of(xy), (std::vector<Ray>{{1, 0}, {0, 1}}));
  EXPECT_EQ(xy.rays[0].N, 1);
  EXPECT_EQ(xy.rays[1].N, 1);
  Fan2D q = dual_fan(newton_polygon_local(P("x^2+x*y+y^2")));
  EXPECT_EQ(rays_of(q), (std::vector<Ray>{{1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(q.rays[1].N, 2);
  EXPECT_EQ(q.rays[1].sigma, 2);
}

TEST(Subdivision, Cusp) {
  Fan2D fan = unimodular_subdivide(dual_fan(newton_polygon_local(P("x^2+y^3"))));
  EXPECT_EQ(rays_of(fan), (std::vector<Ray>{{1, 0}, {2, 1}, {3, 2}, {1, 1}, {0, 1}}));
  std::vector<std::pair<std::int64_t, std::int64_t>> data;
  for (const auto& r : fan.rays) data.push_back({r.N, r.sigma});
  EXPECT_EQ(data, (std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {3, 3}, {6, 5}, {2, 2}, {0, 1}}));
}

TEST(Subdivision, AlreadyUnimodular) {
  Fan2D fan = unimodular_subdivide(dual_fan(newton_polygon_local(P("x*y"))));
  EXPECT_EQ(rays_of(fan), (std::vector<Ray>{{1, 0}, {0, 1}}));
}

TEST(Subdivision, MatchesBruteForceProperty) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> ex(1, 11);
  for (int trial = 0; trial < 150; ++trial) {
    int a = ex(rng), b = ex(rng), c = ex(rng), d = ex(rng);
    Poly f = P("x^" + std::to_string(a) + " + x^" + std::to_string(c) + "*y^" + std::to_string(d) + " + y^" +
               std::to_string(b));
    if (f.value_at_origin() != 0) continue;
    Fan2D base = dual_fan(newton_polygon_local(f));
    Fan2D fan = unimodular_subdivide(base);
    EXPECT_EQ(rays_of(fan), brute_subdivision(rays_of(base)));
    for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i)
      EXPECT_EQ(det({fan.rays[i].a, fan.rays[i].b}, {fan.rays[i + 1].a, fan.rays[i + 1].b}), 1);
    for (const auto& r : fan.rays) {
      EXPECT_EQ(std::gcd(r.a, r.b), 1);
      std::int64_t n = std::numeric_limits<std::int64_t>::max();
      for (const auto& [e, coef] : f.terms()) n = std::min<std::int64_t>(n, r.a * long(e[0]) + r.b * long(e[1]));
      EXPECT_EQ(r.N, n);
    }
  }
}

TEST(ToricResolution, Cusp) {
  auto r = toric_resolution_data(P("x^2+y^3"));
  EXPECT_EQ(zeta_local(r.data), RationalFunction(QPoly{5, 4}, QPoly{5, 11, 6}));
}

TEST(ToricResolution, NodeUsesAxisComponents) {
  auto r = toric_resolution_data(P("x*y"));
  ASSERT_EQ(r.data.components.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(r.kinds[i], ComponentKind::axis);
    EXPECT_EQ(r.data.components[i].N, 1);
    EXPECT_EQ(r.data.components[i].nu, 1);
  }
  EXPECT_EQ(zeta_local(r.data), RationalFunction(QPoly{1}, QPoly{1, 2, 1}));
}

TEST(ToricResolution, TripleLines) {
  auto r = toric_resolution_data(P("x^3+y^3"));
  EXPECT_EQ(zeta_local(r.data), RationalFunction(QPoly{2, -1}, QPoly{2, 5, 3}));
}

TEST(ToricResolution, Errors) {
  EXPECT_THROW(toric_resolution_data(P("x^2+2*x*y+y^2")), Degenerate);
  EXPECT_THROW(toric_resolution_data(P("x^2*y")), NotReduced);
  EXPECT_THROW(toric_resolution_data(P("x + 1")), NonVanishingAtOrigin);
}

TEST(ToricResolution, MonomialClosedForm) {
  for (int a = 1; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      Poly f = P("x^" + std::to_string(a) + "*y^" + std::to_string(b));
      auto r = toric_resolution_data(f, {true});
      // normal crossings {x = 0} (a, 1) and {y = 0} (b, 1) meeting at the origin
      RationalFunction expected = b == 0 ? RationalFunction::inverse_linear(a, 1)
                                         : RationalFunction::inverse_linear(a, 1) * RationalFunction::inverse_linear(b, 1);
      EXPECT_EQ(zeta_local(r.data), expected) << a << " " << b;
    }
}

TEST(ToricResolution, AgreesWithBlowupAndNewtonOracleProperty) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> ex(1, 8), coef(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Poly f(2);
    for (int t = 0; t < 4; ++t) {
      int c = coef(rng);
      if (c != 0) f.add_term({unsigned(ex(rng) - 1), unsigned(ex(rng) - 1)}, Rational(c));
    }
    f.add_term({0, 0}, -f.value_at_origin());
    if (f.is_zero() || !is_nondegenerate_curve(f) || !is_reduced_isolated(f)) continue;
    auto t = toric_resolution_data(f);
    for (const auto& s : {Rational(1, 3), Rational(7, 2), Rational(-1, 7)})
      EXPECT_EQ(zeta_local(t.data).eval(s), oracle::newton_zeta_at(f, s)) << to_string(f, {"x", "y"});
    try {
      auto b = resolve_curve_germ(f);
      EXPECT_EQ(zeta_local(b.data), zeta_local(t.data)) << to_string(f, {"x", "y"});
      EXPECT_EQ(lct_local(b.data), lct_local(t.data));
      ++checked;
    } catch (const IrrationalCenter&) {
    }
  }
  EXPECT_GT(checked, 30);
}
