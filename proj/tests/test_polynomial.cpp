#include "oracle.hpp"

#include "ztop/bivariate.hpp"
#include "ztop/factor.hpp"
#include "ztop/newton.hpp"
#include "ztop/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ztop;

namespace {

Poly P(const std::string& s) { return parse_curve(s); }

Poly random_poly(std::mt19937& rng, int vars, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms), ex(0, max_exp), num(-9, 9), den(1, 4);
  Poly p(vars);
  for (int t = nterms(rng); t > 0; --t) {
    Exponent e(vars);
    for (auto& k : e) k = ex(rng);
    p.add_term(e, Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST(Parser, ReadsTerms) {
  Poly p = P("x^2 + y^3");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coeff({2, 0}), 1);
  EXPECT_EQ(p.coeff({0, 3}), 1);
}

TEST(Parser, CancelsToZero) { EXPECT_TRUE(P("x*y - x*y").is_zero()); }

TEST(Parser, ExpandsPowers) {
  Poly p = P("(x+y)^2");
  EXPECT_EQ(p.coeff({2, 0}), 1);
  EXPECT_EQ(p.coeff({1, 1}), 2);
  EXPECT_EQ(p.coeff({0, 2}), 1);
  EXPECT_EQ(p.size(), 3u);
}

TEST(Parser, PrecedenceAndRationals) {
  EXPECT_EQ(P("-x^2"), P("-(x^2)"));
  EXPECT_EQ(P("2*x^2*y"), P("2*(x^2)*y"));
  EXPECT_EQ(P("3/4*x - 1/2 * y").coeff({1, 0}), Rational(3, 4));
  EXPECT_EQ(P(" x  +\ty "), P("x+y"));
}

TEST(Parser, Errors) {
  EXPECT_THROW(P("x +"), SyntaxError);
  EXPECT_THROW(P("2x"), SyntaxError);
  EXPECT_THROW(P("(x + y"), SyntaxError);
  EXPECT_THROW(P("x^y"), SyntaxError);
  EXPECT_THROW(P("1/0*x"), SyntaxError);
  EXPECT_THROW(P("x + z"), UnknownVariable);
  try {
    P("x + * y");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(Parser, RoundTripProperty) {
  std::mt19937 rng(12345);
  for (int vars = 1; vars <= 4; ++vars) {
    std::vector<std::string> names;
    for (int i = 0; i < vars; ++i) names.push_back("v" + std::to_string(i));
    for (int trial = 0; trial < 200; ++trial) {
      Poly p = random_poly(rng, vars, 6, 4);
      std::string text = to_string(p, names);
      EXPECT_EQ(parse_poly(text, names), p) << text;
    }
  }
}

TEST(PolyArithmetic, RingIdentities) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng, 2, 4, 3), b = random_poly(rng, 2, 4, 3), c = random_poly(rng, 2, 4, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - a).is_zero(), true);
    std::vector<Rational> pt{Rational(2, 3), Rational(-5, 7)};
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
  }
}

TEST(Newton, Cusp) {
  auto np = newton_polygon_local(P("x^2+y^3"));
  ASSERT_EQ(np.vertices, (std::vector<LatticePoint>{{2, 0}, {0, 3}}));
  auto segs = np.segments();
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_EQ(segs[0].normal, (Ray{3, 2}));
  EXPECT_EQ(segs[0].value, 6);
}

TEST(Newton, SingleVertex) {
  auto np = newton_polygon_local(P("x*y"));
  EXPECT_EQ(np.vertices, (std::vector<LatticePoint>{{1, 1}}));
  EXPECT_TRUE(np.segments().empty());
}

TEST(Newton, PointOnFace) {
  auto np = newton_polygon_local(P("x^2+x*y+y^2"));
  EXPECT_EQ(np.vertices, (std::vector<LatticePoint>{{2, 0}, {0, 2}}));
  ASSERT_EQ(np.segments().size(), 1u);
  EXPECT_EQ(np.segments()[0].normal, (Ray{1, 1}));
  EXPECT_EQ(np.segments()[0].value, 2);
  EXPECT_EQ(lattice_length(np.segments()[0]), 2);
}

TEST(Newton, RejectsUnits) {
  EXPECT_THROW(newton_polygon_local(P("1 + x")), NonVanishingAtOrigin);
  EXPECT_THROW(newton_polygon_local(P("0")), std::invalid_argument);
}

TEST(Newton, HullContainsSupportProperty) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Poly f = random_poly(rng, 2, 7, 6);
    f.add_term({0, 0}, -f.value_at_origin());
    if (f.is_zero()) continue;
    auto np = newton_polygon_local(f);
    auto supp = support(f);
    for (const auto& v : np.vertices) EXPECT_NE(std::find(supp.begin(), supp.end(), v), supp.end());
    for (const auto& s : np.segments()) {
      EXPECT_EQ(std::gcd(s.normal.a, s.normal.b), 1);
      EXPECT_GT(s.normal.a, 0);
      EXPECT_GT(s.normal.b, 0);
      for (const auto& p : supp) EXPECT_GE(s.normal.a * p.x + s.normal.b * p.y, s.value);
    }
    // every support point lies in the vertex chain plus the positive quadrant
    for (const auto& p : supp) {
      bool dominated = np.vertices.size() == 1 && p.x >= np.vertices[0].x && p.y >= np.vertices[0].y;
      if (np.vertices.size() > 1) {
        dominated = p.x >= np.vertices.back().x && p.y >= np.vertices.front().y;
      }
      EXPECT_TRUE(dominated);
    }
  }
}

TEST(FacePoly, Examples) {
  Poly f = P("x^2+y^3+x^2*y");
  auto np = newton_polygon_local(f);
  EXPECT_EQ(face_poly(f, np.segments()[0]), P("x^2+y^3"));
  Poly g = P("x*y");
  EXPECT_EQ(face_poly(g, newton_polygon_local(g).faces[0]), g);
  Poly h = P("x^2+x*y+y^2");
  EXPECT_EQ(face_poly(h, newton_polygon_local(h).segments()[0]), h);
  EXPECT_THROW(face_poly(g, np.segments()[0]), FaceMismatch);
}

TEST(FacePoly, InclusionExclusionProperty) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Poly f = random_poly(rng, 2, 8, 5);
    f.add_term({0, 0}, -f.value_at_origin());
    if (f.is_zero()) continue;
    auto np = newton_polygon_local(f);
    Poly segs(2), verts(2), interior_vertices(2);
    for (const auto& face : np.faces) (face.is_vertex() ? verts : segs) += face_poly(f, face);
    // terms on the compact boundary: segments count shared vertices twice, lone vertices once
    Poly boundary(2);
    for (const auto& [e, c] : f.terms()) {
      LatticePoint p{long(e[0]), long(e[1])};
      bool on = false;
      for (const auto& s : np.segments()) on = on || s.normal.a * p.x + s.normal.b * p.y == s.value;
      if (np.segments().empty()) on = p == np.vertices[0];
      if (on) boundary.add_term(e, c);
    }
    for (std::size_t i = 1; i + 1 < np.vertices.size(); ++i) {
      LatticePoint v = np.vertices[i];
      interior_vertices.add_term({unsigned(v.x), unsigned(v.y)}, f.coeff({unsigned(v.x), unsigned(v.y)}));
    }
    if (np.segments().empty()) EXPECT_EQ(verts, boundary);
    else EXPECT_EQ(segs - interior_vertices, boundary);
  }
}

TEST(NonDegenerate, Examples) {
  EXPECT_TRUE(is_nondegenerate_curve(P("x^2+y^3")));
  EXPECT_FALSE(is_nondegenerate_curve(P("x^2+2*x*y+y^2")));
  EXPECT_TRUE(is_nondegenerate_curve(P("x^3+y^3")));
  EXPECT_TRUE(is_nondegenerate_curve(P("x*y")));
  EXPECT_FALSE(is_nondegenerate_curve(P("(y-x^2)^2 - x^5")));
  EXPECT_FALSE(is_nondegenerate_curve(P("(y^2 + x^2)^2 + x^5")));
  EXPECT_THROW(is_nondegenerate_curve(P("x + 1")), NonVanishingAtOrigin);
}

TEST(NonDegenerate, AgreesWithFiniteFieldOracle) {
  // Degenerate cases: a rational double root on one face; non-degenerate ones: random
  // coefficients. The oracle is one-sided, so checks are split by direction.
  const std::vector<std::int64_t> primes{101, 103, 107};
  const std::vector<std::int64_t> primes_1mod4{101, 109, 113};
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(1, 9), e(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int a = e(rng), r = c(rng);
    // (y - r x^a)^2 plus higher terms above the face
    Poly f = P("(y - " + std::to_string(r) + "*x^" + std::to_string(a) + ")^2 + x^" + std::to_string(2 * a + 3));
    EXPECT_FALSE(is_nondegenerate_curve(f));
    EXPECT_TRUE(oracle::degenerate_by_primes(f, primes));
  }
  Poly g = P("(y^2 + x^2)^2 + x^5");
  EXPECT_TRUE(oracle::degenerate_by_primes(g, primes_1mod4));
  for (int trial = 0; trial < 60; ++trial) {
    int a = e(rng) + 1, b = e(rng) + 1;
    Poly f = P("x^" + std::to_string(a) + " + " + std::to_string(c(rng)) + "*x^" + std::to_string(a - 1) + "*y^" +
               std::to_string(b) + " + y^" + std::to_string(a * b));
    bool nd = is_nondegenerate_curve(f);
    if (nd) {
      // a critical point on the torus over Q survives reduction mod almost every prime
      EXPECT_FALSE(oracle::degenerate_by_primes(f, primes)) << to_string(f, {"x", "y"});
    } else {
      EXPECT_TRUE(oracle::degenerate_by_primes(f, primes)) << to_string(f, {"x", "y"});
    }
  }
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced_isolated(P("x^2+y^3")));
  EXPECT_FALSE(is_reduced_isolated(P("x^2*y")));
  EXPECT_TRUE(is_reduced_isolated(P("x*y")));
  EXPECT_FALSE(is_reduced_isolated(P("(x^2+y^3)^2")));
  EXPECT_FALSE(is_reduced_isolated(P("(x - y)^2*(x + y)")));
  EXPECT_TRUE(is_reduced_isolated(P("x^2 - y^2")));
}

TEST(Bivariate, GcdAndSquarefree) {
  Poly a = P("x^2 + y^3"), b = P("x - y"), c = P("x*y + 1");
  EXPECT_EQ(gcd(a * b, a * c), gcd(a, a));
  EXPECT_EQ(exact_div(a * b * c, a * c), b);
  auto sq = squarefree_decomposition(a.pow(2) * b);
  ASSERT_EQ(sq.size(), 2u);
  Poly product = Poly::constant(2, Rational(1));
  for (const auto& [g, k] : sq) product *= g.pow(k);
  EXPECT_EQ(gcd(product, a.pow(2) * b), gcd(a.pow(2) * b, a.pow(2) * b));
}

TEST(Factor, RationalRoots) {
  QPoly p = QPoly::linear(Rational(1), Rational(-1, 2)).pow(2) * QPoly::linear(Rational(3), Rational(2)) *
            (QPoly::monomial(Rational(1), 2) + QPoly::constant(Rational(1)));
  auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], (std::pair<Rational, int>{Rational(-2, 3), 1}));
  EXPECT_EQ(roots[1], (std::pair<Rational, int>{Rational(1, 2), 2}));
}

TEST(Factor, IrreducibleFactorsProperty) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    QPoly p = QPoly::constant(Rational(1));
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> c{Rational(coef(rng)), Rational(coef(rng)), Rational(1)};
      p = p * QPoly(c);
    }
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
      QPoly rebuilt = QPoly::constant(Rational(1));
      for (const auto& q : irreducible_factors(part)) {
        rebuilt = rebuilt * to_q(q);
        if (q.degree() >= 2) EXPECT_TRUE(rational_roots(to_q(q)).empty());
      }
      EXPECT_EQ(monic(rebuilt), monic(part));
    }
  }
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational root but splits
  auto f = irreducible_factors(QPoly(std::vector<Rational>{4, 0, 0, 0, 1}));
  EXPECT_EQ(f.size(), 2u);
}
