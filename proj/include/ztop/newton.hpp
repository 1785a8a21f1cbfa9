#pragma once

// Local Newton polygon of a plane-curve germ, face polynomials and the
// Newton non-degeneracy and reducedness tests.

#include "ztop/bivariate.hpp"
#include "ztop/errors.hpp"
#include "ztop/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace ztop {

struct LatticePoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Primitive vector with non-negative entries.
struct Ray {
  long a = 0;
  long b = 0;
  friend bool operator==(const Ray&, const Ray&) = default;
  friend auto operator<=>(const Ray&, const Ray&) = default;
};

inline long det(const Ray& u, const Ray& v) { return u.a * v.b - u.b * v.a; }

/// A compact face: a vertex (first == second) or a segment with its inner normal.
struct NewtonFace {
  LatticePoint first;
  LatticePoint second;
  Ray normal;     // {0,0} for vertex faces
  long value = 0; // min over the support of normal . m; 0 for vertex faces

  bool is_vertex() const noexcept { return first == second; }
  friend bool operator==(const NewtonFace&, const NewtonFace&) = default;
};

struct NewtonPolygon {
  /// Vertices in order of decreasing x (starting on the x-axis side).
  std::vector<LatticePoint> vertices;
  /// Every vertex as a face, followed by the segments in vertex order.
  std::vector<NewtonFace> faces;

  std::vector<NewtonFace> segments() const {
    std::vector<NewtonFace> out;
    for (const auto& f : faces)
      if (!f.is_vertex()) out.push_back(f);
    return out;
  }
};

inline std::vector<LatticePoint> support(const Poly& f) {
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back({static_cast<long>(e[0]), static_cast<long>(e[1])});
  return pts;
}

inline long min_pairing(const Poly& f, const Ray& r) {
  std::optional<long> best;
  for (const auto& p : support(f)) {
    long v = r.a * p.x + r.b * p.y;
    if (!best || v < *best) best = v;
  }
  return best.value_or(0);
}

inline void require_germ(const Poly& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("expected a polynomial in x, y");
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial does not define a germ");
  if (f.value_at_origin() != 0) throw NonVanishingAtOrigin();
}

/// Newton polygon of f at the origin: convex hull of supp(f) + (R>=0)^2.
inline NewtonPolygon newton_polygon_local(const Poly& f) {
  require_germ(f);
  // Staircase: the lowest support point in each column.
  std::map<long, long> lowest;
  for (const auto& p : support(f)) {
    auto [it, inserted] = lowest.try_emplace(p.x, p.y);
    if (!inserted) it->second = std::min(it->second, p.y);
  }
  std::vector<LatticePoint> stair;
  long ymin = std::numeric_limits<long>::max();
  for (const auto& [x, y] : lowest)
    if (y < ymin) {
      stair.push_back({x, y});
      ymin = y;
    }
  // Lower convex chain from the leftmost to the lowest point (x increasing, y decreasing).
  std::vector<LatticePoint> hull;
  for (const auto& p : stair) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      long cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::reverse(hull.begin(), hull.end());

  NewtonPolygon np;
  np.vertices = hull;
  for (const auto& v : hull) np.faces.push_back({v, v, {0, 0}, 0});
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& p = hull[i];      // larger x, smaller y
    const auto& q = hull[i + 1];
    long dx = p.x - q.x, dy = q.y - p.y;
    long g = std::gcd(dx, dy);
    Ray n{dy / g, dx / g};
    np.faces.push_back({p, q, n, n.a * p.x + n.b * p.y});
  }
  return np;
}

/// Lattice length of a segment face (number of primitive steps); 0 for vertices.
inline long lattice_length(const NewtonFace& face) {
  return std::gcd(std::abs(face.first.x - face.second.x), std::abs(face.first.y - face.second.y));
}

/// The part of f supported on the face.
inline Poly face_poly(const Poly& f, const NewtonFace& face) {
  auto np = newton_polygon_local(f);
  if (std::find(np.faces.begin(), np.faces.end(), face) == np.faces.end()) throw FaceMismatch();
  Poly out(2);
  for (const auto& [e, c] : f.terms()) {
    LatticePoint p{static_cast<long>(e[0]), static_cast<long>(e[1])};
    bool on = face.is_vertex() ? p == face.first : face.normal.a * p.x + face.normal.b * p.y == face.value;
    if (on) out.add_term(e, c);
  }
  return out;
}

/// Face polynomial of a segment as a polynomial in one variable: the coefficient of t^k is
/// the coefficient of f at first + k * (primitive step towards second).
inline QPoly dehomogenized_face(const Poly& f, const NewtonFace& face) {
  if (face.is_vertex()) throw std::invalid_argument("vertex faces have no dehomogenization");
  long len = lattice_length(face);
  long sx = (face.second.x - face.first.x) / len, sy = (face.second.y - face.first.y) / len;
  std::vector<Rational> c(len + 1, Rational(0));
  for (long k = 0; k <= len; ++k)
    c[k] = f.coeff({static_cast<unsigned>(face.first.x + k * sx), static_cast<unsigned>(face.first.y + k * sy)});
  return QPoly(std::move(c));
}

/// True iff no compact face polynomial has a critical point on the torus.
inline bool is_nondegenerate_curve(const Poly& f) {
  auto np = newton_polygon_local(f);
  for (const auto& face : np.segments()) {
    QPoly g = dehomogenized_face(f, face);
    QPoly h = gcd(g, g.derivative());
    while (h.degree() > 0 && h.coeff(0) == 0) h = exact_div(h, QPoly::monomial(Rational(1), 1));
    if (h.degree() > 0) return false;
  }
  return true;
}

/// True iff no repeated irreducible factor of f passes through the origin.
inline bool is_reduced_isolated(const Poly& f) {
  require_germ(f);
  return repeated_part(f).value_at_origin() != 0;
}

}  // namespace ztop
