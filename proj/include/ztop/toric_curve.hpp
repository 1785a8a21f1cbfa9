#pragma once

// Toric embedded resolution of a Newton non-degenerate plane-curve germ:
// the dual fan of the local Newton polygon, subdivided until every cone is
// unimodular. Ray a = (a1, a2) gives a divisor with N = min over supp f of
// a.m and nu = a1 + a2.

#include "ztop/bivariate.hpp"
#include "ztop/curve_data.hpp"
#include "ztop/errors.hpp"
#include "ztop/factor.hpp"
#include "ztop/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ztop {

struct Fan2D {
  std::vector<FanRay> rays;                  // angle order, from (1,0) to (0,1)
  std::vector<LatticePoint> polygon_vertices; // vertices the N values are taken over
};

inline std::int64_t min_pairing(const std::vector<LatticePoint>& vertices, long a, long b) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& v : vertices) best = std::min<std::int64_t>(best, a * v.x + b * v.y);
  return best;
}

inline FanRay make_ray(const std::vector<LatticePoint>& vertices, long a, long b, bool inserted) {
  return {a, b, min_pairing(vertices, a, b), a + b, inserted};
}

/// Rays (1,0), the inner normals of the compact segments, and (0,1), in angle order.
inline Fan2D dual_fan(const NewtonPolygon& np) {
  Fan2D fan;
  fan.polygon_vertices = np.vertices;
  fan.rays.push_back(make_ray(np.vertices, 1, 0, false));
  std::vector<Ray> normals;
  for (const auto& s : np.segments()) normals.push_back(s.normal);
  // det(u, v) > 0 means u comes first.
  std::sort(normals.begin(), normals.end(), [](const Ray& u, const Ray& v) { return det(u, v) > 0; });
  for (const auto& n : normals) fan.rays.push_back(make_ray(np.vertices, n.a, n.b, false));
  fan.rays.push_back(make_ray(np.vertices, 0, 1, false));
  return fan;
}

/// Inserts rays until consecutive rays have determinant 1.
inline Fan2D unimodular_subdivide(const Fan2D& fan) {
  Fan2D out;
  out.polygon_vertices = fan.polygon_vertices;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    out.rays.push_back(fan.rays[i]);
    if (i + 1 == fan.rays.size()) break;
    FanRay a = fan.rays[i];
    const FanRay& b = fan.rays[i + 1];
    for (long d = det({a.a, a.b}, {b.a, b.b}); d > 1;) {
      // c = (b + k a) / d is the lattice point next to a; det(a, c) = 1 and det(c, b) = k.
      long k = 1;
      while (((b.a + k * a.a) % d) != 0 || ((b.b + k * a.b) % d) != 0) ++k;
      FanRay c = make_ray(out.polygon_vertices, (b.a + k * a.a) / d, (b.b + k * a.b) / d, true);
      // N is linear inside one cone of the dual fan.
      if (c.N * d != b.N + k * a.N) throw std::logic_error("N is not additive inside a cone of the dual fan");
      out.rays.push_back(c);
      a = c;
      d = k;
    }
  }
  for (std::size_t i = 0; i + 1 < out.rays.size(); ++i)
    if (det({out.rays[i].a, out.rays[i].b}, {out.rays[i + 1].a, out.rays[i + 1].b}) != 1)
      throw std::logic_error("subdivision is not unimodular");
  return out;
}

struct ToricOptions {
  bool allow_nonreduced = false;
};

/// Resolution data read off the unimodular subdivision of the dual fan.
inline CurveResolution toric_resolution_data(const Poly& f, const ToricOptions& opts = {}) {
  require_germ(f);
  if (!is_nondegenerate_curve(f)) throw Degenerate();
  CurveResolution res;
  res.reduced = is_reduced_isolated(f);
  if (!res.reduced && !opts.allow_nonreduced) throw NotReduced();

  NewtonPolygon np = newton_polygon_local(f);
  Fan2D fan = unimodular_subdivide(dual_fan(np));
  res.fan = fan.rays;
  res.data.ambient_dim = 2;

  auto add = [&](std::int64_t N, std::int64_t nu, ComponentKind kind, int degree) {
    int id = static_cast<int>(res.data.components.size()) + 1;
    res.data.components.push_back({id, N, nu, true});
    res.kinds.push_back(kind);
    res.orbit_degrees.push_back(degree);
    return id;
  };

  // Component per ray (0 when the ray's divisor is not part of the total transform).
  std::vector<int> ray_component(fan.rays.size(), 0);
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& r = fan.rays[i];
    bool axis = i == 0 || i + 1 == fan.rays.size();
    if (!axis) ray_component[i] = add(r.N, r.sigma, ComponentKind::exceptional, 1);
    else if (r.N >= 1) ray_component[i] = add(r.N, 1, ComponentKind::axis, 1);
  }

  std::vector<Incidence> incidences;
  for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i) {
    std::vector<int> ids;
    for (std::size_t j : {i, i + 1})
      if (ray_component[j]) ids.push_back(ray_component[j]);
    std::sort(ids.begin(), ids.end());
    // With no interior ray the only fixed point is the origin itself.
    bool only_axes = fan.rays.size() == 2;
    if (ids.size() == 2 || (only_axes && ids.size() == 1)) incidences.push_back({ids, 1});
  }

  // Branches: orbits of non-zero roots of each segment's face polynomial.
  for (const auto& face : np.segments()) {
    std::size_t idx = 0;
    while (!(fan.rays[idx].a == face.normal.a && fan.rays[idx].b == face.normal.b)) ++idx;
    QPoly g = dehomogenized_face(f, face);
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
      for (const auto& q : irreducible_factors(part)) {
        if (q.coeff(0) == 0) continue;  // t = 0 is not on the torus
        int branch = add(mult, 1, ComponentKind::strict, q.degree());
        incidences.push_back({{ray_component[idx], branch}, q.degree()});
      }
    }
  }
  assemble_strata(res, incidences);
  res.data.validate();
  return res;
}

}  // namespace ztop
