#pragma once

#include <array>
#include <cmath>

#include "hypdef/deformations.hpp"

namespace hypdef {

// Convex end modeled on the quadric t = 1 + (a u^2 + b v^2) / 2 through
// (0,0,1), a = k1 - 1, b = k2 - 1, whose hyperbolic principal curvatures at
// that point are k1, k2. Points are parameterized by the foot (u, v) on the
// surface and the distance r travelled along the normal geodesic toward the
// boundary.
class QuadricEnd {
 public:
  explicit QuadricEnd(const SurfaceGerm& g) : a_(g.k1 - 1.0), b_(g.k2 - 1.0) {}

  // Works for double and Jet.
  template <class S>
  std::array<S, 3> point(const S& u, const S& v, const S& r) const;
  template <class S>
  std::array<S, 2> endpoint(const S& u, const S& v) const;  // boundary endpoint (Re, Im)

  // (u, v, r) with point(u, v, r) = q.
  std::array<double, 3> locate(const HPoint& q) const;
  // Boundary projection as a complex jet in (x, y, t) around q.
  Jet projection(const HPoint& q, int order = kMaxOrder) const;
  // Canonical lift at the projection, evaluated at q.
  EForm pulled_back_section(const BoundaryField& f, const HPoint& q, int order = kMaxOrder) const;

 private:
  double a_, b_;
};

template <class S>
std::array<S, 3> QuadricEnd::point(const S& u, const S& v, const S& r) const {
  using std::exp;
  using std::sqrt;
  const S t0 = 1.0 + 0.5 * (a_ * u * u + b_ * v * v);
  const S len = sqrt(1.0 + a_ * a_ * u * u + b_ * b_ * v * v);
  const S nx = a_ * u / len, ny = b_ * v / len;
  const S one_minus_n3 = 1.0 + 1.0 / len;
  const S e2 = exp(-2.0 * r);
  const S ratio2 = (nx * nx + ny * ny) * e2 / (one_minus_n3 * one_minus_n3);
  const S denom = one_minus_n3 * (1.0 + ratio2);
  const S height = 2.0 * t0 * exp(-r) / denom;
  const S shift = t0 / one_minus_n3 - 2.0 * t0 * e2 / (one_minus_n3 * denom);
  return {u + shift * nx, v + shift * ny, height};
}

template <class S>
std::array<S, 2> QuadricEnd::endpoint(const S& u, const S& v) const {
  using std::sqrt;
  const S t0 = 1.0 + 0.5 * (a_ * u * u + b_ * v * v);
  const S len = sqrt(1.0 + a_ * a_ * u * u + b_ * b_ * v * v);
  const S scale = t0 / (len + 1.0);
  return {u + scale * a_ * u, v + scale * b_ * v};
}

}  // namespace hypdef
