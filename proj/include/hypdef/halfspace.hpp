#pragma once

#include <array>
#include <complex>

namespace hypdef {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

inline constexpr cplx I{0.0, 1.0};

// Point (x, y, t) of the upper half-space, t > 0.
struct HPoint {
  double x = 0.0;
  double y = 0.0;
  double t = 1.0;

  static HPoint make(double x, double y, double t);
  static HPoint from_w(cplx w, double t) { return make(w.real(), w.imag(), t); }
  cplx w() const { return {x, y}; }
  bool operator==(const HPoint&) const = default;
};

// Point of the sphere at infinity: a finite complex number or the point at infinity.
class BoundaryPoint {
 public:
  static BoundaryPoint finite(cplx z) { return BoundaryPoint(false, z); }
  static BoundaryPoint infinity() { return BoundaryPoint(true, {}); }

  bool is_infinity() const { return inf_; }
  cplx value() const;  // throws DomainError at infinity
  bool operator==(const BoundaryPoint& o) const {
    return inf_ == o.inf_ && (inf_ || z_ == o.z_);
  }

 private:
  BoundaryPoint(bool inf, cplx z) : inf_(inf), z_(z) {}
  bool inf_;
  cplx z_;
};

// SL2(C) representative of a PSL2(C) element, normalized to det 1 with a
// deterministic sign (Re tr > 0; ties broken by Im tr > 0, then by the
// largest-modulus entry).
class Mobius {
 public:
  Mobius() = default;
  static Mobius make(cplx a, cplx b, cplx c, cplx d);
  static Mobius identity() { return {}; }
  static Mobius translation(cplx beta) { return make(1.0, beta, 0.0, 1.0); }
  static Mobius dilation(cplx lambda);  // z -> lambda z

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }
  cplx trace() const { return a_ + d_; }
  cplx det() const { return a_ * d_ - b_ * c_; }

  Mobius operator*(const Mobius& o) const;
  Mobius inverse() const;

 private:
  cplx a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

struct Frame {
  std::array<Vec3, 3> e;  // coordinate components of e1, e2, e3
};

Frame frame_at(const HPoint& p);

// Hyperbolic inner product of coordinate vectors at p.
double metric_inner(const HPoint& p, const Vec3& u, const Vec3& v);

double hyp_distance(const HPoint& p, const HPoint& q);

BoundaryPoint mobius_act_boundary(const Mobius& m, const BoundaryPoint& z);
cplx mobius_act_boundary(const Mobius& m, cplx z);  // throws if the image is infinity
HPoint mobius_act_halfspace(const Mobius& m, const HPoint& p);

// Coordinate Christoffel symbols gamma[k][i][j] of the metric |dx|^2 / t^2.
using Christoffel = std::array<std::array<Vec3, 3>, 3>;
Christoffel christoffel(const HPoint& p);

// conn[j][i] = frame components of nabla_{e_j} e_i, from the Christoffel symbols.
using FrameConnection = std::array<std::array<Vec3, 3>, 3>;
FrameConnection levi_civita_frame(const HPoint& p);

}  // namespace hypdef
