#pragma once

#include <array>
#include <functional>
#include <string>

#include "hypdef/deformations.hpp"

namespace hypdef {

// Rank-two cusp: horoball quotient by z -> z + 1 and z -> z + tau.
struct CuspTorus {
  cplx tau{0.0, 1.0};
  double cutoff = 1.0;

  static CuspTorus make(cplx tau, double cutoff = 1.0);
  Mobius gamma1() const { return Mobius::translation(1.0); }
  Mobius gamma2() const { return Mobius::translation(tau); }
  double area_at(double t) const { return tau.imag() / (t * t); }
  double boundary_area() const { return area_at(cutoff); }
};

// omega = b1 ds1 + b2 ds2
struct CuspDeformation {
  cplx b1{}, b2{};
};

// Boundary fields v1 = (z - conj z)/2 and v2 = (z^3 - z)/6.
const BoundaryField& cusp_field(int i);
EForm cusp_section(int i, const HPoint& p, int order = kMaxOrder);
// v - g_* v for a translation g(z) = z + beta; throws DomainError when the
// difference is not a quadratic polynomial field.
KillingField automorphy_residual(const BoundaryField& v, cplx beta);

EForm cusp_form(const CuspDeformation& c, const HPoint& p, int order = 1);
double cusp_norm_sq_closed(const CuspDeformation& c, double t);

struct CuspL2 {
  bool diverges = false;
  double value = 0.0;     // integral over t >= cutoff when convergent
  double exponent = 0.0;  // fitted growth exponent of partial integrals
  double max_precondition = 0.0;  // closed / co-closed / traceless residual at nodes
};

CuspL2 cusp_l2_integral(const CuspDeformation& c, const CuspTorus& torus, int nodes = 24);

// exp(s X) for the sl2 matrix X of the field.
Mobius flow_matrix(const KillingField& field, double s);

// Derivative of tr(exp(s X) g) at s = 0 for g(z) = z + beta.
cplx trace_derivative_parabolic(cplx beta, const KillingField& field);

struct TeichmullerDerivative {
  double vector = 0.0;
  double length = 0.0;  // in the hyperbolic metric of the upper half-plane
};
TeichmullerDerivative teichmuller_derivative(cplx tau);

// Cone metric dr^2 + sinh^2 r dtheta^2 + cosh^2 r dz^2 in (r, theta, z).
std::array<double, 3> cone_metric_eval(double r);
// max |K + 1| over the three coordinate planes.
double cone_curvature_check(double r);

struct ConeTube {
  double alpha = 2.0 * M_PI;
  double eps = 1.0;
  cplx longitude{1.0, 0.0};

  static ConeTube make(double alpha, double eps, cplx longitude);
  bool exceeds_angle_bound() const { return alpha > 2.0 * M_PI; }
};

struct TubeGeometry {
  double meridian_length, longitude_length, area;
};
TubeGeometry tube_boundary_geometry(const ConeTube& tube);
// Area of the tube boundary by quadrature of the induced area form.
double tube_area_quadrature(const ConeTube& tube, int nodes = 16);

// Complex length with Re L >= 0 and Im L in (-pi, pi]; Im L >= 0 when Re L = 0.
cplx complex_length(const Mobius& m);
cplx trace_from_length(cplx L);

enum class PathKind { Trace, Length };
using MobiusPath = std::function<Mobius(double)>;
// Central differences with one Richardson step; samples are sign-aligned to path(0).
cplx path_derivative(const MobiusPath& path, PathKind kind, double h = 1e-3);

enum class DimensionMode { LowerBound, Smooth };
int expected_dimension(int n_cone, int m_cusp, int t_tori, int chi, DimensionMode mode);

}  // namespace hypdef
