#pragma once

#include <array>
#include <vector>

#include "hypdef/field_expr.hpp"
#include "hypdef/forms.hpp"
#include "hypdef/killing.hpp"

namespace hypdef {

// The boundary vector field f(z) d/dz on a chart; f may depend on conj(z) but not on t.
class BoundaryField {
 public:
  explicit BoundaryField(FieldExpr f);
  static BoundaryField parse(std::string_view text) { return BoundaryField(FieldExpr::parse(text)); }

  const FieldExpr& expr() const { return f_; }
  // Wirtinger derivative d^a/dz^a d^b/dzbar^b as an expression.
  const FieldExpr& derivative(int a, int b) const;
  cplx value(int a, int b, cplx w) const { return derivative(a, b).evaluate(w); }
  // f_zbar vanishes identically near w (checked on jets of order 4).
  bool holomorphic_at(cplx w) const;

 private:
  FieldExpr f_;
  std::array<std::array<FieldExpr, 3>, 7> d_;  // d_[a][b] for a <= 6, b <= 2
};

// Quadratic Taylor truncation of f at w, re-expanded in powers of z.
KillingField canonical_lift_boundary(const BoundaryField& f, cplx w);

FiberElement horosphere_extend(const BoundaryField& f, const HPoint& p);
EForm horosphere_section(const BoundaryField& f, const HPoint& p, int order = kMaxOrder);
FiberElement horosphere_laplacian_closed(const BoundaryField& f, const HPoint& p);
// Requires f holomorphic at w; throws DomainError otherwise.
EForm horosphere_ds_closed(const BoundaryField& f, const HPoint& p);

// Principal curvature after flowing a distance -log t from a surface with
// curvature k0 toward the boundary.
double parallel_curvature(double k0, double t);

struct SurfaceGerm {
  double k1 = 1.0, k2 = 1.0;
  static SurfaceGerm make(double k1, double k2);
  static SurfaceGerm horosphere() { return {1.0, 1.0}; }
};

// Derivative of the parallel-flow map S -> S_t at (0,0,1) in orthonormal frames.
std::array<double, 2> pi_t_derivative(const SurfaceGerm& g, double t);
// Derivative of the projection to the boundary at (0,0,t): rows Re, Im; columns e1, e2, e3.
std::array<std::array<double, 3>, 2> Pi_derivative(const SurfaceGerm& g, double t);

struct ConvexCorrection {
  std::array<cplx, 3> dG3{};  // coefficients of omega^1, omega^2, omega^3
  double div_re_sc = 0.0;
  EForm ds_c;                 // value-only 1-form at (0,0,t)
};

ConvexCorrection convex_correction(const BoundaryField& f, const SurfaceGerm& g, double t);

enum class DecayQuantity { Ds, Laplacian, Div, DDiv };
const char* to_string(DecayQuantity q);
DecayQuantity decay_quantity_from_string(std::string_view s);

struct DecayRow {
  double t, norm, ratio;
};

// Norms of the quantity for the section pulled back through the osculating
// quadric model, on the axis (0,0,t).
std::vector<DecayRow> decay_probe(DecayQuantity q, const BoundaryField& f, const SurfaceGerm& g,
                                  const std::vector<double>& t_grid);
// Growth of the ratio toward the boundary: max ratio over rows with t <= t_ref,
// divided by 10 * max(ratio at the row nearest t_ref, 1e-9).
double ratio_growth(const std::vector<DecayRow>& rows, double t_ref = 0.1);
bool ratio_bounded(const std::vector<DecayRow>& rows, double t_ref = 0.1);
// Least-squares slope of log norm against log t over rows with t <= t_ref.
double decay_exponent(const std::vector<DecayRow>& rows, double t_ref = 0.1);

// lim_{t -> 0} |lap s(w,t)| / (t |f_{z zbar}(w)|) for the horosphere extension.
double laplacian_leading_constant(const BoundaryField& f, cplx w);

struct L2Estimate {
  double value = 0.0;
  double refinement_delta = 0.0;  // |I(2n nodes) - I(n nodes)|
};

// Integral of |ds|^2 over [-1/2, 1/2]^2 x (0, T] with volume dx dy dt / t^3.
L2Estimate l2_end_estimate(const BoundaryField& f, const SurfaceGerm& g, double T, int nodes = 16);

// Mobius map with M(z) = f0, M'(z) = f1, M''(z) = f2.
Mobius osculating_mobius(cplx z, cplx f0, cplx f1, cplx f2);
// Endpoint in the upper half-plane of the geodesic through p orthogonal to
// the plane over the real axis.
cplx epstein_foot(const HPoint& p);
HPoint epstein_map(const BoundaryField& f, const HPoint& p);

}  // namespace hypdef
