#pragma once

#include <array>

#include "hypdef/halfspace.hpp"

namespace hypdef {

// (p0 + p1 z + p2 z^2) d/dz, an element of sl2(C).
struct KillingField {
  cplx p0{}, p1{}, p2{};

  cplx operator()(cplx z) const { return p0 + z * (p1 + z * p2); }
  cplx dz(cplx z) const { return p1 + 2.0 * p2 * z; }
  cplx dzz() const { return 2.0 * p2; }

  KillingField operator+(const KillingField& o) const { return {p0 + o.p0, p1 + o.p1, p2 + o.p2}; }
  KillingField operator-(const KillingField& o) const { return {p0 - o.p0, p1 - o.p1, p2 - o.p2}; }
  KillingField operator*(cplx s) const { return {p0 * s, p1 * s, p2 * s}; }
  friend KillingField operator*(cplx s, const KillingField& k) { return k * s; }
  bool operator==(const KillingField&) const = default;
};

double distance(const KillingField& a, const KillingField& b);

// Lie bracket of vector fields: [p d/dz, q d/dz] = (p q' - q p') d/dz.
KillingField bracket(const KillingField& p, const KillingField& q);

// Adjoint action of the Lie algebra, ad(x) y, matching the matrix commutator
// [X, Y] of the corresponding sl2(C) matrices.
KillingField ad(const KillingField& x, const KillingField& y);

// Traceless matrix whose one-parameter group exp(sX) flows along the field.
struct Mat2 {
  cplx m[2][2];
};
Mat2 to_matrix(const KillingField& k);
KillingField from_matrix(const Mat2& x);

// Push-forward by the Mobius map.
KillingField adjoint_action(const Mobius& m, const KillingField& k);

// Coefficients on the fiber basis (E1, E2, E3) at a base point, with R_i = i E_i.
struct FiberElement {
  HPoint base;
  CVec3 a{};

  FiberElement operator+(const FiberElement& o) const;
  FiberElement operator-(const FiberElement& o) const;
  FiberElement operator*(cplx s) const;
  friend FiberElement operator*(cplx s, const FiberElement& v) { return v * s; }

  Vec3 value() const { return {a[0].real(), a[1].real(), a[2].real()}; }
  Vec3 curl() const { return {-a[0].imag(), -a[1].imag(), -a[2].imag()}; }
};

FiberElement eval_killing(const KillingField& k, const HPoint& p);
FiberElement curl_fiber(const FiberElement& v);
KillingField fiber_to_killing(const FiberElement& v);

// The Killing field whose fiber coefficients at p are the unit vector e_i.
KillingField frame_killing(int i, const HPoint& p);

// Re sum a_i conj(b_i); requires equal base points.
double fiber_inner(const FiberElement& u, const FiberElement& v);
double inner_product(const KillingField& v, const KillingField& w, const HPoint& x);

// Killing vector field of k at p in coordinate components (x, y, t), from the
// flow of the Poincare extension.
Vec3 killing_vector(const KillingField& k, const HPoint& p);
// Curl of that vector field at p in frame components, from its covariant derivative.
Vec3 killing_curl(const KillingField& k, const HPoint& p);
// <v(x), w(x)> + <curl v(x), curl w(x)> in the hyperbolic metric.
double inner_product_definitional(const KillingField& v, const KillingField& w, const HPoint& x);

struct Lift {
  KillingField field;
  double condition = 1.0;
};

// The Killing field with the given value and curl (frame components) at p.
Lift canonical_lift_point(const Vec3& value, const Vec3& curl, const HPoint& p);

}  // namespace hypdef
