#include "hypdef/killing.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hypdef/error.hpp"
#include "hypdef/jet.hpp"

namespace hypdef {

double distance(const KillingField& a, const KillingField& b) {
  return std::max({std::abs(a.p0 - b.p0), std::abs(a.p1 - b.p1), std::abs(a.p2 - b.p2)});
}

KillingField bracket(const KillingField& p, const KillingField& q) {
  // (p0 + p1 z + p2 z^2)(q1 + 2 q2 z) - (q0 + q1 z + q2 z^2)(p1 + 2 p2 z)
  return {p.p0 * q.p1 - q.p0 * p.p1, 2.0 * (p.p0 * q.p2 - q.p0 * p.p2), p.p1 * q.p2 - q.p1 * p.p2};
}

KillingField ad(const KillingField& x, const KillingField& y) { return bracket(y, x); }

Mat2 to_matrix(const KillingField& k) {
  return Mat2{{{k.p1 / 2.0, k.p0}, {-k.p2, -k.p1 / 2.0}}};
}

KillingField from_matrix(const Mat2& x) {
  return {x.m[0][1], x.m[0][0] - x.m[1][1], -x.m[1][0]};
}

KillingField adjoint_action(const Mobius& m, const KillingField& k) {
  const cplx a = m.a(), b = m.b(), c = m.c(), d = m.d();
  return {a * a * k.p0 - a * b * k.p1 + b * b * k.p2,
          -2.0 * a * c * k.p0 + (a * d + b * c) * k.p1 - 2.0 * b * d * k.p2,
          c * c * k.p0 - c * d * k.p1 + d * d * k.p2};
}

namespace {

void require_same(const HPoint& a, const HPoint& b) {
  if (!(a == b)) throw BasepointMismatch("fiber elements at different base points");
}

}  // namespace

FiberElement FiberElement::operator+(const FiberElement& o) const {
  require_same(base, o.base);
  return {base, {a[0] + o.a[0], a[1] + o.a[1], a[2] + o.a[2]}};
}

FiberElement FiberElement::operator-(const FiberElement& o) const {
  require_same(base, o.base);
  return {base, {a[0] - o.a[0], a[1] - o.a[1], a[2] - o.a[2]}};
}

FiberElement FiberElement::operator*(cplx s) const { return {base, {a[0] * s, a[1] * s, a[2] * s}}; }

FiberElement eval_killing(const KillingField& k, const HPoint& p) {
  const cplx w = p.w();
  const double t = p.t;
  const cplx val = k(w), dz = k.dz(w), dzz = k.dzz();
  return {p, {val / t - t * dzz / 2.0, -I * (val / t + t * dzz / 2.0), dz}};
}

FiberElement curl_fiber(const FiberElement& v) { return v * I; }

KillingField fiber_to_killing(const FiberElement& v) {
  // p(w) = t (a1 + i a2) / 2, p''(w) = (i a2 - a1) / t, p'(w) = a3; re-expand around 0.
  const cplx w = v.base.w();
  const double t = v.base.t;
  const cplx val = t * (v.a[0] + I * v.a[1]) / 2.0;
  const cplx d1 = v.a[2];
  const cplx d2 = (I * v.a[1] - v.a[0]) / t;
  const cplx p2 = d2 / 2.0;
  const cplx p1 = d1 - 2.0 * p2 * w;
  const cplx p0 = val - p1 * w - p2 * w * w;
  return {p0, p1, p2};
}

KillingField frame_killing(int i, const HPoint& p) {
  FiberElement e{p, {}};
  e.a[i] = 1.0;
  return fiber_to_killing(e);
}

double fiber_inner(const FiberElement& u, const FiberElement& v) {
  require_same(u.base, v.base);
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += (u.a[i] * std::conj(v.a[i])).real();
  return s;
}

double inner_product(const KillingField& v, const KillingField& w, const HPoint& x) {
  return fiber_inner(eval_killing(v, x), eval_killing(w, x));
}

namespace {

std::array<Jet, 3> killing_vector_jets(const KillingField& k, const HPoint& p, int order) {
  const Jet x = Jet::variable(0, p.x, order);
  const Jet y = Jet::variable(1, p.y, order);
  const Jet t = Jet::variable(2, p.t, order);
  const Jet z = x + I * y;
  const Jet pz = k.p0 + z * (k.p1 + z * k.p2);
  const Jet zdot = pz - t * t * std::conj(k.dzz()) / 2.0;
  const Jet tdot = t * (k.p1 + 2.0 * k.p2 * z).real();
  return {zdot.real(), zdot.imag(), tdot};
}

}  // namespace

Vec3 killing_vector(const KillingField& k, const HPoint& p) {
  const auto v = killing_vector_jets(k, p, 0);
  return {v[0].value().real(), v[1].value().real(), v[2].value().real()};
}

Vec3 killing_curl(const KillingField& k, const HPoint& p) {
  const auto coords = killing_vector_jets(k, p, 1);
  const Jet inv_t = reciprocal(Jet::variable(2, p.t, 1));
  std::array<Jet, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = coords[i] * inv_t;
  const FrameConnection conn = levi_civita_frame(p);
  double grad[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double g = (frame_derivative(v[i], p, j)).value().real();
      for (int m = 0; m < 3; ++m) g += v[m].value().real() * conn[j][m][i];
      grad[i][j] = g;
    }
  // skew(grad) X = X x c
  const double a01 = (grad[0][1] - grad[1][0]) / 2.0;
  const double a02 = (grad[0][2] - grad[2][0]) / 2.0;
  const double a12 = (grad[1][2] - grad[2][1]) / 2.0;
  return {a12, -a02, a01};
}

double inner_product_definitional(const KillingField& v, const KillingField& w, const HPoint& x) {
  const Vec3 vv = killing_vector(v, x), wv = killing_vector(w, x);
  const Vec3 vc = killing_curl(v, x), wc = killing_curl(w, x);
  return metric_inner(x, vv, wv) + (vc[0] * wc[0] + vc[1] * wc[1] + vc[2] * wc[2]);
}

Lift canonical_lift_point(const Vec3& value, const Vec3& curl, const HPoint& p) {
  // Real-linear map (Re p0, Im p0, Re p1, Im p1, Re p2, Im p2) -> (value, curl).
  Eigen::Matrix<double, 6, 6> a;
  for (int col = 0; col < 6; ++col) {
    KillingField k;
    cplx unit = (col % 2 == 0) ? cplx(1.0) : I;
    (col / 2 == 0 ? k.p0 : col / 2 == 1 ? k.p1 : k.p2) = unit;
    const FiberElement f = eval_killing(k, p);
    const Vec3 val = f.value(), crl = f.curl();
    for (int r = 0; r < 3; ++r) {
      a(r, col) = val[r];
      a(r + 3, col) = crl[r];
    }
  }
  Eigen::Matrix<double, 6, 1> rhs;
  rhs << value[0], value[1], value[2], curl[0], curl[1], curl[2];
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Eigen::Matrix<double, 6, 1> sol = svd.solve(rhs);
  Lift out;
  out.field = {cplx(sol[0], sol[1]), cplx(sol[2], sol[3]), cplx(sol[4], sol[5])};
  out.condition = s[0] / s[5];
  return out;
}

}  // namespace hypdef
