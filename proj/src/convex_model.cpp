#include "hypdef/convex_model.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hypdef/error.hpp"

namespace hypdef {

namespace {

Eigen::Matrix3d jacobian(const std::array<Jet, 3>& p) {
  Eigen::Matrix3d J;
  for (int r = 0; r < 3; ++r) {
    J(r, 0) = p[r].coeff(1, 0, 0).real();
    J(r, 1) = p[r].coeff(0, 1, 0).real();
    J(r, 2) = p[r].coeff(0, 0, 1).real();
  }
  return J;
}

}  // namespace

std::array<double, 3> QuadricEnd::locate(const HPoint& q) const {
  Eigen::Vector3d s(q.x, q.y, -std::log(q.t));
  const Eigen::Vector3d target(q.x, q.y, q.t);
  for (int it = 0; it < 60; ++it) {
    const auto p = point(Jet::variable(0, s[0], 1), Jet::variable(1, s[1], 1), Jet::variable(2, s[2], 1));
    const Eigen::Vector3d val(p[0].value().real(), p[1].value().real(), p[2].value().real());
    const Eigen::Vector3d res = val - target;
    if (res.norm() < 1e-15 * (1.0 + target.norm())) break;
    const Eigen::Matrix3d J = jacobian(p);
    const Eigen::Vector3d step = J.fullPivLu().solve(res);
    if (!step.allFinite()) throw SingularFlow("normal coordinates are singular at the query point");
    s -= step;
    if (step.norm() < 1e-16 * (1.0 + s.norm())) break;
  }
  const auto chk = point(s[0], s[1], s[2]);
  const double err = std::hypot(chk[0] - q.x, chk[1] - q.y, chk[2] - q.t);
  if (!(err < 1e-10 * (1.0 + std::abs(q.t)))) throw SingularFlow("could not locate point in normal coordinates");
  return {s[0], s[1], s[2]};
}

namespace {

// (U, V, R) as jets in (x, y, t) inverting the normal coordinates around q.
std::array<Jet, 3> inverse_jets(const QuadricEnd& m, const HPoint& q, int order) {
  const auto s0 = m.locate(q);
  const auto p1 = m.point(Jet::variable(0, s0[0], 1), Jet::variable(1, s0[1], 1), Jet::variable(2, s0[2], 1));
  const Eigen::Matrix3d Jinv = jacobian(p1).inverse();
  const std::array<Jet, 3> X{Jet::variable(0, q.x, order), Jet::variable(1, q.y, order),
                             Jet::variable(2, q.t, order)};
  std::array<Jet, 3> S{Jet::constant(s0[0], order), Jet::constant(s0[1], order), Jet::constant(s0[2], order)};
  for (int it = 0; it < order + 1; ++it) {
    const auto P = m.point(S[0], S[1], S[2]);
    std::array<Jet, 3> res{P[0] - X[0], P[1] - X[1], P[2] - X[2]};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) S[r] -= res[c] * Jinv(r, c);
  }
  return S;
}

}  // namespace

Jet QuadricEnd::projection(const HPoint& q, int order) const {
  const auto S = inverse_jets(*this, q, order);
  const auto e = endpoint(S[0], S[1]);
  return e[0] + I * e[1];
}

EForm QuadricEnd::pulled_back_section(const BoundaryField& f, const HPoint& q, int order) const {
  if (order < 0 || order > kMaxOrder) throw JetOrderError("jet order out of range");
  const Jet Z = projection(q, order);
  const cplx z0 = Z.value();
  if (!f.holomorphic_at(z0)) throw DomainError("pulled back section needs a holomorphic field");
  std::array<Jet, 3> F;
  for (int n = 0; n < 3; ++n) {
    std::array<cplx, kMaxOrder + 1> series{};
    double fact = 1.0;
    for (int m = 0; m <= order; ++m) {
      if (m > 0) fact *= m;
      series[m] = f.value(n + m, 0, z0) / fact;
    }
    F[n] = apply_series(Z, series);
  }
  const Jet p0 = F[0] - F[1] * Z + 0.5 * F[2] * Z * Z;
  const Jet p1 = F[1] - F[2] * Z;
  const Jet p2 = 0.5 * F[2];
  const Jet w = Jet::variable(0, q.x, order) + I * Jet::variable(1, q.y, order);
  const Jet t = Jet::variable(2, q.t, order);
  const Jet pw = p0 + w * (p1 + w * p2);
  const Jet dpw = p1 + 2.0 * w * p2;
  const Jet over_t = pw / t;
  const Jet half = t * p2;
  return EForm::section(q, {over_t - half, -I * (over_t + half), dpw});
}

}  // namespace hypdef
