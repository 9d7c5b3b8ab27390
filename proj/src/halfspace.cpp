#include "hypdef/halfspace.hpp"

#include <cmath>

#include "hypdef/error.hpp"

namespace hypdef {

HPoint HPoint::make(double x, double y, double t) {
  if (!(t > 0.0) || !std::isfinite(x) || !std::isfinite(y) || !std::isfinite(t))
    throw DomainError("HPoint requires finite coordinates and t > 0");
  return HPoint{x, y, t};
}

cplx BoundaryPoint::value() const {
  if (inf_) throw DomainError("boundary point is infinity");
  return z_;
}

namespace {

bool positive_branch(cplx z) {
  if (z.real() != 0.0) return z.real() > 0.0;
  return z.imag() >= 0.0;
}

}  // namespace

Mobius Mobius::make(cplx a, cplx b, cplx c, cplx d) {
  cplx det = a * d - b * c;
  if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det)))
    throw DomainError("Mobius matrix is singular");
  cplx s = std::sqrt(det);
  Mobius m;
  m.a_ = a / s;
  m.b_ = b / s;
  m.c_ = c / s;
  m.d_ = d / s;

  const double scale = std::abs(m.a_) + std::abs(m.b_) + std::abs(m.c_) + std::abs(m.d_);
  cplx tr = m.trace();
  bool keep;
  if (std::abs(tr.real()) > 1e-14 * scale) {
    keep = tr.real() > 0.0;
  } else if (std::abs(tr) > 1e-14 * scale) {
    keep = tr.imag() > 0.0;
  } else {
    const cplx entries[4] = {m.a_, m.b_, m.c_, m.d_};
    int best = 0;
    for (int k = 1; k < 4; ++k)
      if (std::abs(entries[k]) > std::abs(entries[best]) * (1.0 + 1e-14)) best = k;
    keep = positive_branch(entries[best]);
  }
  if (!keep) {
    m.a_ = -m.a_;
    m.b_ = -m.b_;
    m.c_ = -m.c_;
    m.d_ = -m.d_;
  }
  return m;
}

Mobius Mobius::dilation(cplx lambda) {
  cplx s = std::sqrt(lambda);
  return make(s, 0.0, 0.0, 1.0 / s);
}

Mobius Mobius::operator*(const Mobius& o) const {
  return make(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
              c_ * o.b_ + d_ * o.d_);
}

Mobius Mobius::inverse() const { return make(d_, -b_, -c_, a_); }

Frame frame_at(const HPoint& p) {
  Frame f{};
  for (int i = 0; i < 3; ++i) f.e[i][i] = p.t;
  return f;
}

double metric_inner(const HPoint& p, const Vec3& u, const Vec3& v) {
  return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) / (p.t * p.t);
}

double hyp_distance(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x, dy = p.y - q.y, dt = p.t - q.t;
  const double euclid = std::sqrt(dx * dx + dy * dy + dt * dt);
  return 2.0 * std::asinh(euclid / (2.0 * std::sqrt(p.t * q.t)));
}

BoundaryPoint mobius_act_boundary(const Mobius& m, const BoundaryPoint& z) {
  if (z.is_infinity()) {
    if (m.c() == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(m.a() / m.c());
  }
  cplx den = m.c() * z.value() + m.d();
  if (den == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint::finite((m.a() * z.value() + m.b()) / den);
}

cplx mobius_act_boundary(const Mobius& m, cplx z) {
  return mobius_act_boundary(m, BoundaryPoint::finite(z)).value();
}

HPoint mobius_act_halfspace(const Mobius& m, const HPoint& p) {
  const cplx z = p.w();
  const cplx czd = m.c() * z + m.d();
  const double t2 = p.t * p.t;
  const double den = std::norm(czd) + std::norm(m.c()) * t2;
  const cplx num = (m.a() * z + m.b()) * std::conj(czd) + m.a() * std::conj(m.c()) * t2;
  return HPoint::from_w(num / den, p.t / den);
}

Christoffel christoffel(const HPoint& p) {
  Christoffel g{};
  const double inv = 1.0 / p.t;
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        g[k][i][j] = -inv * (delta(i, k) * delta(j, 2) + delta(j, k) * delta(i, 2) -
                             delta(i, j) * delta(k, 2));
  return g;
}

FrameConnection levi_civita_frame(const HPoint& p) {
  const Christoffel g = christoffel(p);
  FrameConnection conn{};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        conn[j][i][k] = (j == 2 && i == k ? 1.0 : 0.0) + p.t * g[k][j][i];
  return conn;
}

}  // namespace hypdef
