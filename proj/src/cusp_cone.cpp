#include "hypdef/cusp_cone.hpp"

#include <algorithm>
#include <cmath>

#include "hypdef/curvature.hpp"
#include "hypdef/error.hpp"
#include "hypdef/quadrature.hpp"

namespace hypdef {

CuspTorus CuspTorus::make(cplx tau, double cutoff) {
  if (!(tau.imag() > 0.0)) throw DomainError("cusp parameter needs Im tau > 0");
  if (!(cutoff > 0.0)) throw DomainError("cusp cutoff must be positive");
  return {tau, cutoff};
}

const BoundaryField& cusp_field(int i) {
  static const BoundaryField v1 = BoundaryField::parse("0.5*(z - conj(z))");
  static const BoundaryField v2 = BoundaryField::parse("0.16666666666666666*(z^3 - z)");
  if (i == 1) return v1;
  if (i == 2) return v2;
  throw DomainError("cusp basis index must be 1 or 2");
}

EForm cusp_section(int i, const HPoint& p, int order) { return horosphere_section(cusp_field(i), p, order); }

KillingField automorphy_residual(const BoundaryField& v, cplx beta) {
  auto r = [&](cplx z) { return v.value(0, 0, z) - v.value(0, 0, z - beta); };
  const cplx p0 = r(0.0);
  const cplx A = r(1.0) - p0, B = r(I) - p0;
  const cplx p1 = (A + B) / (1.0 + I);
  const KillingField k{p0, p1, A - p1};
  double scale = 1.0;
  for (cplx z : {cplx(0.3, 0.7), cplx(-1.2, 0.4), cplx(2.0, -1.0)}) {
    scale = std::max(scale, std::abs(r(z)));
    if (std::abs(r(z) - k(z)) > 1e-10 * scale)
      throw DomainError("translation residual is not a projective vector field");
  }
  return k;
}

EForm cusp_form(const CuspDeformation& c, const HPoint& p, int order) {
  const Jet t = Jet::variable(2, p.t, order);
  const Jet one = Jet::constant(1.0, order);
  const Jet first = one * (-c.b1 / 2.0);
  const Jet second = (t * t) * (-c.b2 / 2.0);
  const CVec3 em{1.0, -I, 0.0}, ep{1.0, I, 0.0};
  EForm w(1, p);
  for (int i = 0; i < 3; ++i) {
    w.coeff(1, i) = first * em[i] + second * ep[i];
    w.coeff(2, i) = first * (-I * em[i]) + second * (I * ep[i]);
    w.coeff(4, i) = Jet::constant(0.0, order);
  }
  return w;
}

double cusp_norm_sq_closed(const CuspDeformation& c, double t) {
  return std::norm(c.b1) + std::pow(t, 4) * std::norm(c.b2);
}

namespace {

double hodge_violation(const EForm& w) {
  return std::max({ext_d(w).max_abs(), codifferential(w).max_abs(), std::abs(trace(w))});
}

// Partial integral of |omega|^2 over the fundamental domain times [cutoff, T], in s = log t.
double partial_l2(const CuspDeformation& c, const CuspTorus& torus, double T, int nodes) {
  const GaussRule ra = gauss_legendre(nodes, 0.0, 1.0);
  const GaussRule rs = gauss_legendre(nodes, std::log(torus.cutoff), std::log(T));
  return torus.tau.imag() * integrate_box(ra, ra, rs, [&](double a, double b, double s) {
           const double t = std::exp(s);
           const HPoint p = HPoint::make(a + b * torus.tau.real(), b * torus.tau.imag(), t);
           return norm_sq(cusp_form(c, p, 0)) / (t * t);
         });
}

}  // namespace

CuspL2 cusp_l2_integral(const CuspDeformation& c, const CuspTorus& torus, int nodes) {
  if (torus.cutoff != 1.0) throw DomainError("cusp integral expects cutoff 1");
  CuspL2 out;
  const int K = 10;
  const double prev = partial_l2(c, torus, std::ldexp(1.0, K - 1), nodes);
  const double last = partial_l2(c, torus, std::ldexp(1.0, K), nodes);
  out.exponent = (prev > 0.0 && last > 0.0) ? std::log(last / prev) / std::log(2.0) : 0.0;
  out.diverges = out.exponent > 1.0;

  const GaussRule ra = gauss_legendre(nodes, 0.0, 1.0);
  const GaussRule ru = gauss_legendre(nodes, 0.0, 1.0);
  const std::size_t n = static_cast<std::size_t>(nodes);
  auto node = [&](std::size_t idx) {
    const std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
    return HPoint::make(ra.x[i] + ra.x[j] * torus.tau.real(), ra.x[j] * torus.tau.imag(), 1.0 / ru.x[k]);
  };
  out.max_precondition = ordered_max(evaluate_indexed(
      n * n * n, [&](std::size_t idx) { return hodge_violation(cusp_form(c, node(idx), 1)); }, Exec::Parallel));

  if (out.diverges) {
    out.value = last;
    return out;
  }
  // t = 1/u turns dt / t^3 into u du on (0, 1].
  out.value = torus.tau.imag() * integrate_box(ra, ra, ru, [&](double a, double b, double u) {
                const HPoint p = HPoint::make(a + b * torus.tau.real(), b * torus.tau.imag(), 1.0 / u);
                return norm_sq(cusp_form(c, p, 0)) * u;
              });
  return out;
}

Mobius flow_matrix(const KillingField& field, double s) {
  const Mat2 X = to_matrix(field);
  const cplx mu = std::sqrt(X.m[0][0] * X.m[0][0] + X.m[0][1] * X.m[1][0]);
  const cplx ch = std::cosh(s * mu);
  const cplx sh = std::abs(mu) < 1e-300 ? cplx(s) : std::sinh(s * mu) / mu;
  return Mobius::make(ch + sh * X.m[0][0], sh * X.m[0][1], sh * X.m[1][0], ch + sh * X.m[1][1]);
}

cplx trace_derivative_parabolic(cplx beta, const KillingField& field) { return -beta * field.p2; }

TeichmullerDerivative teichmuller_derivative(cplx tau) {
  CuspTorus::make(tau);
  const KillingField r = automorphy_residual(cusp_field(1), tau);
  TeichmullerDerivative out;
  out.vector = r.p0.imag();
  out.length = std::abs(r.p0) / tau.imag();
  return out;
}

std::array<double, 3> cone_metric_eval(double r) {
  if (!(r > 0.0)) throw DomainError("cone radius must be positive");
  return {1.0, std::sinh(r) * std::sinh(r), std::cosh(r) * std::cosh(r)};
}

double cone_curvature_check(double r) {
  if (!(r > 0.0)) throw DomainError("cone radius must be positive");
  const MetricField g = [](const std::array<Jet, 3>& x) {
    const Jet ep = exp(x[0]), em = exp(-x[0]);
    const Jet sh = (ep - em) * 0.5, ch = (ep + em) * 0.5;
    const int o = x[0].order();
    MetricJets m;
    for (auto& row : m) row.fill(Jet::constant(0.0, o));
    m[0][0] = Jet::constant(1.0, o);
    m[1][1] = sh * sh;
    m[2][2] = ch * ch;
    return m;
  };
  const auto k = coordinate_sectional_curvatures(g, {r, 0.0, 0.0});
  double worst = 0.0;
  for (double v : k) worst = std::max(worst, std::abs(v + 1.0));
  return worst;
}

ConeTube ConeTube::make(double alpha, double eps, cplx longitude) {
  if (!(alpha > 0.0)) throw DomainError("cone angle must be positive");
  if (!(eps > 0.0)) throw DomainError("tube radius must be positive");
  if (!(longitude.real() > 0.0)) throw DomainError("core length must have positive real part");
  return {alpha, eps, longitude};
}

TubeGeometry tube_boundary_geometry(const ConeTube& tube) {
  const double m = tube.alpha * std::sinh(tube.eps);
  const double l = tube.longitude.real() * std::cosh(tube.eps);
  return {m, l, m * l};
}

double tube_area_quadrature(const ConeTube& tube, int nodes) {
  const auto g = cone_metric_eval(tube.eps);
  return integrate_rect(gauss_legendre(nodes, 0.0, tube.alpha), gauss_legendre(nodes, 0.0, tube.longitude.real()),
                        [&](double, double) { return std::sqrt(g[1] * g[2]); });
}

cplx complex_length(const Mobius& m) {
  const cplx tr = m.trace();
  if (std::abs(tr * tr - 4.0) < 1e-12) {
    if (std::abs(m.b()) < 1e-14 && std::abs(m.c()) < 1e-14)
      throw DomainError("complex length of the identity is undefined");
    return 0.0;
  }
  cplx lambda = tr / 2.0 + std::sqrt(tr * tr / 4.0 - 1.0);
  if (std::abs(lambda) < 1.0) lambda = 1.0 / lambda;
  cplx L = 2.0 * std::log(lambda);
  const bool elliptic = std::abs(L.real()) < 1e-14;
  if (elliptic) L = {0.0, L.imag()};
  if (L.real() < 0.0 || (elliptic && L.imag() < 0.0)) L = -L;
  while (L.imag() > M_PI) L -= 2.0 * M_PI * I;
  while (L.imag() <= -M_PI) L += 2.0 * M_PI * I;
  if (elliptic && L.imag() < 0.0) L = -L;
  return L;
}

cplx trace_from_length(cplx L) { return 2.0 * std::cosh(L / 2.0); }

namespace {

double entry_distance(const Mobius& a, const Mobius& b, double sign) {
  return std::sqrt(std::norm(a.a() - sign * b.a()) + std::norm(a.b() - sign * b.b()) +
                   std::norm(a.c() - sign * b.c()) + std::norm(a.d() - sign * b.d()));
}

}  // namespace

cplx path_derivative(const MobiusPath& path, PathKind kind, double h) {
  if (!(h > 1e-12)) throw DomainError("finite difference step underflow");
  const Mobius m0 = path(0.0);
  const cplx tr0 = m0.trace();
  if (kind == PathKind::Length && std::abs(tr0 * tr0 - 4.0) < 1e-8)
    throw DomainError("length derivative is undefined at a parabolic element");
  const cplx L0 = kind == PathKind::Length ? complex_length(m0) : cplx{};

  auto sample = [&](double s) -> cplx {
    const Mobius m = path(s);
    const double plus = entry_distance(m, m0, 1.0), minus = entry_distance(m, m0, -1.0);
    if (std::min(plus, minus) > 0.5 * std::max(plus, minus)) throw BranchError("sign branch is ambiguous across samples");
    if (kind == PathKind::Trace) return (plus <= minus ? 1.0 : -1.0) * m.trace();
    const cplx L = complex_length(m);
    if (std::abs(L - L0) > 0.5 * M_PI) throw BranchError("complex length changes branch across samples");
    return L;
  };
  auto central = [&](double s) { return (sample(s) - sample(-s)) / (2.0 * s); };
  return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

int expected_dimension(int n_cone, int m_cusp, int t_tori, int chi, DimensionMode mode) {
  if (n_cone < 0 || m_cusp < 0 || t_tori < 0) throw DomainError("counts must be nonnegative");
  return mode == DimensionMode::LowerBound ? t_tori - 3 * chi + 3 : n_cone + m_cusp - 3 * chi;
}

}  // namespace hypdef
