#include "hypdef/deformations.hpp"

#include <algorithm>
#include <cmath>

#include "hypdef/convex_model.hpp"
#include "hypdef/error.hpp"
#include "hypdef/quadrature.hpp"

namespace hypdef {

BoundaryField::BoundaryField(FieldExpr f) : f_(std::move(f)) {
  if (f_.depends_on_t()) throw DomainError("boundary field must not depend on t");
  for (int a = 0; a < 7; ++a) {
    d_[a][0] = a == 0 ? f_ : d_[a - 1][0].dz();
    for (int b = 1; b < 3; ++b) d_[a][b] = d_[a][b - 1].dzbar();
  }
}

const FieldExpr& BoundaryField::derivative(int a, int b) const {
  if (a < 0 || a > 6 || b < 0 || b > 2) throw DomainError("derivative order out of range");
  return d_[a][b];
}

bool BoundaryField::holomorphic_at(cplx w) const {
  const FieldExpr& fb = d_[0][1];
  if (fb.is_zero()) return true;
  const Jet j = fb.jet(HPoint::from_w(w, 1.0));
  const double scale = 1.0 + f_.jet(HPoint::from_w(w, 1.0)).max_abs();
  return j.max_abs() <= 1e-12 * scale;
}

KillingField canonical_lift_boundary(const BoundaryField& f, cplx w) {
  const cplx f0 = f.value(0, 0, w), f1 = f.value(1, 0, w), f2 = f.value(2, 0, w);
  return {f0 - f1 * w + 0.5 * f2 * w * w, f1 - f2 * w, 0.5 * f2};
}

namespace {

const CVec3 kEminusR{1.0, -I, 0.0};  // E1 - R2
const CVec3 kEplusR{1.0, I, 0.0};    // E1 + R2

}  // namespace

EForm horosphere_section(const BoundaryField& f, const HPoint& p, int order) {
  const Jet f0 = f.derivative(0, 0).jet(p, order);
  const Jet f1 = f.derivative(1, 0).jet(p, order);
  const Jet f2 = f.derivative(2, 0).jet(p, order);
  const Jet t = Jet::variable(2, p.t, order);
  const Jet over_t = f0 / t;
  const Jet half = t * f2 * 0.5;
  return EForm::section(p, {over_t - half, -I * (over_t + half), f1});
}

FiberElement horosphere_extend(const BoundaryField& f, const HPoint& p) {
  return horosphere_section(f, p, 0).value(0);
}

FiberElement horosphere_laplacian_closed(const BoundaryField& f, const HPoint& p) {
  const cplx w = p.w();
  const double t = p.t;
  const cplx c1 = -2.0 * t * f.value(1, 1, w);
  const cplx c3 = -2.0 * t * t * f.value(2, 1, w);
  const cplx c2 = 2.0 * t * t * t * f.value(3, 1, w);
  FiberElement out{p, {}};
  for (int i = 0; i < 3; ++i) out.a[i] = c1 * kEminusR[i] + c2 * kEplusR[i];
  out.a[2] += c3;
  return out;
}

EForm horosphere_ds_closed(const BoundaryField& f, const HPoint& p) {
  if (!f.holomorphic_at(p.w())) throw DomainError("closed form for ds needs a holomorphic field");
  const cplx c = -p.t * p.t * f.value(3, 0, p.w()) / 2.0;
  EForm ds(1, p);
  for (int i = 0; i < 3; ++i) {
    ds.coeff(1, i) = Jet::constant(c * kEplusR[i], 0);
    ds.coeff(2, i) = Jet::constant(I * c * kEplusR[i], 0);
    ds.coeff(4, i) = Jet::constant(0.0, 0);
  }
  return ds;
}

double parallel_curvature(double k0, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw DomainError("parallel flow parameter must lie in (0, 1]");
  if (!(k0 > -1.0)) throw DomainError("principal curvature must exceed -1");
  const double den = 1.0 + k0 + t * t * (1.0 - k0);
  if (std::abs(den) < 1e-12) throw SingularFlow("parallel flow is singular");
  return (1.0 + k0 + t * t * (k0 - 1.0)) / den;
}

SurfaceGerm SurfaceGerm::make(double k1, double k2) {
  if (!(k1 > -1.0) || !(k2 > -1.0)) throw DomainError("principal curvatures must exceed -1");
  return {k1, k2};
}

std::array<double, 2> pi_t_derivative(const SurfaceGerm& g, double t) {
  parallel_curvature(g.k1, t);
  parallel_curvature(g.k2, t);
  auto entry = [t](double k) { return (1.0 + k + t * t * (1.0 - k)) / (2.0 * t); };
  return {entry(g.k1), entry(g.k2)};
}

std::array<std::array<double, 3>, 2> Pi_derivative(const SurfaceGerm& g, double t) {
  const double k1 = parallel_curvature(g.k1, t), k2 = parallel_curvature(g.k2, t);
  return {{{(1.0 + k1) * t / 2.0, 0.0, 0.0}, {0.0, (1.0 + k2) * t / 2.0, 0.0}}};
}

ConvexCorrection convex_correction(const BoundaryField& f, const SurfaceGerm& g, double t) {
  if (!f.holomorphic_at(0.0)) throw DomainError("convex correction needs a holomorphic field");
  const double k1 = parallel_curvature(g.k1, t), k2 = parallel_curvature(g.k2, t);
  const cplx f3 = f.value(3, 0, 0.0);
  ConvexCorrection out;
  out.dG3 = {t * f3 / 2.0 * (1.0 - k1), I * t * f3 / 2.0 * (1.0 - k2), 0.0};
  out.div_re_sc = t * t * f3.real() / 4.0 * (k1 - k2);
  const HPoint p = HPoint::make(0.0, 0.0, t);
  out.ds_c = EForm(1, p);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      out.ds_c.coeff(1 << j, i) = Jet::constant(-t / 2.0 * kEplusR[i] * out.dG3[j], 0);
  return out;
}

const char* to_string(DecayQuantity q) {
  switch (q) {
    case DecayQuantity::Ds: return "ds";
    case DecayQuantity::Laplacian: return "laplacian";
    case DecayQuantity::Div: return "div";
    case DecayQuantity::DDiv: return "d_div";
  }
  return "?";
}

DecayQuantity decay_quantity_from_string(std::string_view s) {
  if (s == "ds") return DecayQuantity::Ds;
  if (s == "laplacian") return DecayQuantity::Laplacian;
  if (s == "div") return DecayQuantity::Div;
  if (s == "d_div") return DecayQuantity::DDiv;
  throw DomainError("unknown decay quantity: " + std::string(s));
}

namespace {

double quantity_norm(DecayQuantity q, const EForm& s) {
  switch (q) {
    case DecayQuantity::Ds: return std::sqrt(norm_sq(ext_d(s)));
    case DecayQuantity::Laplacian: return std::sqrt(norm_sq(laplacian_E(s)));
    case DecayQuantity::Div: return std::abs(trace(ext_d(s)).real());
    case DecayQuantity::DDiv: {
      const EForm ds = ext_d(s);
      const Jet div = (ds.coeff(1, 0) + ds.coeff(2, 1) + ds.coeff(4, 2)).real();
      double sum = 0.0;
      for (const Jet& c : dhat_jet(div, s.base())) sum += std::norm(c.value());
      return std::sqrt(sum);
    }
  }
  return 0.0;
}

}  // namespace

std::vector<DecayRow> decay_probe(DecayQuantity q, const BoundaryField& f, const SurfaceGerm& g,
                                  const std::vector<double>& t_grid) {
  const QuadricEnd model(g);
  const int order = (q == DecayQuantity::Ds || q == DecayQuantity::Div) ? 1 : 2;
  std::vector<DecayRow> rows;
  for (double t : t_grid) {
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("decay grid must lie in (0, 1]");
    const EForm s = model.pulled_back_section(f, HPoint::make(0.0, 0.0, t), order);
    const double n = quantity_norm(q, s);
    rows.push_back({t, n, n / (t * t)});
  }
  return rows;
}

double ratio_growth(const std::vector<DecayRow>& rows, double t_ref) {
  if (rows.empty()) return 0.0;
  const auto ref = std::min_element(rows.begin(), rows.end(), [t_ref](const DecayRow& a, const DecayRow& b) {
    return std::abs(a.t - t_ref) < std::abs(b.t - t_ref);
  });
  double m = 0.0;
  for (const auto& r : rows)
    if (r.t <= ref->t) m = std::max(m, r.ratio);
  return m / (10.0 * std::max(ref->ratio, 1e-9));
}

bool ratio_bounded(const std::vector<DecayRow>& rows, double t_ref) { return ratio_growth(rows, t_ref) <= 1.0; }

double decay_exponent(const std::vector<DecayRow>& rows, double t_ref) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (r.t > t_ref * (1.0 + 1e-12) || !(r.norm > 0.0)) continue;
    const double x = std::log(r.t), y = std::log(r.norm);
    sx += x, sy += y, sxx += x * x, sxy += x * y, ++n;
  }
  if (n < 2) return NAN;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double laplacian_leading_constant(const BoundaryField& f, cplx w) {
  const double fzzb = std::abs(f.value(1, 1, w));
  if (fzzb == 0.0) throw DomainError("leading constant needs f_{z zbar} != 0");
  auto c = [&](double t) {
    const HPoint p = HPoint::from_w(w, t);
    return std::sqrt(norm_sq(laplacian_E(horosphere_section(f, p, 2)))) / (t * fzzb);
  };
  const double t = 1e-4;
  return 2.0 * c(t / 2.0) - c(t);
}

L2Estimate l2_end_estimate(const BoundaryField& f, const SurfaceGerm& g, double T, int nodes) {
  if (!(T > 0.0 && T <= 1.0)) throw DomainError("end height must lie in (0, 1]");
  const QuadricEnd model(g);
  auto integrand = [&](double x, double y, double t) {
    const EForm s = model.pulled_back_section(f, HPoint::make(x, y, t), 1);
    return norm_sq(ext_d(s)) / (t * t * t);
  };
  auto integrate = [&](int n) {
    return integrate_box(gauss_legendre(n, -0.5, 0.5), gauss_legendre(n, -0.5, 0.5),
                         gauss_legendre(n, 0.0, T), integrand);
  };
  L2Estimate out;
  out.value = integrate(nodes);
  out.refinement_delta = std::abs(integrate(2 * nodes) - out.value);
  return out;
}

Mobius osculating_mobius(cplx z, cplx f0, cplx f1, cplx f2) {
  if (std::abs(f1) == 0.0) throw DegenerateJet("osculating Mobius map needs f'(z) != 0");
  const cplx c = f2 / (2.0 * f1);
  const cplx lead = f1 - c * f0;
  return Mobius::make(lead, f0 - lead * z, -c, 1.0 + c * z);
}

cplx epstein_foot(const HPoint& p) { return {p.x, std::sqrt(p.y * p.y + p.t * p.t)}; }

HPoint epstein_map(const BoundaryField& f, const HPoint& p) {
  const cplx z = epstein_foot(p);
  const Mobius m = osculating_mobius(z, f.value(0, 0, z), f.value(1, 0, z), f.value(2, 0, z));
  return mobius_act_halfspace(m, p);
}

}  // namespace hypdef
