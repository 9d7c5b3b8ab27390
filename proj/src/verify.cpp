#include "hypdef/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hypdef/convex_model.hpp"
#include "hypdef/cusp_cone.hpp"
#include "hypdef/error.hpp"
#include "hypdef/parallel.hpp"

namespace hypdef {

using json = nlohmann::ordered_json;

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Diverges: return "diverges";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "diverges") return Status::Diverges;
  throw ParseError("unknown status '" + s + "'", 0);
}

HPoint Sampler::point() {
  const double x = uniform(0.0, 1.0), y = uniform(0.0, 1.0);
  const double t = std::exp(uniform(std::log(0.05), std::log(2.0)));
  return HPoint::make(x, y, t);
}

double Sampler::uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

cplx Sampler::complex(double r) {
  const double re = uniform(-r, r);
  return {re, uniform(-r, r)};
}

namespace {

json where(const HPoint& p) { return json{{"x", p.x}, {"y", p.y}, {"t", p.t}}; }

class Check {
 public:
  Check(std::string id, std::optional<double> tol, const VerifyConfig& cfg)
      : id_(std::move(id)), tol_(tol && cfg.tol ? cfg.tol : tol), seed_(cfg.seed) {}

  void add(double err, json at) {
    ++samples_;
    if (std::isnan(err)) err = INFINITY;
    worst_.push_back({err, std::move(at)});
    std::stable_sort(worst_.begin(), worst_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    if (worst_.size() > 3) worst_.pop_back();
    max_ = std::max(max_, err);
  }
  void note(json extra) { notes_.push_back(std::move(extra)); }

  CheckReport finish(std::optional<Status> forced = std::nullopt) const {
    CheckReport r;
    r.check_id = id_;
    r.max_error = max_;
    r.tolerance = tol_;
    r.samples = samples_;
    r.seed = seed_;
    r.status = forced ? *forced : (!tol_ || max_ <= *tol_ ? Status::Pass : Status::Fail);
    for (const auto& [e, at] : worst_) {
      json d = at;
      d["error"] = std::isinf(e) ? json(nullptr) : json(e);
      r.details.push_back(d);
    }
    for (const auto& n : notes_) r.details.push_back(n);
    return r;
  }

 private:
  std::string id_;
  std::optional<double> tol_;
  std::uint64_t seed_;
  int samples_ = 0;
  double max_ = 0.0;
  std::vector<std::pair<double, json>> worst_;
  std::vector<json> notes_;
};

// Per-sample errors evaluated in parallel, then recorded in index order.
void run_samples(Check& c, const std::vector<HPoint>& pts, const std::function<double(std::size_t)>& err) {
  const auto e = evaluate_indexed(pts.size(), err, Exec::Parallel);
  for (std::size_t i = 0; i < pts.size(); ++i) c.add(e[i], where(pts[i]));
}

std::vector<HPoint> draw_points(Sampler& s, int n) {
  std::vector<HPoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back(s.point());
  return pts;
}

Jet random_jet(Sampler& s, int order, bool real) {
  Jet j = Jet::constant(0.0, order);
  for (int i = 0; i < jet_size(order); ++i) j.set_coeff_index(i, real ? cplx(s.uniform(-1.0, 1.0)) : s.complex());
  return j;
}

FiberJets random_fiber(Sampler& s, int order, bool real = false) {
  return {random_jet(s, order, real), random_jet(s, order, real), random_jet(s, order, real)};
}

EForm random_form(Sampler& s, int degree, const HPoint& p, int order) {
  EForm a(degree, p);
  for (int m : masks_of_degree(degree)) {
    const FiberJets f = random_fiber(s, order);
    for (int i = 0; i < 3; ++i) a.coeff(m, i) = f[i];
  }
  return a;
}

double table_distance(const FrameTable& a, const FrameTable& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(a.c[i][j][k] - b.c[i][j][k]));
  return m;
}

double fiber_distance(const FiberElement& a, const FiberElement& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a.a[i] - b.a[i]));
  return m;
}

double form_distance(const EForm& a, const EForm& b) { return (a.truncated(0) - b.truncated(0)).max_abs(); }

const std::vector<std::string> kGeneralFields{"z*conj(z)", "z^2*conj(z) + 2i*z*conj(z)^2",
                                              "z^4*conj(z) - 0.5*conj(z)^2 + z^3"};
const std::vector<std::string> kHolomorphicFields{"z^3", "z^4 + 2*z", "(1+2i)*z^5", "z^2 - 0.25*z^6", "0.5*z^3 - i*z"};

std::vector<BoundaryField> fields_or(const VerifyConfig& cfg, const std::vector<std::string>& fallback) {
  std::vector<BoundaryField> out;
  if (cfg.field) {
    out.push_back(BoundaryField::parse(*cfg.field));
    return out;
  }
  for (const auto& s : fallback) out.push_back(BoundaryField::parse(s));
  return out;
}

BoundaryField holomorphic_field(const VerifyConfig& cfg, const char* fallback) {
  BoundaryField f = BoundaryField::parse(cfg.field ? *cfg.field : fallback);
  if (!f.holomorphic_at(0.0)) throw ConfigError("this suite needs a holomorphic field");
  return f;
}

using Reports = std::vector<CheckReport>;

Reports suite_frame_tables(const VerifyConfig& cfg) {
  Sampler s(cfg.seed);
  const auto pts = draw_points(s, cfg.samples);
  std::vector<KillingField> ks;
  std::vector<EForm> sections;
  for (const auto& p : pts) {
    ks.push_back({s.complex(), s.complex(), s.complex()});
    sections.push_back(random_form(s, 0, p, 2));
  }
  const FrameKillingTables lit = frame_killing_tables();

  Check d("frame-tables.d-table", 1e-10, cfg), pa("frame-tables.partial-table", 1e-10, cfg);
  Check flat("frame-tables.flat-sections", 1e-10, cfg), dd("frame-tables.d-squared", 1e-9, cfg);
  run_samples(d, pts, [&](std::size_t i) { return table_distance(frame_killing_tables_definitional(pts[i]).d, lit.d); });
  run_samples(pa, pts, [&](std::size_t i) {
    return table_distance(frame_killing_tables_definitional(pts[i]).partial, lit.partial);
  });
  run_samples(flat, pts, [&](std::size_t i) { return ext_d(EForm::constant_section(ks[i], pts[i], 1)).max_abs(); });
  run_samples(dd, pts, [&](std::size_t i) { return ext_d(ext_d(sections[i])).max_abs(); });
  return {d.finish(), pa.finish(), flat.finish(), dd.finish()};
}

Reports suite_weitzenbock(const VerifyConfig& cfg) {
  Sampler s(cfg.seed);
  const auto pts = draw_points(s, cfg.samples);
  std::vector<EForm> forms;
  for (const auto& p : pts) forms.push_back(random_form(s, 1, p, 2));
  Check w("weitzenbock.bochner", 1e-9, cfg), mm("weitzenbock.mm-identity", 1e-9, cfg);
  Check cd("weitzenbock.codifferential-routes", 1e-9, cfg);
  run_samples(w, pts, [&](std::size_t i) { return weitzenbock_residual(forms[i]); });
  run_samples(mm, pts, [&](std::size_t i) { return mm_operator(forms[i]).max_abs(); });
  run_samples(cd, pts, [&](std::size_t i) {
    return (codifferential(forms[i]) - codifferential_star(forms[i])).truncated(0).max_abs();
  });
  return {w.finish(), mm.finish(), cd.finish()};
}

Reports suite_real_weitzenbock(const VerifyConfig& cfg) {
  Sampler s(cfg.seed);
  const auto pts = draw_points(s, std::max(1, cfg.samples / 2));
  std::vector<VectorJets> vs;
  for (std::size_t i = 0; i < pts.size(); ++i) vs.push_back(random_fiber(s, 2, true));
  Check c("real-weitzenbock.vector-fields", 1e-9, cfg);
  run_samples(c, pts, [&](std::size_t i) { return real_weitzenbock_residual(vs[i], pts[i]); });
  return {c.finish()};
}

Reports suite_product_formula(const VerifyConfig& cfg) {
  Sampler s(cfg.seed);
  const auto pts = draw_points(s, cfg.samples);
  std::vector<ScalarJet> fs;
  std::vector<EForm> ss;
  for (const auto& p : pts) {
    fs.push_back({p, random_jet(s, 2, false)});
    ss.push_back(random_form(s, 0, p, 2));
  }
  Check c("product-formula.sections", 1e-9, cfg);
  run_samples(c, pts, [&](std::size_t i) { return product_formula_residual(fs[i], ss[i]); });
  return {c.finish()};
}

Reports suite_horosphere(const VerifyConfig& cfg) {
  Sampler s(cfg.seed);
  const auto pts = draw_points(s, cfg.samples);
  const auto general = fields_or(cfg, kGeneralFields);
  std::vector<BoundaryField> holo;
  for (const auto& f : fields_or(cfg, kHolomorphicFields))
    if (f.holomorphic_at(0.0)) holo.push_back(f);

  Check lap("horosphere.laplacian-closed", 1e-9, cfg), harm("horosphere.harmonic", 1e-9, cfg);
  Check ds("horosphere.ds-closed", 1e-9, cfg), cubic("horosphere.ds-norm-cubic", 1e-10, cfg);
  for (const auto& f : general)
    run_samples(lap, pts, [&](std::size_t i) {
      return fiber_distance(laplacian_E(horosphere_section(f, pts[i], 2)).value(0),
                            horosphere_laplacian_closed(f, pts[i]));
    });
  for (const auto& f : holo) {
    run_samples(harm, pts, [&](std::size_t i) { return laplacian_E(horosphere_section(f, pts[i], 2)).max_abs(); });
    run_samples(ds, pts, [&](std::size_t i) {
      return form_distance(ext_d(horosphere_section(f, pts[i], 1)), horosphere_ds_closed(f, pts[i]));
    });
  }
  const BoundaryField z3 = BoundaryField::parse("z^3");
  run_samples(cubic, pts, [&](std::size_t i) {
    const double t = pts[i].t;
    return std::abs(std::sqrt(norm_sq(ext_d(horosphere_section(z3, pts[i], 1)))) - 6.0 * t * t) / (6.0 * t * t);
  });
  return {lap.finish(), harm.finish(), ds.finish(), cubic.finish()};
}

Reports suite_parallel(const VerifyConfig& cfg) {
  Sampler s(cfg.seed);
  std::vector<HPoint> pts;
  std::vector<double> ks;
  for (int i = 0; i < cfg.samples; ++i) {
    pts.push_back(HPoint::make(0.0, 0.0, s.uniform(0.01, 1.0)));
    ks.push_back(s.uniform(-0.9, 3.0));
  }
  Check fixed("parallel.fixed-point", 1e-12, cfg), ident("parallel.identity-at-one", 1e-12, cfg);
  Check chain("parallel.chain-rule", 1e-12, cfg), proj("parallel.projection-derivative", 1e-9, cfg);
  Check corr("parallel.convex-correction", 1e-9, cfg);
  run_samples(fixed, pts, [&](std::size_t i) { return std::abs(parallel_curvature(1.0, pts[i].t) - 1.0); });
  run_samples(ident, pts, [&](std::size_t i) { return std::abs(parallel_curvature(ks[i], 1.0) - ks[i]); });
  run_samples(chain, pts, [&](std::size_t i) {
    const SurfaceGerm g = SurfaceGerm::make(ks[i], cfg.k2);
    const auto Pt = Pi_derivative(g, pts[i].t), P1 = Pi_derivative(g, 1.0);
    const auto pit = pi_t_derivative(g, pts[i].t);
    return std::max(std::abs(Pt[0][0] * pit[0] - P1[0][0]), std::abs(Pt[1][1] * pit[1] - P1[1][1]));
  });

  const SurfaceGerm germ = SurfaceGerm::make(cfg.k1, cfg.k2);
  const QuadricEnd model(germ);
  run_samples(proj, pts, [&](std::size_t i) {
    const double t = pts[i].t;
    const Jet Z = model.projection(pts[i], 1);
    const auto P = Pi_derivative(germ, t);
    double m = 0.0;
    for (int c = 0; c < 3; ++c) {
      const int a = c == 0, b = c == 1, k = c == 2;
      m = std::max(m, std::abs(t * Z.partial(a, b, k).real() - P[0][c]));
      m = std::max(m, std::abs(t * Z.partial(a, b, k).imag() - P[1][c]));
    }
    return m;
  });
  const BoundaryField f = holomorphic_field(cfg, "z^3 + 0.5*z^4");
  run_samples(corr, pts, [&](std::size_t i) {
    const EForm ds = ext_d(model.pulled_back_section(f, pts[i], 1));
    const auto cc = convex_correction(f, germ, pts[i].t);
    const double e = form_distance(ds, horosphere_ds_closed(f, pts[i]) - cc.ds_c);
    return std::max(e, std::abs(trace(ds).real() + cc.div_re_sc));
  });
  return {fixed.finish(), ident.finish(), chain.finish(), proj.finish(), corr.finish()};
}

Reports suite_decay(const VerifyConfig& cfg) {
  const BoundaryField f = holomorphic_field(cfg, "z^3 + 0.5*z^4");
  const SurfaceGerm germ = SurfaceGerm::make(cfg.k1, cfg.k2);
  const std::vector<double> grid{0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005};
  Reports out;
  for (auto q : {DecayQuantity::Ds, DecayQuantity::Laplacian, DecayQuantity::Div, DecayQuantity::DDiv}) {
    Check c(std::string("decay.") + to_string(q), 1.0, cfg);
    const auto rows = decay_probe(q, f, germ, grid);
    const double growth = ratio_growth(rows);
    for (const auto& r : rows) c.add(r.t <= 0.1 ? growth : 0.0, json{{"t", r.t}, {"norm", r.norm}, {"ratio", r.ratio}});
    const double slope = decay_exponent(rows);
    c.note(json{{"decay_exponent", std::isfinite(slope) ? json(slope) : json(nullptr)}});
    out.push_back(c.finish());
  }

  Check l2("decay.l2-end", 1e-6, cfg);
  const double T = 0.5;
  const auto est = l2_end_estimate(BoundaryField::parse("z^3"), SurfaceGerm::horosphere(), T);
  const double exact = 18.0 * T * T;
  l2.add(std::abs(est.value - exact) / exact, json{{"T", T}, {"value", est.value}, {"refinement_delta", est.refinement_delta}});
  out.push_back(l2.finish());

  Check lead("decay.laplacian-leading-constant", std::nullopt, cfg);
  const cplx w{0.3, 0.2};
  const double c = laplacian_leading_constant(BoundaryField::parse("z*conj(z)"), w);
  lead.note(json{{"field", "z*conj(z)"}, {"x", w.real()}, {"y", w.imag()}, {"measured", c}});
  out.push_back(lead.finish());
  return out;
}

Reports suite_cusp(const VerifyConfig& cfg) {
  const CuspTorus torus = CuspTorus::make(cfg.tau);
  const CuspDeformation cd{cfg.b1, cfg.b2};
  Sampler s(cfg.seed);
  const auto pts = draw_points(s, cfg.samples);

  Check norm("cusp.norm", 1e-10, cfg), hodge("cusp.hodge", 1e-10, cfg), sec("cusp.sections", 1e-10, cfg);
  run_samples(norm, pts, [&](std::size_t i) {
    const double c = cusp_norm_sq_closed(cd, pts[i].t);
    return std::abs(norm_sq(cusp_form(cd, pts[i], 0)) - c) / (1.0 + c);
  });
  run_samples(hodge, pts, [&](std::size_t i) {
    const EForm w = cusp_form(cd, pts[i], 1);
    return std::max({ext_d(w).max_abs(), codifferential(w).max_abs(), std::abs(trace(w))});
  });
  run_samples(sec, pts, [&](std::size_t i) {
    const double e1 = form_distance(ext_d(cusp_section(1, pts[i], 1)), cusp_form({1.0, 0.0}, pts[i], 0));
    return std::max(e1, form_distance(ext_d(cusp_section(2, pts[i], 1)), cusp_form({0.0, 1.0}, pts[i], 0)));
  });

  Check aut("cusp.automorphy", 1e-12, cfg);
  {
    const KillingField r1 = automorphy_residual(cusp_field(1), 1.0);
    const KillingField r2 = automorphy_residual(cusp_field(1), torus.tau);
    aut.add(distance(r1, {}), json{{"field", "v1"}, {"generator", "gamma1"}});
    const double e = distance(r2, {r2.p0, 0.0, 0.0}) + std::abs(std::abs(r2.p0) - torus.tau.imag());
    aut.add(e, json{{"field", "v1"}, {"generator", "gamma2"}, {"re", r2.p0.real()}, {"im", r2.p0.imag()}});
  }

  const CuspL2 l2 = cusp_l2_integral(cd, torus);
  Check li("cusp.l2", 1e-6, cfg);
  const bool expect_div = std::abs(cfg.b2) > 0.0;
  const json info{{"value", l2.value}, {"exponent", l2.exponent}, {"diverges", l2.diverges}};
  std::optional<Status> forced;
  if (expect_div) {
    li.add(l2.diverges ? 0.0 : INFINITY, info);
    forced = l2.diverges ? Status::Diverges : Status::Fail;
  } else {
    const double exact = std::norm(cfg.b1) * torus.tau.imag() / 2.0;
    li.add(l2.diverges ? INFINITY : std::abs(l2.value - exact) / std::max(exact, 1e-300), info);
  }
  hodge.add(l2.max_precondition, json{{"nodes", "l2 quadrature"}});

  Check bi("cusp.boundary-identity", 1e-4, cfg);
  {
    const CuspDeformation one{cfg.b1, 0.0};
    const Box box{0.0, 1.0, 0.0, torus.tau.imag(), 1.0, 2.0};
    const auto r = boundary_norm_identity(box, [&](const HPoint& p) { return cusp_form(one, p, 1); }, 24, 1e-8);
    const double exact = std::norm(cfg.b1) * torus.tau.imag() * 0.75 / 2.0;
    const double scale = exact > 0.0 ? exact : 1.0;
    bi.add(std::max(std::abs(r.lhs - r.rhs), std::abs(r.lhs - exact)) / scale,
           json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"exact", exact}});
  }

  Check tr("cusp.trace-derivatives", 1e-8, cfg);
  {
    struct Case {
      int field;
      const char* gen;
      cplx beta, expected;
    };
    const cplx tau = torus.tau;
    for (const Case& c : {Case{2, "gamma1", 1.0, -0.5}, Case{2, "gamma2", tau, -tau * tau / 2.0},
                          Case{1, "gamma1", 1.0, 0.0}, Case{1, "gamma2", tau, 0.0}}) {
      const KillingField r = automorphy_residual(cusp_field(c.field), c.beta);
      const cplx closed = trace_derivative_parabolic(c.beta, r);
      const Mobius g = Mobius::translation(c.beta);
      const cplx path = path_derivative([&](double s) { return flow_matrix(r, s) * g; }, PathKind::Trace);
      tr.add(std::max(std::abs(closed - c.expected), std::abs(path - closed)),
             json{{"field", c.field == 1 ? "v1" : "v2"}, {"generator", c.gen}, {"re", closed.real()}, {"im", closed.imag()}});
    }
  }

  Check te("cusp.teichmuller", 1e-12, cfg);
  {
    std::vector<cplx> taus{torus.tau};
    for (int i = 0; i < 5; ++i) taus.push_back({s.uniform(-0.5, 0.5), s.uniform(0.3, 3.0)});
    for (cplx t : taus) {
      const auto d = teichmuller_derivative(t);
      te.add(std::max(std::abs(d.length - 1.0), std::abs(d.vector - t.imag())), json{{"re", t.real()}, {"im", t.imag()}});
    }
  }
  return {norm.finish(), hodge.finish(), sec.finish(), aut.finish(), li.finish(forced), bi.finish(), tr.finish(), te.finish()};
}

Reports suite_cone(const VerifyConfig& cfg) {
  const ConeTube tube = ConeTube::make(cfg.alpha, cfg.eps, {2.0, 0.5});
  Check curv("cone.curvature", 1e-6, cfg), area("cone.tube-area", 1e-8, cfg), mer("cone.meridian-limit", 1e-9, cfg);
  const int n = std::max(2, cfg.samples);
  std::vector<HPoint> rs;
  for (int i = 0; i < n; ++i) rs.push_back(HPoint::make(0.05 + (3.0 - 0.05) * i / (n - 1), 0.0, 1.0));
  const auto e = evaluate_indexed(rs.size(), [&](std::size_t i) { return cone_curvature_check(rs[i].x); }, Exec::Parallel);
  for (std::size_t i = 0; i < rs.size(); ++i) curv.add(e[i], json{{"r", rs[i].x}});

  const TubeGeometry geo = tube_boundary_geometry(tube);
  const double quad = tube_area_quadrature(tube);
  area.add(std::abs(geo.area - quad) / geo.area, json{{"formula", geo.area}, {"quadrature", quad}});
  if (tube.exceeds_angle_bound()) area.note(json{{"warning", "cone angle exceeds 2 pi"}});

  const double small = 1e-6;
  const TubeGeometry thin = tube_boundary_geometry(ConeTube::make(cfg.alpha, small, tube.longitude));
  mer.add(std::abs(thin.meridian_length / small - cfg.alpha) / cfg.alpha, json{{"eps", small}});
  return {curv.finish(), area.finish(), mer.finish()};
}

Reports suite_repvar(const VerifyConfig& cfg) {
  Sampler s(cfg.seed);
  Check rt("repvar.length-roundtrip", 1e-10, cfg), dim("repvar.dimension", 0.0, cfg), pd("repvar.path-derivatives", 1e-8, cfg);
  for (int i = 0; i < cfg.samples; ++i) {
    const bool elliptic = i % 2 == 1;
    const cplx L = elliptic ? cplx(0.0, s.uniform(0.1, 3.0)) : cplx(s.uniform(0.1, 3.0), s.uniform(-3.0, 3.0));
    const Mobius conj = Mobius::make(s.complex() + 1.5, s.complex(), s.complex(), 1.0);
    const Mobius m = conj * Mobius::make(std::exp(L / 2.0), 0.0, 0.0, std::exp(-L / 2.0)) * conj.inverse();
    const cplx got = complex_length(m);
    const cplx tr = trace_from_length(got);
    const double e = std::max(std::abs(got - L), std::min(std::abs(tr - m.trace()), std::abs(tr + m.trace())));
    rt.add(e, json{{"re", L.real()}, {"im", L.imag()}});
  }

  struct Dim {
    int n, m, t, chi;
    DimensionMode mode;
    int expected;
  };
  const std::vector<Dim> table{{0, 0, 1, 0, DimensionMode::LowerBound, 4}, {1, 0, 0, -1, DimensionMode::Smooth, 4},
                               {0, 0, 0, 0, DimensionMode::Smooth, 0},     {0, 0, 2, -2, DimensionMode::LowerBound, 11},
                               {0, 0, 0, -1, DimensionMode::LowerBound, 6}, {2, 1, 0, -3, DimensionMode::Smooth, 12},
                               {3, 0, 0, 0, DimensionMode::Smooth, 3},     {0, 0, 3, 1, DimensionMode::LowerBound, 3},
                               {1, 2, 0, -2, DimensionMode::Smooth, 9},    {0, 0, 4, -5, DimensionMode::LowerBound, 22}};
  for (const auto& d : table) {
    const int got = expected_dimension(d.n, d.m, d.t, d.chi, d.mode);
    dim.add(std::abs(got - d.expected), json{{"n", d.n}, {"m", d.m}, {"t", d.t}, {"chi", d.chi},
                                             {"mode", d.mode == DimensionMode::Smooth ? "smooth" : "lower_bound"}});
  }

  const double l = 0.8, c = 0.3;
  const cplx dl = path_derivative(
      [&](double t) { return Mobius::make(std::exp((l + c * t) / 2.0), 0.0, 0.0, std::exp(-(l + c * t) / 2.0)); },
      PathKind::Length);
  pd.add(std::abs(dl - c), json{{"path", "loxodromic"}});
  const Mobius fixed = Mobius::make(2.0, 1.0, 1.0, 1.0);
  pd.add(std::abs(path_derivative([&](double) { return fixed; }, PathKind::Trace)), json{{"path", "constant"}});
  return {rt.finish(), dim.finish(), pd.finish()};
}

const std::map<std::string, std::function<Reports(const VerifyConfig&)>>& registry() {
  static const std::map<std::string, std::function<Reports(const VerifyConfig&)>> r{
      {"frame-tables", suite_frame_tables}, {"weitzenbock", suite_weitzenbock},
      {"real-weitzenbock", suite_real_weitzenbock}, {"product-formula", suite_product_formula},
      {"horosphere", suite_horosphere}, {"parallel", suite_parallel}, {"decay", suite_decay},
      {"cusp", suite_cusp}, {"cone", suite_cone}, {"repvar", suite_repvar}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"frame-tables", "weitzenbock", "real-weitzenbock", "product-formula",
                                              "horosphere", "parallel", "decay", "cusp", "cone", "repvar"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& suite, const VerifyConfig& config) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw ConfigError("unknown suite '" + suite + "'");
  if (config.samples < 1) throw ConfigError("samples must be positive");
  auto reports = it->second(config);
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return reports;
}

std::string emit_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json o;
    o["check_id"] = r.check_id;
    o["status"] = to_string(r.status);
    o["max_error"] = std::isfinite(r.max_error) ? json(r.max_error) : json(nullptr);
    o["tolerance"] = r.tolerance ? json(*r.tolerance) : json(nullptr);
    o["samples"] = r.samples;
    o["seed"] = r.seed;
    o["details"] = r.details;
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

std::string emit_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os.precision(3);
  for (const auto& r : reports) {
    std::string st = to_string(r.status);
    for (auto& ch : st) ch = static_cast<char>(std::toupper(ch));
    os << st << "  " << r.check_id << "  max_error=" << std::scientific << r.max_error << "  tol=";
    if (r.tolerance)
      os << *r.tolerance;
    else
      os << "-";
    os << "  samples=" << r.samples << "\n";
  }
  return os.str();
}

std::vector<CheckReport> parse_json(const std::string& text) {
  std::vector<CheckReport> out;
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!arr.is_array()) throw ParseError("report list must be an array", 0);
  for (const auto& o : arr) {
    CheckReport r;
    r.check_id = o.at("check_id").get<std::string>();
    r.status = status_from_string(o.at("status").get<std::string>());
    r.max_error = o.at("max_error").is_null() ? INFINITY : o.at("max_error").get<double>();
    if (!o.at("tolerance").is_null()) r.tolerance = o.at("tolerance").get<double>();
    r.samples = o.at("samples").get<int>();
    r.seed = o.at("seed").get<std::uint64_t>();
    r.details = o.at("details");
    out.push_back(r);
  }
  return out;
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return 1;
  return 0;
}

}  // namespace hypdef
