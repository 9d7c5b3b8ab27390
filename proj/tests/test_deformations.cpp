#include <doctest.h>

#include "hypdef/convex_model.hpp"
#include "hypdef/deformations.hpp"
#include "hypdef/error.hpp"
#include "oracles/finite_difference.hpp"
#include "support.hpp"

using namespace hypdef;
using hyptest::dist;
using hyptest::Rng;

namespace {

const char* const kHolomorphic[] = {"z^3", "z^4 - 2*z", "(1+i)*z^3 + 0.5*z^2", "z^5", "0.3i*z^4 + z^3 - 1"};
const char* const kGeneral[] = {"z*conj(z)", "z^2*conj(z)", "z^3*conj(z)^2 + z^4", "conj(z)^2 + 0.5i*z^3*conj(z)"};

// ds from the flat trivialization: differentiate the Killing field of s(q) along e_j and read it in the fiber at p.
template <class Section>
EForm flat_d(const Section& s, const HPoint& p, double h = 1e-5) {
  const Vec3 x{p.x, p.y, p.t};
  auto k = [&](const Vec3& y) {
    const KillingField f = fiber_to_killing(s(HPoint::make(y[0], y[1], y[2])));
    return Eigen::Vector3cd(f.p0, f.p1, f.p2);
  };
  EForm out(1, p);
  for (int j = 0; j < 3; ++j) {
    const Eigen::Vector3cd dk = p.t * oracle::central(k, x, j, h);
    const CVec3 a = eval_killing({dk[0], dk[1], dk[2]}, p).a;
    for (int i = 0; i < 3; ++i) out.coeff(1 << j, i) = Jet::constant(a[i], 0);
  }
  return out;
}

std::array<std::array<double, 3>, 3> part(const EForm& ds, bool imag) {
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const cplx c = ds.coeff(1 << j, i).value();
      m[i][j] = imag ? c.imag() : c.real();
    }
  return m;
}

}  // namespace

TEST_CASE("boundary fields") {
  CHECK_THROWS_AS(BoundaryField::parse("z*t"), DomainError);
  const BoundaryField f = BoundaryField::parse("z^3*conj(z)");
  CHECK(f.value(3, 1, 2.0) == 6.0);
  CHECK_THROWS_AS(f.derivative(7, 0), DomainError);
  CHECK_THROWS_AS(f.derivative(0, 3), DomainError);
  CHECK(BoundaryField::parse("z^4").holomorphic_at(0.3));
  CHECK_FALSE(f.holomorphic_at(0.3));
}

TEST_CASE("canonical lift on the boundary") {
  const KillingField proj{1.0, 2.0, 3.0 * I};
  const BoundaryField fp = BoundaryField::parse("1 + 2*z + 3i*z^2");
  Rng rng(1);
  for (int n = 0; n < 5; ++n) CHECK(dist(canonical_lift_boundary(fp, rng.complex()), proj) < 1e-14);
  CHECK(dist(canonical_lift_boundary(BoundaryField::parse("conj(z)"), 0.0), KillingField{}) == 0.0);
  CHECK(dist(canonical_lift_boundary(BoundaryField::parse("z^3"), 1.0), KillingField{1.0, -3.0, 3.0}) < 1e-14);
}

TEST_CASE("horosphere extension") {
  const BoundaryField fp = BoundaryField::parse("1 + 2*z + 3i*z^2");
  Rng rng(2);
  for (int n = 0; n < 5; ++n) {
    const HPoint p = rng.point();
    CHECK(dist(horosphere_extend(fp, p).a, eval_killing({1.0, 2.0, 3.0 * I}, p).a) < 1e-12 / p.t);
    // E3 coefficient is constant along vertical lines
    const EForm s = horosphere_section(BoundaryField::parse("z^2*conj(z) + z^4"), p);
    for (int k = 1; k <= kMaxOrder; ++k) CHECK(std::abs(s.coeff(0, 2).partial(0, 0, k)) < 1e-12);
  }
  CHECK(dist(horosphere_extend(BoundaryField::parse("conj(z)"), HPoint::make(0, 0, 1)).a, CVec3{}) == 0.0);
  for (double t : {0.1, 1.0, 2.0})
    CHECK(dist(horosphere_extend(BoundaryField::parse("z^2*conj(z)"), HPoint::make(0, 0, t)).a, CVec3{}) == 0.0);
}

TEST_CASE("laplacian of the horosphere extension") {
  Rng rng(3);
  for (const char* text : kHolomorphic) {
    const BoundaryField f = BoundaryField::parse(text);
    for (int n = 0; n < 5; ++n) {
      const HPoint p = rng.point();
      CHECK(laplacian_E(horosphere_section(f, p)).max_abs() < 1e-9);
      CHECK(dist(horosphere_laplacian_closed(f, p).a, CVec3{}) == 0.0);
    }
  }
  for (double t : {0.2, 1.0, 1.7}) {
    const HPoint p = HPoint::make(0, 0, t);
    const BoundaryField f = BoundaryField::parse("z*conj(z)");
    CHECK(dist(horosphere_laplacian_closed(f, p).a, CVec3{-2.0 * t, 2.0 * I * t, 0.0}) < 1e-15);
    CHECK(dist(laplacian_E(horosphere_section(f, p)).value(0).a, CVec3{-2.0 * t, 2.0 * I * t, 0.0}) < 1e-12);
  }
  for (const char* text : kGeneral) {
    const BoundaryField f = BoundaryField::parse(text);
    for (int n = 0; n < 10; ++n) {
      const HPoint p = rng.point();
      CHECK(dist(laplacian_E(horosphere_section(f, p)).value(0).a, horosphere_laplacian_closed(f, p).a) < 1e-9);
    }
  }
}

TEST_CASE("ds of the horosphere extension") {
  CHECK(horosphere_ds_closed(BoundaryField::parse("z^2"), HPoint::make(0.1, 0.2, 0.5)).max_abs() == 0.0);
  CHECK_THROWS_AS(horosphere_ds_closed(BoundaryField::parse("z*conj(z)"), HPoint::make(0, 0, 1)), DomainError);
  const BoundaryField cube = BoundaryField::parse("z^3");
  for (double t : {0.05, 0.3, 1.0, 2.0}) {
    const HPoint p = HPoint::make(0, 0, t);
    const EForm ds = horosphere_ds_closed(cube, p);
    const cplx c = -3.0 * t * t;
    CHECK(dist(ds.value(1).a, CVec3{c, c * I, 0.0}) < 1e-14);
    CHECK(dist(ds.value(2).a, CVec3{c * I, -c, 0.0}) < 1e-14);
    CHECK(dist(ds.value(4).a, CVec3{}) == 0.0);
    CHECK(std::abs(std::sqrt(norm_sq(ds)) - 6.0 * t * t) < 1e-10 * 6.0 * t * t);
  }
  Rng rng(4);
  for (const char* text : kHolomorphic) {
    const BoundaryField f = BoundaryField::parse(text);
    for (int n = 0; n < 4; ++n) {
      const HPoint p = rng.point();
      const EForm closed = horosphere_ds_closed(f, p);
      CHECK(dist(ext_d(horosphere_section(f, p, 1)), closed) < 1e-9);
      for (bool imag : {false, true}) {
        const auto m = part(closed, imag);
        CHECK(std::abs(m[0][0] + m[1][1] + m[2][2]) < 1e-12);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) CHECK(std::abs(m[i][j] - m[j][i]) < 1e-12);
      }
    }
  }
}

TEST_CASE("d of horosphere extensions matches the flat-trivialization oracle") {
  Rng rng(5);
  for (const char* text : kGeneral) {
    const BoundaryField f = BoundaryField::parse(text);
    for (int n = 0; n < 3; ++n) {
      const HPoint p = HPoint::make(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.3, 1.5));
      const EForm fd = flat_d([&](const HPoint& q) { return horosphere_extend(f, q); }, p);
      const EForm d = ext_d(horosphere_section(f, p, 1));
      CHECK(dist(d, fd) < 1e-6 * (1 + d.max_abs()));
    }
  }
}

TEST_CASE("parallel curvature") {
  for (double t : {0.01, 0.3, 1.0}) CHECK(parallel_curvature(1.0, t) == 1.0);
  for (double k : {-0.5, 0.0, 0.7, 3.0}) CHECK(std::abs(parallel_curvature(k, 1.0) - k) < 1e-15);
  CHECK(parallel_curvature(0.0, 0.5) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK_THROWS_AS(parallel_curvature(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(parallel_curvature(0.5, 1.5), DomainError);
  CHECK_THROWS_AS(parallel_curvature(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(SurfaceGerm::make(-2.0, 0.5), DomainError);
}

TEST_CASE("parallel flow derivatives") {
  const SurfaceGerm h = SurfaceGerm::horosphere();
  for (double t : {0.1, 0.5, 1.0}) {
    const auto pit = pi_t_derivative(h, t);
    const auto P = Pi_derivative(h, t);
    CHECK(std::abs(pit[0] - 1.0 / t) < 1e-14);
    CHECK(std::abs(P[0][0] - t) < 1e-15);
    CHECK(std::abs(P[1][1] - t) < 1e-15);
    CHECK(std::abs(P[0][0] * pit[0] - 1.0) < 1e-14);
    CHECK(P[0][2] == 0.0);
    CHECK(P[1][2] == 0.0);
  }
  const auto one = pi_t_derivative(SurfaceGerm::make(0.3, 2.0), 1.0);
  CHECK(std::abs(one[0] - 1.0) < 1e-15);
  CHECK(std::abs(one[1] - 1.0) < 1e-15);
  Rng rng(6);
  for (int n = 0; n < 20; ++n) {
    const SurfaceGerm g = SurfaceGerm::make(rng.uniform(-0.9, 3.0), rng.uniform(-0.9, 3.0));
    const double t = rng.uniform(0.01, 1.0);
    const auto Pt = Pi_derivative(g, t), P1 = Pi_derivative(g, 1.0);
    const auto pit = pi_t_derivative(g, t);
    CHECK(std::abs(Pt[0][0] * pit[0] - P1[0][0]) < 1e-12);
    CHECK(std::abs(Pt[1][1] * pit[1] - P1[1][1]) < 1e-12);
  }
}

TEST_CASE("parallel flow derivatives match the quadric model") {
  const SurfaceGerm g = SurfaceGerm::make(1.5, 0.7);
  const QuadricEnd model(g);
  for (double t : {0.2, 0.5, 0.9}) {
    const double r = -std::log(t);
    // pi_t: foot (u, v) on S to the point at distance r; orthonormal frames on both sides
    auto along_u = [&](double u) {
      const auto q = model.point(u, 0.0, r);
      return Eigen::Vector3d(q[0], q[1], q[2]);
    };
    auto along_v = [&](double v) {
      const auto q = model.point(0.0, v, r);
      return Eigen::Vector3d(q[0], q[1], q[2]);
    };
    const auto pit = pi_t_derivative(g, t);
    CHECK(std::abs(oracle::derivative(along_u, 0.0).norm() / t - pit[0]) < 1e-8);
    CHECK(std::abs(oracle::derivative(along_v, 0.0).norm() / t - pit[1]) < 1e-8);

    // Pi: boundary projection, differentiated along the frame at (0,0,t)
    auto project = [&](const Vec3& x) {
      const auto s = model.locate(HPoint::make(x[0], x[1], x[2]));
      const auto e = model.endpoint(s[0], s[1]);
      return cplx(e[0], e[1]);
    };
    const auto P = Pi_derivative(g, t);
    for (int c = 0; c < 3; ++c) {
      const cplx d = t * oracle::central(project, {0.0, 0.0, t}, c);
      CHECK(std::abs(d.real() - P[0][c]) < 1e-8);
      CHECK(std::abs(d.imag() - P[1][c]) < 1e-8);
    }
  }
}

TEST_CASE("quadric model locates points and builds projection jets") {
  const QuadricEnd model(SurfaceGerm::make(0.5, 0.25));
  Rng rng(7);
  for (int n = 0; n < 10; ++n) {
    const double u = rng.uniform(-0.3, 0.3), v = rng.uniform(-0.3, 0.3), r = rng.uniform(0.0, 3.0);
    const auto q = model.point(u, v, r);
    const auto s = model.locate(HPoint::make(q[0], q[1], q[2]));
    CHECK(std::abs(s[0] - u) < 1e-9);
    CHECK(std::abs(s[1] - v) < 1e-9);
    CHECK(std::abs(s[2] - r) < 1e-9);
    const HPoint p = HPoint::make(q[0], q[1], q[2]);
    const Jet Z = model.projection(p, 2);
    auto project = [&](const Vec3& x) {
      const auto w = model.locate(HPoint::make(x[0], x[1], x[2]));
      const auto e = model.endpoint(w[0], w[1]);
      return cplx(e[0], e[1]);
    };
    for (int a = 0; a < 3; ++a)
      CHECK(std::abs(Z.partial(a == 0, a == 1, a == 2) - oracle::central(project, {p.x, p.y, p.t}, a)) < 1e-7);
  }
}

TEST_CASE("convex correction") {
  const BoundaryField cube = BoundaryField::parse("z^3");
  for (double t : {0.1, 0.5, 1.0}) {
    const ConvexCorrection h = convex_correction(cube, SurfaceGerm::horosphere(), t);
    CHECK(dist(CVec3{h.dG3[0], h.dG3[1], h.dG3[2]}, CVec3{}) == 0.0);
    CHECK(h.div_re_sc == 0.0);
    CHECK(convex_correction(cube, SurfaceGerm::make(0.4, 0.4), t).div_re_sc == 0.0);
  }
  CHECK_THROWS_AS(convex_correction(BoundaryField::parse("z*conj(z)"), SurfaceGerm::make(0.5, 0.25), 0.5), DomainError);
}

TEST_CASE("convex correction matches differences of the pulled-back section") {
  const BoundaryField f = BoundaryField::parse("z^3");
  const SurfaceGerm g = SurfaceGerm::make(0.5, 0.25);
  const QuadricEnd model(g);
  for (double t : {0.5, 0.2}) {
    const HPoint p = HPoint::make(0, 0, t);
    const EForm fd = flat_d([&](const HPoint& q) { return model.pulled_back_section(f, q, 0).value(0); }, p);
    const EForm expected = horosphere_ds_closed(f, p) - convex_correction(f, g, t).ds_c;
    CHECK(dist(fd, expected) < 1e-4);
    CHECK(dist(ext_d(model.pulled_back_section(f, p, 1)), expected) < 1e-9);
  }
}

TEST_CASE("decay probe") {
  const std::vector<double> grid{0.5, 0.2, 0.1, 0.05, 0.02};
  const auto rows = decay_probe(DecayQuantity::Ds, BoundaryField::parse("z^3"), SurfaceGerm::horosphere(), grid);
  REQUIRE(rows.size() == grid.size());
  for (const auto& r : rows) CHECK(std::abs(r.ratio - 6.0) < 1e-9);
  CHECK(ratio_bounded(rows));

  for (DecayQuantity q : {DecayQuantity::Ds, DecayQuantity::Laplacian, DecayQuantity::Div, DecayQuantity::DDiv}) {
    for (const auto& r : decay_probe(q, BoundaryField::parse("1 + z - 0.5i*z^2"), SurfaceGerm::make(0.5, 0.25), grid))
      CHECK(r.norm < 1e-9);
    CHECK(ratio_bounded(decay_probe(q, BoundaryField::parse("z^3"), SurfaceGerm::make(0.5, 0.25), grid)));
    CHECK(decay_quantity_from_string(to_string(q)) == q);
  }
  CHECK_THROWS_AS(decay_quantity_from_string("curl"), DomainError);
  CHECK_THROWS_AS(decay_probe(DecayQuantity::Ds, BoundaryField::parse("z^3"), SurfaceGerm::horosphere(), {1.5}), DomainError);
}

TEST_CASE("ratio growth rejects a ratio that blows up") {
  std::vector<DecayRow> slow, fast;
  for (double t : {0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005}) {
    slow.push_back({t, t, 1.0 / t});
    fast.push_back({t, t * t * t * t, t * t});
  }
  CHECK_FALSE(ratio_bounded(slow));
  CHECK(ratio_bounded(fast));
  CHECK(decay_exponent(fast) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(decay_exponent(slow) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decay exponents of the pulled-back section") {
  const std::vector<double> grid{0.1, 0.05, 0.02, 0.01, 0.005};
  const BoundaryField f = BoundaryField::parse("z^3");
  const SurfaceGerm g = SurfaceGerm::make(0.5, 0.25);
  CHECK(decay_exponent(decay_probe(DecayQuantity::Ds, f, g, grid)) == doctest::Approx(2.0).epsilon(1e-2));
  CHECK(decay_exponent(decay_probe(DecayQuantity::Div, f, g, grid)) == doctest::Approx(4.0).epsilon(1e-2));
}

TEST_CASE("L2 estimate on the end") {
  const BoundaryField cube = BoundaryField::parse("z^3");
  const SurfaceGerm h = SurfaceGerm::horosphere();
  CHECK(l2_end_estimate(BoundaryField::parse("1 + z^2"), h, 0.5).value < 1e-20);
  const L2Estimate e = l2_end_estimate(cube, h, 0.5);
  CHECK(std::abs(e.value - 18.0 * 0.25) < 1e-9);
  CHECK(e.refinement_delta < 1e-6);
  double prev = 0.0, prev_gap = INFINITY;
  for (double T : {0.0625, 0.125, 0.25, 0.5, 1.0}) {
    const double v = l2_end_estimate(cube, h, T).value;
    CHECK(v > prev);
    prev = v;
  }
  for (double T : {1.0, 0.5, 0.25, 0.125}) {
    const double gap = l2_end_estimate(cube, h, T).value - l2_end_estimate(cube, h, T / 2).value;
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  const L2Estimate convex = l2_end_estimate(cube, SurfaceGerm::make(1.5, 0.7), 0.25);
  CHECK(convex.value > 0.0);
  CHECK(convex.refinement_delta < 1e-6 * convex.value);
}

TEST_CASE("leading constant of the laplacian norm") {
  const double c = laplacian_leading_constant(BoundaryField::parse("z*conj(z)"), 0.0);
  CHECK(std::abs(c - 2.0 * std::sqrt(2.0)) < 1e-6);
  CHECK(std::abs(laplacian_leading_constant(BoundaryField::parse("z*conj(z) + z^2*conj(z)"), cplx(0.3, 0.2)) -
                 2.0 * std::sqrt(2.0)) < 1e-6);
  CHECK_THROWS_AS(laplacian_leading_constant(BoundaryField::parse("z^3"), 0.0), DomainError);
}

TEST_CASE("osculating mobius") {
  Rng rng(8);
  for (int n = 0; n < 20; ++n) {
    const Mobius m = rng.mobius();
    const cplx z = rng.complex(0.5);
    const cplx den = m.c() * z + m.d();
    if (std::abs(den) < 0.2) continue;
    const cplx f0 = (m.a() * z + m.b()) / den, f1 = 1.0 / (den * den), f2 = -2.0 * m.c() / (den * den * den);
    const Mobius o = osculating_mobius(z, f0, f1, f2);
    CHECK(std::abs(o.a() - m.a()) + std::abs(o.b() - m.b()) + std::abs(o.c() - m.c()) + std::abs(o.d() - m.d()) < 1e-12 * (1 + std::abs(m.a()) + std::abs(m.b())));

    const cplx g0 = rng.complex(), g1 = rng.complex() + 1.5, g2 = rng.complex();
    const Mobius q = osculating_mobius(z, g0, g1, g2);
    auto act = [&](double s) { return mobius_act_boundary(q, z + s); };
    CHECK(std::abs(act(0.0) - g0) < 1e-12);
    CHECK(std::abs(oracle::derivative(act, 0.0) - g1) < 1e-8);
    CHECK(std::abs(oracle::second_derivative(act, 0.0, 1e-4) - g2) < 1e-5);
  }
  const Mobius id = osculating_mobius(0.0, 0.0, 1.0, 0.0);
  CHECK(std::abs(id.a() - 1.0) + std::abs(id.b()) + std::abs(id.c()) + std::abs(id.d() - 1.0) < 1e-15);
  CHECK_THROWS_AS(osculating_mobius(0.0, 1.0, 0.0, 1.0), DegenerateJet);
}

TEST_CASE("epstein map") {
  Rng rng(9);
  const BoundaryField id = BoundaryField::parse("z");
  const BoundaryField affine = BoundaryField::parse("(2+i)*z + 0.5");
  const Mobius m = Mobius::make(2.0 + I, 0.5, 0.0, 1.0);
  for (int n = 0; n < 20; ++n) {
    const HPoint p = HPoint::make(rng.uniform(-1, 1), rng.uniform(0.0, 1.0), rng.uniform(0.1, 2.0));
    const HPoint q = epstein_map(id, p);
    CHECK(std::abs(q.x - p.x) + std::abs(q.y - p.y) + std::abs(q.t - p.t) < 1e-12);
    const HPoint a = epstein_map(affine, p), b = mobius_act_halfspace(m, p);
    CHECK(std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.t - b.t) < 1e-12);

    // the circle through p and the foot, in the plane x = const, meets y = 0 at a right angle
    const cplx z = epstein_foot(p);
    CHECK(z.real() == p.x);
    const double yz = z.imag();
    if (std::abs(yz - p.y) < 1e-6) continue;
    const double c = (yz * yz - p.y * p.y - p.t * p.t) / (2.0 * (yz - p.y));
    const double r = std::abs(yz - c);
    const double top = std::sqrt(r * r - c * c);
    CHECK(std::atan2(std::abs(c), top) < 1e-8);
  }
}
