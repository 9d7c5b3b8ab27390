#include <doctest.h>

#include "hypdef/error.hpp"
#include "hypdef/halfspace.hpp"
#include "oracles/finite_difference.hpp"
#include "support.hpp"

using namespace hypdef;
using hyptest::Rng;

TEST_CASE("points reject t <= 0 and non-finite coordinates") {
  CHECK_THROWS_AS(HPoint::make(0, 0, 0), DomainError);
  CHECK_THROWS_AS(HPoint::make(0, 0, -1), DomainError);
  CHECK_THROWS_AS(HPoint::make(NAN, 0, 1), DomainError);
  CHECK_NOTHROW(HPoint::make(0, 0, 1e-12));
}

TEST_CASE("frame at a point") {
  const Frame f1 = frame_at(HPoint::make(0, 0, 1));
  CHECK(f1.e[0] == Vec3{1, 0, 0});
  CHECK(f1.e[1] == Vec3{0, 1, 0});
  CHECK(f1.e[2] == Vec3{0, 0, 1});
  CHECK(frame_at(HPoint::make(0, 0, 2)).e[0] == Vec3{2, 0, 0});
}

TEST_CASE("frame is orthonormal at 100 random points") {
  Rng rng(11);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const HPoint p = rng.point();
    const Frame f = frame_at(p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(metric_inner(p, f.e[i], f.e[j]) - (i == j)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("distance examples and symmetry") {
  CHECK(hyp_distance(HPoint::make(0, 0, 1), HPoint::make(0, 0, std::exp(1.0))) == doctest::Approx(1.0).epsilon(1e-14));
  const HPoint p = HPoint::make(0.3, -0.2, 0.7);
  CHECK(hyp_distance(p, p) == 0.0);
  CHECK(hyp_distance(HPoint::make(2, 1, 1), HPoint::make(2, 1, 0.25)) == doctest::Approx(std::log(4.0)));
  Rng rng(3);
  for (int n = 0; n < 20; ++n) {
    const HPoint a = rng.point(), b = rng.point();
    CHECK(hyp_distance(a, b) == hyp_distance(b, a));
  }
}

TEST_CASE("mobius normalization") {
  const Mobius m = Mobius::make(2.0, 4.0, 0.0, 8.0);
  CHECK(std::abs(m.det() - 1.0) < 1e-15);
  CHECK(m.trace().real() > 0.0);
  // z / (1 - 2z): a parabolic whose largest entry is negative
  const Mobius par = Mobius::make(1.0, 0.0, -2.0, 1.0);
  CHECK(std::abs(par.trace() - 2.0) < 1e-15);
  const Mobius neg = Mobius::make(-1.0, 0.0, 2.0, -1.0);
  CHECK(std::abs(neg.trace() - 2.0) < 1e-15);
  CHECK(std::abs(Mobius::translation(I).trace() - 2.0) < 1e-15);
  CHECK_THROWS_AS(Mobius::make(1.0, 2.0, 2.0, 4.0), DomainError);
  Rng rng(5);
  for (int n = 0; n < 20; ++n) {
    const Mobius r = rng.mobius();
    CHECK(std::abs(r.det() - 1.0) < 1e-12);
    const Mobius s = Mobius::make(-r.a(), -r.b(), -r.c(), -r.d());
    CHECK(std::abs(s.a() - r.a()) < 1e-14);
    CHECK(std::abs(s.d() - r.d()) < 1e-14);
  }
}

TEST_CASE("boundary action") {
  const cplx z(0.4, -1.3);
  CHECK(mobius_act_boundary(Mobius::identity(), z) == z);
  const cplx tau(0.3, 1.2);
  CHECK(std::abs(mobius_act_boundary(Mobius::translation(tau), cplx(0.0)) - tau) < 1e-15);

  const Mobius inv = Mobius::make(0.0, 1.0, -1.0, 0.0);  // z -> -1/z
  CHECK(mobius_act_boundary(inv, BoundaryPoint::finite(0.0)).is_infinity());
  CHECK(mobius_act_boundary(inv, BoundaryPoint::infinity()) == BoundaryPoint::finite(0.0));
  CHECK(mobius_act_boundary(Mobius::translation(1.0), BoundaryPoint::infinity()).is_infinity());
  CHECK_THROWS_AS(mobius_act_boundary(inv, cplx(0.0)), DomainError);
  CHECK_THROWS_AS(BoundaryPoint::infinity().value(), DomainError);

  Rng rng(7);
  const Mobius m = rng.mobius();
  for (int n = 0; n < 10; ++n) {
    const cplx w = rng.complex(2.0);
    CHECK(std::abs(mobius_act_boundary(m * m.inverse(), w) - w) < 1e-12);
    CHECK(std::abs(mobius_act_boundary(m.inverse(), mobius_act_boundary(m, w)) - w) < 1e-10 * (1 + std::abs(w)));
  }
}

TEST_CASE("composition matches successive boundary action") {
  Rng rng(8);
  for (int n = 0; n < 20; ++n) {
    const Mobius a = rng.mobius(), b = rng.mobius();
    const cplx z = rng.complex();
    const cplx lhs = mobius_act_boundary(a * b, z);
    const cplx rhs = mobius_act_boundary(a, mobius_act_boundary(b, z));
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(lhs)));
  }
}

TEST_CASE("half-space action examples") {
  const HPoint p = HPoint::make(0, 0, 1);
  CHECK(mobius_act_halfspace(Mobius::translation(1.0), p) == HPoint::make(1, 0, 1));
  const HPoint q = mobius_act_halfspace(Mobius::dilation(2.0), p);
  CHECK(std::abs(q.x) < 1e-15);
  CHECK(std::abs(q.y) < 1e-15);
  CHECK(std::abs(q.t - 2.0) < 1e-15);
  Rng rng(9);
  for (int n = 0; n < 10; ++n) {
    const HPoint r = rng.point();
    CHECK(mobius_act_halfspace(Mobius::identity(), r) == r);
  }
}

TEST_CASE("half-space action is an isometry at 100 random configurations") {
  Rng rng(10);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Mobius m = rng.mobius();
    const HPoint p = rng.point(), q = rng.point();
    const double d = hyp_distance(p, q);
    const double dm = hyp_distance(mobius_act_halfspace(m, p), mobius_act_halfspace(m, q));
    worst = std::max(worst, std::abs(d - dm));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("half-space action approaches the boundary action") {
  Rng rng(12);
  for (int n = 0; n < 20; ++n) {
    const Mobius m = rng.mobius();
    const HPoint p = HPoint::make(rng.uniform(-1, 1), rng.uniform(-1, 1), 1e-6);
    const BoundaryPoint b = mobius_act_boundary(m, BoundaryPoint::finite(p.w()));
    if (b.is_infinity() || std::abs(b.value()) > 1e3) continue;
    CHECK(std::abs(mobius_act_halfspace(m, p).w() - b.value()) < 1e-4);
  }
}

TEST_CASE("christoffel symbols match finite differences of the metric") {
  Rng rng(13);
  for (int n = 0; n < 10; ++n) {
    const HPoint p = rng.point();
    const Vec3 x{p.x, p.y, p.t};
    auto g = [](int i, int j) {
      return [i, j](const Vec3& y) { return i == j ? 1.0 / (y[2] * y[2]) : 0.0; };
    };
    const Christoffel gam = christoffel(p);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          // metric is diagonal, inverse is t^2 delta
          const double v = 0.5 * p.t * p.t *
                           (oracle::central(g(j, k), x, i) + oracle::central(g(i, k), x, j) - oracle::central(g(i, j), x, k));
          CHECK(std::abs(gam[k][i][j] - v) < 1e-6 * (1 + std::abs(v)));
        }
  }
}

TEST_CASE("frame connection is metric") {
  Rng rng(14);
  for (int n = 0; n < 10; ++n) {
    const FrameConnection c = levi_civita_frame(rng.point());
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) CHECK(std::abs(c[j][i][k] + c[j][k][i]) < 1e-14);
  }
}
