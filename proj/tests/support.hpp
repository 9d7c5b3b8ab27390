#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hypdef/forms.hpp"
#include "hypdef/halfspace.hpp"
#include "hypdef/killing.hpp"

namespace hyptest {

using namespace hypdef;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
  cplx complex(double r = 1.0) {
    const double re = uniform(-r, r);
    return {re, uniform(-r, r)};
  }
  // w in the unit square, t log-uniform in [0.05, 2].
  HPoint point() {
    const double x = uniform(0.0, 1.0), y = uniform(0.0, 1.0);
    return HPoint::make(x, y, std::exp(uniform(std::log(0.05), std::log(2.0))));
  }
  KillingField killing(double r = 1.0) { return {complex(r), complex(r), complex(r)}; }
  Mobius mobius() {
    for (;;) {
      const cplx a = complex(), b = complex(), c = complex(), d = complex();
      if (std::abs(a * d - b * c) > 0.2) return Mobius::make(a, b, c, d);
    }
  }
  Jet jet(int order, bool real = false) {
    Jet j = Jet::constant(0.0, order);
    for (int i = 0; i < jet_size(order); ++i) j.set_coeff_index(i, real ? cplx(uniform(-1.0, 1.0)) : complex());
    return j;
  }
  FiberJets fiber(int order, bool real = false) { return {jet(order, real), jet(order, real), jet(order, real)}; }
  EForm form(int degree, const HPoint& p, int order) {
    EForm a(degree, p);
    for (int m : masks_of_degree(degree)) {
      const FiberJets f = fiber(order);
      for (int i = 0; i < 3; ++i) a.coeff(m, i) = f[i];
    }
    return a;
  }

 private:
  std::mt19937_64 g_;
};

inline double dist(const CVec3& a, const CVec3& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double dist(const KillingField& a, const KillingField& b) { return distance(a, b); }

// Largest coefficient difference of two forms of equal degree at the base point.
inline double dist(const EForm& a, const EForm& b) { return (a - b).max_abs(); }

}  // namespace hyptest
