#pragma once

#include <functional>
#include <vector>

#include "hypdef/parallel.hpp"

namespace hypdef {

struct GaussRule {
  std::vector<double> x, w;
};

// n-point Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a, double b);

using Integrand3 = std::function<double(double, double, double)>;
using Integrand2 = std::function<double(double, double)>;

double integrate_box(const GaussRule& rx, const GaussRule& ry, const GaussRule& rt,
                     const Integrand3& f, Exec exec = Exec::Parallel);
double integrate_rect(const GaussRule& ru, const GaussRule& rv, const Integrand2& f,
                      Exec exec = Exec::Parallel);

}  // namespace hypdef
