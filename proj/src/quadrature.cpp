#include "hypdef/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>

#include "hypdef/error.hpp"

namespace hypdef {

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw Error("failed to allocate Gauss-Legendre table");
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i)
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &r.x[i], &r.w[i], table.get());
  return r;
}

double integrate_box(const GaussRule& rx, const GaussRule& ry, const GaussRule& rt,
                     const Integrand3& f, Exec exec) {
  const std::size_t nx = rx.x.size(), ny = ry.x.size(), nt = rt.x.size();
  const auto values = evaluate_indexed(
      nx * ny * nt,
      [&](std::size_t idx) {
        const std::size_t i = idx / (ny * nt), j = (idx / nt) % ny, k = idx % nt;
        return rx.w[i] * ry.w[j] * rt.w[k] * f(rx.x[i], ry.x[j], rt.x[k]);
      },
      exec);
  return ordered_sum(values);
}

double integrate_rect(const GaussRule& ru, const GaussRule& rv, const Integrand2& f, Exec exec) {
  const std::size_t nu = ru.x.size(), nv = rv.x.size();
  const auto values = evaluate_indexed(
      nu * nv,
      [&](std::size_t idx) {
        const std::size_t i = idx / nv, j = idx % nv;
        return ru.w[i] * rv.w[j] * f(ru.x[i], rv.x[j]);
      },
      exec);
  return ordered_sum(values);
}

}  // namespace hypdef
