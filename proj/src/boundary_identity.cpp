#include <algorithm>
#include <cmath>

#include "hypdef/error.hpp"
#include "hypdef/forms.hpp"
#include "hypdef/quadrature.hpp"

namespace hypdef {

namespace {

double violation(const EForm& w) {
  double v = std::max(ext_d(w).max_abs(), codifferential(w).max_abs());
  return std::max(v, std::abs(trace(w)));
}

// Coefficient of omega^I in the real 2-form i w ^ w#.
double boundary_density(const EForm& w, int mask) {
  return pair_wedge(w.truncated(0) * I, sharp(w.truncated(0))).coeff(mask).value().real();
}

}  // namespace

BoundaryIdentity boundary_norm_identity(const Box& box, const FormFamily& omega, int nodes,
                                        double precondition_tol) {
  const GaussRule rx = gauss_legendre(nodes, box.x0, box.x1);
  const GaussRule ry = gauss_legendre(nodes, box.y0, box.y1);
  const GaussRule rt = gauss_legendre(nodes, box.t0, box.t1);
  const std::size_t n = static_cast<std::size_t>(nodes);

  std::vector<double> viol(n * n * n, 0.0);
  const auto volume = evaluate_indexed(
      n * n * n,
      [&](std::size_t idx) {
        const std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        const HPoint p = HPoint::make(rx.x[i], ry.x[j], rt.x[k]);
        const EForm w = omega(p);
        if (w.degree() != 1) throw DomainError("boundary identity needs a 1-form family");
        viol[idx] = violation(w);
        const double t = p.t;
        return rx.w[i] * ry.w[j] * rt.w[k] * norm_sq(w) / (t * t * t);
      },
      Exec::Parallel);

  BoundaryIdentity out;
  out.precondition_violation = ordered_max(viol);
  if (out.precondition_violation > precondition_tol)
    throw PreconditionFailed("form is not closed, co-closed and traceless on the region",
                             out.precondition_violation);
  out.lhs = ordered_sum(volume);

  // Faces with the outward normal first: t = const carries omega^12, x = const
  // omega^23, y = const -omega^13; each orthonormal 2-form is a coordinate
  // 2-form over t^2.
  auto face_t = [&](double t) {
    return integrate_rect(rx, ry, [&](double x, double y) {
      return boundary_density(omega(HPoint::make(x, y, t)), 3) / (t * t);
    });
  };
  auto face_x = [&](double x) {
    return integrate_rect(ry, rt, [&](double y, double t) {
      return boundary_density(omega(HPoint::make(x, y, t)), 6) / (t * t);
    });
  };
  auto face_y = [&](double y) {
    return integrate_rect(rx, rt, [&](double x, double t) {
      return -boundary_density(omega(HPoint::make(x, y, t)), 5) / (t * t);
    });
  };
  const double total = face_t(box.t1) - face_t(box.t0) + face_x(box.x1) - face_x(box.x0) +
                       face_y(box.y1) - face_y(box.y0);
  out.rhs = 0.5 * total;
  return out;
}

}  // namespace hypdef
