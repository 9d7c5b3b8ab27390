#include "hypdef/curvature.hpp"

#include "hypdef/error.hpp"

namespace hypdef {

std::array<double, 3> coordinate_sectional_curvatures(const MetricField& metric, const Vec3& x) {
  const std::array<Jet, 3> vars{Jet::variable(0, x[0], 2), Jet::variable(1, x[1], 2),
                                Jet::variable(2, x[2], 2)};
  const MetricJets g = metric(vars);

  // Inverse by cofactors.
  MetricJets cof;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      cof[i][j] = g[i1][j1] * g[i2][j2] - g[i1][j2] * g[i2][j1];
    }
  const Jet det = g[0][0] * cof[0][0] + g[0][1] * cof[0][1] + g[0][2] * cof[0][2];
  if (std::abs(det.value()) < 1e-300) throw DomainError("metric is degenerate");
  MetricJets ginv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ginv[i][j] = cof[j][i] / det;

  // dg[m][i][j] = d_m g_ij
  std::array<MetricJets, 3> dg;
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) dg[m][i][j] = g[i][j].derivative(m);

  // gam[l][i][j] = Gamma^l_ij, order 1
  std::array<MetricJets, 3> gam;
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Jet s = Jet::constant(0.0, 1);
        for (int m = 0; m < 3; ++m)
          s += ginv[l][m].truncated(1) * (dg[i][m][j] + dg[j][m][i] - dg[m][i][j]);
        gam[l][i][j] = 0.5 * s;
      }

  // riem(l, i, j, k) = R^l_ijk, the l-component of R(d_j, d_k) d_i
  auto riem = [&](int l, int i, int j, int k) {
    cplx r = gam[l][i][k].derivative(j).value() - gam[l][i][j].derivative(k).value();
    for (int m = 0; m < 3; ++m)
      r += gam[l][j][m].value() * gam[m][i][k].value() - gam[l][k][m].value() * gam[m][i][j].value();
    return r.real();
  };

  const std::array<std::array<int, 2>, 3> planes{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<double, 3> out{};
  for (int p = 0; p < 3; ++p) {
    const int a = planes[p][0], b = planes[p][1];
    double num = 0.0;
    for (int l = 0; l < 3; ++l) num += g[a][l].value().real() * riem(l, b, a, b);
    const double den = g[a][a].value().real() * g[b][b].value().real() -
                       std::norm(g[a][b].value());
    out[p] = num / den;
  }
  return out;
}

}  // namespace hypdef
