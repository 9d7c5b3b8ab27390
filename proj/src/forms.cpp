#include "hypdef/forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hypdef/error.hpp"

namespace hypdef {

int mask_degree(int mask) { return std::popcount(static_cast<unsigned>(mask)); }

const std::vector<int>& masks_of_degree(int k) {
  static const std::array<std::vector<int>, 4> table = [] {
    std::array<std::vector<int>, 4> t;
    for (int m = 0; m < 8; ++m) t[mask_degree(m)].push_back(m);
    return t;
  }();
  if (k < 0 || k > 3) throw DomainError("form degree out of range");
  return table[k];
}

int wedge_sign(int i_mask, int j_mask) {
  if (i_mask & j_mask) return 0;
  int swaps = 0;
  for (int j = 0; j < 3; ++j)
    if (j_mask & (1 << j)) swaps += mask_degree(i_mask & ~((2 << j) - 1));
  return swaps % 2 ? -1 : 1;
}

namespace {

constexpr int bit(int j) { return 1 << j; }

// (mask', sign) with dhat(omega^I) = sign * omega^{I'}; sign 0 means zero.
struct CoframeD {
  int mask;
  double sign;
};

CoframeD coframe_d(int mask) {
  switch (mask) {
    case 1: return {5, 1.0};   // d omega^1 = omega^1 ^ omega^3
    case 2: return {6, 1.0};   // d omega^2 = omega^2 ^ omega^3
    case 3: return {7, -2.0};  // d (omega^1 ^ omega^2) = -2 omega^123
    default: return {0, 0.0};
  }
}

int hodge_sign(int mask) { return wedge_sign(mask, kVolumeMask & ~mask); }

void require_same(const HPoint& a, const HPoint& b) {
  if (!(a == b)) throw BasepointMismatch("forms at different base points");
}

}  // namespace

EForm::EForm(int degree, const HPoint& base) : degree_(degree), base_(base) {
  if (degree < 0 || degree > 3) throw DomainError("form degree out of range");
}

EForm EForm::section(const HPoint& base, const FiberJets& a) {
  EForm s(0, base);
  s.c_[0] = a;
  return s;
}

EForm EForm::constant_section(const KillingField& k, const HPoint& base, int order) {
  const Jet x = Jet::variable(0, base.x, order);
  const Jet y = Jet::variable(1, base.y, order);
  const Jet t = Jet::variable(2, base.t, order);
  const Jet z = x + I * y;
  const Jet p = k.p0 + z * (k.p1 + z * k.p2);
  const Jet pz = k.p1 + 2.0 * k.p2 * z;
  const cplx pzz = k.dzz();
  const Jet p_over_t = p / t;
  const Jet half = t * (pzz / 2.0);
  return section(base, {p_over_t - half, -I * (p_over_t + half), pz});
}

FiberElement EForm::value(int mask) const {
  return {base_, {c_[mask][0].value(), c_[mask][1].value(), c_[mask][2].value()}};
}

int EForm::order() const {
  int n = kMaxOrder;
  for (int m : masks_of_degree(degree_))
    for (const Jet& j : c_[m]) n = std::min(n, j.order());
  return n;
}

EForm EForm::truncated(int order) const {
  EForm r = *this;
  for (int m : masks_of_degree(degree_))
    for (Jet& j : r.c_[m]) j = j.truncated(order);
  return r;
}

EForm EForm::conj() const {
  EForm r = *this;
  for (int m : masks_of_degree(degree_))
    for (Jet& j : r.c_[m]) j = j.conj();
  return r;
}

EForm EForm::real_part() const {
  EForm r = *this;
  for (int m : masks_of_degree(degree_))
    for (Jet& j : r.c_[m]) j = j.real();
  return r;
}

EForm EForm::imag_part() const {
  EForm r = *this;
  for (int m : masks_of_degree(degree_))
    for (Jet& j : r.c_[m]) j = j.imag();
  return r;
}

double EForm::max_abs() const {
  double v = 0.0;
  for (int m : masks_of_degree(degree_))
    for (const Jet& j : c_[m]) v = std::max(v, std::abs(j.value()));
  return v;
}

EForm& EForm::operator+=(const EForm& o) {
  require_same(base_, o.base_);
  if (degree_ != o.degree_) throw DomainError("adding forms of different degree");
  for (int m : masks_of_degree(degree_))
    for (int i = 0; i < 3; ++i) c_[m][i] += o.c_[m][i];
  return *this;
}

EForm& EForm::operator-=(const EForm& o) {
  require_same(base_, o.base_);
  if (degree_ != o.degree_) throw DomainError("subtracting forms of different degree");
  for (int m : masks_of_degree(degree_))
    for (int i = 0; i < 3; ++i) c_[m][i] -= o.c_[m][i];
  return *this;
}

EForm& EForm::operator*=(cplx s) {
  for (int m : masks_of_degree(degree_))
    for (Jet& j : c_[m]) j *= s;
  return *this;
}

EForm operator*(const Jet& f, const EForm& a) {
  EForm r = a;
  for (int m : masks_of_degree(a.degree_))
    for (Jet& j : r.c_[m]) j = f * j;
  return r;
}

ScalarForm::ScalarForm(int degree, const HPoint& base) : degree_(degree), base_(base) {
  if (degree < 0 || degree > 3) throw DomainError("form degree out of range");
}

ScalarForm ScalarForm::one_form(const HPoint& base, const VectorJets& v) {
  ScalarForm s(1, base);
  for (int j = 0; j < 3; ++j) s.c_[bit(j)] = v[j];
  return s;
}

double ScalarForm::max_abs() const {
  double v = 0.0;
  for (int m : masks_of_degree(degree_)) v = std::max(v, std::abs(c_[m].value()));
  return v;
}

ScalarForm& ScalarForm::operator+=(const ScalarForm& o) {
  require_same(base_, o.base_);
  if (degree_ != o.degree_) throw DomainError("adding forms of different degree");
  for (int m : masks_of_degree(degree_)) c_[m] += o.c_[m];
  return *this;
}

ScalarForm& ScalarForm::operator-=(const ScalarForm& o) {
  require_same(base_, o.base_);
  if (degree_ != o.degree_) throw DomainError("subtracting forms of different degree");
  for (int m : masks_of_degree(degree_)) c_[m] -= o.c_[m];
  return *this;
}

ScalarForm& ScalarForm::operator*=(cplx s) {
  for (int m : masks_of_degree(degree_)) c_[m] *= s;
  return *this;
}

// ---------------------------------------------------------------- tables

FrameKillingTables frame_killing_tables() {
  const cplx o = 0.0, e = 1.0, r = I;
  FrameKillingTables t;
  // dE1 = E3 w1 + R3 w2 - R2 w3
  t.d.c[0] = {CVec3{o, o, e}, CVec3{o, o, r}, CVec3{o, -r, o}};
  // dE2 = -R3 w1 + E3 w2 + R1 w3
  t.d.c[1] = {CVec3{o, o, -r}, CVec3{o, o, e}, CVec3{r, o, o}};
  // dE3 = -(E1 - R2) w1 - (R1 + E2) w2
  t.d.c[2] = {CVec3{-e, r, o}, CVec3{-r, -e, o}, CVec3{o, o, o}};
  // dE1 = E3 w1 - R3 w2 + R2 w3
  t.partial.c[0] = {CVec3{o, o, e}, CVec3{o, o, -r}, CVec3{o, r, o}};
  // dE2 = R3 w1 + E3 w2 - R1 w3
  t.partial.c[1] = {CVec3{o, o, r}, CVec3{o, o, e}, CVec3{-r, o, o}};
  // dE3 = -(E1 + R2) w1 + (R1 - E2) w2
  t.partial.c[2] = {CVec3{-e, -r, o}, CVec3{r, -e, o}, CVec3{o, o, o}};
  return t;
}

BundleConnection bundle_connection(const HPoint& p) {
  BundleConnection c;
  c.levi_civita = levi_civita_frame(p);
  std::array<KillingField, 3> frame;
  for (int i = 0; i < 3; ++i) frame[i] = frame_killing(i, p);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) c.ad[j][i] = eval_killing(ad(frame[j], frame[i]), p).a;
  return c;
}

FrameKillingTables frame_killing_tables_definitional(const HPoint& p) {
  const BundleConnection c = bundle_connection(p);
  FrameKillingTables t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const cplx lc = c.levi_civita[j][i][k];
        t.d.c[i][j][k] = lc + c.ad[j][i][k];
        t.partial.c[i][j][k] = lc - c.ad[j][i][k];
      }
  return t;
}

// ---------------------------------------------------------------- algebra

EForm wedge_coframe(int j, const EForm& a) {
  if (a.degree() >= 3) throw DomainError("wedge raises degree above 3");
  EForm r(a.degree() + 1, a.base());
  for (int m : masks_of_degree(a.degree())) {
    const int s = wedge_sign(bit(j), m);
    if (!s) continue;
    for (int i = 0; i < 3; ++i) r.coeff(m | bit(j), i) += a.coeff(m, i) * double(s);
  }
  return r;
}

EForm interior(int j, const EForm& a) {
  if (a.degree() == 0) throw DomainError("interior product of a 0-form");
  EForm r(a.degree() - 1, a.base());
  for (int m : masks_of_degree(a.degree())) {
    if (!(m & bit(j))) continue;
    const double s = mask_degree(m & (bit(j) - 1)) % 2 ? -1.0 : 1.0;
    for (int i = 0; i < 3; ++i) r.coeff(m & ~bit(j), i) += a.coeff(m, i) * s;
  }
  return r;
}

EForm wedge(const ScalarForm& s, const EForm& a) {
  require_same(s.base(), a.base());
  const int deg = s.degree() + a.degree();
  if (deg > 3) throw DomainError("wedge raises degree above 3");
  EForm r(deg, a.base());
  for (int ms : masks_of_degree(s.degree()))
    for (int ma : masks_of_degree(a.degree())) {
      const int sg = wedge_sign(ms, ma);
      if (!sg) continue;
      for (int i = 0; i < 3; ++i) r.coeff(ms | ma, i) += s.coeff(ms) * a.coeff(ma, i) * double(sg);
    }
  return r;
}

EForm hodge_star(const EForm& a) {
  EForm r(3 - a.degree(), a.base());
  for (int m : masks_of_degree(a.degree())) {
    const double s = hodge_sign(m);
    for (int i = 0; i < 3; ++i) r.coeff(kVolumeMask & ~m, i) = a.coeff(m, i) * s;
  }
  return r;
}

ScalarForm hodge_star(const ScalarForm& a) {
  ScalarForm r(3 - a.degree(), a.base());
  for (int m : masks_of_degree(a.degree())) r.coeff(kVolumeMask & ~m) = a.coeff(m) * double(hodge_sign(m));
  return r;
}

EDual sharp(const EForm& a) { return {a.conj()}; }

EForm flat(const EDual& a) { return a.form.conj(); }

ScalarForm pair_wedge(const EForm& a, const EDual& b) {
  require_same(a.base(), b.form.base());
  const int deg = a.degree() + b.form.degree();
  if (deg > 3) throw DomainError("wedge raises degree above 3");
  ScalarForm r(deg, a.base());
  for (int ma : masks_of_degree(a.degree()))
    for (int mb : masks_of_degree(b.form.degree())) {
      const int sg = wedge_sign(ma, mb);
      if (!sg) continue;
      Jet sum = Jet::constant(0.0);
      for (int i = 0; i < 3; ++i) sum += a.coeff(ma, i) * b.form.coeff(mb, i);
      r.coeff(ma | mb) += sum.real() * double(sg);
    }
  return r;
}

double norm_sq(const EForm& a) {
  const EForm v = a.truncated(0);
  const ScalarForm top = pair_wedge(v, sharp(hodge_star(v)));
  return top.coeff(kVolumeMask).value().real();
}

cplx trace(const EForm& a) {
  if (a.degree() != 1) throw DomainError("trace is defined on 1-forms");
  return a.coeff(1, 0).value() + a.coeff(2, 1).value() + a.coeff(4, 2).value();
}

// ---------------------------------------------------------------- operators

namespace {

EForm leibniz(const EForm& a, const FrameTable& table) {
  if (a.degree() >= 3) throw DomainError("exterior derivative of a 3-form");
  EForm r(a.degree() + 1, a.base());
  for (int m : masks_of_degree(a.degree())) {
    for (int i = 0; i < 3; ++i) {
      const Jet& f = a.coeff(m, i);
      for (int j = 0; j < 3; ++j) {
        const int s = wedge_sign(bit(j), m);
        if (!s) continue;
        r.coeff(m | bit(j), i) += frame_derivative(f, a.base(), j) * double(s);
        for (int k = 0; k < 3; ++k) {
          const cplx tab = table.c[i][j][k];
          if (tab != 0.0) r.coeff(m | bit(j), k) += f * (tab * double(s));
        }
      }
      const CoframeD dc = coframe_d(m);
      if (dc.sign != 0.0) r.coeff(dc.mask, i) += f * dc.sign;
    }
  }
  return r;
}

}  // namespace

EForm ext_d(const EForm& a) {
  static const FrameKillingTables t = frame_killing_tables();
  return leibniz(a, t.d);
}

EForm partial_d(const EForm& a) {
  static const FrameKillingTables t = frame_killing_tables();
  return leibniz(a, t.partial);
}

EForm nabla(const EForm& a, int j, const BundleConnection& conn) {
  const auto& lc = conn.levi_civita;
  EForm r(a.degree(), a.base());
  for (int m : masks_of_degree(a.degree())) {
    for (int i = 0; i < 3; ++i) {
      const Jet& f = a.coeff(m, i);
      r.coeff(m, i) += frame_derivative(f, a.base(), j);
      for (int n = 0; n < 3; ++n)
        if (lc[j][i][n] != 0.0) r.coeff(m, n) += f * lc[j][i][n];
      // nabla omega^q = -sum_n lc[j][n][q] omega^n, applied to each factor
      int pos = 0;
      for (int q = 0; q < 3; ++q) {
        if (!(m & bit(q))) continue;
        const double sign_out = pos % 2 ? -1.0 : 1.0;
        const int rest = m & ~bit(q);
        for (int n = 0; n < 3; ++n) {
          const double g = -lc[j][n][q];
          if (g == 0.0) continue;
          const int s = wedge_sign(bit(n), rest);
          if (!s) continue;
          r.coeff(rest | bit(n), i) += f * (g * sign_out * s);
        }
        ++pos;
      }
    }
  }
  return r;
}

EForm ad_frame(const EForm& a, int j, const BundleConnection& conn) {
  EForm r(a.degree(), a.base());
  for (int m : masks_of_degree(a.degree()))
    for (int i = 0; i < 3; ++i)
      for (int n = 0; n < 3; ++n) {
        const cplx c = conn.ad[j][i][n];
        if (std::abs(c) > 1e-15) r.coeff(m, n) += a.coeff(m, i) * c;
      }
  return r;
}

EForm D_op(const EForm& a) {
  const BundleConnection c = bundle_connection(a.base());
  EForm r(a.degree() + 1, a.base());
  for (int j = 0; j < 3; ++j) r += wedge_coframe(j, nabla(a, j, c));
  return r;
}

EForm T_op(const EForm& a) {
  const BundleConnection c = bundle_connection(a.base());
  EForm r(a.degree() + 1, a.base());
  for (int j = 0; j < 3; ++j) r += wedge_coframe(j, ad_frame(a, j, c));
  return r;
}

EForm D_adj(const EForm& a) {
  const BundleConnection c = bundle_connection(a.base());
  EForm r(a.degree() - 1, a.base());
  for (int j = 0; j < 3; ++j) r -= interior(j, nabla(a, j, c));
  return r;
}

EForm T_adj(const EForm& a) {
  const BundleConnection c = bundle_connection(a.base());
  EForm r(a.degree() - 1, a.base());
  for (int j = 0; j < 3; ++j) r += interior(j, ad_frame(a, j, c));
  return r;
}

DTSplit dt_split(const EForm& a) { return {D_op(a), T_op(a)}; }

EForm ext_d_covariant(const EForm& a) { return D_op(a) + T_op(a); }

EForm codifferential(const EForm& a) {
  if (a.degree() == 0) throw DomainError("codifferential of a 0-form");
  return D_adj(a) + T_adj(a);
}

EForm codifferential_star(const EForm& a) {
  if (a.degree() == 0) throw DomainError("codifferential of a 0-form");
  EForm r = hodge_star(partial_d(hodge_star(a)));
  return a.degree() % 2 ? r * cplx(-1.0) : r;
}

EForm laplacian_E(const EForm& a) {
  EForm r(a.degree(), a.base());
  if (a.degree() <= 2) r += codifferential(ext_d(a));
  if (a.degree() >= 1) r += ext_d(codifferential(a));
  return r;
}

EForm laplacian_D(const EForm& a) {
  EForm r(a.degree(), a.base());
  if (a.degree() <= 2) r += D_adj(D_op(a));
  if (a.degree() >= 1) r += D_op(D_adj(a));
  return r;
}

EForm H_op(const EForm& a) {
  EForm r(a.degree(), a.base());
  if (a.degree() <= 2) r += T_adj(T_op(a));
  if (a.degree() >= 1) r += T_op(T_adj(a));
  return r;
}

EForm mm_operator(const EForm& a) {
  EForm r(a.degree(), a.base());
  if (a.degree() <= 2) {
    r += T_adj(D_op(a));
    r += D_adj(T_op(a));
  }
  if (a.degree() >= 1) {
    r += T_op(D_adj(a));
    r += D_op(T_adj(a));
  }
  return r;
}

double weitzenbock_residual(const EForm& a) {
  return (laplacian_E(a) - laplacian_D(a) - H_op(a)).max_abs();
}

double real_weitzenbock_residual(const VectorJets& v, const HPoint& base) {
  const EForm lap = laplacian_E(EForm::section(base, v));
  const ScalarForm vhat = ScalarForm::one_form(base, v);
  const ScalarForm rhs = laplacian_hat(vhat) + vhat * cplx(4.0);
  double res = 0.0;
  for (int i = 0; i < 3; ++i) {
    const cplx l = lap.coeff(0, i).value();
    res = std::max(res, std::abs(l.real() - rhs.coeff(bit(i)).value().real()));
    res = std::max(res, std::abs(l.imag()));
  }
  return res;
}

double product_formula_residual(const ScalarJet& f, const EForm& s) {
  require_same(f.base, s.base());
  if (s.degree() != 0) throw DomainError("product formula applies to sections");
  const HPoint& p = s.base();
  const EForm lhs = laplacian_E(f.jet * s);
  ScalarForm df(1, p);
  const auto grad = dhat_jet(f.jet, p);
  for (int j = 0; j < 3; ++j) df.coeff(bit(j)) = grad[j];
  const EForm cross = hodge_star(wedge(hodge_star(df), D_op(s)));
  const EForm rhs = laplacian_hat_jet(f.jet, p) * s - cross * cplx(2.0) + f.jet * laplacian_E(s);
  return (lhs - rhs).max_abs();
}

// ---------------------------------------------------------------- real forms

ScalarForm dhat(const ScalarForm& s) {
  if (s.degree() >= 3) throw DomainError("exterior derivative of a 3-form");
  ScalarForm r(s.degree() + 1, s.base());
  for (int m : masks_of_degree(s.degree())) {
    const Jet& f = s.coeff(m);
    for (int j = 0; j < 3; ++j) {
      const int sg = wedge_sign(bit(j), m);
      if (sg) r.coeff(m | bit(j)) += frame_derivative(f, s.base(), j) * double(sg);
    }
    const CoframeD dc = coframe_d(m);
    if (dc.sign != 0.0) r.coeff(dc.mask) += f * dc.sign;
  }
  return r;
}

ScalarForm codiff_hat(const ScalarForm& s) {
  if (s.degree() == 0) throw DomainError("codifferential of a 0-form");
  ScalarForm r = hodge_star(dhat(hodge_star(s)));
  return s.degree() % 2 ? r * cplx(-1.0) : r;
}

ScalarForm laplacian_hat(const ScalarForm& s) {
  ScalarForm r(s.degree(), s.base());
  if (s.degree() <= 2) r += codiff_hat(dhat(s));
  if (s.degree() >= 1) r += dhat(codiff_hat(s));
  return r;
}

// ---------------------------------------------------------------- vector fields

VectorValued1Form covariant_gradient(const VectorJets& v, const HPoint& base) {
  const FrameConnection lc = levi_civita_frame(base);
  VectorValued1Form g{base, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Jet e = frame_derivative(v[i], base, j);
      for (int k = 0; k < 3; ++k)
        if (lc[j][k][i] != 0.0) e += v[k] * lc[j][k][i];
      g.m[i][j] = e;
    }
  return g;
}

GradDecomposition grad_decompose(const VectorJets& v, const HPoint& base) {
  const VectorValued1Form g = covariant_gradient(v, base);
  GradDecomposition out;
  out.div = g.m[0][0] + g.m[1][1] + g.m[2][2];
  out.trace_part.base = out.strain.base = out.skew.base = base;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Jet sym = (g.m[i][j] + g.m[j][i]) * 0.5;
      const Jet tr = i == j ? out.div * (1.0 / 3.0) : Jet::constant(0.0, out.div.order());
      out.trace_part.m[i][j] = tr;
      out.strain.m[i][j] = sym - tr;
      out.skew.m[i][j] = (g.m[i][j] - g.m[j][i]) * 0.5;
    }
  out.curl = {out.skew.m[1][2], out.skew.m[2][0], out.skew.m[0][1]};
  return out;
}

VectorJets curl_from_forms(const VectorJets& v, const HPoint& base) {
  const ScalarForm c = hodge_star(dhat(ScalarForm::one_form(base, v))) * cplx(-0.5);
  return {c.coeff(1), c.coeff(2), c.coeff(4)};
}

double hom_inner(const VectorValued1Form& a, const VectorValued1Form& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += (a.m[i][j].value() * std::conj(b.m[i][j].value())).real();
  return s;
}

double StructureReport::max() const {
  return std::max({sym_residual, skew_residual, real_strain_residual, imag_strain_residual});
}

StructureReport structure_checks(const VectorJets& v, const VectorJets& w, const HPoint& base,
                                 double tol) {
  const GradDecomposition gv = grad_decompose(v, base);
  FiberJets a;
  for (int i = 0; i < 3; ++i) a[i] = v[i] - I * gv.curl[i] + I * w[i];
  const EForm ds = ext_d(EForm::section(base, a));

  double re[3][3], im[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const cplx c = ds.coeff(bit(j), i).value();
      re[i][j] = c.real();
      im[i][j] = c.imag();
    }
  const VectorValued1Form grad = covariant_gradient(v, base);

  StructureReport rep;
  const double wv[3] = {w[0].value().real(), w[1].value().real(), w[2].value().real()};
  // X -> X x w has matrix entries A_il = eps_ilm w_m
  const double skew_w[3][3] = {{0.0, wv[2], -wv[1]}, {-wv[2], 0.0, wv[0]}, {wv[1], -wv[0], 0.0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double sym_ds = 0.5 * (re[i][j] + re[j][i]);
      const double sym_grad = 0.5 * (grad.m[i][j].value() + grad.m[j][i].value()).real();
      rep.sym_residual = std::max(rep.sym_residual, std::abs(sym_ds - sym_grad));
      const double skew_ds = 0.5 * (re[i][j] - re[j][i]);
      rep.skew_residual = std::max(rep.skew_residual, std::abs(skew_ds - skew_w[i][j]));
    }

  // Harmonic case: div v = 0 to first order, lap v^ + 4 v^ = 0, w = 0.
  double div_res = std::abs(gv.div.value());
  for (const Jet& g : dhat_jet(gv.div, base)) div_res = std::max(div_res, std::abs(g.value()));
  const ScalarForm vhat = ScalarForm::one_form(base, v);
  const double harm_res = (laplacian_hat(vhat) + vhat * cplx(4.0)).max_abs();
  double w_res = 0.0;
  for (double x : wv) w_res = std::max(w_res, std::abs(x));
  rep.harmonic_case = div_res < tol && harm_res < tol && w_res < tol;
  if (rep.harmonic_case) {
    const GradDecomposition gc = grad_decompose(gv.curl, base);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        rep.real_strain_residual = std::max(
            rep.real_strain_residual, std::abs(re[i][j] - gv.strain.m[i][j].value().real()));
        rep.imag_strain_residual = std::max(
            rep.imag_strain_residual, std::abs(im[i][j] + gc.strain.m[i][j].value().real()));
      }
  }
  return rep;
}

}  // namespace hypdef
