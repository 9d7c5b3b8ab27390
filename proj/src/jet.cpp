#include "hypdef/jet.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hypdef/error.hpp"

namespace hypdef {

namespace {

struct Tables {
  int index[kMaxOrder + 1][kMaxOrder + 1][kMaxOrder + 1];
  Multi multi[kJetSize];
  struct Triple {
    int a, b, c;
  };
  std::vector<Triple> products;          // sorted by degree of c
  int product_cutoff[kMaxOrder + 2] = {};  // products with deg(c) <= n: [0, cutoff[n+1])
  double binom[kMaxOrder + 1][kMaxOrder + 1] = {};

  Tables() {
    for (auto& p : index)
      for (auto& q : p)
        for (int& r : q) r = -1;
    int n = 0;
    for (int d = 0; d <= kMaxOrder; ++d)
      for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) {
          const int k = d - i - j;
          index[i][j][k] = n;
          multi[n] = Multi{i, j, k};
          ++n;
        }
    for (int a = 0; a < kJetSize; ++a)
      for (int b = 0; b < kJetSize; ++b) {
        const Multi& ma = multi[a];
        const Multi& mb = multi[b];
        if (ma.degree() + mb.degree() > kMaxOrder) continue;
        products.push_back({a, b, index[ma.i + mb.i][ma.j + mb.j][ma.k + mb.k]});
      }
    std::stable_sort(products.begin(), products.end(), [&](const Triple& x, const Triple& y) {
      return multi[x.c].degree() < multi[y.c].degree();
    });
    for (int d = 0; d <= kMaxOrder; ++d) {
      int count = 0;
      for (const auto& p : products)
        if (multi[p.c].degree() <= d) ++count;
      product_cutoff[d + 1] = count;
    }
    for (int m = 0; m <= kMaxOrder; ++m) {
      binom[m][0] = 1.0;
      for (int r = 1; r <= m; ++r) binom[m][r] = binom[m - 1][r - 1] + (r <= m - 1 ? binom[m - 1][r] : 0.0);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// (0, s)^n with exact results for integer n.
cplx i_power(int n, bool negative) {
  static const cplx cycle[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int m = ((negative ? -n : n) % 4 + 4) % 4;
  return cycle[m];
}

}  // namespace

int jet_index(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i + j + k > kMaxOrder) return -1;
  return tables().index[i][j][k];
}

const Multi& jet_multi(int index) { return tables().multi[index]; }

Jet Jet::constant(cplx v, int order) {
  Jet j;
  j.order_ = order;
  j.c_[0] = v;
  return j;
}

Jet Jet::variable(int axis, double base, int order) {
  Jet j = constant(base, order);
  if (order >= 1) j.c_[jet_index(axis == 0, axis == 1, axis == 2)] = 1.0;
  return j;
}

cplx Jet::coeff(int i, int j, int k) const {
  if (i + j + k > order_) throw JetOrderError("jet coefficient beyond available order");
  return c_[jet_index(i, j, k)];
}

void Jet::set_coeff(int i, int j, int k, cplx v) {
  if (i + j + k > order_) throw JetOrderError("jet coefficient beyond available order");
  c_[jet_index(i, j, k)] = v;
}

cplx Jet::partial(int i, int j, int k) const {
  return coeff(i, j, k) * (factorial(i) * factorial(j) * factorial(k));
}

Jet Jet::derivative(int axis) const {
  if (order_ <= 0) throw JetOrderError("insufficient jet order for differentiation");
  Jet r;
  r.order_ = order_ - 1;
  const int n = jet_size(r.order_);
  for (int idx = 0; idx < n; ++idx) {
    Multi m = jet_multi(idx);
    int e = 0;
    if (axis == 0) e = ++m.i;
    else if (axis == 1) e = ++m.j;
    else e = ++m.k;
    r.c_[idx] = c_[jet_index(m.i, m.j, m.k)] * double(e);
  }
  return r;
}

Jet Jet::truncated(int order) const {
  Jet r = *this;
  r.order_ = std::min(order, order_);
  for (int idx = jet_size(r.order_); idx < kJetSize; ++idx) r.c_[idx] = 0.0;
  return r;
}

Jet Jet::conj() const {
  Jet r = *this;
  for (auto& v : r.c_) v = std::conj(v);
  return r;
}

Jet Jet::real() const {
  Jet r = *this;
  for (auto& v : r.c_) v = v.real();
  return r;
}

Jet Jet::imag() const {
  Jet r = *this;
  for (auto& v : r.c_) v = v.imag();
  return r;
}

cplx Jet::evaluate(const Vec3& delta) const {
  cplx sum = 0.0;
  const int n = jet_size(order_);
  for (int idx = 0; idx < n; ++idx) {
    const Multi& m = jet_multi(idx);
    sum += c_[idx] * (std::pow(delta[0], m.i) * std::pow(delta[1], m.j) * std::pow(delta[2], m.k));
  }
  return sum;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  const int n = std::min(order_, o.order_);
  if (n < order_) *this = truncated(n);
  for (int idx = 0; idx < jet_size(n); ++idx) c_[idx] += o.c_[idx];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  const int n = std::min(order_, o.order_);
  if (n < order_) *this = truncated(n);
  for (int idx = 0; idx < jet_size(n); ++idx) c_[idx] -= o.c_[idx];
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const Tables& tb = tables();
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  const int end = tb.product_cutoff[r.order_ + 1];
  for (int p = 0; p < end; ++p) {
    const auto& tr = tb.products[p];
    r.c_[tr.c] += a.c_[tr.a] * b.c_[tr.b];
  }
  return r;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }

Jet& Jet::operator*=(cplx s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet& Jet::operator/=(cplx s) {
  for (auto& v : c_) v /= s;
  return *this;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet operator/(cplx s, const Jet& b) { return reciprocal(b) * s; }

double Jet::max_abs() const {
  double m = 0.0;
  for (int idx = 0; idx < jet_size(order_); ++idx) m = std::max(m, std::abs(c_[idx]));
  return m;
}

Jet apply_series(const Jet& a, const std::array<cplx, kMaxOrder + 1>& series) {
  const int n = a.order();
  Jet delta = a;
  delta.set_coeff_index(0, 0.0);
  Jet r = Jet::constant(series[n], n);
  for (int m = n - 1; m >= 0; --m) {
    r = r * delta;
    r += series[m];
  }
  return r;
}

Jet reciprocal(const Jet& a) {
  const cplx a0 = a.value();
  if (a0 == 0.0) throw DomainError("reciprocal of a jet with zero value");
  std::array<cplx, kMaxOrder + 1> s{};
  cplx p = 1.0 / a0;
  for (int n = 0; n <= kMaxOrder; ++n) {
    s[n] = (n % 2 ? -1.0 : 1.0) * p;
    p /= a0;
  }
  return apply_series(a, s);
}

Jet sqrt(const Jet& a) {
  const cplx a0 = a.value();
  if (a0 == 0.0) throw DomainError("sqrt of a jet with zero value");
  std::array<cplx, kMaxOrder + 1> s{};
  const cplx r0 = std::sqrt(a0);
  double binom = 1.0;  // binomial(1/2, n)
  cplx p = r0;
  for (int n = 0; n <= kMaxOrder; ++n) {
    s[n] = binom * p;
    binom *= (0.5 - n) / (n + 1);
    p /= a0;
  }
  return apply_series(a, s);
}

Jet exp(const Jet& a) {
  const cplx e0 = std::exp(a.value());
  std::array<cplx, kMaxOrder + 1> s{};
  for (int n = 0; n <= kMaxOrder; ++n) s[n] = e0 / factorial(n);
  return apply_series(a, s);
}

Jet log(const Jet& a) {
  const cplx a0 = a.value();
  if (a0 == 0.0) throw DomainError("log of a jet with zero value");
  std::array<cplx, kMaxOrder + 1> s{};
  s[0] = std::log(a0);
  cplx p = 1.0;
  for (int n = 1; n <= kMaxOrder; ++n) {
    p /= a0;
    s[n] = (n % 2 ? 1.0 : -1.0) * p / double(n);
  }
  return apply_series(a, s);
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return reciprocal(pow(a, -n));
  Jet r = Jet::constant(1.0, a.order());
  for (int k = 0; k < n; ++k) r = r * a;
  return r;
}

Jet compose(const Jet& f, const std::array<Jet, 3>& args) {
  int n = f.order();
  for (const auto& g : args) n = std::min(n, g.order());
  std::array<std::array<Jet, kMaxOrder + 1>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    Jet delta = args[v].truncated(n);
    delta.set_coeff_index(0, 0.0);
    powers[v][0] = Jet::constant(1.0, n);
    for (int m = 1; m <= n; ++m) powers[v][m] = powers[v][m - 1] * delta;
  }
  Jet r = Jet::constant(0.0, n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const Jet xy = powers[0][i] * powers[1][j];
      for (int k = 0; i + j + k <= n; ++k) {
        const cplx c = f.coeff(i, j, k);
        if (c == 0.0) continue;
        r += (k == 0 ? xy : xy * powers[2][k]) * c;
      }
    }
  return r;
}

cplx WirtingerJet::partial(int a, int b, int k) const {
  if (a + b + k > order) throw JetOrderError("Wirtinger partial beyond available order");
  return c[jet_index(a, b, k)] * (factorial(a) * factorial(b) * factorial(k));
}

WirtingerJet to_wirtinger(const Jet& f) {
  const Tables& tb = tables();
  WirtingerJet w;
  w.order = f.order();
  // dx = (dz + dzbar)/2, dy = -i (dz - dzbar)/2
  for (int idx = 0; idx < jet_size(f.order()); ++idx) {
    const Multi& m = jet_multi(idx);
    const cplx c = f.coeff(idx);
    if (c == 0.0) continue;
    const cplx base = c * i_power(m.j, true) * std::ldexp(1.0, -(m.i + m.j));
    for (int p = 0; p <= m.i; ++p)
      for (int q = 0; q <= m.j; ++q) {
        const double sgn = ((m.j - q) % 2) ? -1.0 : 1.0;
        w.c[jet_index(p + q, m.i - p + m.j - q, m.k)] +=
            base * (sgn * tb.binom[m.i][p] * tb.binom[m.j][q]);
      }
  }
  return w;
}

Jet from_wirtinger(const WirtingerJet& w) {
  const Tables& tb = tables();
  Jet f = Jet::constant(0.0, w.order);
  // dz = dx + i dy, dzbar = dx - i dy
  for (int idx = 0; idx < jet_size(w.order); ++idx) {
    const Multi& m = jet_multi(idx);
    const cplx c = w.c[idx];
    if (c == 0.0) continue;
    for (int p = 0; p <= m.i; ++p)
      for (int q = 0; q <= m.j; ++q) {
        const int ex = p + q, ey = (m.i - p) + (m.j - q);
        const cplx phase = i_power(m.i - p, false) * i_power(m.j - q, true);
        const int target = jet_index(ex, ey, m.k);
        f.set_coeff_index(target, f.coeff(target) + c * phase * (tb.binom[m.i][p] * tb.binom[m.j][q]));
      }
  }
  return f;
}

Jet frame_derivative(const Jet& f, const HPoint& base, int axis) {
  Jet d = f.derivative(axis);
  return Jet::variable(2, base.t, d.order()) * d;
}

std::array<Jet, 3> dhat_jet(const Jet& f, const HPoint& base) {
  return {frame_derivative(f, base, 0), frame_derivative(f, base, 1),
          frame_derivative(f, base, 2)};
}

std::array<cplx, 3> dhat(const ScalarJet& f) {
  if (f.jet.order() < 1) throw JetOrderError("dhat needs a jet of order >= 1");
  return {f.base.t * f.jet.partial(1, 0, 0), f.base.t * f.jet.partial(0, 1, 0),
          f.base.t * f.jet.partial(0, 0, 1)};
}

Jet laplacian_hat_jet(const Jet& f, const HPoint& base) {
  const Jet ft = f.derivative(2);
  const Jet second = f.derivative(0).derivative(0) + f.derivative(1).derivative(1) + ft.derivative(2);
  const Jet t = Jet::variable(2, base.t, second.order());
  return t * ft - t * t * second;
}

cplx laplacian_hat(const ScalarJet& f) {
  if (f.jet.order() < 2) throw JetOrderError("laplacian_hat needs a jet of order >= 2");
  const double t = f.base.t;
  return t * f.jet.partial(0, 0, 1) -
         t * t * (f.jet.partial(2, 0, 0) + f.jet.partial(0, 2, 0) + f.jet.partial(0, 0, 2));
}

double product_rule_check(const ScalarJet& f, const ScalarJet& g) {
  if (!(f.base == g.base)) throw BasepointMismatch("product_rule_check: basepoints differ");
  const ScalarJet fg{f.base, f.jet * g.jet};
  const auto df = dhat(f);
  const auto dg = dhat(g);
  const cplx pairing = df[0] * dg[0] + df[1] * dg[1] + df[2] * dg[2];
  const cplx rhs = laplacian_hat(f) * g.jet.value() - 2.0 * pairing + f.jet.value() * laplacian_hat(g);
  return std::abs(laplacian_hat(fg) - rhs);
}

}  // namespace hypdef
