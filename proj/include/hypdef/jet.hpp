#pragma once

#include <array>
#include <complex>

#include "hypdef/halfspace.hpp"

namespace hypdef {

inline constexpr int kMaxOrder = 4;
inline constexpr int kJetSize = 35;  // monomials in three variables of degree <= 4

constexpr int jet_size(int order) { return (order + 1) * (order + 2) * (order + 3) / 6; }

struct Multi {
  int i, j, k;
  int degree() const { return i + j + k; }
};

// Monomials are stored graded by total degree; within a degree in
// lexicographic order of the exponent triple, descending in the first slot.
int jet_index(int i, int j, int k);
const Multi& jet_multi(int index);

// Truncated Taylor polynomial of a complex function of three real variables
// around a base point. order() is the highest degree whose coefficients are
// known; arithmetic truncates to the smaller order of its operands.
class Jet {
 public:
  Jet() { c_.fill(cplx{}); }
  static Jet constant(cplx v, int order = kMaxOrder);
  static Jet variable(int axis, double base, int order = kMaxOrder);

  int order() const { return order_; }
  cplx value() const { return c_[0]; }
  cplx coeff(int i, int j, int k) const;
  cplx coeff(int index) const { return c_[index]; }
  void set_coeff(int i, int j, int k, cplx v);
  void set_coeff_index(int index, cplx v) { c_[index] = v; }
  // Partial derivative d^{i+j+k} / dx^i dy^j dt^k at the base point.
  cplx partial(int i, int j, int k) const;

  Jet derivative(int axis) const;
  Jet truncated(int order) const;
  Jet conj() const;
  Jet real() const;
  Jet imag() const;
  // Value of the Taylor polynomial at base + delta.
  cplx evaluate(const Vec3& delta) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator*=(cplx s);
  Jet& operator/=(cplx s);
  Jet& operator+=(cplx s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(cplx s) {
    c_[0] -= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(Jet a, cplx s) { return a *= s; }
  friend Jet operator*(cplx s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, double s) { return a *= cplx(s); }
  friend Jet operator*(double s, Jet a) { return a *= cplx(s); }
  friend Jet operator/(Jet a, cplx s) { return a /= s; }
  friend Jet operator/(Jet a, double s) { return a /= cplx(s); }
  friend Jet operator+(Jet a, cplx s) { return a += s; }
  friend Jet operator+(cplx s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, cplx s) { return a -= s; }
  friend Jet operator-(cplx s, const Jet& a) { return (-a) += s; }
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator/(cplx s, const Jet& b);

  double max_abs() const;

 private:
  std::array<cplx, kJetSize> c_;
  int order_ = kMaxOrder;
};

Jet reciprocal(const Jet& a);
Jet sqrt(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet pow(const Jet& a, int n);

// sum_n series[n] (a - a(0))^n for n <= a.order(); series[n] is the n-th
// Taylor coefficient of a scalar function at a.value().
Jet apply_series(const Jet& a, const std::array<cplx, kMaxOrder + 1>& series);

// f(args), where f is a jet around the point (args[0](0), args[1](0), args[2](0)).
Jet compose(const Jet& f, const std::array<Jet, 3>& args);

// Scalar field germ tagged with its base point.
struct ScalarJet {
  HPoint base;
  Jet jet;
};

// Coefficients of the same Taylor polynomial in the monomials dz^a dzbar^b dt^k.
struct WirtingerJet {
  std::array<cplx, kJetSize> c{};
  int order = kMaxOrder;

  // d^{a+b+k} / dz^a dzbar^b dt^k at the base point.
  cplx partial(int a, int b, int k) const;
};

WirtingerJet to_wirtinger(const Jet& f);
Jet from_wirtinger(const WirtingerJet& w);

// Frame derivative e_axis(f) = t * d f / d x_axis as a jet (one order lower).
Jet frame_derivative(const Jet& f, const HPoint& base, int axis);

std::array<Jet, 3> dhat_jet(const Jet& f, const HPoint& base);
std::array<cplx, 3> dhat(const ScalarJet& f);

Jet laplacian_hat_jet(const Jet& f, const HPoint& base);
cplx laplacian_hat(const ScalarJet& f);

// |lap(fg) - [lap(f) g - 2 <dhat f, dhat g> + f lap(g)]| at the base point.
double product_rule_check(const ScalarJet& f, const ScalarJet& g);

}  // namespace hypdef
