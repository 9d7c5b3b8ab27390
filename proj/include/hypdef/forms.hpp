#pragma once

#include <array>
#include <functional>
#include <vector>

#include "hypdef/jet.hpp"
#include "hypdef/killing.hpp"

namespace hypdef {

// Coframe multi-indices are bitmasks: bit 0 = omega^1, bit 1 = omega^2, bit 2 = omega^3.
inline constexpr int kVolumeMask = 7;
int mask_degree(int mask);
const std::vector<int>& masks_of_degree(int k);
// Sign of omega^I ^ omega^J against omega^{I|J}; 0 when I and J overlap.
int wedge_sign(int i_mask, int j_mask);

using FiberJets = std::array<Jet, 3>;
using VectorJets = std::array<Jet, 3>;  // frame components of a real vector field

// E-valued k-form germ: one fiber coefficient (three jets on E1, E2, E3) per
// coframe multi-index of length k.
class EForm {
 public:
  EForm() : EForm(0, HPoint{}) {}
  EForm(int degree, const HPoint& base);
  static EForm section(const HPoint& base, const FiberJets& a);
  // The constant section q -> k evaluated in the fiber at q.
  static EForm constant_section(const KillingField& k, const HPoint& base, int order = kMaxOrder);

  int degree() const { return degree_; }
  const HPoint& base() const { return base_; }
  Jet& coeff(int mask, int fiber) { return c_[mask][fiber]; }
  const Jet& coeff(int mask, int fiber) const { return c_[mask][fiber]; }
  FiberElement value(int mask) const;
  int order() const;
  EForm truncated(int order) const;
  EForm conj() const;
  EForm real_part() const;  // component in the real span of E1, E2, E3
  EForm imag_part() const;  // coefficients of R1, R2, R3
  double max_abs() const;   // largest coefficient modulus at the base point

  EForm& operator+=(const EForm& o);
  EForm& operator-=(const EForm& o);
  EForm& operator*=(cplx s);
  friend EForm operator+(EForm a, const EForm& b) { return a += b; }
  friend EForm operator-(EForm a, const EForm& b) { return a -= b; }
  friend EForm operator*(EForm a, cplx s) { return a *= s; }
  friend EForm operator*(cplx s, EForm a) { return a *= s; }
  friend EForm operator*(const Jet& f, const EForm& a);

 private:
  int degree_;
  HPoint base_;
  std::array<FiberJets, 8> c_;
};

// Fiber-metric dual of an EForm (coefficients conjugated).
struct EDual {
  EForm form;
};

// Real-coframe form with complex jet coefficients.
class ScalarForm {
 public:
  ScalarForm() : ScalarForm(0, HPoint{}) {}
  ScalarForm(int degree, const HPoint& base);
  static ScalarForm one_form(const HPoint& base, const VectorJets& v);

  int degree() const { return degree_; }
  const HPoint& base() const { return base_; }
  Jet& coeff(int mask) { return c_[mask]; }
  const Jet& coeff(int mask) const { return c_[mask]; }
  double max_abs() const;

  ScalarForm& operator+=(const ScalarForm& o);
  ScalarForm& operator-=(const ScalarForm& o);
  ScalarForm& operator*=(cplx s);
  friend ScalarForm operator+(ScalarForm a, const ScalarForm& b) { return a += b; }
  friend ScalarForm operator-(ScalarForm a, const ScalarForm& b) { return a -= b; }
  friend ScalarForm operator*(ScalarForm a, cplx s) { return a *= s; }
  friend ScalarForm operator*(cplx s, ScalarForm a) { return a *= s; }

 private:
  int degree_;
  HPoint base_;
  std::array<Jet, 8> c_;
};

// Frame tables: c[i][j] is the fiber coefficient of omega^j in X(E_i).
struct FrameTable {
  std::array<std::array<CVec3, 3>, 3> c{};
};

struct FrameKillingTables {
  FrameTable d;
  FrameTable partial;
};

FrameKillingTables frame_killing_tables();
// Recomputed at p from the Levi-Civita connection and the bracket of the
// frame Killing fields.
FrameKillingTables frame_killing_tables_definitional(const HPoint& p);

struct BundleConnection {
  FrameConnection levi_civita;
  std::array<std::array<CVec3, 3>, 3> ad{};  // ad[j][i] = ad(E_j) E_i in the fiber basis
};
BundleConnection bundle_connection(const HPoint& p);

// Pointwise algebra.
EForm wedge_coframe(int j, const EForm& a);
EForm interior(int j, const EForm& a);
EForm wedge(const ScalarForm& s, const EForm& a);
EForm hodge_star(const EForm& a);
ScalarForm hodge_star(const ScalarForm& s);
EDual sharp(const EForm& a);
EForm flat(const EDual& a);
// Real-valued form: Re sum_i a_i b_i on wedge products of coframe indices.
ScalarForm pair_wedge(const EForm& a, const EDual& b);
// |a|^2 = *(a ^ *a#) at the base point.
double norm_sq(const EForm& a);
// Fiber trace sum_i a_{omega^i, E_i} of a 1-form at the base point.
cplx trace(const EForm& a);

// Differential operators.
EForm ext_d(const EForm& a);      // Leibniz rule with the dE table
EForm partial_d(const EForm& a);  // Leibniz rule with the partial-E table
EForm nabla(const EForm& a, int j, const BundleConnection& conn);
EForm ad_frame(const EForm& a, int j, const BundleConnection& conn);
EForm D_op(const EForm& a);
EForm T_op(const EForm& a);
EForm D_adj(const EForm& a);
EForm T_adj(const EForm& a);
EForm ext_d_covariant(const EForm& a);  // D + T
EForm codifferential(const EForm& a);   // -sum_j i(e_j)(nabla_j - ad(E_j))
EForm codifferential_star(const EForm& a);  // (-1)^k * partial *
EForm laplacian_E(const EForm& a);
EForm laplacian_D(const EForm& a);
EForm H_op(const EForm& a);
EForm mm_operator(const EForm& a);  // T*D + D*T + TD* + DT*

struct DTSplit {
  EForm D, T;
};
DTSplit dt_split(const EForm& a);

double weitzenbock_residual(const EForm& a);
double real_weitzenbock_residual(const VectorJets& v, const HPoint& base);
double product_formula_residual(const ScalarJet& f, const EForm& s);

// Real scalar forms.
ScalarForm dhat(const ScalarForm& s);
ScalarForm codiff_hat(const ScalarForm& s);
ScalarForm laplacian_hat(const ScalarForm& s);

// Hom(TM, TM) in the orthonormal frame: m[i][j] = (nabla_{e_j} v)_i.
struct VectorValued1Form {
  HPoint base;
  std::array<std::array<Jet, 3>, 3> m;
};

VectorValued1Form covariant_gradient(const VectorJets& v, const HPoint& base);

struct GradDecomposition {
  Jet div;                    // trace of nabla v
  VectorValued1Form trace_part;  // (div / 3) identity
  VectorValued1Form strain;   // symmetric traceless part
  VectorValued1Form skew;     // X -> X x curl
  VectorJets curl;
};

GradDecomposition grad_decompose(const VectorJets& v, const HPoint& base);
// -1/2 * dhat(v^) read as a vector field.
VectorJets curl_from_forms(const VectorJets& v, const HPoint& base);
// Frobenius inner product of two Hom(TM, TM) values at the base point.
double hom_inner(const VectorValued1Form& a, const VectorValued1Form& b);

struct StructureReport {
  double sym_residual = 0.0;   // |sym Re ds - sym nabla v|
  double skew_residual = 0.0;  // |skew Re ds - (X -> X x w)|
  bool harmonic_case = false;  // div v = 0, v harmonic, w = 0 at the base point
  double real_strain_residual = 0.0;  // |Re ds - str v|
  double imag_strain_residual = 0.0;  // |Im ds - (-str curl v)|
  double max() const;
};

// Checks on the section s = V - i curl V + i W built from v and w.
StructureReport structure_checks(const VectorJets& v, const VectorJets& w, const HPoint& base,
                                 double tol = 1e-9);

// Axis-aligned box in (x, y, t).
struct Box {
  double x0, x1, y0, y1, t0, t1;
};

using FormFamily = std::function<EForm(const HPoint&)>;

struct BoundaryIdentity {
  double lhs = 0.0;  // integral of |omega|^2 over the box
  double rhs = 0.0;  // 1/2 integral of i omega ^ omega# over the boundary, outward orientation
  double precondition_violation = 0.0;
};

// The family must supply jets of order >= 1. Throws PreconditionFailed when
// omega is not closed, co-closed and traceless at the nodes.
BoundaryIdentity boundary_norm_identity(const Box& box, const FormFamily& omega, int nodes = 24,
                                        double precondition_tol = 1e-8);

}  // namespace hypdef
