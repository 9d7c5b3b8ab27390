#include "hypdef/field_expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

#include "hypdef/error.hpp"

namespace hypdef {

struct FieldExpr::Node {
  enum class Kind { Const, Z, Zbar, T, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Const;
  cplx value{};
  int exponent = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = FieldExpr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Node::Kind;

NodePtr make_const(cplx c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = c;
  return n;
}

NodePtr make_leaf(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

bool is_const(const NodePtr& n, cplx c) { return n->kind == Kind::Const && n->value == c; }

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
  if (a->kind == Kind::Const && b->kind == Kind::Const) {
    if (k == Kind::Add) return make_const(a->value + b->value);
    if (k == Kind::Sub) return make_const(a->value - b->value);
    if (k == Kind::Mul) return make_const(a->value * b->value);
  }
  if (k == Kind::Add) {
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
  }
  if (k == Kind::Sub && is_const(b, 0.0)) return a;
  if (k == Kind::Mul) {
    if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
  }
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_neg(NodePtr a) {
  if (a->kind == Kind::Const) return make_const(-a->value);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_pow(NodePtr a, int e) {
  if (e == 0) return make_const(1.0);
  if (e == 1) return a;
  if (a->kind == Kind::Const) return make_const(std::pow(a->value, e));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->lhs = std::move(a);
  n->exponent = e;
  return n;
}

template <class R>
R power(const R& base, int e, const R& one) {
  R result = one;
  R b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

template <class R, class Leaves>
R eval_node(const Node& n, const Leaves& leaves) {
  switch (n.kind) {
    case Kind::Const: return leaves.constant(n.value);
    case Kind::Z: return leaves.z;
    case Kind::Zbar: return leaves.zbar;
    case Kind::T: return leaves.t;
    case Kind::Add: return eval_node<R>(*n.lhs, leaves) + eval_node<R>(*n.rhs, leaves);
    case Kind::Sub: return eval_node<R>(*n.lhs, leaves) - eval_node<R>(*n.rhs, leaves);
    case Kind::Mul: return eval_node<R>(*n.lhs, leaves) * eval_node<R>(*n.rhs, leaves);
    case Kind::Neg: return -eval_node<R>(*n.lhs, leaves);
    case Kind::Pow:
      return power<R>(eval_node<R>(*n.lhs, leaves), n.exponent, leaves.constant(1.0));
  }
  return leaves.constant(0.0);
}

struct ComplexLeaves {
  cplx z, zbar, t;
  cplx constant(cplx c) const { return c; }
};

struct JetLeaves {
  Jet z, zbar, t;
  int order;
  Jet constant(cplx c) const { return Jet::constant(c, order); }
};

NodePtr derive(const NodePtr& n, Kind var) {
  switch (n->kind) {
    case Kind::Const: return make_const(0.0);
    case Kind::Z:
    case Kind::Zbar:
    case Kind::T: return make_const(n->kind == var ? 1.0 : 0.0);
    case Kind::Add: return make_binary(Kind::Add, derive(n->lhs, var), derive(n->rhs, var));
    case Kind::Sub: return make_binary(Kind::Sub, derive(n->lhs, var), derive(n->rhs, var));
    case Kind::Neg: return make_neg(derive(n->lhs, var));
    case Kind::Mul:
      return make_binary(Kind::Add, make_binary(Kind::Mul, derive(n->lhs, var), n->rhs),
                         make_binary(Kind::Mul, n->lhs, derive(n->rhs, var)));
    case Kind::Pow: {
      NodePtr inner = derive(n->lhs, var);
      if (is_const(inner, 0.0)) return make_const(0.0);
      return make_binary(Kind::Mul,
                         make_binary(Kind::Mul, make_const(double(n->exponent)),
                                     make_pow(n->lhs, n->exponent - 1)),
                         inner);
    }
  }
  return make_const(0.0);
}

int degree_of(const Node& n) {
  switch (n.kind) {
    case Kind::Const: return n.value == 0.0 ? -1 : 0;
    case Kind::Z:
    case Kind::Zbar:
    case Kind::T: return 1;
    case Kind::Add:
    case Kind::Sub: return std::max(degree_of(*n.lhs), degree_of(*n.rhs));
    case Kind::Neg: return degree_of(*n.lhs);
    case Kind::Mul: {
      const int a = degree_of(*n.lhs), b = degree_of(*n.rhs);
      return (a < 0 || b < 0) ? -1 : a + b;
    }
    case Kind::Pow: {
      const int a = degree_of(*n.lhs);
      return a < 0 ? -1 : a * n.exponent;
    }
  }
  return 0;
}

bool uses_t(const Node& n) {
  if (n.kind == Kind::T) return true;
  return (n.lhs && uses_t(*n.lhs)) || (n.rhs && uses_t(*n.rhs));
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      if (accept('+')) e = make_binary(Kind::Add, e, term());
      else if (accept('-')) e = make_binary(Kind::Sub, e, term());
      else return e;
    }
  }

  NodePtr term() {
    NodePtr e = factor();
    while (accept('*')) e = make_binary(Kind::Mul, e, factor());
    return e;
  }

  NodePtr factor() {
    if (accept('-')) return make_neg(factor());
    if (accept('+')) return factor();
    NodePtr a = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      int e = 0;
      std::from_chars(s_.data() + start, s_.data() + pos_, e);
      a = make_pow(a, e);
    }
    return a;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept_word("conj")) {
      if (!accept('(') || !accept('z') || !accept(')')) fail("expected conj(z)");
      return make_leaf(Kind::Zbar);
    }
    if (c == 'z') {
      ++pos_;
      return make_leaf(Kind::Z);
    }
    if (c == 't') {
      ++pos_;
      return make_leaf(Kind::T);
    }
    if (c == 'i') {
      ++pos_;
      return make_const(I);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    const std::string text(s_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return make_const(cplx(0.0, v));
    }
    return make_const(v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldExpr::FieldExpr() : root_(make_const(0.0)), source_("0") {}

FieldExpr FieldExpr::parse(std::string_view text) {
  Parser p(text);
  return FieldExpr(p.parse_all(), std::string(text));
}

FieldExpr FieldExpr::constant(cplx c) {
  return FieldExpr(make_const(c), "(" + std::to_string(c.real()) + "+" + std::to_string(c.imag()) + "i)");
}

cplx FieldExpr::evaluate(cplx z, double t) const {
  return eval_node<cplx>(*root_, ComplexLeaves{z, std::conj(z), t});
}

Jet FieldExpr::jet(const HPoint& p, int order) const {
  const Jet x = Jet::variable(0, p.x, order);
  const Jet y = Jet::variable(1, p.y, order);
  JetLeaves leaves{x + I * y, x - I * y, Jet::variable(2, p.t, order), order};
  return eval_node<Jet>(*root_, leaves);
}

FieldExpr FieldExpr::dz() const { return FieldExpr(derive(root_, Kind::Z), "d/dz(" + source_ + ")"); }

FieldExpr FieldExpr::dzbar() const {
  return FieldExpr(derive(root_, Kind::Zbar), "d/dzbar(" + source_ + ")");
}

FieldExpr FieldExpr::dz(int n) const {
  FieldExpr r = *this;
  for (int k = 0; k < n; ++k) r = r.dz();
  return r;
}

int FieldExpr::degree() const { return degree_of(*root_); }

bool FieldExpr::depends_on_t() const { return uses_t(*root_); }

bool FieldExpr::is_zero() const { return is_const(root_, 0.0); }

ScalarJet jet_of(const FieldExpr& f, const HPoint& p) { return {p, f.jet(p)}; }

cplx parse_complex(std::string_view text) {
  FieldExpr e = FieldExpr::parse(text);
  if (e.degree() > 0) throw ParseError("expected a constant complex number", 0);
  return e.evaluate(0.0);
}

}  // namespace hypdef
