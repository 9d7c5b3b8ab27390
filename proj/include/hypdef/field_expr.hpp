#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hypdef/jet.hpp"

namespace hypdef {

// Polynomial expression in z, conj(z) and t.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-'|'+')* atom ('^' int)?
//   atom   := complex-literal | 'z' | 'conj(z)' | 't' | '(' expr ')'
//
// Literals: 1, 0.5i, 2e-3, i.
class FieldExpr {
 public:
  struct Node;

  FieldExpr();  // the zero field
  static FieldExpr parse(std::string_view text);
  static FieldExpr constant(cplx c);

  const std::string& source() const { return source_; }

  cplx evaluate(cplx z, double t = 1.0) const;
  Jet jet(const HPoint& p, int order = kMaxOrder) const;

  // Wirtinger derivatives d/dz and d/dzbar, symbolically.
  FieldExpr dz() const;
  FieldExpr dzbar() const;
  FieldExpr dz(int n) const;

  int degree() const;  // total degree in (z, zbar, t); -1 for the zero polynomial
  bool depends_on_t() const;
  bool is_zero() const;  // structurally zero after folding

 private:
  explicit FieldExpr(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}
  std::shared_ptr<const Node> root_;
  std::string source_;
};

ScalarJet jet_of(const FieldExpr& f, const HPoint& p);

// Parses a constant complex expression such as "0.3+1.2i" or "1i".
cplx parse_complex(std::string_view text);

}  // namespace hypdef
