#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invop/rational_function.hpp"

namespace invop {

/// Node of the exact s-expression text format: either an atom (symbol or
/// quoted string) or a list.
struct SExpr {
  enum class Kind { symbol, string, list } kind = Kind::list;
  std::string text;
  std::vector<SExpr> items;

  bool is_symbol(std::string_view s) const { return kind == Kind::symbol && text == s; }
  std::string str() const;
};

SExpr parse_sexpr(std::string_view text);

// Exact format:
//   polynomial         (poly ("3/2" (y11 2) (v12 1)) ("-1"))
//   rational function  (rf <poly> <poly>)
// Coefficients are quoted "p/q" strings; terms appear in descending grlex.
std::string serialize(const Polynomial& p);
std::string serialize(const RationalFunction& f);
Polynomial parse_polynomial_sexpr(const SExpr& e, const TablePtr& table);
RationalFunction parse_rational_function_sexpr(const SExpr& e, const TablePtr& table);
Polynomial parse_polynomial_text(std::string_view text, const TablePtr& table);
RationalFunction parse_rational_function_text(std::string_view text, const TablePtr& table);

/// Infix input such as "x11^2 + 1/2*x12^2 - 3*(z11 - z12)". Division is
/// allowed by any nonzero expression when parsing rational functions.
RationalFunction parse_infix(std::string_view text, const TablePtr& table);
Polynomial parse_infix_polynomial(std::string_view text, const TablePtr& table);

std::string latex_variable(const Variable& v);
std::string latex(const Rational& r);
std::string latex(const Polynomial& p);
std::string latex(const RationalFunction& f);

}  // namespace invop
