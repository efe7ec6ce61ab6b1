#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "invop/rational_function.hpp"
#include "invop/text_format.hpp"

namespace invop {

/// Exponents over the coordinate variables y_ij, v_kl: prod d^e / d coord^e.
using DerivMonomial = Monomial;

/// Normally ordered linear differential operator on P_{n,m}:
///   sum_alpha c_alpha(Y, V) * d^alpha
/// with every coefficient standing to the left of every derivative.
class DiffOperator {
 public:
  using TermMap = std::map<DerivMonomial, RationalFunction, GrlexDescending>;

  DiffOperator() = default;
  /// Zero operator over coordinate_table(n, m).
  DiffOperator(int n, int m);
  /// Zero operator over `table`, whose first coordinate_count(n, m) entries
  /// must be the coordinates of P_{n,m}.
  DiffOperator(int n, int m, TablePtr table);

  static DiffOperator identity(int n, int m);
  static DiffOperator multiplication(int n, int m, const RationalFunction& f);
  /// d^power / d coord^power for the coordinate at table index `coord`.
  static DiffOperator partial(int n, int m, std::size_t coord, std::uint32_t power = 1);
  static DiffOperator partial(int n, int m, std::string_view name, std::uint32_t power = 1);

  int n() const { return n_; }
  int m() const { return m_; }
  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t order() const;
  /// Coefficient of d^alpha (zero when absent).
  RationalFunction coefficient(const DerivMonomial& alpha) const;

  void add_term(const DerivMonomial& alpha, const RationalFunction& c);

  DiffOperator operator-() const;
  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const Rational& c);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(DiffOperator a, const Rational& c) { return a *= c; }
  friend DiffOperator operator*(const Rational& c, DiffOperator a) { return a *= c; }
  /// Left multiplication by a function (stays normally ordered).
  DiffOperator times_function(const RationalFunction& f) const;

  bool operator==(const DiffOperator& o) const;
  bool operator!=(const DiffOperator& o) const { return !(*this == o); }

  /// Re-expresses the operator over an extension of its table.
  DiffOperator with_table(const TablePtr& table) const;

  std::string to_string() const;

 private:
  void check_compatible(const DiffOperator& o) const;
  int n_ = 1;
  int m_ = 0;
  TablePtr table_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const DiffOperator& d);

/// d^alpha f.
RationalFunction apply_partial(const DerivMonomial& alpha, const RationalFunction& f);

/// D f, exact.
RationalFunction apply(const DiffOperator& d, const RationalFunction& f);

/// Normally ordered product a o b by the generalized Leibniz rule. Terms of
/// `a` are distributed over OpenMP threads.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
/// Single-threaded reference for compose().
DiffOperator compose_serial(const DiffOperator& a, const DiffOperator& b);

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// Leading rational multiple: returns c when a == c * b (b nonzero), else nullopt.
std::optional<Rational> proportionality(const DiffOperator& a, const DiffOperator& b);

// Exact text format:
//   (op n m (term <rf-or-poly> (y11 1) (v11 2)) ...)
std::string serialize(const DiffOperator& d);
DiffOperator parse_operator_sexpr(const SExpr& e, const TablePtr& table = nullptr);
DiffOperator parse_operator_text(std::string_view text, const TablePtr& table = nullptr);

/// Coefficients to the left, partial derivatives to the right.
std::string latex(const DiffOperator& d);

}  // namespace invop
