#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invop/rational.hpp"
#include "invop/variable_table.hpp"

namespace invop {

/// Exponent vector indexed by VariableTable position. Trailing zeros are never
/// stored, so a monomial over a table is also valid over any extension of it.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps);
  static Monomial var(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return i < e_.size() ? e_[i] : 0; }
  std::size_t length() const { return e_.size(); }  // one past the last nonzero exponent
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return e_.empty(); }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides(o, *this)
  Monomial with(std::size_t i, std::uint32_t power) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

 private:
  void trim();
  std::vector<std::uint32_t> e_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order, variable 0 most significant.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Descending grlex: the first element of a map ordered by it is the leading term.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse multivariate polynomial over Q.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(TablePtr table, TermMap terms);

  static Polynomial variable(const TablePtr& table, std::size_t index);
  static Polynomial variable(const TablePtr& table, std::string_view name);
  static Polynomial monomial(const TablePtr& table, const Monomial& m, const Rational& c = 1);

  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::uint32_t degree() const;  // total degree; 0 for the zero polynomial
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  /// Smallest variable index appearing, or table size when constant.
  std::size_t first_variable() const;

  const Monomial& leading_monomial() const;  // requires !is_zero()
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned k) const;
  void add_term(const Monomial& m, const Rational& c);

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial diff(std::size_t var) const;
  Polynomial diff(std::string_view name) const;

  /// Coefficients with respect to `var`: p = sum_k coeff[k] * var^k.
  std::map<std::uint32_t, Polynomial> collect(std::size_t var) const;

  /// Substitutes the bound variables; unbound ones pass through.
  Polynomial subst(const std::map<std::size_t, Polynomial>& bindings) const;
  /// Evaluates with every variable that occurs bound to a rational. Throws if
  /// an occurring variable is unbound.
  Rational eval(const std::map<std::size_t, Rational>& point) const;

  /// Drops all terms of total degree > d.
  Polynomial truncate(std::uint32_t d) const;
  /// Drops terms whose degree in the variables [begin, end) exceeds d.
  Polynomial truncate_in(std::size_t begin, std::size_t end, std::uint32_t d) const;

  /// Reinterprets the polynomial over `table`, which must extend the current one.
  Polynomial with_table(const TablePtr& table) const;

  std::string to_string() const;

 private:
  void adopt_table(const TablePtr& other);
  TablePtr table_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Product truncated to total degree <= d in variables [begin, end).
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::size_t begin, std::size_t end,
                              std::uint32_t d);

/// Exact quotient a / b. Throws std::domain_error when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalized monic in grlex (1 when coprime).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// a divided by its leading coefficient.
Polynomial make_monic(const Polynomial& a);

}  // namespace invop
