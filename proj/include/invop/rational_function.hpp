#pragma once

#include <map>
#include <ostream>
#include <string>

#include "invop/polynomial.hpp"

namespace invop {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1 and den
/// monic in grlex. Structural equality is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Normalizes; throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  TablePtr table() const { return unify_tables(num_.table(), den_.table()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction pow(int k) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction diff(std::size_t var) const;
  RationalFunction subst(const std::map<std::size_t, RationalFunction>& bindings) const;
  /// Throws std::domain_error naming the point when the denominator vanishes.
  Rational eval(const std::map<std::size_t, Rational>& point) const;

  /// Re-runs normalization (idempotent on canonical values).
  RationalFunction normalized() const { return RationalFunction(num_, den_); }

  std::string to_string() const;

 private:
  struct Raw {};
  RationalFunction(Polynomial num, Polynomial den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Substitution into a polynomial with rational-function values.
RationalFunction subst(const Polynomial& p, const std::map<std::size_t, RationalFunction>& bindings);

}  // namespace invop
