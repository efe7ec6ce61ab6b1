#include "invop/rational_function.hpp"

#include <sstream>
#include <stdexcept>

namespace invop {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  Rational s = Rational(1) / den_.leading_coefficient();
  if (s != 1) {
    num_ *= s;
    den_ *= s;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::domain_error("constant_value of a non-constant rational function");
  return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Raw{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
    return *this;
  }
  *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross cancellation keeps the operands small; each quotient is already reduced.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = exact_divide(num_, g1) * exact_divide(o.num_, g2);
  Polynomial d = exact_divide(den_, g2) * exact_divide(o.den_, g1);
  Rational s = Rational(1) / d.leading_coefficient();
  *this = RationalFunction(n * s, d * s, Raw{});
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return RationalFunction(1) / pow(-k);
  return RationalFunction(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Raw{});
}

RationalFunction RationalFunction::diff(std::size_t var) const {
  if (den_.is_constant()) return RationalFunction(num_.diff(var), den_, Raw{});
  return RationalFunction(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

RationalFunction subst(const Polynomial& p, const std::map<std::size_t, RationalFunction>& bindings) {
  bool polynomial_values = true;
  for (const auto& [v, f] : bindings) polynomial_values = polynomial_values && f.is_polynomial();
  if (polynomial_values) {
    std::map<std::size_t, Polynomial> pb;
    for (const auto& [v, f] : bindings) pb.emplace(v, f.num() * (Rational(1) / f.den().constant_term()));
    return RationalFunction(p.subst(pb));
  }
  // Bring everything over the common denominator prod den_v^deg_v(p).
  std::map<std::size_t, std::uint32_t> degs;
  for (const auto& [v, f] : bindings) degs[v] = p.degree_in(v);
  Polynomial common(1);
  for (const auto& [v, f] : bindings) common *= f.den().pow(degs[v]);
  std::map<std::size_t, std::vector<Polynomial>> num_pows, den_pows;
  for (const auto& [v, f] : bindings) {
    auto& np = num_pows[v];
    auto& dp = den_pows[v];
    np.push_back(Polynomial(1));
    dp.push_back(Polynomial(1));
    for (std::uint32_t k = 1; k <= degs[v]; ++k) {
      np.push_back(np.back() * f.num());
      dp.push_back(dp.back() * f.den());
    }
  }
  Polynomial acc;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    Monomial rest = m;
    for (const auto& [v, f] : bindings) {
      auto e = m[v];
      rest = rest.with(v, 0);
      term *= num_pows[v][e] * den_pows[v][degs[v] - e];
    }
    if (!rest.is_one()) term *= Polynomial::monomial(p.table(), rest, 1);
    acc += term;
  }
  return RationalFunction(acc, common);
}

RationalFunction RationalFunction::subst(const std::map<std::size_t, RationalFunction>& bindings) const {
  return invop::subst(num_, bindings) / invop::subst(den_, bindings);
}

Rational RationalFunction::eval(const std::map<std::size_t, Rational>& point) const {
  Rational d = den_.eval(point);
  if (d == 0) {
    std::ostringstream os;
    os << "denominator " << den_ << " vanishes at {";
    bool first = true;
    TablePtr t = table();
    for (const auto& [v, x] : point) {
      os << (first ? "" : ", ") << (t && v < t->size() ? (*t)[v].name : std::to_string(v)) << "=" << x.get_str();
      first = false;
    }
    os << "}";
    throw std::domain_error(os.str());
  }
  return num_.eval(point) / d;
}

std::string RationalFunction::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  if (f.den().is_constant() && f.den().constant_term() == 1) return os << f.num();
  return os << "(" << f.num() << ")/(" << f.den() << ")";
}

}  // namespace invop
