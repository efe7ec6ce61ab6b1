#include <gtest/gtest.h>

#include "invop/polynomial.hpp"
#include "invop/random_operator.hpp"
#include "invop/rational_function.hpp"
#include "invop/text_format.hpp"

namespace invop {
namespace {

struct Vars {
  TablePtr t = coordinate_table(2, 1);
  Polynomial y11 = Polynomial::variable(t, "y11");
  Polynomial y12 = Polynomial::variable(t, "y12");
  Polynomial y22 = Polynomial::variable(t, "y22");
  Polynomial v11 = Polynomial::variable(t, "v11");
  Polynomial v12 = Polynomial::variable(t, "v12");
};

TEST(rational, parse_and_canonical_form) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(factorial(5), 120);
}

TEST(monomial, grlex_order) {
  Monomial a({2, 0, 1}), b({1, 2, 0}), c({0, 0, 2});
  EXPECT_GT(grlex_compare(a, c), 0);  // higher degree first
  EXPECT_GT(grlex_compare(a, b), 0);  // same degree, variable 0 decides
  EXPECT_EQ(grlex_compare(a, a), 0);
  EXPECT_EQ(Monomial({1, 0, 0}).length(), 1u);  // trailing zeros trimmed
  EXPECT_TRUE(Monomial({1, 1}).divides(Monomial({2, 1, 3})));
  EXPECT_EQ(Monomial({2, 1, 3}) / Monomial({1, 1}), Monomial({1, 0, 3}));
}

TEST(polynomial, ring_identities) {
  Vars v;
  Polynomial a = v.y11 + v.y12 * Rational(3, 2), b = v.y22 - v.v11, c = v.v12 * v.y11 + Polynomial(2);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a + b).pow(2), a * a + Rational(2) * a * b + b * b);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(polynomial, diff_subst_eval) {
  Vars v;
  Polynomial p = v.y11.pow(3) * v.v12 + Rational(5) * v.y12;
  EXPECT_EQ(p.diff("y11"), Rational(3) * v.y11.pow(2) * v.v12);
  EXPECT_EQ(p.diff("y22"), Polynomial());
  EXPECT_EQ(Polynomial(Rational(4)).diff(0), Polynomial());
  std::map<std::size_t, Polynomial> b{{v.t->index_of("y11"), v.y22 + Polynomial(1)}};
  EXPECT_EQ(p.subst(b), (v.y22 + Polynomial(1)).pow(3) * v.v12 + Rational(5) * v.y12);
  std::map<std::size_t, Rational> pt{{0, 2}, {1, Rational(1, 5)}, {4, -1}};
  EXPECT_EQ(p.eval(pt), Rational(-8 + 1));
  EXPECT_THROW(p.eval({{0, 2}}), std::exception);
}

TEST(polynomial, gcd_of_products) {
  Vars v;
  Polynomial g = v.y11 * v.y22 - v.y12.pow(2);
  Polynomial a = g * (v.v11 + v.y11), b = g * (v.v12 - Polynomial(3)) * v.y12;
  EXPECT_EQ(gcd(a, b), make_monic(g));
  EXPECT_EQ(gcd(v.y11 + Polynomial(1), v.y11 - Polynomial(1)), Polynomial(1));
  EXPECT_EQ(exact_divide(a, g), v.v11 + v.y11);
  EXPECT_THROW(exact_divide(a, v.v12), std::domain_error);
}

TEST(polynomial, gcd_property_on_random_inputs) {
  Sampler s(11);
  for (int i = 0; i < 10; ++i) {
    Polynomial f = random_polynomial(s, 2, 0, 2, 3), a = random_polynomial(s, 2, 0, 2, 3),
               b = random_polynomial(s, 2, 0, 2, 3);
    if (f.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial g = gcd(f * a, f * b);
    EXPECT_NO_THROW(exact_divide(g, f));
    EXPECT_NO_THROW(exact_divide(f * a, g));
    EXPECT_NO_THROW(exact_divide(f * b, g));
  }
}

TEST(rational_function, canonical_form) {
  Vars v;
  Polynomial g = v.y11 * v.y22 - v.y12.pow(2);
  RationalFunction f(Rational(2) * g * v.v11, Rational(4) * g * v.y11);
  EXPECT_EQ(f.num(), Rational(1, 2) * v.v11);
  EXPECT_EQ(f.den(), v.y11);
  EXPECT_EQ(f.den().leading_coefficient(), 1);
  EXPECT_EQ(RationalFunction(v.y11, v.y11), RationalFunction(1));
  EXPECT_THROW(RationalFunction(v.y11, Polynomial()), std::domain_error);
}

TEST(rational_function, field_identities) {
  Vars v;
  RationalFunction a(v.y11, v.y22 + v.v11), b(v.y12 - Polynomial(1), v.y11), c(v.v12);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a - a, RationalFunction());
  EXPECT_EQ(a.pow(-2) * a.pow(2), RationalFunction(1));
  // quotient rule
  std::size_t y11 = v.t->index_of("y11");
  RationalFunction q = a / b;
  EXPECT_EQ(q.diff(y11), (a.diff(y11) * b - a * b.diff(y11)) / (b * b));
}

TEST(rational_function, eval_reports_pole) {
  Vars v;
  RationalFunction f(Polynomial(1), v.y11 - Polynomial(2));
  EXPECT_EQ(f.eval({{0, 3}}), 1);
  EXPECT_THROW(f.eval({{0, 2}}), std::domain_error);
}

TEST(text_format, exact_round_trip) {
  Vars v;
  Polynomial p = Rational(3, 2) * v.y11.pow(2) * v.v12 - Polynomial(1);
  EXPECT_EQ(parse_polynomial_text(serialize(p), v.t), p);
  RationalFunction f(p, v.y22 + v.v11);
  EXPECT_EQ(parse_rational_function_text(serialize(f), v.t), f);
  EXPECT_EQ(parse_infix("3/2*y11^2*v12 - 1", v.t), RationalFunction(p));
  EXPECT_EQ(parse_infix("(y11 - y12)/(y11 - y12)", v.t), RationalFunction(1));
  EXPECT_THROW(parse_infix("y11 +", v.t), std::invalid_argument);
  EXPECT_THROW(parse_infix("w7", v.t), std::invalid_argument);
}

}  // namespace
}  // namespace invop
