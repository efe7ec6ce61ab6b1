#include <gtest/gtest.h>

#include "invop/diff_operator.hpp"
#include "invop/random_operator.hpp"
#include "invop/reference_operators.hpp"
#include "invop/text_format.hpp"

namespace invop {
namespace {

TEST(diff_operator, canonical_commutation) {
  DiffOperator d = DiffOperator::partial(2, 1, "y12");
  DiffOperator y = DiffOperator::multiplication(2, 1, Polynomial::variable(coordinate_table(2, 1), "y12"));
  EXPECT_EQ(commutator(d, y), DiffOperator::identity(2, 1));
  DiffOperator dv = DiffOperator::partial(2, 1, "v11");
  EXPECT_TRUE(commutator(dv, y).is_zero());
}

TEST(diff_operator, compose_matches_serial_reference) {
  Sampler s(3);
  for (int i = 0; i < 6; ++i) {
    DiffOperator a = random_operator(s, 2, 1, 2, 4, 2), b = random_operator(s, 2, 1, 3, 4, 2);
    EXPECT_EQ(compose(a, b), compose_serial(a, b));
  }
}

TEST(diff_operator, compose_is_associative_and_applies_in_order) {
  Sampler s(5);
  TablePtr t = coordinate_table(1, 1);
  for (int i = 0; i < 4; ++i) {
    DiffOperator a = random_operator(s, 1, 1, 2, 3, 2), b = random_operator(s, 1, 1, 2, 3, 2),
                 c = random_operator(s, 1, 1, 1, 3, 1);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    RationalFunction f = parse_infix("y11^3*v11^2 + 2*v11 - 1/3", t);
    EXPECT_EQ(apply(compose(a, b), f), apply(a, apply(b, f)));
  }
}

TEST(diff_operator, commutator_jacobi_identity) {
  Sampler s(7);
  DiffOperator a = random_operator(s, 1, 1, 2, 3, 2), b = random_operator(s, 1, 1, 2, 3, 2),
               c = random_operator(s, 1, 1, 2, 3, 2);
  DiffOperator sum = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                     commutator(c, commutator(a, b));
  EXPECT_TRUE(sum.is_zero());
}

TEST(diff_operator, apply_to_function) {
  TablePtr t = coordinate_table(2, 1);
  DiffOperator psi = reference::psi_2_1();
  // Psi (v11^2) = 2 y11, Psi (v11 v12) = 2 y12
  EXPECT_EQ(apply(psi, parse_infix("v11^2", t)), parse_infix("2*y11", t));
  EXPECT_EQ(apply(psi, parse_infix("v11*v12", t)), parse_infix("2*y12", t));
  EXPECT_EQ(apply(psi, parse_infix("y11/y22", t)), RationalFunction());
}

TEST(diff_operator, proportionality) {
  DiffOperator psi = reference::psi_2_1();
  EXPECT_EQ(proportionality(Rational(-5, 2) * psi, psi), Rational(-5, 2));
  EXPECT_FALSE(proportionality(psi + reference::d1_2_1(), psi).has_value());
  EXPECT_EQ(proportionality(DiffOperator(2, 1), psi), Rational(0));
}

TEST(diff_operator, add_term_drops_zero_coefficients) {
  DiffOperator d(1, 0);
  Monomial alpha({2});
  d.add_term(alpha, RationalFunction(3));
  d.add_term(alpha, RationalFunction(-3));
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.order(), 0u);
}

TEST(diff_operator, serialize_round_trip) {
  Sampler s(9);
  for (int i = 0; i < 5; ++i) {
    DiffOperator d = random_operator(s, 2, 1, 3, 5, 2);
    d += DiffOperator::multiplication(2, 1, parse_infix("1/(y11*y22 - y12^2)", coordinate_table(2, 1)));
    EXPECT_EQ(parse_operator_text(serialize(d)), d);
  }
  EXPECT_THROW(parse_operator_text("(op 2 1 (term 1 (w9 1)))"), std::invalid_argument);
}

TEST(diff_operator, latex_output) {
  std::string s = latex(reference::psi_2_1());
  EXPECT_NE(s.find("\\partial"), std::string::npos);
  EXPECT_NE(s.find("y_{11}"), std::string::npos);
}

}  // namespace
}  // namespace invop
