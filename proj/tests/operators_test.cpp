#include <gtest/gtest.h>

#include "invop/invariance.hpp"
#include "invop/operator_matrix.hpp"
#include "invop/operator_spec.hpp"
#include "invop/reference_operators.hpp"
#include "invop/sampling.hpp"

namespace invop {
namespace {

TEST(operator_constructors, match_expanded_closed_forms) {
  EXPECT_EQ(build_operator("D:j=1", 2, 1), reference::d1_2_1());
  EXPECT_EQ(build_operator("D:j=2", 2, 1), reference::d2_2_1());
  EXPECT_EQ(build_operator("Psi:p=1,q=1", 2, 1), reference::psi_2_1());
  EXPECT_EQ(build_operator("Delta:p=1,q=1", 2, 1), reference::delta_2_1());
  EXPECT_EQ(build_operator("Laplacian", 2, 0), reference::laplacian_2_0());
}

TEST(operator_constructors, n1_forms) {
  // tr(Y dY) = y d/dy and dV Y dV^T = y d^2/dv^2 on P_1 x R
  EXPECT_EQ(build_operator("Selberg:i=1", 1, 1), operator_from_terms(1, 1, {{"y11", "y11"}}));
  EXPECT_EQ(build_operator("Psi:p=1,q=1", 1, 1), operator_from_terms(1, 1, {{"y11", "v11^2"}}));
  EXPECT_EQ(build_operator("D:j=1", 1, 0), operator_from_terms(1, 0, {{"2*y11", "y11"}}));
}

TEST(operator_constructors, spec_round_trip) {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}})
    for (const auto& spec : all_operator_specs(n, m)) {
      OperatorSpec again = parse_operator_spec(spec.text());
      EXPECT_EQ(again.text(), spec.text());
      EXPECT_EQ(build_operator(again, n, m), build_operator(spec, n, m)) << spec.text();
    }
}

TEST(operator_constructors, errors) {
  EXPECT_THROW(build_operator("D:j=3", 2, 1), std::invalid_argument);
  EXPECT_THROW(build_operator("Psi:p=1,q=2", 2, 1), std::invalid_argument);
  EXPECT_THROW(build_operator("M:M=[[0]]", 2, 1), std::domain_error);
  EXPECT_THROW(parse_operator_spec("D:k=1"), std::invalid_argument);
  EXPECT_THROW(parse_operator_spec("Nope:j=1"), std::invalid_argument);
  EXPECT_THROW(parse_operator_spec("Laplacian:A=-1"), std::invalid_argument);
}

TEST(operator_matrix, determinant_rejects_noncommuting_entries) {
  OperatorMatrix a(1, 0, 2, 2);
  a(0, 0) = DiffOperator::multiplication(1, 0, Polynomial::variable(coordinate_table(1, 0), "y11"));
  a(1, 1) = DiffOperator::partial(1, 0, "y11");
  EXPECT_THROW(determinant(a), std::invalid_argument);
  a(1, 1) = DiffOperator::identity(1, 0) * Rational(3);
  EXPECT_EQ(determinant(a), a(0, 0) * Rational(3));
}

TEST(invariance, detects_non_invariant_operator) {
  Sampler s(8);
  ActionMap act(s.group_element(2, 1));
  InvarianceReport r = invariance_check(DiffOperator::partial(2, 1, "y11"), act, 2);
  EXPECT_FALSE(r.invariant);
  ASSERT_TRUE(r.first_failure.has_value());
  EXPECT_FALSE(invariance_check_reference(DiffOperator::partial(2, 1, "y11"), act, 2).invariant);
}

TEST(invariance, parallel_sweep_agrees_with_reference) {
  Sampler s(9);
  for (const char* spec : {"D:j=1", "Psi:p=1,q=1", "Delta:p=1,q=1"}) {
    ActionMap act(s.group_element(2, 1));
    DiffOperator d = build_operator(spec, 2, 1);
    InvarianceReport fast = invariance_check(d, act, 3), slow = invariance_check_reference(d, act, 3);
    EXPECT_TRUE(fast.invariant) << spec << ": " << fast.detail;
    EXPECT_EQ(fast.invariant, slow.invariant);
    EXPECT_EQ(fast.monomials_checked, slow.monomials_checked);
  }
}

TEST(invariance, pushforward_of_invariant_operator_is_itself) {
  Sampler s(10);
  ActionMap act(s.group_element(2, 1));
  DiffOperator d = build_operator("D:j=2", 2, 1);
  EXPECT_EQ(pushforward(d, act), d);
  EXPECT_NE(pushforward(DiffOperator::partial(2, 1, "v11"), act), DiffOperator::partial(2, 1, "v11"));
}

TEST(invariance, monomial_enumeration) {
  // C(3 + 2, 2) monomials of degree <= 2 in 3 variables
  EXPECT_EQ(monomials_up_to(3, 2).size(), 10u);
  EXPECT_EQ(monomials_up_to(0, 4).size(), 1u);
}

}  // namespace
}  // namespace invop
