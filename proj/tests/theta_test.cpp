#include <gtest/gtest.h>

#include "invop/invariant_poly.hpp"
#include "invop/reference_operators.hpp"
#include "invop/text_format.hpp"
#include "invop/theta.hpp"

namespace invop {
namespace {

DiffOperator theta(const std::string& text, int n, int m) {
  return theta_closed(parse_invariant_poly(text, n, m)).op;
}

TEST(group_exp, truncated_series_at_n2_m1) {
  TruncatedGroupExp e = exp_truncated(2, 1, 3);
  TablePtr t = exp_parameter_table(2, 1);
  Polynomial a1 = parse_infix_polynomial(
      "1 + t11 + (t11^2 + t12^2)/2 + (t11^3 + 2*t11*t12^2 + t22*t12^2)/6", t);
  Polynomial b1 = parse_infix_polynomial(
      "s11 - (s11*t11 + s12*t12)/2 + (s11*(t11^2 + t12^2) + s12*(t11*t12 + t22*t12))/6", t);
  EXPECT_EQ(e.h(0, 0), a1);
  EXPECT_EQ(e.mu(0, 0), b1);
  EXPECT_EQ(e.h(0, 1), e.h(1, 0));
}

TEST(group_exp, degree_zero_is_identity) {
  TruncatedGroupExp e = exp_truncated(2, 1, 0);
  EXPECT_EQ(e.h(0, 0), Polynomial(1));
  EXPECT_TRUE(e.h(0, 1).is_zero());
  EXPECT_TRUE(e.mu(0, 0).is_zero());
  EXPECT_THROW(exp_truncated(2, 1, -1), std::invalid_argument);
}

TEST(invariant_poly, families_are_k_invariant) {
  for (const char* text : {"p:j=2", "q:p=1,q=1", "xi:p=1,q=1", "R:j=1,p=1"})
    EXPECT_TRUE(k_invariance_check(parse_invariant_poly(text, 2, 1), 4, 0)) << text;
  EXPECT_FALSE(k_invariance_check(parse_invariant_poly("x11", 2, 1), 4, 0));
}

TEST(theta, closed_form_at_n1) {
  EXPECT_EQ(theta("p:j=1", 1, 1), operator_from_terms(1, 1, {{"2*y11", "y11"}}));
  EXPECT_EQ(theta("q:p=1,q=1", 1, 1), operator_from_terms(1, 1, {{"y11", "v11^2"}}));
  EXPECT_EQ(theta("q:p=1,q=2", 1, 2), operator_from_terms(1, 2, {{"y11", "v11 v21"}}));
}

TEST(theta, rejects_non_invariant_polynomial) {
  EXPECT_THROW(theta("x11", 2, 0), std::invalid_argument);
  InvariantPolynomial p = parse_invariant_poly("x12", 2, 0);
  EXPECT_THROW(theta_local(p, identity_element(2, 0)), std::invalid_argument);
}

TEST(theta, n2_generators) {
  EXPECT_EQ(theta("p:j=1", 2, 1), reference::d1_2_1());
  EXPECT_EQ(theta("p:j=2", 2, 1), reference::d2_2_1());
  EXPECT_EQ(theta("q:p=1,q=1", 2, 1), reference::psi_2_1());
}

TEST(theta, phi_differs_from_expanded_delta_by_psi_multiple) {
  DiffOperator delta = theta("xi:p=1,q=1", 2, 1);
  EXPECT_EQ(delta - reference::delta_2_1(), Rational(-3, 2) * reference::psi_2_1());
}

TEST(theta, d2_psi_commutator_without_third_order_correction) {
  DiffOperator lhs = commutator(reference::d2_2_1(), reference::psi_2_1());
  EXPECT_EQ(lhs, reference::d2_psi_commutator_2_1(false));
  EXPECT_NE(lhs, reference::d2_psi_commutator_2_1(true));
}

TEST(theta, local_symbol_is_linear) {
  InvariantPolynomial p = parse_invariant_poly("p:j=2", 2, 1), q = parse_invariant_poly("q:p=1,q=1", 2, 1);
  InvariantPolynomial sum = custom_invariant_poly(p.body * Rational(3) + q.body * Rational(-1, 2), 2, 1);
  GroupElement rep = make_group_element(QMatrix{{2, 0}, {1, 1}}, QMatrix{{Rational(1, 3), -1}});
  auto sp = theta_local(p, rep).symbol, sq = theta_local(q, rep).symbol, ss = theta_local(sum, rep).symbol;
  std::map<Monomial, Rational, GrlexDescending> expect;
  for (const auto& [k, c] : sp) expect[k] += 3 * c;
  for (const auto& [k, c] : sq) expect[k] -= c / 2;
  std::erase_if(expect, [](const auto& kv) { return kv.second == 0; });
  EXPECT_EQ(ss, expect);
}

TEST(theta, conjecture_holds_for_n_up_to_2) {
  auto entries = conjecture_check(2);
  EXPECT_EQ(entries.size(), 3u);
  for (const auto& e : entries) {
    EXPECT_TRUE(e.asserted);
    EXPECT_TRUE(e.equal) << "n=" << e.n << " i=" << e.i << ": " << e.difference;
  }
}

TEST(solve_exact, solves_and_reports_errors) {
  QMatrix a{{1, 0}, {0, 2}, {1, 1}}, x{{3}, {Rational(1, 2)}};
  EXPECT_EQ(solve_exact(a, a * x), x);
  EXPECT_THROW(solve_exact(a, QMatrix{{1}, {1}, {5}}, {"c"}), std::runtime_error);
  EXPECT_THROW(solve_exact(QMatrix{{1, 2}, {2, 4}}, QMatrix{{1}, {2}}), std::runtime_error);
}

}  // namespace
}  // namespace invop
