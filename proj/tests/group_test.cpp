#include <gtest/gtest.h>

#include "invop/group.hpp"
#include "invop/sampling.hpp"

namespace invop {
namespace {

TEST(group, associativity_and_inverse) {
  Sampler s(1);
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 0}}) {
    GroupElement a = s.group_element(n, m), b = s.group_element(n, m), c = s.group_element(n, m);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_EQ(multiply(a, inverse(a)), identity_element(n, m));
    EXPECT_EQ(multiply(inverse(a), a), identity_element(n, m));
  }
}

TEST(group, action_is_compatible_with_product) {
  Sampler s(2);
  for (auto [n, m] : {std::pair{1, 2}, {2, 1}, {2, 2}}) {
    GroupElement a = s.group_element(n, m), b = s.group_element(n, m);
    Point p = s.point(n, m);
    EXPECT_EQ(act(multiply(a, b), p), act(a, act(b, p)));
    EXPECT_EQ(act(identity_element(n, m), p), p);
    EXPECT_TRUE(is_positive_definite(act(a, p).y));
  }
}

TEST(group, validation_errors) {
  EXPECT_THROW(make_group_element(QMatrix{{1, 2}, {2, 4}}, QMatrix(0, 2)), std::domain_error);
  EXPECT_THROW(make_group_element(QMatrix::identity(2), QMatrix(1, 3)), std::invalid_argument);
  EXPECT_THROW(make_point(QMatrix{{1, 2}, {2, 1}}, QMatrix(0, 2)), std::exception);
  EXPECT_THROW(make_point(QMatrix{{2, 1}, {0, 2}}, QMatrix(0, 2)), std::exception);
}

TEST(lie_algebra, bracket_jacobi_and_antisymmetry) {
  Sampler s(3);
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    AlgebraElement a = s.algebra_element(n, m), b = s.algebra_element(n, m), c = s.algebra_element(n, m);
    AlgebraElement j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    EXPECT_TRUE(j.x.is_zero_matrix() && j.z.is_zero_matrix());
    AlgebraElement as = bracket(a, b) + bracket(b, a);
    EXPECT_TRUE(as.x.is_zero_matrix() && as.z.is_zero_matrix());
  }
}

TEST(lie_algebra, adjoint_is_an_automorphism) {
  Sampler s(4);
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    GroupElement g = s.group_element(n, m), h = s.group_element(n, m);
    AlgebraElement a = s.algebra_element(n, m), b = s.algebra_element(n, m);
    EXPECT_EQ(adjoint(g, bracket(a, b)), bracket(adjoint(g, a), adjoint(g, b)));
    EXPECT_EQ(adjoint(multiply(g, h), a), adjoint(g, adjoint(h, a)));
  }
}

TEST(lie_algebra, killing_form_closed_equals_trace) {
  Sampler s(5);
  for (auto [n, m] : {std::pair{1, 0}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    for (int i = 0; i < 3; ++i) {
      AlgebraElement a = s.algebra_element(n, m), b = s.algebra_element(n, m);
      EXPECT_EQ(killing_closed(a, b), killing_trace(a, b));
    }
  }
}

TEST(lie_algebra, killing_form_on_basis_at_n1_m1) {
  // (2n + m) tr(X1 X2) - 2 tr X1 tr X2 = 3 - 2 on (1, 0)
  auto basis = algebra_basis(1, 1);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(killing_trace(basis[0], basis[0]), 1);
  EXPECT_EQ(killing_trace(basis[1], basis[1]), 0);
}

TEST(sampling, cayley_is_orthogonal_in_both_components) {
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    for (int n = 1; n <= 3; ++n)
      for (auto comp : {OrthogonalComponent::special, OrthogonalComponent::reflected}) {
        QMatrix k = k_sample(seed, n, comp);
        EXPECT_TRUE(is_orthogonal(k));
        EXPECT_EQ(determinant(k), comp == OrthogonalComponent::special ? 1 : -1);
      }
  EXPECT_THROW(cayley(QMatrix{{0, 1}, {1, 0}}), std::exception);
}

TEST(sampling, deterministic_for_a_seed) {
  Sampler a(42), b(42), c(43);
  Point pa = a.point(2, 1), pb = b.point(2, 1), pc = c.point(2, 1);
  EXPECT_EQ(pa, pb);
  EXPECT_NE(pa, pc);
  EXPECT_EQ(a.group_element(2, 2), b.group_element(2, 2));
}

}  // namespace
}  // namespace invop
