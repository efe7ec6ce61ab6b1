#include <gtest/gtest.h>

#include <cmath>

#include "invop/geodesic.hpp"
#include "invop/invariance.hpp"
#include "invop/metric.hpp"
#include "invop/reference_operators.hpp"
#include "invop/sampling.hpp"

namespace invop {
namespace {

TEST(metric, at_origin) {
  MetricTensor g = metric_matrix(2, 1, Rational(3), Rational(5));
  RFMatrix at = g.at(origin(2, 1));
  // order y11, y12, y22, v11, v12
  std::vector<Rational> diag{3, 6, 3, 5, 5};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(at(i, j), RationalFunction(i == j ? diag[i] : Rational(0)));
  EXPECT_THROW(metric_matrix(1, 1, Rational(0)), std::invalid_argument);
  EXPECT_THROW(metric_matrix(1, 1, Rational(1), Rational(-1)), std::invalid_argument);
}

TEST(metric, yv_cross_block_vanishes) {
  MetricTensor g = metric_matrix(2, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 7; ++j) {
      EXPECT_TRUE(g.g(i, j).is_zero());
      EXPECT_TRUE(g.g(j, i).is_zero());
    }
}

TEST(metric, volume_density_exponent) {
  EXPECT_EQ(volume_density(1, 1).exponent, Rational(3, 2));
  EXPECT_EQ(volume_density(2, 1).exponent, Rational(2));
  TablePtr t = coordinate_table(1, 1);
  EXPECT_EQ(volume_density(1, 1).squared(), RationalFunction(Polynomial(1), Polynomial::variable(t, "y11").pow(3)));
}

TEST(metric, invariant_under_the_action) {
  Sampler s(12);
  for (auto [n, m] : {std::pair{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    GeometryInvariance r = metric_and_volume_invariance(ActionMap(s.group_element(n, m)), 3, 1);
    EXPECT_TRUE(r.metric) << r.detail;
    EXPECT_TRUE(r.volume) << r.detail;
  }
  GeometryInvariance id = metric_and_volume_invariance(ActionMap(identity_element(2, 1)), 2, 0);
  EXPECT_TRUE(id.metric && id.volume);
  // scalar g = 3 scales Y by 9 and V by 3
  GroupElement three = make_group_element(QMatrix{{3}}, QMatrix{{Rational(1, 2)}});
  GeometryInvariance sc = metric_and_volume_invariance(ActionMap(three), 2, 0);
  EXPECT_TRUE(sc.metric && sc.volume);
}

TEST(laplace_beltrami, low_dimensional_forms) {
  EXPECT_EQ(laplace_beltrami(metric_matrix(1, 0)), operator_from_terms(1, 0, {{"y11^2/A", "y11^2"}, {"y11/A", "y11"}}));
  EXPECT_EQ(laplace_beltrami(metric_matrix(1, 1)),
            operator_from_terms(1, 1, {{"y11^2/A", "y11^2"}, {"y11/(2*A)", "y11"}, {"y11/B", "v11^2"}}));
  EXPECT_EQ(laplace_beltrami(metric_matrix(2, 0)), reference::laplacian_2_0());
}

TEST(laplace_beltrami, agrees_with_closed_laplacian) {
  for (auto [n, m] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}}) {
    LaplacianComparison c = compare_laplacian(n, m, LaplacianConvention::paper);
    EXPECT_TRUE(c.equal) << n << "," << m << ": " << c.difference;
  }
}

TEST(laplace_beltrami, size_guard) {
  EXPECT_THROW(laplace_beltrami(metric_matrix(3, 0)), std::invalid_argument);
  EXPECT_THROW(laplace_beltrami(metric_matrix(2, 2)), std::invalid_argument);
}

GeodesicParams params(Eigen::MatrixXd k, Eigen::VectorXd lambda, Eigen::MatrixXd z) { return {k, lambda, z}; }

TEST(geodesic, starts_at_origin_with_given_tangent) {
  double c = std::cos(0.3), s = std::sin(0.3);
  Eigen::MatrixXd k(2, 2);
  k << c, -s, s, c;
  Eigen::MatrixXd z(1, 2);
  z << 0.5, -1.0;
  GeodesicParams p = params(k, Eigen::Vector2d(0.7, 0.0), z);
  FloatPoint o = geodesic_eval(p, 0.0);
  EXPECT_TRUE(o.y.isApprox(Eigen::MatrixXd::Identity(2, 2)));
  EXPECT_NEAR(o.v.norm(), 0.0, 1e-15);
  FloatPoint v0 = geodesic_velocity(p, 0.0), t0 = geodesic_tangent0(p);
  EXPECT_TRUE(v0.y.isApprox(t0.y, 1e-12));
  EXPECT_TRUE(v0.v.isApprox(t0.v, 1e-12));
  // closed-form velocity against a central difference
  double h = 1e-6, t = 0.8;
  FloatPoint a = geodesic_eval(p, t + h), b = geodesic_eval(p, t - h), v = geodesic_velocity(p, t);
  EXPECT_TRUE(((a.y - b.y) / (2 * h)).isApprox(v.y, 1e-8));
  EXPECT_TRUE(((a.v - b.v) / (2 * h)).isApprox(v.v, 1e-8));
}

TEST(geodesic, n1_is_exponential) {
  GeodesicParams p = params(Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Ones(1), Eigen::MatrixXd(0, 1));
  for (double t : {0.0, 0.5, 1.0, 2.0}) EXPECT_NEAR(geodesic_eval(p, t).y(0, 0), std::exp(2 * t), 1e-12 * std::exp(2 * t));
}

TEST(geodesic, validation) {
  EXPECT_THROW(validate(params(Eigen::MatrixXd::Constant(1, 1, 2.0), Eigen::VectorXd::Ones(1), Eigen::MatrixXd(0, 1))),
               std::invalid_argument);
  EXPECT_THROW(validate(params(Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Zero(1), Eigen::MatrixXd::Zero(1, 1))),
               std::invalid_argument);
  EXPECT_THROW(validate(params(Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Ones(1), Eigen::MatrixXd(0, 2))),
               std::invalid_argument);
}

FloatPoint fp(Eigen::MatrixXd y, Eigen::MatrixXd v) { return {y, v}; }

TEST(distance, pure_y_part) {
  Eigen::MatrixXd y1 = Eigen::MatrixXd::Identity(2, 2);
  y1(0, 0) = std::exp(2.0);
  DistanceResult r = distance(fp(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd(0, 2)), fp(y1, Eigen::MatrixXd(0, 2)), 1, 1);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  DistanceResult s = distance(fp(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd(0, 2)), fp(y1, Eigen::MatrixXd(0, 2)), 4, 1,
                              DistanceConvention::sqrt_scaled);
  EXPECT_NEAR(s.value, 4.0, 1e-12);
}

TEST(distance, symmetric_without_v) {
  Eigen::MatrixXd y0(2, 2), y1(2, 2);
  y0 << 2, 0.5, 0.5, 1;
  y1 << 1, -0.3, -0.3, 3;
  double d01 = distance(fp(y0, Eigen::MatrixXd(0, 2)), fp(y1, Eigen::MatrixXd(0, 2)), 1, 1).value;
  double d10 = distance(fp(y1, Eigen::MatrixXd(0, 2)), fp(y0, Eigen::MatrixXd(0, 2)), 1, 1).value;
  EXPECT_NEAR(d01, d10, 1e-9);
}

TEST(distance, rejects_bad_input) {
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 2, 2, 1;
  EXPECT_THROW(distance(fp(bad, Eigen::MatrixXd(0, 2)), fp(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd(0, 2)), 1, 1),
               std::invalid_argument);
  EXPECT_THROW(parse_distance_convention("cubic"), std::invalid_argument);
  EXPECT_EQ(parse_distance_convention(to_string(DistanceConvention::sqrt_scaled)), DistanceConvention::sqrt_scaled);
}

TEST(distance, equals_length_of_pure_y_geodesic) {
  double c = std::cos(1.1), s = std::sin(1.1);
  Eigen::MatrixXd k(2, 2);
  k << c, -s, s, c;
  GeodesicParams p = params(k, Eigen::Vector2d(0.4, -0.25), Eigen::MatrixXd(0, 2));
  double len = path_length([&](double t) { return geodesic_eval(p, t); }, [&](double t) { return geodesic_velocity(p, t); },
                           0, 1, 1, 1);
  double d = distance(geodesic_eval(p, 0), geodesic_eval(p, 1), 1, 1).value;
  EXPECT_NEAR(len, d, 1e-9);
}

}  // namespace
}  // namespace invop
