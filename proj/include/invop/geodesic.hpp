#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace invop {

struct FloatPoint {
  Eigen::MatrixXd y;  // n x n
  Eigen::MatrixXd v;  // m x n
};

/// Curve through the origin with direction (k^T diag(2 lambda) k, Z).
struct GeodesicParams {
  Eigen::MatrixXd k;       // n x n orthogonal
  Eigen::VectorXd lambda;  // n
  Eigen::MatrixXd z;       // m x n
};

/// Throws std::invalid_argument when k^T k differs from I by more than 1e-12,
/// shapes disagree, or every lambda_j and Z entry is zero.
void validate(const GeodesicParams& params);

/// (k^T e^{2 lambda t} k, Z k^T diag((e^{lambda_j t} - 1) / lambda_j) k), with
/// the entry t where lambda_j = 0.
FloatPoint geodesic_eval(const GeodesicParams& params, double t);
/// Closed-form derivative of geodesic_eval in t.
FloatPoint geodesic_velocity(const GeodesicParams& params, double t);
/// (k^T diag(2 lambda) k, Z).
FloatPoint geodesic_tangent0(const GeodesicParams& params);

/// Squared speed A tr(Y^{-1} Y' Y^{-1} Y') + B tr(Y^{-1} V'^T V').
double squared_speed(const FloatPoint& at, const FloatPoint& velocity, double a, double b);

/// Integral of the speed over [t0, t1] by adaptive Gauss-Kronrod quadrature.
double path_length(const std::function<FloatPoint(double)>& position,
                   const std::function<FloatPoint(double)>& velocity, double t0, double t1, double a, double b);

enum class DistanceConvention { as_printed, sqrt_scaled };

struct DistanceResult {
  double value = 0;
  std::vector<double> t;      // generalized eigenvalues of (Y1, Y0), ascending
  std::vector<double> delta;  // column norms squared of (V1 - V0) g^T
  Eigen::MatrixXd g;          // g Y0 g^T = I, g Y1 g^T = diag(t)
  DistanceConvention convention = DistanceConvention::as_printed;
  double quadrature_error = 0;
};

/// A (sum (ln t_j)^2)^{1/2} + B int_0^1 (sum Delta_j e^{-(ln t_j) s})^{1/2} ds,
/// with A, B replaced by their square roots under sqrt_scaled. Throws
/// std::invalid_argument for non positive definite Y and std::runtime_error
/// when the quadrature misses the 1e-10 absolute tolerance.
DistanceResult distance(const FloatPoint& p0, const FloatPoint& p1, double a, double b,
                        DistanceConvention convention = DistanceConvention::as_printed);

std::string to_string(DistanceConvention c);
DistanceConvention parse_distance_convention(const std::string& s);

}  // namespace invop
