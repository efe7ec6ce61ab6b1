#include "invop/geodesic.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace invop {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double quadrature_tolerance = 1e-10;

template <typename F>
double integrate(F f, double t0, double t1, double* error) {
  double err = 0;
  double value = gauss_kronrod<double, 31>::integrate(f, t0, t1, 20, 1e-13, &err);
  if (err > quadrature_tolerance)
    throw std::runtime_error("quadrature did not reach the absolute tolerance 1e-10 (error estimate " +
                             std::to_string(err) + ")");
  if (error) *error = err;
  return value;
}

Eigen::MatrixXd conjugate_diagonal(const GeodesicParams& p, const Eigen::VectorXd& d) {
  return p.k.transpose() * d.asDiagonal() * p.k;
}

void require_positive_definite(const Eigen::MatrixXd& y, const char* name) {
  if (y.rows() != y.cols() || !y.isApprox(y.transpose(), 1e-12))
    throw std::invalid_argument(std::string("distance: ") + name + " is not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(y);
  if (llt.info() != Eigen::Success) throw std::invalid_argument(std::string("distance: ") + name + " is not positive definite");
}

}  // namespace

void validate(const GeodesicParams& params) {
  const auto n = params.k.rows();
  if (n < 1 || params.k.cols() != n || params.lambda.size() != n || params.z.cols() != n)
    throw std::invalid_argument("geodesic: shapes of k, lambda and Z disagree");
  if ((params.k.transpose() * params.k - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("geodesic: k is not orthogonal");
  bool all_zero = params.lambda.isZero(0) && (params.z.size() == 0 || params.z.isZero(0));
  if (all_zero) throw std::invalid_argument("geodesic: lambda and Z are all zero");
}

FloatPoint geodesic_eval(const GeodesicParams& params, double t) {
  validate(params);
  const auto n = params.lambda.size();
  Eigen::VectorXd e(n), w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double l = params.lambda(j);
    e(j) = std::expm1(2 * l * t);
    w(j) = l == 0 ? t : std::expm1(l * t) / l;
  }
  // I + k^T (e^{2 lambda t} - 1) k, exact at t = 0.
  Eigen::MatrixXd y = Eigen::MatrixXd::Identity(n, n) + conjugate_diagonal(params, e);
  return {y, params.z * conjugate_diagonal(params, w)};
}

FloatPoint geodesic_velocity(const GeodesicParams& params, double t) {
  validate(params);
  const auto n = params.lambda.size();
  Eigen::VectorXd e(n), w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double l = params.lambda(j);
    e(j) = 2 * l * std::exp(2 * l * t);
    w(j) = std::exp(l * t);
  }
  return {conjugate_diagonal(params, e), params.z * conjugate_diagonal(params, w)};
}

FloatPoint geodesic_tangent0(const GeodesicParams& params) {
  validate(params);
  return {conjugate_diagonal(params, 2 * params.lambda), params.z};
}

double squared_speed(const FloatPoint& at, const FloatPoint& velocity, double a, double b) {
  Eigen::MatrixXd yinv = at.y.inverse();
  Eigen::MatrixXd u = yinv * velocity.y;
  double s = a * (u * u).trace();
  if (velocity.v.size() > 0) s += b * (yinv * velocity.v.transpose() * velocity.v).trace();
  return s;
}

double path_length(const std::function<FloatPoint(double)>& position,
                   const std::function<FloatPoint(double)>& velocity, double t0, double t1, double a, double b) {
  auto speed = [&](double t) { return std::sqrt(std::max(0.0, squared_speed(position(t), velocity(t), a, b))); };
  return integrate(speed, t0, t1, nullptr);
}

DistanceResult distance(const FloatPoint& p0, const FloatPoint& p1, double a, double b, DistanceConvention convention) {
  require_positive_definite(p0.y, "Y0");
  require_positive_definite(p1.y, "Y1");
  if (p0.y.rows() != p1.y.rows() || p0.v.rows() != p1.v.rows() || p0.v.cols() != p1.v.cols())
    throw std::invalid_argument("distance: points have different dimensions");
  if (!(a > 0) || !(b > 0)) throw std::invalid_argument("distance: A and B must be positive");

  Eigen::MatrixXd l = p0.y.llt().matrixL();
  Eigen::MatrixXd linv = l.inverse();
  Eigen::MatrixXd c = linv * p1.y * linv.transpose();
  c = (c + c.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
  if (eig.info() != Eigen::Success) throw std::runtime_error("distance: eigendecomposition failed");

  DistanceResult r;
  r.convention = convention;
  r.g = eig.eigenvectors().transpose() * linv;
  const auto n = p0.y.rows();
  Eigen::MatrixXd vt = (p1.v - p0.v) * r.g.transpose();
  std::vector<double> logs;
  double sum_sq = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double tj = eig.eigenvalues()(j);
    if (!(tj > 0)) throw std::invalid_argument("distance: generalized eigenvalue is not positive");
    r.t.push_back(tj);
    logs.push_back(std::log(tj));
    sum_sq += logs.back() * logs.back();
    r.delta.push_back(vt.rows() > 0 ? vt.col(j).squaredNorm() : 0.0);
  }

  double ca = a, cb = b;
  if (convention == DistanceConvention::sqrt_scaled) {
    ca = std::sqrt(a);
    cb = std::sqrt(b);
  }
  auto integrand = [&](double s) {
    double acc = 0;
    for (std::size_t j = 0; j < logs.size(); ++j) acc += r.delta[j] * std::exp(-logs[j] * s);
    return std::sqrt(acc);
  };
  double integral = 0;
  bool any_v = false;
  for (double d : r.delta) any_v = any_v || d > 0;
  if (any_v) integral = integrate(integrand, 0.0, 1.0, &r.quadrature_error);
  r.value = ca * std::sqrt(sum_sq) + cb * integral;
  return r;
}

std::string to_string(DistanceConvention c) { return c == DistanceConvention::as_printed ? "as-printed" : "sqrt-scaled"; }

DistanceConvention parse_distance_convention(const std::string& s) {
  if (s == "as-printed") return DistanceConvention::as_printed;
  if (s == "sqrt-scaled") return DistanceConvention::sqrt_scaled;
  throw std::invalid_argument("unknown distance convention '" + s + "' (expected as-printed or sqrt-scaled)");
}

}  // namespace invop
