#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invop/diff_operator.hpp"
#include "invop/invariance.hpp"
#include "invop/operator_spec.hpp"

namespace invop {

/// A tr(Y^{-1} dY Y^{-1} dY) + B tr(Y^{-1} dV^T dV) in the coordinates of
/// coordinate_table(n, m). A and B are formal unless given.
struct MetricTensor {
  int n = 1;
  int m = 0;
  RFMatrix g;

  /// Entries with coordinates bound to the values of `p`; A and B stay formal.
  RFMatrix at(const Point& p) const;
};

MetricTensor metric_matrix(int n, int m, std::optional<Rational> a = std::nullopt,
                           std::optional<Rational> b = std::nullopt);

/// (det Y)^{-exponent}, with exponent (n + m + 1) / 2 possibly half-integral.
struct VolumeDensity {
  RationalFunction det_y;
  Rational exponent;

  /// (det Y)^{-2 exponent}, which is rational.
  RationalFunction squared() const;
  std::string to_string() const;
};

VolumeDensity volume_density(int n, int m);

struct GeometryInvariance {
  bool metric = true;
  bool volume = true;
  std::size_t points = 0;
  std::string detail;
};

/// Checks J^T G(phi(p)) J == G(p) and the volume density identity
/// (det Y*)^{-(n+m+1)} det(J)^2 == (det Y)^{-(n+m+1)} at `points` seeded
/// points, together with det(J)^2 == det(g)^{2(n+m+1)}.
GeometryInvariance metric_and_volume_invariance(const ActionMap& action, int points, std::uint64_t seed);

struct LaplaceBeltramiLimits {
  int max_n = 2;
  int max_m = 1;
};

/// Laplace-Beltrami operator of the metric, assembled as
///   G^{ij} d_i d_j + (d_i G^{ij} + G^{ij} d_i(det G) / (2 det G)) d_j.
/// Throws std::invalid_argument when (n, m) exceeds the limits.
DiffOperator laplace_beltrami(const MetricTensor& metric, const LaplaceBeltramiLimits& limits = {});

struct LaplacianComparison {
  int n = 1;
  int m = 0;
  LaplacianConvention convention = LaplacianConvention::paper;
  bool equal = false;
  std::string difference;
};

/// Laplace-Beltrami minus the closed Laplacian formula, with A and B formal.
LaplacianComparison compare_laplacian(int n, int m, LaplacianConvention convention);

}  // namespace invop
