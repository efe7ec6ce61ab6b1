#pragma once

#include <cstdint>
#include <random>

#include "invop/group.hpp"

namespace invop {

enum class OrthogonalComponent { special, reflected };

/// Seeded source of small-height exact rationals and derived objects.
/// Numerators lie in [-height, height], denominators in [1, height].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int height = 10) : rng_(seed), height_(height) {}

  Rational rational();
  Rational nonzero_rational();
  QMatrix matrix(std::size_t rows, std::size_t cols);
  QMatrix symmetric(std::size_t n);
  QMatrix skew_symmetric(std::size_t n);
  /// Invertible n x n matrix (rejection on singularity).
  QMatrix invertible(std::size_t n);

  GroupElement group_element(int n, int m);
  AlgebraElement algebra_element(int n, int m);
  /// Element of p*: symmetric X part.
  AlgebraElement p_star_element(int n, int m);
  /// Random point of P_{n,m} as g g^T with random invertible g.
  Point point(int n, int m);
  QMatrix orthogonal(int n, OrthogonalComponent component);

  std::mt19937_64& engine() { return rng_; }
  int height() const { return height_; }

 private:
  std::mt19937_64 rng_;
  int height_;
};

/// Cayley transform (I - A)(I + A)^{-1}; A must be skew-symmetric. Throws
/// std::domain_error when I + A is singular.
QMatrix cayley(const QMatrix& skew);

/// Exact rational orthogonal matrix: Cayley transform of a seeded random skew
/// matrix, times diag(-1, 1, ..., 1) for the reflected component.
QMatrix k_sample(std::uint64_t seed, int n, OrthogonalComponent component, int height = 10);

bool is_orthogonal(const QMatrix& k);

}  // namespace invop
