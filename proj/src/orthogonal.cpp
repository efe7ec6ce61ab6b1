#include <stdexcept>

#include "invop/sampling.hpp"

namespace invop {

Rational Sampler::rational() {
  std::uniform_int_distribution<long> num(-height_, height_);
  std::uniform_int_distribution<long> den(1, height_);
  Rational r(num(rng_), den(rng_));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational() {
  Rational r;
  do r = rational();
  while (r == 0);
  return r;
}

QMatrix Sampler::matrix(std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
  return m;
}

QMatrix Sampler::symmetric(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rational();
  return m;
}

QMatrix Sampler::skew_symmetric(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rational();
      m(j, i) = -m(i, j);
    }
  return m;
}

QMatrix Sampler::invertible(std::size_t n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QMatrix g = matrix(n, n);
    if (determinant(g) != 0) return g;
  }
  throw std::runtime_error("Sampler: failed to draw an invertible matrix");
}

GroupElement Sampler::group_element(int n, int m) {
  QMatrix g = invertible(static_cast<std::size_t>(n));
  QMatrix lambda = matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  return {std::move(g), std::move(lambda)};
}

AlgebraElement Sampler::algebra_element(int n, int m) {
  QMatrix x = matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  QMatrix z = matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  return {std::move(x), std::move(z)};
}

AlgebraElement Sampler::p_star_element(int n, int m) {
  QMatrix x = symmetric(static_cast<std::size_t>(n));
  QMatrix z = matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  return {std::move(x), std::move(z)};
}

Point Sampler::point(int n, int m) {
  QMatrix g = invertible(static_cast<std::size_t>(n));
  QMatrix v = matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  return {g * g.transpose(), std::move(v)};
}

QMatrix Sampler::orthogonal(int n, OrthogonalComponent component) {
  const auto un = static_cast<std::size_t>(n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    QMatrix a = skew_symmetric(un);
    QMatrix ipa = QMatrix::identity(un) + a;
    if (determinant(ipa) == 0) continue;
    QMatrix k = cayley(a);
    if (component == OrthogonalComponent::reflected) {
      QMatrix r = QMatrix::identity(un);
      r(0, 0) = -1;
      k = k * r;
    }
    return k;
  }
  throw std::runtime_error("k_sample: I + A singular after 100 draws");
}

QMatrix cayley(const QMatrix& skew) {
  if (!skew.square() || skew.transpose() != -skew) throw std::invalid_argument("cayley: matrix is not skew-symmetric");
  QMatrix id = QMatrix::identity(skew.rows());
  return (id - skew) * inverse(id + skew);
}

QMatrix k_sample(std::uint64_t seed, int n, OrthogonalComponent component, int height) {
  if (n < 1) throw std::invalid_argument("k_sample: n must be positive");
  Sampler s(seed, height);
  return s.orthogonal(n, component);
}

bool is_orthogonal(const QMatrix& k) {
  return k.square() && k.transpose() * k == QMatrix::identity(k.rows());
}

}  // namespace invop
