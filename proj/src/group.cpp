#include "invop/group.hpp"

#include <sstream>
#include <stdexcept>

namespace invop {

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void check_shape(const QMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

}  // namespace

GroupElement make_group_element(QMatrix g, QMatrix lambda) {
  if (!g.square() || g.rows() == 0) throw std::invalid_argument("group element: g must be square and nonempty");
  if (lambda.rows() == 0) lambda = QMatrix(0, g.rows());
  check_shape(lambda, lambda.rows(), g.rows(), "group element lambda");
  if (determinant(g) == 0) throw std::domain_error("group element: g is singular");
  return {std::move(g), std::move(lambda)};
}

GroupElement identity_element(int n, int m) {
  return {QMatrix::identity(static_cast<std::size_t>(n)), QMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n))};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw std::invalid_argument("group multiply: shape mismatch");
  QMatrix h_inv_t = inverse(b.g).transpose();
  return {a.g * b.g, a.lambda * h_inv_t + b.lambda};
}

GroupElement inverse(const GroupElement& a) {
  // (g, lambda)^{-1} = (g^{-1}, -lambda g^T)
  return {inverse(a.g), -(a.lambda * a.g.transpose())};
}

bool operator==(const GroupElement& a, const GroupElement& b) { return a.g == b.g && a.lambda == b.lambda; }

bool is_symmetric(const QMatrix& y) { return y.square() && y == y.transpose(); }

bool is_positive_definite(const QMatrix& y) {
  if (!is_symmetric(y)) return false;
  for (std::size_t k = 1; k <= y.rows(); ++k) {
    QMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = y(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

Point make_point(QMatrix y, QMatrix v) {
  if (!y.square() || y.rows() == 0) throw std::invalid_argument("point: Y must be square and nonempty");
  if (v.rows() == 0) v = QMatrix(0, y.rows());
  check_shape(v, v.rows(), y.rows(), "point V");
  if (!is_symmetric(y)) throw std::invalid_argument("point: Y is not symmetric");
  if (!is_positive_definite(y)) throw std::invalid_argument("point: Y is not positive definite");
  return {std::move(y), std::move(v)};
}

Point origin(int n, int m) {
  return {QMatrix::identity(static_cast<std::size_t>(n)), QMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n))};
}

Point act(const GroupElement& a, const Point& p) {
  if (a.n() != p.n() || a.m() != p.m()) throw std::invalid_argument("group action: shape mismatch");
  QMatrix gt = a.g.transpose();
  return {a.g * p.y * gt, (p.v + a.lambda) * gt};
}

AlgebraElement make_algebra_element(QMatrix x, QMatrix z) {
  if (!x.square() || x.rows() == 0) throw std::invalid_argument("algebra element: X must be square and nonempty");
  if (z.rows() == 0) z = QMatrix(0, x.rows());
  check_shape(z, z.rows(), x.rows(), "algebra element Z");
  return {std::move(x), std::move(z)};
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return {a.x + b.x, a.z + b.z}; }

AlgebraElement operator*(const Rational& c, const AlgebraElement& a) { return {a.x * c, a.z * c}; }

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw std::invalid_argument("bracket: shape mismatch");
  return {commutator(a.x, b.x), b.z * a.x.transpose() - a.z * b.x.transpose()};
}

AlgebraElement adjoint(const GroupElement& a, const AlgebraElement& x) {
  if (a.n() != x.n() || a.m() != x.m()) throw std::invalid_argument("Ad: shape mismatch");
  return {a.g * x.x * inverse(a.g), (x.z - a.lambda * x.x.transpose()) * a.g.transpose()};
}

std::vector<AlgebraElement> algebra_basis(int n, int m) {
  const auto un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m);
  std::vector<AlgebraElement> basis;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      AlgebraElement e{QMatrix(un, un), QMatrix(um, un)};
      e.x(i, j) = 1;
      basis.push_back(std::move(e));
    }
  for (std::size_t k = 0; k < um; ++k)
    for (std::size_t l = 0; l < un; ++l) {
      AlgebraElement e{QMatrix(un, un), QMatrix(um, un)};
      e.z(k, l) = 1;
      basis.push_back(std::move(e));
    }
  return basis;
}

std::vector<Rational> algebra_coordinates(const AlgebraElement& x) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < x.x.rows(); ++i)
    for (std::size_t j = 0; j < x.x.cols(); ++j) c.push_back(x.x(i, j));
  for (std::size_t k = 0; k < x.z.rows(); ++k)
    for (std::size_t l = 0; l < x.z.cols(); ++l) c.push_back(x.z(k, l));
  return c;
}

QMatrix ad_matrix(const AlgebraElement& x) {
  auto basis = algebra_basis(x.n(), x.m());
  QMatrix ad(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto image = algebra_coordinates(bracket(x, basis[col]));
    for (std::size_t row = 0; row < image.size(); ++row) ad(row, col) = image[row];
  }
  return ad;
}

Rational killing_closed(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw std::invalid_argument("killing form: shape mismatch");
  const int n = a.n(), m = a.m();
  return Rational(2 * n + m) * (a.x * b.x).trace() - 2 * a.x.trace() * b.x.trace();
}

Rational killing_trace(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw std::invalid_argument("killing form: shape mismatch");
  return (ad_matrix(a) * ad_matrix(b)).trace();
}

}  // namespace invop
