#pragma once

#include <vector>

#include "invop/matrix.hpp"

namespace invop {

/// (g, lambda) in GL_{n,m} = GL(n) x| R^{(m,n)}, multiplied as
///   (g, lambda)(h, mu) = (g h, lambda h^{-T} + mu).
struct GroupElement {
  QMatrix g;       // n x n, invertible
  QMatrix lambda;  // m x n

  int n() const { return static_cast<int>(g.rows()); }
  int m() const { return static_cast<int>(lambda.rows()); }
};

/// (X, Z) in the Lie algebra g* of GL_{n,m}.
struct AlgebraElement {
  QMatrix x;  // n x n
  QMatrix z;  // m x n

  int n() const { return static_cast<int>(x.rows()); }
  int m() const { return static_cast<int>(z.rows()); }
  bool operator==(const AlgebraElement&) const = default;
};

/// (Y, V) in P_{n,m}: Y symmetric positive definite, V an m x n matrix.
struct Point {
  QMatrix y;
  QMatrix v;

  int n() const { return static_cast<int>(y.rows()); }
  int m() const { return static_cast<int>(v.rows()); }
  bool operator==(const Point&) const = default;
};

/// Validates shapes and invertibility; throws std::invalid_argument / std::domain_error.
GroupElement make_group_element(QMatrix g, QMatrix lambda);
GroupElement identity_element(int n, int m);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
bool operator==(const GroupElement& a, const GroupElement& b);

/// Validates symmetry and positive definiteness.
Point make_point(QMatrix y, QMatrix v);
Point origin(int n, int m);
/// (g, lambda).(Y, V) = (g Y g^T, (V + lambda) g^T).
Point act(const GroupElement& a, const Point& p);

/// Sylvester's criterion: all leading principal minors positive.
bool is_positive_definite(const QMatrix& y);
bool is_symmetric(const QMatrix& y);

AlgebraElement make_algebra_element(QMatrix x, QMatrix z);
AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Rational& c, const AlgebraElement& a);

/// [(X1,Z1),(X2,Z2)] = ([X1,X2], Z2 X1^T - Z1 X2^T).
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// Ad*((g, lambda))(X, Z) = (g X g^{-1}, (Z - lambda X^T) g^T).
AlgebraElement adjoint(const GroupElement& a, const AlgebraElement& x);

/// Basis of g*: (E_ij, 0) row-major, then (0, e_kl) row-major.
std::vector<AlgebraElement> algebra_basis(int n, int m);
std::vector<Rational> algebra_coordinates(const AlgebraElement& x);
/// Matrix of ad_x in algebra_basis(n, m), dimension n^2 + mn.
QMatrix ad_matrix(const AlgebraElement& x);

/// (2n + m) tr(X1 X2) - 2 tr(X1) tr(X2).
Rational killing_closed(const AlgebraElement& a, const AlgebraElement& b);
/// tr(ad_a o ad_b) from the structure constants.
Rational killing_trace(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace invop
