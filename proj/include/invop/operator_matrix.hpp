#pragma once

#include <vector>

#include "invop/diff_operator.hpp"
#include "invop/matrix.hpp"

namespace invop {

/// Rectangular matrix of differential operators on P_{n,m}. Products compose
/// entries in the written order, so noncommuting entries are never reordered.
class OperatorMatrix {
 public:
  OperatorMatrix(int n, int m, std::size_t rows, std::size_t cols);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  DiffOperator& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const DiffOperator& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static OperatorMatrix identity(int n, int m, std::size_t size);
  /// Multiplication operators by the entries of a rational matrix.
  static OperatorMatrix constant(int n, int m, const RFMatrix& c);

  OperatorMatrix transpose() const;
  DiffOperator trace() const;
  OperatorMatrix pow(int k) const;

  OperatorMatrix& operator+=(const OperatorMatrix& o);
  OperatorMatrix& operator*=(const Rational& c);
  OperatorMatrix& scale(const RationalFunction& c);
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator*(const Rational& c, OperatorMatrix a) { return a *= c; }
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  int n_, m_;
  std::size_t rows_, cols_;
  std::vector<DiffOperator> a_;
};

/// Y, dY (entries (1 + delta_ij)/2 d/dy_ij), V and dV as operator matrices.
struct BaseMatrices {
  OperatorMatrix y;
  OperatorMatrix dy;
  OperatorMatrix v;
  OperatorMatrix dv;
};

BaseMatrices build_base_matrices(int n, int m);

/// Leibniz expansion over permutations. Every pair of nonzero entries must
/// commute; otherwise std::invalid_argument names the first offending pair.
DiffOperator determinant(const OperatorMatrix& a);

}  // namespace invop
