#include "invop/operator_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invop {

OperatorMatrix::OperatorMatrix(int n, int m, std::size_t rows, std::size_t cols)
    : n_(n), m_(m), rows_(rows), cols_(cols), a_(rows * cols, DiffOperator(n, m)) {}

OperatorMatrix OperatorMatrix::identity(int n, int m, std::size_t size) {
  OperatorMatrix r(n, m, size, size);
  for (std::size_t i = 0; i < size; ++i) r(i, i) = DiffOperator::identity(n, m);
  return r;
}

OperatorMatrix OperatorMatrix::constant(int n, int m, const RFMatrix& c) {
  OperatorMatrix r(n, m, c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (!c(i, j).is_zero()) r(i, j) = DiffOperator::multiplication(n, m, c(i, j));
  return r;
}

OperatorMatrix OperatorMatrix::transpose() const {
  OperatorMatrix t(n_, m_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DiffOperator OperatorMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square operator matrix");
  DiffOperator s(n_, m_);
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

OperatorMatrix OperatorMatrix::pow(int k) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square operator matrix");
  if (k < 0) throw std::invalid_argument("negative power of an operator matrix");
  if (k == 0) return identity(n_, m_, rows_);
  OperatorMatrix r = *this;
  for (int i = 1; i < k; ++i) r = r * *this;
  return r;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(const Rational& c) {
  for (auto& e : a_) e *= c;
  return *this;
}

OperatorMatrix& OperatorMatrix::scale(const RationalFunction& c) {
  for (auto& e : a_) e = e.times_function(c);
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("operator matrix product shape mismatch");
  if (a.n_ != b.n_ || a.m_ != b.m_) throw std::invalid_argument("operator matrix dimension mismatch");
  OperatorMatrix r(a.n_, a.m_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const DiffOperator& left = a(i, k);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += compose(left, b(k, j));
    }
  return r;
}

BaseMatrices build_base_matrices(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("base matrices: need n >= 1, m >= 0");
  TablePtr t = coordinate_table(n, m);
  const auto un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m);
  BaseMatrices b{OperatorMatrix(n, m, un, un), OperatorMatrix(n, m, un, un), OperatorMatrix(n, m, um, un),
                 OperatorMatrix(n, m, um, un)};
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      DiffOperator mult = DiffOperator::multiplication(n, m, Polynomial::variable(t, y_name(i, j)));
      DiffOperator d = DiffOperator::partial(n, m, y_name(i, j));
      if (i != j) d *= Rational(1, 2);
      b.y(i - 1, j - 1) = b.y(j - 1, i - 1) = mult;
      b.dy(i - 1, j - 1) = b.dy(j - 1, i - 1) = d;
    }
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) {
      b.v(k - 1, l - 1) = DiffOperator::multiplication(n, m, Polynomial::variable(t, v_name(k, l)));
      b.dv(k - 1, l - 1) = DiffOperator::partial(n, m, v_name(k, l));
    }
  return b;
}

DiffOperator determinant(const OperatorMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square operator matrix");
  const std::size_t size = a.rows();
  std::vector<std::pair<std::size_t, std::size_t>> nonzero;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (!a(i, j).is_zero()) nonzero.emplace_back(i, j);
  for (std::size_t p = 0; p < nonzero.size(); ++p)
    for (std::size_t q = p + 1; q < nonzero.size(); ++q) {
      auto [i, j] = nonzero[p];
      auto [k, l] = nonzero[q];
      if (!commutator(a(i, j), a(k, l)).is_zero())
        throw std::invalid_argument("determinant: entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") and (" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                                    ") do not commute");
    }

  DiffOperator det(a.n(), a.m());
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    DiffOperator term = DiffOperator::identity(a.n(), a.m());
    bool zero = false;
    for (std::size_t i = 0; i < size && !zero; ++i) {
      const DiffOperator& e = a(i, perm[i]);
      if (e.is_zero()) zero = true;
      else term = compose(term, e);
    }
    if (zero) continue;
    if (sign < 0) det -= term;
    else det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace invop
