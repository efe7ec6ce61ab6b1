#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invop/diff_operator.hpp"
#include "invop/matrix.hpp"

namespace invop {

enum class OperatorFamily {
  selberg,    // tr((Y dY)^i)
  d,          // tr((2 Y dY)^j)
  psi,        // (dV Y dV^T)_pq
  delta,      // (dV (2 Y dY) Y dV^T)_pq
  l,          // tr((Y dV^T dV)^p)
  s,          // tr((2 Y dY)^j (Y dV^T dV)^p)
  phi_s,      // tr((Y (2 dY + dV^T S dV))^j)
  l_s,        // tr((Y dV^T S dV)^p)
  phi_ipj_s,  // tr((2 Y dY)^i (Y dV^T S dV)^p (Y (2 dY + dV^T S dV))^j)
  jacobi_m,   // det(Y) det(dY + 1/(8 pi) dV^T M^{-1} dV)
  laplacian,  // (1/A) tr((Y dY)^2) - m/(2A) tr(Y dY) + (1/B) sum (dV Y dV^T)_kp
};

enum class LaplacianConvention { paper, trace };

struct OperatorSpec {
  OperatorFamily family = OperatorFamily::d;
  std::vector<int> indices;
  std::optional<QMatrix> matrix;  // S or M
  std::optional<Rational> a;      // formal parameter A when empty
  std::optional<Rational> b;      // formal parameter B when empty
  LaplacianConvention convention = LaplacianConvention::paper;
  bool strict = false;  // M must be positive definite and half-integral

  /// Canonical text form, e.g. "D:j=2", "Psi:p=1,q=1", "Phi:j=1;S=[[1]]".
  std::string text() const;
  std::string name() const;
};

/// Parses the canonical text form. Tags: Selberg (i), D (j), Psi (p,q),
/// Delta (p,q), L (p), S (j,p), Phi (j;S), LS (p;S), PhiIPJ (i,p,j;S),
/// M (M), Laplacian (A, B, convention).
OperatorSpec parse_operator_spec(const std::string& text);

/// Expanded, normally ordered operator. Throws std::invalid_argument for
/// indices out of range and std::domain_error for a singular M.
DiffOperator build_operator(const OperatorSpec& spec, int n, int m);
DiffOperator build_operator(const std::string& spec, int n, int m);

/// Every family with indices in range for (n, m), small S and M included.
std::vector<OperatorSpec> all_operator_specs(int n, int m);

}  // namespace invop
