#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invop/matrix.hpp"
#include "invop/spec_text.hpp"

namespace invop {

enum class PolyFamily {
  p,          // tr(X^j)
  q,          // (Z Z^T)_{pq}
  xi,         // (Z X Z^T)_{pq}
  r,          // tr(X^j (Z^T Z)^p)
  m_s,        // tr((X + Z^T S Z)^j)
  q_s,        // tr((Z^T S Z)^p)
  r_s,        // tr(X^i (Z^T S Z)^p (X + Z^T S Z)^j)
  custom,
};

/// Polynomial on p* in the coordinates x_ij (i <= j), z_kl, where the matrix
/// X has x_ii on the diagonal and x_ij / 2 off it.
struct InvariantPolynomial {
  PolyFamily family = PolyFamily::custom;
  std::vector<int> indices;
  std::optional<QMatrix> s;
  int n = 1;
  int m = 0;
  Polynomial body;

  std::string name() const;
};

/// X and Z as matrices of coordinate polynomials over algebra_table(n, m).
PolyMatrix algebra_x_matrix(const TablePtr& table, int n);
PolyMatrix algebra_z_matrix(const TablePtr& table, int n, int m);

/// Builds one of the built-in families. Index ranges: 1<=j<=n, 1<=p<=q<=m,
/// 1<=p<=m, 1<=i<=n. `s` is required (m x m) for m_s, q_s and r_s.
InvariantPolynomial invariant_poly_build(PolyFamily family, const std::vector<int>& indices, int n, int m,
                                         const std::optional<QMatrix>& s = std::nullopt);
InvariantPolynomial custom_invariant_poly(const Polynomial& body, int n, int m);

/// Parses "p:j=2", "q:p=1,q=2", "xi:p=1,q=1", "R:j=1,p=1", "M:j=1;S=[[1]]",
/// "Q:p=1;S=[[1]]", "RS:i=1,p=1,j=1;S=[[1]]", or an infix polynomial in
/// x_ij, z_kl (treated as custom).
InvariantPolynomial parse_invariant_poly(const std::string& text, int n, int m);

/// Exact check that P(k^{-1}.(X, Z)) == P(X, Z) for `samples` Cayley samples
/// from each component of O(n), where k.(X, Z) = (k X k^T, Z k^T).
bool k_invariance_check(const InvariantPolynomial& p, int samples, std::uint64_t seed);
bool k_invariance_check(const Polynomial& body, int n, int m, int samples, std::uint64_t seed);

/// The linear substitution of coordinates induced by (X, Z) -> (k^T X k, Z k).
std::map<std::size_t, Polynomial> k_inverse_substitution(const TablePtr& table, int n, int m, const QMatrix& k);

}  // namespace invop
