#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "invop/diff_operator.hpp"
#include "invop/group.hpp"
#include "invop/invariant_poly.hpp"

namespace invop {

/// Basis of p*: (E_ii, 0) and (E_ij + E_ji, 0) for i < j in row-major order,
/// then (0, e_kl). It follows the order of algebra_table(n, m).
struct PStarBasis {
  int n = 1;
  int m = 0;
  std::vector<AlgebraElement> elements;
  /// G_ab = tr(X_a X_b) + tr(Z_a Z_b^T).
  QMatrix gram;
  /// Coordinate matrix C: the algebra coordinates of sum_a t_a eta_a are C t.
  QMatrix coordinates;
};

PStarBasis p_star_basis(int n, int m);

/// Exponent parameters t_ij (i <= j) and s_kl, one per basis element.
TablePtr exp_parameter_table(int n, int m);

/// exp(X, Z) = (e^X, Z sum_k (-X^T)^k / (k+1)!) truncated at total degree d
/// in the parameters.
struct TruncatedGroupExp {
  unsigned degree = 0;
  PolyMatrix h;   // n x n
  PolyMatrix mu;  // m x n
};

/// `x` and `z` must have entries linear in the variables of one table.
TruncatedGroupExp exp_truncated(const PolyMatrix& x, const PolyMatrix& z, int degree);
/// exp(sum t_a eta_a) over exp_parameter_table(n, m).
TruncatedGroupExp exp_truncated(int n, int m, int degree);

/// Coefficients c_beta of Theta(P) = sum c_beta d^beta frozen at one point.
struct LocalSymbol {
  Point point;
  std::map<Monomial, Rational, GrlexDescending> symbol;

  nlohmann::json to_json() const;
  bool operator==(const LocalSymbol& o) const { return point == o.point && symbol == o.symbol; }
};

struct ThetaOptions {
  bool verify_k_invariance = true;
  int k_samples = 5;
  std::uint64_t seed = 0;
};

/// The symbol of Theta(P) at (g g^T, lambda g^T), computed from the moved
/// base point (g, lambda) exp(sum t_a eta_a) . (I, 0) with P applied at
/// G^{-1} d/dt. Throws std::invalid_argument when P is not K-invariant.
LocalSymbol theta_local(const InvariantPolynomial& p, const GroupElement& rep, const ThetaOptions& opt = {});

/// P(G^{-1} d/dt) as a polynomial whose exponent vectors index the basis.
Polynomial gram_corrected_symbol(const InvariantPolynomial& p);

struct ThetaClosedOptions {
  int coeff_degree = -1;  // -1: total degree of P
  int det_power = 0;
  int samples = 0;        // 0: exactly as many as the ansatz has unknowns per coefficient
  int held_out = 3;
  int invariance_samples = 5;
  std::uint64_t seed = 0;
  bool verify_k_invariance = true;
};

struct ThetaClosedResult {
  DiffOperator op;
  std::size_t points_used = 0;
  std::size_t held_out_verified = 0;
  bool invariant = false;
  std::string detail;
};

/// Fits the coefficients of Theta(P) in the ansatz poly(Y, V) / det(Y)^r by
/// an exact linear solve over seeded sample points, verifies the result on
/// held-out points and checks invariance. Throws std::runtime_error when the
/// system is inconsistent (naming the smallest failing multi-index) or
/// underdetermined, or when a held-out point disagrees.
ThetaClosedResult theta_closed(const InvariantPolynomial& p, const ThetaClosedOptions& opt = {});

struct ConjectureEntry {
  int n = 1;
  int i = 1;
  bool equal = false;
  bool asserted = true;  // false when no ground truth exists (n >= 3)
  std::string difference;
};

/// Compares Phi(q_i) with tr((2 Y dY)^i) for every n <= n_max, i <= n (m = 0).
std::vector<ConjectureEntry> conjecture_check(int n_max, std::uint64_t seed = 0);

/// Exact solution of A X = B for A with full column rank. Throws
/// std::runtime_error naming the first inconsistent column or reporting rank
/// deficiency.
QMatrix solve_exact(const QMatrix& a, const QMatrix& b, const std::vector<std::string>& column_names = {});

}  // namespace invop
