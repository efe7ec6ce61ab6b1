#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invop/diff_operator.hpp"

namespace invop {

/// Builds sum c_i d^alpha_i from pairs (infix coefficient, derivative list),
/// where the derivative list reads like "y11 v12^2" and may be empty.
DiffOperator operator_from_terms(int n, int m, const std::vector<std::pair<std::string, std::string>>& terms);

/// Hand-transcribed closed forms on P_2 x R^(1,2), written with
/// Y = [[y11, y12], [y12, y22]] and V = (v11, v12).
namespace reference {

/// 2 (y11 d11 + y22 d22 + y12 d12).
DiffOperator d1_2_1();
/// 3 D1 + 8 (second-order mixed part) + 4 {second-order pure part}.
DiffOperator d2_2_1();
/// y11 dv11^2 + 2 y12 dv11 dv12 + y22 dv12^2.
DiffOperator psi_2_1();
/// Third-order expansion plus 3 Psi.
DiffOperator delta_2_1();
/// 2 (2 D1 - 1) Psi - 8 det(Y) det(dY + dV^T dV) + 8 det(Y) det(dY)
/// - 4 (y11 y22 + y12^2) dy12 dv11 dv12.
DiffOperator d2_psi_commutator_2_1(bool include_last_term = true);
/// (1/A) tr((Y dY)^2) on P_2 expanded, first-order part (3/2) sum y d.
DiffOperator laplacian_2_0();

}  // namespace reference

}  // namespace invop
