#pragma once

#include "invop/diff_operator.hpp"
#include "invop/sampling.hpp"

namespace invop {

/// Polynomial in the coordinates of P_{n,m} with at most `terms` terms of
/// total degree <= degree and seeded rational coefficients.
Polynomial random_polynomial(Sampler& s, int n, int m, std::uint32_t degree, int terms);

/// Operator with at most `terms` terms of order <= order and polynomial
/// coefficients of degree <= coeff_degree.
DiffOperator random_operator(Sampler& s, int n, int m, std::uint32_t order, int terms, std::uint32_t coeff_degree);

}  // namespace invop
