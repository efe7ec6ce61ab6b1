#include "invop/random_operator.hpp"

#include "invop/invariance.hpp"

namespace invop {

namespace {

template <typename T>
const T& pick(Sampler& s, const std::vector<T>& v) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(s.engine())];
}

}  // namespace

Polynomial random_polynomial(Sampler& s, int n, int m, std::uint32_t degree, int terms) {
  TablePtr t = coordinate_table(n, m);
  auto monos = monomials_up_to(static_cast<std::size_t>(coordinate_count(n, m)), degree);
  Polynomial p;
  for (int i = 0; i < terms; ++i) p += Polynomial::monomial(t, pick(s, monos), s.rational());
  return p.is_zero() ? Polynomial::monomial(t, Monomial(), 1) : p;
}

DiffOperator random_operator(Sampler& s, int n, int m, std::uint32_t order, int terms, std::uint32_t coeff_degree) {
  auto derivs = monomials_up_to(static_cast<std::size_t>(coordinate_count(n, m)), order);
  DiffOperator d(n, m);
  for (int i = 0; i < terms; ++i) d.add_term(pick(s, derivs), random_polynomial(s, n, m, coeff_degree, 2));
  return d;
}

}  // namespace invop
