#include "invop/reference_operators.hpp"

#include <sstream>
#include <stdexcept>

#include "invop/operator_matrix.hpp"
#include "invop/text_format.hpp"

namespace invop {

DiffOperator operator_from_terms(int n, int m, const std::vector<std::pair<std::string, std::string>>& terms) {
  TablePtr t = coordinate_table(n, m);
  const auto nc = static_cast<std::size_t>(coordinate_count(n, m));
  DiffOperator out(n, m);
  for (const auto& [coeff, derivs] : terms) {
    DerivMonomial alpha;
    std::istringstream in(derivs);
    std::string factor;
    while (in >> factor) {
      std::uint32_t power = 1;
      auto caret = factor.find('^');
      if (caret != std::string::npos) {
        power = static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
        factor = factor.substr(0, caret);
      }
      std::size_t v = t->index_of(factor);
      if (v >= nc) throw std::invalid_argument("operator_from_terms: " + factor + " is not a coordinate");
      alpha = alpha * Monomial::var(v, power);
    }
    out.add_term(alpha, parse_infix(coeff, t));
  }
  return out;
}

namespace reference {

DiffOperator d1_2_1() { return operator_from_terms(2, 1, {{"2*y11", "y11"}, {"2*y22", "y22"}, {"2*y12", "y12"}}); }

DiffOperator d2_2_1() {
  DiffOperator mixed = operator_from_terms(2, 1, {{"y12^2", "y11 y22"}, {"y11*y12", "y11 y12"}, {"y22*y12", "y22 y12"}});
  DiffOperator pure =
      operator_from_terms(2, 1, {{"y11^2", "y11^2"}, {"y22^2", "y22^2"}, {"1/2*(y11*y22 + y12^2)", "y12^2"}});
  return Rational(3) * d1_2_1() + Rational(8) * mixed + Rational(4) * pure;
}

DiffOperator psi_2_1() { return operator_from_terms(2, 1, {{"y11", "v11^2"}, {"2*y12", "v11 v12"}, {"y22", "v12^2"}}); }

DiffOperator delta_2_1() {
  DiffOperator a = operator_from_terms(
      2, 1, {{"y11^2", "y11 v11^2"}, {"2*y11*y12", "y11 v11 v12"}, {"y12^2", "y11 v12^2"}});
  DiffOperator b = operator_from_terms(
      2, 1, {{"y12^2", "y22 v11^2"}, {"2*y22*y12", "y22 v11 v12"}, {"y22^2", "y22 v12^2"}});
  DiffOperator c = operator_from_terms(
      2, 1, {{"y11*y12", "y12 v11^2"}, {"y11*y22 + y12^2", "y12 v11 v12"}, {"y22*y12", "y12 v12^2"}});
  return Rational(2) * a + Rational(2) * b + Rational(2) * c + Rational(3) * psi_2_1();
}

DiffOperator d2_psi_commutator_2_1(bool include_last_term) {
  TablePtr t = coordinate_table(2, 1);
  DiffOperator d1 = d1_2_1(), psi = psi_2_1();
  RationalFunction det_y(Polynomial::variable(t, "y11") * Polynomial::variable(t, "y22") -
                         Polynomial::variable(t, "y12").pow(2));
  BaseMatrices b = build_base_matrices(2, 1);
  DiffOperator with_v = determinant(b.dy + b.dv.transpose() * b.dv).times_function(det_y);
  DiffOperator plain = determinant(b.dy).times_function(det_y);
  DiffOperator out = Rational(2) * compose(Rational(2) * d1 - DiffOperator::identity(2, 1), psi);
  out -= Rational(8) * with_v;
  out += Rational(8) * plain;
  if (include_last_term) out -= Rational(4) * operator_from_terms(2, 1, {{"y11*y22 + y12^2", "y12 v11 v12"}});
  return out;
}

DiffOperator laplacian_2_0() {
  DiffOperator body = operator_from_terms(2, 0,
                                          {{"y11^2", "y11^2"},
                                           {"y22^2", "y22^2"},
                                           {"1/2*(y11*y22 + y12^2)", "y12^2"},
                                           {"2*y12^2", "y11 y22"},
                                           {"2*y11*y12", "y11 y12"},
                                           {"2*y22*y12", "y22 y12"},
                                           {"3/2*y11", "y11"},
                                           {"3/2*y22", "y22"},
                                           {"3/2*y12", "y12"}});
  TablePtr t = coordinate_table(2, 0);
  return body.times_function(RationalFunction(Polynomial(1), Polynomial::variable(t, "A")));
}

}  // namespace reference

}  // namespace invop
