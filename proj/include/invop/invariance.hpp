#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "invop/diff_operator.hpp"
#include "invop/group.hpp"

namespace invop {

/// The coordinate substitution induced by (g, lambda) on P_{n,m}:
///   Y -> g Y g^T,  V -> (V + lambda) g^T,
/// expressed as coordinate -> affine polynomial bindings.
class ActionMap {
 public:
  ActionMap(GroupElement element, TablePtr table);
  explicit ActionMap(GroupElement element);

  const GroupElement& element() const { return element_; }
  const TablePtr& table() const { return table_; }
  int n() const { return element_.n(); }
  int m() const { return element_.m(); }
  const std::map<std::size_t, Polynomial>& bindings() const { return bindings_; }
  /// Jacobian d(phi_i)/d(coord_j), constant because the action is affine.
  const QMatrix& jacobian() const { return jacobian_; }

  /// f o phi.
  RationalFunction pullback(const RationalFunction& f) const;

 private:
  GroupElement element_;
  TablePtr table_;
  std::map<std::size_t, Polynomial> bindings_;
  QMatrix jacobian_;
};

/// phi_* D: the operator P with D(f o phi) = (P f) o phi for every f.
DiffOperator pushforward(const DiffOperator& d, const ActionMap& action);

struct InvarianceReport {
  bool invariant = true;
  std::size_t monomials_checked = 0;
  std::optional<Monomial> first_failure;  // over the coordinates
  std::string detail;
};

/// Exact test of D(f o phi) == (D f) o phi for every coordinate monomial f
/// of total degree <= test_degree. The sweep runs on OpenMP threads and
/// compares phi_* D f against D f, which is the same identity read through
/// the affine change of variables.
InvarianceReport invariance_check(const DiffOperator& d, const ActionMap& action, std::uint32_t test_degree);

/// Serial reference: literally forms f o phi, applies D, and compares with
/// (D f) o phi for every monomial.
InvarianceReport invariance_check_reference(const DiffOperator& d, const ActionMap& action,
                                            std::uint32_t test_degree);

/// All monomials in the first `vars` variables of total degree <= d, in
/// ascending grlex order.
std::vector<Monomial> monomials_up_to(std::size_t vars, std::uint32_t d);

}  // namespace invop
