#include "invop/invariance.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace invop {

namespace {

PolyMatrix symmetric_y(const TablePtr& t, int n) {
  const auto un = static_cast<std::size_t>(n);
  PolyMatrix y(un, un);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Polynomial v = Polynomial::variable(t, y_name(i, j));
      y(i - 1, j - 1) = v;
      y(j - 1, i - 1) = v;
    }
  return y;
}

PolyMatrix v_matrix(const TablePtr& t, int n, int m) {
  PolyMatrix v(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) v(k - 1, l - 1) = Polynomial::variable(t, v_name(k, l));
  return v;
}

PolyMatrix lift(const QMatrix& q) {
  return q.map([](const Rational& r) { return Polynomial(r); });
}

}  // namespace

ActionMap::ActionMap(GroupElement element) : ActionMap(element, coordinate_table(element.n(), element.m())) {}

ActionMap::ActionMap(GroupElement element, TablePtr table) : element_(std::move(element)), table_(std::move(table)) {
  const int n = element_.n(), m = element_.m();
  if (determinant(element_.g) == 0) throw std::domain_error("action: g is singular");
  PolyMatrix g = lift(element_.g);
  PolyMatrix gt = g.transpose();
  PolyMatrix y_new = g * symmetric_y(table_, n) * gt;
  PolyMatrix v_new = (v_matrix(table_, n, m) + lift(element_.lambda)) * gt;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) bindings_[table_->index_of(y_name(i, j))] = y_new(i - 1, j - 1);
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) bindings_[table_->index_of(v_name(k, l))] = v_new(k - 1, l - 1);

  const auto nc = static_cast<std::size_t>(coordinate_count(n, m));
  jacobian_ = QMatrix(nc, nc);
  for (const auto& [i, p] : bindings_)
    for (std::size_t j = 0; j < nc; ++j) jacobian_(i, j) = p.diff(j).constant_term();
}

RationalFunction ActionMap::pullback(const RationalFunction& f) const {
  std::map<std::size_t, RationalFunction> b;
  for (const auto& [i, p] : bindings_) b.emplace(i, RationalFunction(p));
  return f.subst(b);
}

DiffOperator pushforward(const DiffOperator& d, const ActionMap& action) {
  const int n = d.n(), m = d.m();
  if (n != action.n() || m != action.m()) throw std::invalid_argument("pushforward: dimension mismatch");
  const auto nc = static_cast<std::size_t>(coordinate_count(n, m));
  const TablePtr& t = action.table();
  ActionMap inv(inverse(action.element()), t);
  const QMatrix& jac = action.jacobian();

  // L_i = sum_j J(j, i) d_j, kept as a polynomial in commuting symbols d_j.
  std::vector<std::vector<Polynomial>> powers(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    Polynomial li;
    for (std::size_t j = 0; j < nc; ++j)
      if (jac(j, i) != 0) li += Polynomial::variable(t, j) * jac(j, i);
    powers[i].push_back(Polynomial(1));
    powers[i].push_back(li);
  }
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][k];
  };

  DiffOperator out(n, m, unify_tables(d.table(), t));
  for (const auto& [alpha, c] : d.terms()) {
    Polynomial symbol(1);
    for (std::size_t i = 0; i < alpha.length(); ++i)
      if (alpha[i] != 0) symbol *= power(i, alpha[i]);
    RationalFunction moved = inv.pullback(c);
    for (const auto& [beta, k] : symbol.terms()) out.add_term(beta, moved * RationalFunction(k));
  }
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t vars, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == vars) {
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) < 0; });
  return out;
}

InvarianceReport invariance_check(const DiffOperator& d, const ActionMap& action, std::uint32_t test_degree) {
  const auto nc = static_cast<std::size_t>(coordinate_count(d.n(), d.m()));
  DiffOperator diff = pushforward(d, action) - d;
  InvarianceReport report;
  std::vector<Monomial> monos = monomials_up_to(nc, test_degree);
  report.monomials_checked = monos.size();
  if (diff.is_zero()) {
    report.detail = "pushforward equals the operator; every monomial passes";
    return report;
  }
  const TablePtr t = diff.table();
  const long count = static_cast<long>(monos.size());
  long first = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
  for (long i = 0; i < count; ++i) {
    if (i >= first) continue;
    RationalFunction f(Polynomial::monomial(t, monos[static_cast<std::size_t>(i)], 1));
    if (!apply(diff, f).is_zero()) first = std::min(first, i);
  }
  if (first != std::numeric_limits<long>::max()) {
    report.invariant = false;
    report.first_failure = monos[static_cast<std::size_t>(first)];
    Polynomial f = Polynomial::monomial(t, *report.first_failure, 1);
    report.detail = "D(f o phi) != (D f) o phi for f = " + f.to_string();
  } else {
    report.detail = "operator differs only above the tested degree";
  }
  return report;
}

InvarianceReport invariance_check_reference(const DiffOperator& d, const ActionMap& action,
                                            std::uint32_t test_degree) {
  const auto nc = static_cast<std::size_t>(coordinate_count(d.n(), d.m()));
  const TablePtr t = unify_tables(d.table(), action.table());
  InvarianceReport report;
  for (const Monomial& mono : monomials_up_to(nc, test_degree)) {
    ++report.monomials_checked;
    RationalFunction f(Polynomial::monomial(t, mono, 1));
    RationalFunction lhs = apply(d, action.pullback(f));
    RationalFunction rhs = action.pullback(apply(d, f));
    if (lhs != rhs) {
      report.invariant = false;
      report.first_failure = mono;
      report.detail = "D(f o phi) != (D f) o phi for f = " + f.to_string();
      return report;
    }
  }
  return report;
}

}  // namespace invop
