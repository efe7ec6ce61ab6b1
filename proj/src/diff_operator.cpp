#include "invop/diff_operator.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace invop {

DiffOperator::DiffOperator(int n, int m) : DiffOperator(n, m, coordinate_table(n, m)) {}

DiffOperator::DiffOperator(int n, int m, TablePtr table) : n_(n), m_(m), table_(std::move(table)) {
  if (n < 1 || m < 0) throw std::invalid_argument("DiffOperator: need n >= 1, m >= 0");
  auto expected = coordinate_table(n, m);
  const std::size_t nc = static_cast<std::size_t>(coordinate_count(n, m));
  if (!table_ || table_->size() < nc) throw std::invalid_argument("DiffOperator: table lacks the coordinates");
  for (std::size_t i = 0; i < nc; ++i)
    if (!((*table_)[i] == (*expected)[i])) throw std::invalid_argument("DiffOperator: table lacks the coordinates");
}

DiffOperator DiffOperator::identity(int n, int m) { return multiplication(n, m, RationalFunction(1)); }

DiffOperator DiffOperator::multiplication(int n, int m, const RationalFunction& f) {
  DiffOperator d(n, m);
  d.add_term(DerivMonomial(), f);
  return d;
}

DiffOperator DiffOperator::partial(int n, int m, std::size_t coord, std::uint32_t power) {
  DiffOperator d(n, m);
  if (coord >= static_cast<std::size_t>(coordinate_count(n, m)))
    throw std::invalid_argument("partial: not a coordinate of P_{n,m}");
  d.add_term(DerivMonomial::var(coord, power), RationalFunction(1));
  return d;
}

DiffOperator DiffOperator::partial(int n, int m, std::string_view name, std::uint32_t power) {
  return partial(n, m, coordinate_table(n, m)->index_of(name), power);
}

std::uint32_t DiffOperator::order() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

RationalFunction DiffOperator::coefficient(const DerivMonomial& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void DiffOperator::add_term(const DerivMonomial& alpha, const RationalFunction& c) {
  if (c.is_zero()) return;
  if (alpha.length() > static_cast<std::size_t>(coordinate_count(n_, m_)))
    throw std::invalid_argument("derivative in a non-coordinate variable");
  table_ = unify_tables(table_, c.table());
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOperator::check_compatible(const DiffOperator& o) const {
  if (n_ != o.n_ || m_ != o.m_)
    throw std::invalid_argument("operator dimension mismatch: (" + std::to_string(n_) + "," + std::to_string(m_) +
                                ") vs (" + std::to_string(o.n_) + "," + std::to_string(o.m_) + ")");
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  check_compatible(o);
  table_ = unify_tables(table_, o.table_);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  check_compatible(o);
  table_ = unify_tables(table_, o.table_);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  RationalFunction f(c);
  for (auto& [a, x] : terms_) x *= f;
  return *this;
}

DiffOperator DiffOperator::times_function(const RationalFunction& f) const {
  DiffOperator r(n_, m_, unify_tables(table_, f.table()));
  for (const auto& [a, c] : terms_) r.add_term(a, f * c);
  return r;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
  if (n_ != o.n_ || m_ != o.m_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [a, c] : terms_) {
    if (!(it->first == a) || it->second != c) return false;
    ++it;
  }
  return true;
}

DiffOperator DiffOperator::with_table(const TablePtr& table) const {
  if (!table_->is_prefix_of(*table)) throw std::invalid_argument("with_table: target does not extend the table");
  DiffOperator r = *this;
  r.table_ = table;
  return r;
}

std::string DiffOperator::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOperator& d) {
  if (d.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [alpha, c] : d.terms()) {
    if (!first) os << " + ";
    first = false;
    bool simple = c.is_polynomial() && c.num().size() == 1;
    if (simple) os << c;
    else os << "(" << c << ")";
    const auto& e = alpha.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*d(" << (*d.table())[i].name << ")";
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os;
}

// ------------------------------------------------------------------ apply

RationalFunction apply_partial(const DerivMonomial& alpha, const RationalFunction& f) {
  RationalFunction r = f;
  const auto& e = alpha.exponents();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::uint32_t k = 0; k < e[i]; ++k) {
      if (r.is_zero()) return r;
      r = r.diff(i);
    }
  return r;
}

RationalFunction apply(const DiffOperator& d, const RationalFunction& f) {
  RationalFunction sum;
  for (const auto& [alpha, c] : d.terms()) {
    RationalFunction df = apply_partial(alpha, f);
    if (!df.is_zero()) sum += c * df;
  }
  return sum;
}

// ---------------------------------------------------------------- compose

namespace {

using Term = std::pair<DerivMonomial, RationalFunction>;

// Calls visit(delta) for every delta <= alpha with |delta| <= bound.
template <typename F>
void for_each_submonomial(const DerivMonomial& alpha, std::uint32_t bound, F&& visit) {
  const auto& e = alpha.exponents();
  std::vector<std::uint32_t> cur(e.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
    if (i == e.size()) {
      visit(DerivMonomial(cur));
      return;
    }
    for (std::uint32_t k = 0; k <= e[i] && used + k <= bound; ++k) {
      cur[i] = k;
      self(self, i + 1, used + k);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
}

Integer multi_binomial(const DerivMonomial& alpha, const DerivMonomial& gamma) {
  Integer r = 1;
  for (std::size_t i = 0; i < alpha.length(); ++i) r *= binomial(alpha[i], gamma[i]);
  return r;
}

// (a d^alpha) o (b d^beta) accumulated into out.
void leibniz_product(DiffOperator& out, const Term& left, const Term& right) {
  const auto& [alpha, a] = left;
  const auto& [beta, b] = right;
  std::uint32_t bound = b.is_polynomial() ? b.num().degree() : alpha.degree();
  for_each_submonomial(alpha, bound, [&](const DerivMonomial& delta) {
    RationalFunction db = apply_partial(delta, b);
    if (db.is_zero()) return;
    DerivMonomial gamma = alpha / delta;
    Rational binom(multi_binomial(alpha, gamma));
    out.add_term(gamma * beta, a * db * RationalFunction(binom));
  });
}

DiffOperator empty_like(const DiffOperator& a, const DiffOperator& b) {
  if (a.n() != b.n() || a.m() != b.m())
    throw std::invalid_argument("operator dimension mismatch in composition");
  return DiffOperator(a.n(), a.m(), unify_tables(a.table(), b.table()));
}

}  // namespace

DiffOperator compose_serial(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator out = empty_like(a, b);
  for (const auto& l : a.terms())
    for (const auto& r : b.terms()) leibniz_product(out, l, r);
  return out;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator out = empty_like(a, b);
  std::vector<Term> left(a.terms().begin(), a.terms().end());
  std::vector<Term> right(b.terms().begin(), b.terms().end());
  const long total = static_cast<long>(left.size() * right.size());
  if (total < 64) return compose_serial(a, b);
#pragma omp parallel
  {
    DiffOperator local = out;
#pragma omp for schedule(dynamic, 4)
    for (long k = 0; k < total; ++k) {
      leibniz_product(local, left[static_cast<std::size_t>(k) / right.size()],
                      right[static_cast<std::size_t>(k) % right.size()]);
    }
#pragma omp critical(invop_compose_merge)
    out += local;
  }
  return out;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return compose(a, b) - compose(b, a); }

std::optional<Rational> proportionality(const DiffOperator& a, const DiffOperator& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [lead, cb] = *b.terms().begin();
  RationalFunction ratio = a.coefficient(lead) / cb;
  if (!ratio.is_constant()) return std::nullopt;
  Rational c = ratio.constant_value();
  if (a == b * c) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------- text

std::string serialize(const DiffOperator& d) {
  std::string out = "(op " + std::to_string(d.n()) + " " + std::to_string(d.m());
  for (const auto& [alpha, c] : d.terms()) {
    out += " (term " + (c.is_polynomial() ? serialize(c.num()) : serialize(c));
    const auto& e = alpha.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) out += " (" + (*d.table())[i].name + " " + std::to_string(e[i]) + ")";
    out += ")";
  }
  return out + ")";
}

DiffOperator parse_operator_sexpr(const SExpr& e, const TablePtr& table) {
  auto bad = [](const std::string& w) -> void { throw std::invalid_argument("malformed operator: " + w); };
  if (e.kind != SExpr::Kind::list || e.items.size() < 3 || !e.items[0].is_symbol("op")) bad("expected (op n m ...)");
  int n = 0, m = 0;
  try {
    n = std::stoi(e.items[1].text);
    m = std::stoi(e.items[2].text);
  } catch (const std::exception&) {
    bad("dimensions");
  }
  TablePtr t = table ? table : coordinate_table(n, m);
  DiffOperator d(n, m, t);
  for (std::size_t i = 3; i < e.items.size(); ++i) {
    const auto& term = e.items[i];
    if (term.kind != SExpr::Kind::list || term.items.size() < 2 || !term.items[0].is_symbol("term"))
      bad("expected (term ...)");
    RationalFunction c = parse_rational_function_sexpr(term.items[1], t);
    DerivMonomial alpha;
    for (std::size_t j = 2; j < term.items.size(); ++j) {
      const auto& f = term.items[j];
      if (f.kind != SExpr::Kind::list || f.items.size() != 2) bad("derivative factor " + f.str());
      std::size_t v = t->index_of(f.items[0].text);
      if (v >= static_cast<std::size_t>(coordinate_count(n, m))) bad("derivative in non-coordinate " + f.items[0].text);
      unsigned long k = std::stoul(f.items[1].text);
      if (k == 0 || alpha[v] != 0) bad("derivative exponent " + f.str());
      alpha = alpha.with(v, static_cast<std::uint32_t>(k));
    }
    if (c.is_zero()) bad("zero coefficient");
    if (d.terms().count(alpha)) bad("duplicate derivative monomial");
    d.add_term(alpha, c);
  }
  return d;
}

DiffOperator parse_operator_text(std::string_view text, const TablePtr& table) {
  return parse_operator_sexpr(parse_sexpr(text), table);
}

std::string latex(const DiffOperator& d) {
  if (d.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : d.terms()) {
    std::string coef;
    bool negative = false;
    if (c.is_constant()) {
      Rational v = c.constant_value();
      negative = v < 0;
      Rational mag = abs(v);
      if (mag != 1 || alpha.is_one()) coef = latex(mag);
    } else if (c.is_polynomial() && c.num().size() == 1) {
      negative = c.num().leading_coefficient() < 0;
      coef = latex(negative ? RationalFunction(-c.num()) : c);
    } else {
      coef = "\\left(" + latex(c) + "\\right)";
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    out += coef;
    if (!alpha.is_one()) {
      if (!coef.empty()) out += " ";
      std::string den;
      const auto& e = alpha.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        den += (den.empty() ? "" : " ") + std::string("\\partial ") + latex_variable((*d.table())[i]);
        if (e[i] > 1) den += "^{" + std::to_string(e[i]) + "}";
      }
      std::string top = alpha.degree() > 1 ? "\\partial^{" + std::to_string(alpha.degree()) + "}" : "\\partial";
      out += "\\frac{" + top + "}{" + den + "}";
    }
  }
  return out;
}

}  // namespace invop
