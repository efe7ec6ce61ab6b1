#include "invop/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invop {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { trim(); }

Monomial Monomial::var(std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
  degree_ = 0;
  for (auto x : e_) degree_ += x;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  const auto& longer = e_.size() >= o.e_.size() ? e_ : o.e_;
  const auto& shorter = e_.size() >= o.e_.size() ? o.e_ : e_;
  r.e_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r.e_[i] += shorter[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() > o.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  r.e_ = e_;
  for (std::size_t i = 0; i < o.e_.size(); ++i) r.e_[i] -= o.e_[i];
  r.trim();
  return r;
}

Monomial Monomial::with(std::size_t i, std::uint32_t power) const {
  Monomial r;
  r.e_ = e_;
  if (r.e_.size() <= i) r.e_.resize(i + 1, 0);
  r.e_[i] = power;
  r.trim();
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : m.exponents()) h = (h ^ x) * 1099511628211ULL;
  return h;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(TablePtr table, TermMap terms) : table_(std::move(table)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (!table_) {
    for (const auto& [m, c] : terms_)
      if (!m.is_one()) throw std::invalid_argument("non-constant polynomial without a variable table");
  } else {
    for (const auto& [m, c] : terms_)
      if (m.length() > table_->size()) throw std::invalid_argument("monomial exceeds variable table");
  }
}

Polynomial Polynomial::variable(const TablePtr& table, std::size_t index) {
  if (!table || index >= table->size()) throw std::invalid_argument("variable index out of range");
  return monomial(table, Monomial::var(index), 1);
}

Polynomial Polynomial::variable(const TablePtr& table, std::string_view name) {
  if (!table) throw std::invalid_argument("unknown variable: " + std::string(name));
  return variable(table, table->index_of(name));
}

Polynomial Polynomial::monomial(const TablePtr& table, const Monomial& m, const Rational& c) {
  TermMap t;
  if (c != 0) t.emplace(m, c);
  return Polynomial(table, std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::size_t Polynomial::first_variable() const {
  std::size_t best = table_ ? table_->size() : 0;
  for (const auto& [m, c] : terms_) {
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size() && i < best; ++i) {
      if (e[i] != 0) {
        best = i;
        break;
      }
    }
  }
  return best;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::adopt_table(const TablePtr& other) { table_ = unify_tables(table_, other); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  adopt_table(o.table_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  adopt_table(o.table_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.table_ = unify_tables(a.table_, b.table_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_constant()) return a * b.constant_term();
  if (a.is_constant()) return b * a.constant_term();
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace(m, std::move(c));
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  result.table_ = table_;
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(it->first == m) || it->second != c) return false;
    ++it;
  }
  return true;
}

Polynomial Polynomial::diff(std::size_t var) const {
  if (!table_) return Polynomial();
  if (var >= table_->size()) throw std::invalid_argument("diff: unknown variable");
  Polynomial r;
  r.table_ = table_;
  for (const auto& [m, c] : terms_) {
    auto e = m[var];
    if (e == 0) continue;
    r.terms_.emplace(m.with(var, e - 1), c * e);
  }
  return r;
}

Polynomial Polynomial::diff(std::string_view name) const {
  if (!table_) throw std::invalid_argument("diff: unknown variable " + std::string(name));
  return diff(table_->index_of(name));
}

std::map<std::uint32_t, Polynomial> Polynomial::collect(std::size_t var) const {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    auto& slot = out[m[var]];
    slot.table_ = table_;
    slot.terms_.emplace(m.with(var, 0), c);
  }
  return out;
}

Polynomial Polynomial::subst(const std::map<std::size_t, Polynomial>& bindings) const {
  TablePtr t = table_;
  for (const auto& [v, p] : bindings) {
    if (table_ && v >= table_->size()) throw std::invalid_argument("subst: unknown variable");
    t = unify_tables(t, p.table());
  }
  // Powers of each bound value, computed lazily.
  std::map<std::size_t, std::vector<Polynomial>> powers;
  auto power_of = [&](std::size_t v, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial(1));
    while (cache.size() <= k) cache.push_back(cache.back() * bindings.at(v));
    return cache[k];
  };
  Polynomial result;
  result.table_ = t;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Polynomial term;
    bool started = false;
    for (const auto& [v, p] : bindings) {
      auto e = m[v];
      if (e == 0) continue;
      rest = rest.with(v, 0);
      if (!started) {
        term = power_of(v, e);
        started = true;
      } else {
        term *= power_of(v, e);
      }
    }
    if (!started) {
      result.add_term(m, c);
      continue;
    }
    term *= c;
    if (!rest.is_one()) term *= Polynomial::monomial(t, rest, 1);
    result += term;
  }
  return result;
}

Rational Polynomial::eval(const std::map<std::size_t, Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(i);
      if (it == point.end())
        throw std::invalid_argument("eval: variable " + (table_ ? (*table_)[i].name : std::to_string(i)) +
                                    " is unbound");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e[i]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::truncate(std::uint32_t d) const {
  Polynomial r;
  r.table_ = table_;
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

namespace {
std::uint32_t partial_degree(const Monomial& m, std::size_t begin, std::size_t end) {
  std::uint32_t d = 0;
  for (std::size_t i = begin; i < end && i < m.length(); ++i) d += m[i];
  return d;
}
}  // namespace

Polynomial Polynomial::truncate_in(std::size_t begin, std::size_t end, std::uint32_t d) const {
  Polynomial r;
  r.table_ = table_;
  for (const auto& [m, c] : terms_)
    if (partial_degree(m, begin, end) <= d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::size_t begin, std::size_t end,
                              std::uint32_t d) {
  TablePtr t = unify_tables(a.table(), b.table());
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [ma, ca] : a.terms()) {
    auto da = partial_degree(ma, begin, end);
    if (da > d) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + partial_degree(mb, begin, end) > d) continue;
      acc[ma * mb] += ca * cb;
    }
  }
  Polynomial::TermMap terms;
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace(m, std::move(c));
  return Polynomial(t, std::move(terms));
}

Polynomial Polynomial::with_table(const TablePtr& table) const {
  if (table_ && (!table || !table_->is_prefix_of(*table)))
    throw std::invalid_argument("with_table: target does not extend the current table");
  Polynomial r = *this;
  r.table_ = table;
  if (!table_) {
    for (const auto& [m, c] : terms_)
      if (!m.is_one()) throw std::invalid_argument("with_table: inconsistent constant polynomial");
  }
  return r;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      os << mag.get_str();
      wrote = true;
    }
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (p.table() ? (*p.table())[i].name : "?" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (b.is_constant()) return a * (Rational(1) / b.constant_term());
  TablePtr t = unify_tables(a.table(), b.table());
  Polynomial rem = a;
  Polynomial::TermMap q;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!lb.divides(lr)) throw std::domain_error("exact_divide: not divisible");
    Monomial qm = lr / lb;
    Rational qc = rem.leading_coefficient() / cb;
    rem -= Polynomial::monomial(t, qm, qc) * b;
    q.emplace(std::move(qm), std::move(qc));
  }
  return Polynomial(t, std::move(q));
}

Polynomial make_monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading_coefficient());
}

}  // namespace invop
