#include "invop/text_format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace invop {

// ------------------------------------------------------------- s-expressions

std::string SExpr::str() const {
  switch (kind) {
    case Kind::symbol:
      return text;
    case Kind::string:
      return "\"" + text + "\"";
    case Kind::list: {
      std::string s = "(";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ' ';
        s += items[i].str();
      }
      return s + ")";
    }
  }
  return {};
}

namespace {

class SExprReader {
 public:
  explicit SExprReader(std::string_view s) : s_(s) {}

  SExpr read() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SExpr list;
      while (true) {
        skip();
        if (pos_ >= s_.size()) fail("unterminated list");
        if (s_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (c == ')') fail("unexpected ')'");
    if (c == '"') {
      auto end = s_.find('"', pos_ + 1);
      if (end == std::string_view::npos) fail("unterminated string");
      SExpr e{SExpr::Kind::string, std::string(s_.substr(pos_ + 1, end - pos_ - 1)), {}};
      pos_ = end + 1;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')' && s_[pos_] != '"')
      ++pos_;
    return SExpr{SExpr::Kind::symbol, std::string(s_.substr(start, pos_ - start)), {}};
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("s-expression parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed expression: " + what); }

void append_monomial(std::string& out, const Monomial& m, const TablePtr& t) {
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out += " (" + (*t)[i].name + " " + std::to_string(e[i]) + ")";
  }
}

Monomial read_monomial(const std::vector<SExpr>& items, std::size_t from, const TablePtr& table) {
  Monomial m;
  for (std::size_t i = from; i < items.size(); ++i) {
    const auto& f = items[i];
    if (f.kind != SExpr::Kind::list || f.items.size() != 2 || f.items[0].kind != SExpr::Kind::symbol ||
        f.items[1].kind != SExpr::Kind::symbol)
      bad("factor must be (name exponent): " + f.str());
    if (!table) bad("variable " + f.items[0].text + " without a variable table");
    std::size_t v = table->index_of(f.items[0].text);
    unsigned long e = 0;
    try {
      e = std::stoul(f.items[1].text);
    } catch (const std::exception&) {
      bad("exponent " + f.items[1].text);
    }
    if (e == 0) bad("zero exponent for " + f.items[0].text);
    if (m[v] != 0) bad("repeated variable " + f.items[0].text);
    m = m.with(v, static_cast<std::uint32_t>(e));
  }
  return m;
}

}  // namespace

SExpr parse_sexpr(std::string_view text) {
  SExprReader r(text);
  SExpr e = r.read();
  r.expect_end();
  return e;
}

std::string serialize(const Polynomial& p) {
  std::string out = "(poly";
  for (const auto& [m, c] : p.terms()) {
    out += " (\"" + c.get_str() + "\"";
    append_monomial(out, m, p.table());
    out += ")";
  }
  return out + ")";
}

std::string serialize(const RationalFunction& f) { return "(rf " + serialize(f.num()) + " " + serialize(f.den()) + ")"; }

Polynomial parse_polynomial_sexpr(const SExpr& e, const TablePtr& table) {
  if (e.kind != SExpr::Kind::list || e.items.empty() || !e.items[0].is_symbol("poly")) bad("expected (poly ...)");
  Polynomial::TermMap terms;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const auto& t = e.items[i];
    if (t.kind != SExpr::Kind::list || t.items.empty() || t.items[0].kind != SExpr::Kind::string)
      bad("term must start with a quoted coefficient: " + t.str());
    Rational c = parse_rational(t.items[0].text);
    if (c == 0) bad("explicit zero coefficient");
    Monomial m = read_monomial(t.items, 1, table);
    if (!terms.emplace(m, c).second) bad("duplicate monomial");
  }
  return Polynomial(table, std::move(terms));
}

RationalFunction parse_rational_function_sexpr(const SExpr& e, const TablePtr& table) {
  if (e.kind == SExpr::Kind::list && !e.items.empty() && e.items[0].is_symbol("poly"))
    return RationalFunction(parse_polynomial_sexpr(e, table));
  if (e.kind != SExpr::Kind::list || e.items.size() != 3 || !e.items[0].is_symbol("rf")) bad("expected (rf ...)");
  return RationalFunction(parse_polynomial_sexpr(e.items[1], table), parse_polynomial_sexpr(e.items[2], table));
}

Polynomial parse_polynomial_text(std::string_view text, const TablePtr& table) {
  return parse_polynomial_sexpr(parse_sexpr(text), table);
}

RationalFunction parse_rational_function_text(std::string_view text, const TablePtr& table) {
  return parse_rational_function_sexpr(parse_sexpr(text), table);
}

// --------------------------------------------------------------------- infix

namespace {

class InfixParser {
 public:
  InfixParser(std::string_view s, TablePtr table) : s_(s), table_(std::move(table)) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    RationalFunction base = primary();
    skip();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!table_ || !table_->find(name)) fail("unknown variable '" + name + "'");
      return RationalFunction(Polynomial::variable(table_, name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  TablePtr table_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_infix(std::string_view text, const TablePtr& table) { return InfixParser(text, table).parse(); }

Polynomial parse_infix_polynomial(std::string_view text, const TablePtr& table) {
  RationalFunction f = parse_infix(text, table);
  if (!f.is_polynomial()) throw std::invalid_argument("expected a polynomial: " + std::string(text));
  Polynomial p = f.num() * (Rational(1) / f.den().constant_term());
  return p.is_zero() || !p.table() ? p.with_table(table) : p;
}

// --------------------------------------------------------------------- LaTeX

std::string latex_variable(const Variable& v) {
  if (v.name == "pi") return "\\pi";
  if (v.row > 0) return v.name.substr(0, 1) + "_{" + std::to_string(v.row) + std::to_string(v.col) + "}";
  return v.name;
}

std::string latex(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string s = r < 0 ? "-" : "";
  return s + "\\frac{" + Integer(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    if (mag != 1 || m.is_one()) out += latex(mag);
    const auto& e = m.exponents();
    bool wrote = mag != 1 || m.is_one();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out += " ";
      out += latex_variable((*p.table())[i]);
      if (e[i] > 1) out += "^{" + std::to_string(e[i]) + "}";
      wrote = true;
    }
  }
  return out;
}

std::string latex(const RationalFunction& f) {
  if (f.is_polynomial()) return latex(f.num());
  return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

}  // namespace invop
