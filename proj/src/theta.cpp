#include "invop/theta.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "invop/invariance.hpp"
#include "invop/operator_spec.hpp"
#include "invop/sampling.hpp"

namespace invop {

namespace {

PolyMatrix lift(const QMatrix& q) {
  return q.map([](const Rational& r) { return Polynomial(r); });
}

PolyMatrix mul_truncated(const PolyMatrix& a, const PolyMatrix& b, std::uint32_t d) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        const TablePtr& t = a(i, k).table() ? a(i, k).table() : b(k, j).table();
        std::size_t vars = t ? t->size() : 0;
        r(i, j) += multiply_truncated(a(i, k), b(k, j), 0, vars, d);
      }
    }
  return r;
}

PolyMatrix truncated(const PolyMatrix& a, std::uint32_t d) {
  return a.map([d](const Polynomial& p) { return p.truncate(d); });
}

struct MovedPoint {
  Point base;
  std::vector<Polynomial> displacement;  // per coordinate, no constant term
};

MovedPoint moved_point(const GroupElement& rep, const TruncatedGroupExp& e) {
  const int n = rep.n(), m = rep.m();
  const std::uint32_t d = e.degree;
  PolyMatrix g = lift(rep.g);
  PolyMatrix gh = mul_truncated(g, e.h, d);
  PolyMatrix y = mul_truncated(gh, gh.transpose(), d);
  PolyMatrix v = mul_truncated(lift(rep.lambda) + mul_truncated(e.mu, e.h.transpose(), d), g.transpose(), d);
  MovedPoint mp;
  mp.base = Point{rep.g * rep.g.transpose(), rep.lambda * rep.g.transpose()};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Polynomial p = y(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      mp.displacement.push_back(p - Polynomial(p.constant_term()));
    }
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < n; ++l) {
      Polynomial p = v(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
      mp.displacement.push_back(p - Polynomial(p.constant_term()));
    }
  return mp;
}

Rational point_coordinate(const Point& p, std::size_t index) {
  const auto n = static_cast<std::size_t>(p.n());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++c)
      if (c == index) return p.y(i, j);
  for (std::size_t k = 0; k < static_cast<std::size_t>(p.m()); ++k)
    for (std::size_t l = 0; l < n; ++l, ++c)
      if (c == index) return p.v(k, l);
  throw std::out_of_range("point coordinate index");
}

Rational monomial_value(const Monomial& mono, const std::vector<Rational>& coords) {
  Rational r = 1;
  for (std::size_t i = 0; i < mono.length(); ++i)
    for (std::uint32_t k = 0; k < mono[i]; ++k) r *= coords[i];
  return r;
}

std::vector<Rational> coordinates_of(const Point& p) {
  std::vector<Rational> c;
  const auto nc = static_cast<std::size_t>(coordinate_count(p.n(), p.m()));
  for (std::size_t i = 0; i < nc; ++i) c.push_back(point_coordinate(p, i));
  return c;
}

std::string deriv_name(const Monomial& beta, const TablePtr& coords) {
  std::string s;
  for (std::size_t i = 0; i < beta.length(); ++i)
    if (beta[i]) s += "d(" + (*coords)[i].name + ")" + (beta[i] > 1 ? "^" + std::to_string(beta[i]) : "");
  return s.empty() ? "1" : s;
}

void require_k_invariant(const InvariantPolynomial& p, int samples, std::uint64_t seed) {
  if (!k_invariance_check(p, samples, seed))
    throw std::invalid_argument("polynomial " + p.name() + " is not K-invariant; Theta is undefined for it");
}

}  // namespace

PStarBasis p_star_basis(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("p* basis: need n >= 1, m >= 0");
  const auto un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m);
  PStarBasis b{n, m, {}, {}, {}};
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i; j < un; ++j) {
      QMatrix x(un, un);
      x(i, j) = 1;
      x(j, i) = 1;
      b.elements.push_back({x, QMatrix(um, un)});
    }
  for (std::size_t k = 0; k < um; ++k)
    for (std::size_t l = 0; l < un; ++l) {
      QMatrix z(um, un);
      z(k, l) = 1;
      b.elements.push_back({QMatrix(un, un), z});
    }
  const std::size_t dim = b.elements.size();
  b.gram = QMatrix(dim, dim);
  b.coordinates = QMatrix(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t c = 0; c < dim; ++c) {
      const auto& ea = b.elements[a];
      const auto& ec = b.elements[c];
      b.gram(a, c) = (ea.x * ec.x).trace() + (um ? (ea.z * ec.z.transpose()).trace() : Rational(0));
    }
  // Algebra coordinates: x_ii = X_ii, x_ij = 2 X_ij (i < j), z_kl = Z_kl.
  std::size_t a = 0;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i; j < un; ++j, ++a) b.coordinates(a, a) = i == j ? 1 : 2;
  for (; a < dim; ++a) b.coordinates(a, a) = 1;
  return b;
}

TablePtr exp_parameter_table(int n, int m) {
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) vars.push_back({"t" + std::to_string(i) + std::to_string(j), VarRole::exp_parameter, i, j});
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) vars.push_back({"s" + std::to_string(k) + std::to_string(l), VarRole::exp_parameter, k, l});
  return std::make_shared<const VariableTable>(std::move(vars));
}

TruncatedGroupExp exp_truncated(const PolyMatrix& x, const PolyMatrix& z, int degree) {
  if (degree < 0) throw std::invalid_argument("exp_truncated: degree must be >= 0");
  if (!x.square() || (z.rows() > 0 && z.cols() != x.rows()))
    throw std::invalid_argument("exp_truncated: shape mismatch");
  const auto d = static_cast<std::uint32_t>(degree);
  const std::size_t n = x.rows();
  TruncatedGroupExp e;
  e.degree = d;
  e.h = PolyMatrix::identity(n);
  PolyMatrix term = PolyMatrix::identity(n);           // X^k / k!
  PolyMatrix series = PolyMatrix::identity(n);         // sum (-X^T)^k / (k+1)!
  PolyMatrix neg = PolyMatrix::identity(n);            // (-X^T)^k / (k+1)!
  PolyMatrix minus_xt = -x.transpose();
  for (std::uint32_t k = 1; k <= d; ++k) {
    term = truncated(mul_truncated(term, x, d), d) * Rational(1, k);
    e.h += term;
    neg = mul_truncated(neg, minus_xt, d) * Rational(1, k + 1);
    series += neg;
  }
  e.mu = truncated(mul_truncated(z, series, d), d);
  return e;
}

TruncatedGroupExp exp_truncated(int n, int m, int degree) {
  TablePtr t = exp_parameter_table(n, m);
  PStarBasis b = p_star_basis(n, m);
  const auto un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m);
  PolyMatrix x(un, un), z(um, un);
  for (std::size_t a = 0; a < b.elements.size(); ++a) {
    Polynomial ta = Polynomial::variable(t, a);
    x += lift(b.elements[a].x).map([&](const Polynomial& c) { return c * ta; });
    if (um) z += lift(b.elements[a].z).map([&](const Polynomial& c) { return c * ta; });
  }
  return exp_truncated(x, z, degree);
}

Polynomial gram_corrected_symbol(const InvariantPolynomial& p) {
  PStarBasis b = p_star_basis(p.n, p.m);
  TablePtr alg = algebra_table(p.n, p.m);
  // P evaluated at the algebra coordinates C G^{-1} dt, with dt_a written as
  // the a-th algebra variable so exponent vectors index the basis.
  QMatrix lin = b.coordinates * inverse(b.gram);
  std::map<std::size_t, Polynomial> bind;
  for (std::size_t a = 0; a < lin.rows(); ++a) {
    Polynomial v;
    for (std::size_t c = 0; c < lin.cols(); ++c)
      if (lin(a, c) != 0) v += Polynomial::variable(alg, c) * lin(a, c);
    bind[a] = v;
  }
  Polynomial body = p.body.table() ? p.body : p.body.with_table(alg);
  return body.subst(bind);
}

LocalSymbol theta_local(const InvariantPolynomial& p, const GroupElement& rep, const ThetaOptions& opt) {
  if (rep.n() != p.n || rep.m() != p.m) throw std::invalid_argument("theta_local: dimension mismatch");
  if (determinant(rep.g) == 0) throw std::domain_error("theta_local: g is singular");
  if (opt.verify_k_invariance) require_k_invariant(p, opt.k_samples, opt.seed);

  Polynomial symbol = gram_corrected_symbol(p);
  const std::uint32_t d = symbol.degree();
  TruncatedGroupExp e = exp_truncated(p.n, p.m, static_cast<int>(d));
  MovedPoint mp = moved_point(rep, e);
  const std::size_t nc = mp.displacement.size();
  const std::size_t tvars = static_cast<std::size_t>(coordinate_count(p.n, p.m));

  LocalSymbol out;
  out.point = mp.base;
  // f(p0 + delta) = sum_beta (d^beta f)(p0) delta^beta / beta!, and
  // [dt^gamma delta^beta]_{t=0} = gamma! coef_{t^gamma}(delta^beta).
  std::map<Monomial, Polynomial, GrlexDescending> powers;
  std::vector<Monomial> betas = monomials_up_to(nc, d);
  for (const Monomial& beta : betas) {
    Polynomial pw;
    if (beta.is_one()) {
      pw = Polynomial(1);
    } else {
      std::size_t i = 0;
      while (beta[i] == 0) ++i;
      const Polynomial& prev = powers.at(beta.with(i, beta[i] - 1));
      pw = multiply_truncated(prev, mp.displacement[i], 0, tvars, d);
    }
    Rational c = 0;
    for (const auto& [gamma, coeff] : symbol.terms()) {
      if (gamma.degree() < beta.degree()) continue;
      auto it = pw.terms().find(gamma);
      if (it == pw.terms().end()) continue;
      Rational gf = 1;
      for (std::size_t a = 0; a < gamma.length(); ++a) gf *= Rational(factorial(gamma[a]));
      c += coeff * gf * it->second;
    }
    if (c != 0) {
      Rational bf = 1;
      for (std::size_t a = 0; a < beta.length(); ++a) bf *= Rational(factorial(beta[a]));
      out.symbol.emplace(beta, c / bf);
    }
    powers.emplace(beta, std::move(pw));
  }
  return out;
}

nlohmann::json LocalSymbol::to_json() const {
  TablePtr t = coordinate_table(point.n(), point.m());
  nlohmann::json j;
  j["point"] = {{"Y", matrix_to_json(point.y)}, {"V", matrix_to_json(point.v)}};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [beta, c] : symbol) {
    nlohmann::json deriv = nlohmann::json::object();
    for (std::size_t i = 0; i < beta.length(); ++i)
      if (beta[i]) deriv[(*t)[i].name] = beta[i];
    terms.push_back({{"deriv", deriv}, {"coeff", c.get_str()}});
  }
  j["symbol"] = terms;
  return j;
}

QMatrix solve_exact(const QMatrix& a, const QMatrix& b, const std::vector<std::string>& column_names) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: row mismatch");
  const std::size_t rows = a.rows(), cols = a.cols(), rhs = b.cols();
  QMatrix m(rows, cols + rhs);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < rhs; ++j) m(i, cols + j) = b(i, j);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows)
      throw std::runtime_error("underdetermined system: rank " + std::to_string(r) + " < " + std::to_string(cols) +
                               " unknowns; increase the number of samples");
    if (p != r)
      for (std::size_t j = 0; j < cols + rhs; ++j) std::swap(m(p, j), m(r, j));
    Rational piv = m(r, c);
    for (std::size_t j = c; j < cols + rhs; ++j) m(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols + rhs; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  for (std::size_t j = 0; j < rhs; ++j)
    for (std::size_t i = r; i < rows; ++i)
      if (m(i, cols + j) != 0) {
        std::string name = j < column_names.size() ? column_names[j] : "column " + std::to_string(j);
        throw std::runtime_error("inconsistent system for " + name + "; the ansatz is too small");
      }
  QMatrix x(cols, rhs);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < rhs; ++j) x(i, j) = m(i, cols + j);
  return x;
}

ThetaClosedResult theta_closed(const InvariantPolynomial& p, const ThetaClosedOptions& opt) {
  const int n = p.n, m = p.m;
  if (opt.verify_k_invariance) require_k_invariant(p, 5, opt.seed);
  ThetaOptions local_opt;
  local_opt.verify_k_invariance = false;

  const std::uint32_t deg = gram_corrected_symbol(p).degree();
  const std::uint32_t cdeg = opt.coeff_degree < 0 ? deg : static_cast<std::uint32_t>(opt.coeff_degree);
  if (opt.det_power < 0) throw std::invalid_argument("theta_closed: det_power must be >= 0");
  const auto nc = static_cast<std::size_t>(coordinate_count(n, m));
  std::vector<Monomial> ansatz = monomials_up_to(nc, cdeg);
  std::vector<Monomial> betas = monomials_up_to(nc, deg);
  const std::size_t unknowns = ansatz.size();
  const std::size_t fit = opt.samples > 0 ? static_cast<std::size_t>(opt.samples) : unknowns;
  if (fit < unknowns)
    throw std::runtime_error("underdetermined system: " + std::to_string(fit) + " samples for " +
                             std::to_string(unknowns) + " unknowns per coefficient; increase the number of samples");
  const std::size_t held = static_cast<std::size_t>(std::max(opt.held_out, 0));
  const std::size_t total = fit + held;

  Sampler sampler(opt.seed);
  std::vector<GroupElement> reps;
  for (std::size_t s = 0; s < total; ++s) reps.push_back(sampler.group_element(n, m));
  std::vector<LocalSymbol> symbols(total);
  const long count = static_cast<long>(total);
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < count; ++s) symbols[static_cast<std::size_t>(s)] = theta_local(p, reps[static_cast<std::size_t>(s)], local_opt);

  TablePtr t = coordinate_table(n, m);
  auto det_y = [&](const Point& pt) { return determinant(pt.y); };
  QMatrix a(fit, unknowns), b(fit, betas.size());
  for (std::size_t s = 0; s < fit; ++s) {
    std::vector<Rational> coords = coordinates_of(symbols[s].point);
    for (std::size_t u = 0; u < unknowns; ++u) a(s, u) = monomial_value(ansatz[u], coords);
    Rational scale = 1;
    for (int k = 0; k < opt.det_power; ++k) scale *= det_y(symbols[s].point);
    for (std::size_t j = 0; j < betas.size(); ++j) {
      auto it = symbols[s].symbol.find(betas[j]);
      b(s, j) = it == symbols[s].symbol.end() ? Rational(0) : it->second * scale;
    }
  }
  std::vector<std::string> names;
  for (const Monomial& beta : betas) names.push_back(deriv_name(beta, t));
  QMatrix x = solve_exact(a, b, names);

  Polynomial det_poly;
  {
    RFMatrix y(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) y(i - 1, j - 1) = Polynomial::variable(t, i <= j ? y_name(i, j) : y_name(j, i));
    det_poly = determinant(y).num();
  }
  Polynomial denom = det_poly.pow(static_cast<unsigned>(opt.det_power));

  ThetaClosedResult result{DiffOperator(n, m), fit, 0, false, ""};
  for (std::size_t j = 0; j < betas.size(); ++j) {
    Polynomial coeff;
    for (std::size_t u = 0; u < unknowns; ++u)
      if (x(u, j) != 0) coeff += Polynomial::monomial(t, ansatz[u], x(u, j));
    if (!coeff.is_zero()) result.op.add_term(betas[j], RationalFunction(coeff, denom));
  }

  for (std::size_t s = fit; s < total; ++s) {
    const LocalSymbol& sym = symbols[s];
    std::map<std::size_t, Rational> at;
    std::vector<Rational> coords = coordinates_of(sym.point);
    for (std::size_t i = 0; i < coords.size(); ++i) at[i] = coords[i];
    std::map<Monomial, Rational, GrlexDescending> closed;
    for (const auto& [beta, c] : result.op.terms()) {
      Rational v = c.eval(at);
      if (v != 0) closed.emplace(beta, v);
    }
    if (closed != sym.symbol)
      throw std::runtime_error("closed form disagrees with the local symbol at held-out point " + std::to_string(s - fit + 1));
    ++result.held_out_verified;
  }

  result.invariant = true;
  Sampler group_sampler(opt.seed + 1);
  for (int k = 0; k < opt.invariance_samples && result.invariant; ++k) {
    ActionMap action(group_sampler.group_element(n, m));
    InvarianceReport r = invariance_check(result.op, action, result.op.order() + 2);
    if (!r.invariant) {
      result.invariant = false;
      result.detail = r.detail;
    }
  }
  if (result.invariant) result.detail = "closed form verified on held-out points and invariant";
  return result;
}

std::vector<ConjectureEntry> conjecture_check(int n_max, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("conjecture_check: n_max must be >= 1");
  std::vector<ConjectureEntry> out;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i) {
      ThetaClosedOptions opt;
      opt.seed = seed;
      opt.invariance_samples = 1;
      ThetaClosedResult phi = theta_closed(invariant_poly_build(PolyFamily::p, {i}, n, 0), opt);
      DiffOperator expected = build_operator("D:j=" + std::to_string(i), n, 0);
      ConjectureEntry e;
      e.n = n;
      e.i = i;
      e.asserted = n <= 2;
      DiffOperator diff = phi.op - expected;
      e.equal = diff.is_zero();
      e.difference = e.equal ? "0" : diff.to_string();
      out.push_back(e);
    }
  return out;
}

}  // namespace invop
