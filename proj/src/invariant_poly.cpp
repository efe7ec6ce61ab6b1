#include "invop/invariant_poly.hpp"

#include <stdexcept>

#include "invop/sampling.hpp"
#include "invop/text_format.hpp"

namespace invop {

namespace {

PolyMatrix power(const PolyMatrix& a, int k) {
  PolyMatrix r = PolyMatrix::identity(a.rows());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

PolyMatrix constant(const QMatrix& q) {
  return q.map([](const Rational& r) { return Polynomial(r); });
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

PolyMatrix algebra_x_matrix(const TablePtr& table, int n) {
  const auto un = static_cast<std::size_t>(n);
  PolyMatrix x(un, un);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Polynomial v = Polynomial::variable(table, x_name(i, j));
      if (i == j) {
        x(i - 1, i - 1) = v;
      } else {
        x(i - 1, j - 1) = v * Rational(1, 2);
        x(j - 1, i - 1) = v * Rational(1, 2);
      }
    }
  return x;
}

PolyMatrix algebra_z_matrix(const TablePtr& table, int n, int m) {
  PolyMatrix z(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) z(k - 1, l - 1) = Polynomial::variable(table, z_name(k, l));
  return z;
}

std::string InvariantPolynomial::name() const {
  auto idx = [&] {
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s;
  };
  switch (family) {
    case PolyFamily::p: return "p_" + idx();
    case PolyFamily::q: return "q_" + idx();
    case PolyFamily::xi: return "xi_" + idx();
    case PolyFamily::r: return "R_" + idx();
    case PolyFamily::m_s: return "M_" + idx() + ";S";
    case PolyFamily::q_s: return "Q_" + idx() + ";S";
    case PolyFamily::r_s: return "R_" + idx() + ";S";
    case PolyFamily::custom: return "custom";
  }
  return "custom";
}

InvariantPolynomial invariant_poly_build(PolyFamily family, const std::vector<int>& indices, int n, int m,
                                         const std::optional<QMatrix>& s) {
  require(n >= 1 && m >= 0, "invariant polynomial: need n >= 1, m >= 0");
  TablePtr table = algebra_table(n, m);
  PolyMatrix x = algebra_x_matrix(table, n);
  PolyMatrix z = algebra_z_matrix(table, n, m);
  PolyMatrix zt = z.transpose();
  auto need = [&](std::size_t count) {
    require(indices.size() == count, "invariant polynomial: expected " + std::to_string(count) + " indices");
  };
  auto in_range = [](int v, int lo, int hi, const char* what) {
    require(v >= lo && v <= hi, std::string("invariant polynomial: index ") + what + " out of range");
  };
  auto zsz = [&]() {
    require(s.has_value(), "invariant polynomial: family requires S");
    require(s->rows() == static_cast<std::size_t>(m) && s->cols() == static_cast<std::size_t>(m),
            "invariant polynomial: S must be m x m");
    return zt * constant(*s) * z;
  };

  InvariantPolynomial out{family, indices, std::nullopt, n, m, Polynomial()};
  switch (family) {
    case PolyFamily::p:
      need(1);
      in_range(indices[0], 1, n, "j");
      out.body = power(x, indices[0]).trace();
      break;
    case PolyFamily::q:
    case PolyFamily::xi: {
      need(2);
      in_range(indices[0], 1, m, "p");
      in_range(indices[1], indices[0], m, "q");
      PolyMatrix prod = family == PolyFamily::q ? z * zt : z * x * zt;
      out.body = prod(static_cast<std::size_t>(indices[0] - 1), static_cast<std::size_t>(indices[1] - 1));
      break;
    }
    case PolyFamily::r:
      need(2);
      in_range(indices[0], 1, n, "j");
      in_range(indices[1], 1, m, "p");
      out.body = (power(x, indices[0]) * power(zt * z, indices[1])).trace();
      break;
    case PolyFamily::m_s:
      need(1);
      in_range(indices[0], 1, n, "j");
      out.body = power(x + zsz(), indices[0]).trace();
      out.s = s;
      break;
    case PolyFamily::q_s:
      need(1);
      in_range(indices[0], 1, m, "p");
      out.body = power(zsz(), indices[0]).trace();
      out.s = s;
      break;
    case PolyFamily::r_s: {
      need(3);
      in_range(indices[0], 1, n, "i");
      in_range(indices[1], 1, m, "p");
      in_range(indices[2], 1, n, "j");
      PolyMatrix w = zsz();
      out.body = (power(x, indices[0]) * power(w, indices[1]) * power(x + w, indices[2])).trace();
      out.s = s;
      break;
    }
    case PolyFamily::custom:
      throw std::invalid_argument("invariant polynomial: use custom_invariant_poly for custom bodies");
  }
  if (out.body.is_zero() || !out.body.table()) out.body = out.body.with_table(table);
  return out;
}

InvariantPolynomial custom_invariant_poly(const Polynomial& body, int n, int m) {
  TablePtr table = algebra_table(n, m);
  Polynomial b = body.table() ? body : body.with_table(table);
  if (!b.table()->is_prefix_of(*table) && !table->is_prefix_of(*b.table()))
    throw std::invalid_argument("custom polynomial is not over the algebra coordinates");
  return {PolyFamily::custom, {}, std::nullopt, n, m, b};
}

InvariantPolynomial parse_invariant_poly(const std::string& text, int n, int m) {
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    SpecText spec = parse_spec_text(text);
    std::optional<QMatrix> s;
    if (spec.has("S")) s = spec.matrix("S");
    const std::string& t = spec.tag;
    if (t == "p") return invariant_poly_build(PolyFamily::p, {spec.integer("j")}, n, m);
    if (t == "q") return invariant_poly_build(PolyFamily::q, {spec.integer("p"), spec.integer("q")}, n, m);
    if (t == "xi") return invariant_poly_build(PolyFamily::xi, {spec.integer("p"), spec.integer("q")}, n, m);
    if (t == "R") return invariant_poly_build(PolyFamily::r, {spec.integer("j"), spec.integer("p")}, n, m);
    if (t == "M") return invariant_poly_build(PolyFamily::m_s, {spec.integer("j")}, n, m, s);
    if (t == "Q") return invariant_poly_build(PolyFamily::q_s, {spec.integer("p")}, n, m, s);
    if (t == "RS")
      return invariant_poly_build(PolyFamily::r_s, {spec.integer("i"), spec.integer("p"), spec.integer("j")}, n, m, s);
    throw std::invalid_argument("unknown polynomial family '" + t + "'");
  }
  return custom_invariant_poly(parse_infix_polynomial(text, algebra_table(n, m)), n, m);
}

std::map<std::size_t, Polynomial> k_inverse_substitution(const TablePtr& table, int n, int m, const QMatrix& k) {
  // New X = k^T X k and new Z = Z k, re-expressed in x/z coordinates.
  PolyMatrix x = algebra_x_matrix(table, n);
  PolyMatrix z = algebra_z_matrix(table, n, m);
  PolyMatrix kk = constant(k);
  PolyMatrix x_new = kk.transpose() * x * kk;
  PolyMatrix z_new = z * kk;
  std::map<std::size_t, Polynomial> bind;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Polynomial v = x_new(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      bind[table->index_of(x_name(i, j))] = i == j ? v : v * Rational(2);
    }
  for (int a = 1; a <= m; ++a)
    for (int l = 1; l <= n; ++l)
      bind[table->index_of(z_name(a, l))] = z_new(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(l - 1));
  return bind;
}

bool k_invariance_check(const Polynomial& body, int n, int m, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("k_invariance_check: samples must be >= 1");
  TablePtr table = body.table() ? body.table() : algebra_table(n, m);
  Sampler sampler(seed);
  for (auto component : {OrthogonalComponent::special, OrthogonalComponent::reflected}) {
    for (int s = 0; s < samples; ++s) {
      QMatrix k = sampler.orthogonal(n, component);
      if (body.subst(k_inverse_substitution(table, n, m, k)) != body) return false;
    }
  }
  return true;
}

bool k_invariance_check(const InvariantPolynomial& p, int samples, std::uint64_t seed) {
  return k_invariance_check(p.body, p.n, p.m, samples, seed);
}

}  // namespace invop
