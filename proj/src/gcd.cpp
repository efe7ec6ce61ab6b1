// Multivariate gcd over Q by recursion on the first occurring variable, with
// the subresultant polynomial remainder sequence in R[x], R = Q[other vars].

#include <stdexcept>

#include "invop/polynomial.hpp"

namespace invop {

namespace {

using Coeffs = std::map<std::uint32_t, Polynomial>;  // univariate view in x

std::uint32_t deg(const Coeffs& c) { return c.empty() ? 0 : c.rbegin()->first; }
const Polynomial& lc(const Coeffs& c) { return c.rbegin()->second; }

Polynomial xpow(const TablePtr& t, std::size_t x, std::uint32_t k) {
  return k == 0 ? Polynomial(1) : Polynomial::monomial(t, Monomial::var(x, k), 1);
}

Polynomial content_in(const Polynomial& p, std::size_t x) {
  Polynomial g;
  for (const auto& [k, c] : p.collect(x)) {
    g = g.is_zero() ? make_monic(c) : gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, all in R[x].
Polynomial prem(const Polynomial& a, const Polynomial& b, std::size_t x) {
  TablePtr t = unify_tables(a.table(), b.table());
  auto bc = b.collect(x);
  std::uint32_t db = deg(bc);
  Polynomial lb = lc(bc);
  Polynomial r = a;
  std::uint32_t da = a.degree_in(x);
  if (da < db) return r;
  std::uint32_t steps = da - db + 1;
  std::uint32_t done = 0;
  while (!r.is_zero() && r.degree_in(x) >= db) {
    auto rc = r.collect(x);
    std::uint32_t dr = deg(rc);
    r = lb * r - lc(rc) * xpow(t, x, dr - db) * b;
    ++done;
  }
  if (done < steps) r *= lb.pow(steps - done);
  return r;
}

// gcd of two polynomials that are primitive in x and both involve x.
Polynomial subresultant_gcd(Polynomial a, Polynomial b, std::size_t x) {
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  Polynomial g(1), h(1);
  while (true) {
    std::uint32_t delta = a.degree_in(x) - b.degree_in(x);
    Polynomial r = prem(a, b, x);
    if (r.is_zero()) return b;
    if (r.degree_in(x) == 0) return Polynomial(1);
    a = b;
    b = exact_divide(r, g * h.pow(delta));
    g = lc(a.collect(x));
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_divide(g.pow(delta), h.pow(delta - 1));
    }
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return make_monic(a);
  std::size_t xa = a.first_variable();
  std::size_t xb = b.first_variable();
  std::size_t x = std::min(xa, xb);
  if (!a.involves(x)) return gcd(a, content_in(b, x));
  if (!b.involves(x)) return gcd(content_in(a, x), b);

  Polynomial ca = content_in(a, x);
  Polynomial cb = content_in(b, x);
  Polynomial pa = exact_divide(a, ca);
  Polynomial pb = exact_divide(b, cb);
  Polynomial c = gcd(ca, cb);
  Polynomial g = subresultant_gcd(pa, pb, x);
  if (g.involves(x)) g = exact_divide(g, content_in(g, x));
  else g = Polynomial(1);
  return make_monic(c * g);
}

}  // namespace invop
