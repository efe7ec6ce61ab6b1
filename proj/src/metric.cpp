#include "invop/metric.hpp"

#include <sstream>
#include <stdexcept>

#include "invop/sampling.hpp"

namespace invop {

namespace {

std::map<std::size_t, RationalFunction> point_bindings(const Point& p) {
  std::map<std::size_t, RationalFunction> b;
  const auto n = static_cast<std::size_t>(p.n());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b.emplace(c++, RationalFunction(p.y(i, j)));
  for (std::size_t k = 0; k < static_cast<std::size_t>(p.m()); ++k)
    for (std::size_t l = 0; l < n; ++l) b.emplace(c++, RationalFunction(p.v(k, l)));
  return b;
}

RFMatrix symbolic_y(const TablePtr& t, int n) {
  RFMatrix y(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) y(i - 1, j - 1) = Polynomial::variable(t, i <= j ? y_name(i, j) : y_name(j, i));
  return y;
}

// E_ij + E_ji for i < j, E_ii on the diagonal.
RFMatrix symmetric_unit(int n, int i, int j) {
  RFMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  e(i, j) = RationalFunction(1);
  e(j, i) = RationalFunction(1);
  return e;
}

}  // namespace

RFMatrix MetricTensor::at(const Point& p) const {
  if (p.n() != n || p.m() != m) throw std::invalid_argument("metric: point dimension mismatch");
  auto b = point_bindings(p);
  return g.map([&](const RationalFunction& f) { return f.subst(b); });
}

MetricTensor metric_matrix(int n, int m, std::optional<Rational> a, std::optional<Rational> b) {
  if (n < 1 || m < 0) throw std::invalid_argument("metric: need n >= 1 and m >= 0");
  if ((a && *a <= 0) || (b && *b <= 0)) throw std::invalid_argument("metric: A and B must be positive");
  TablePtr t = coordinate_table(n, m);
  RationalFunction ca = a ? RationalFunction(*a) : RationalFunction(Polynomial::variable(t, "A"));
  RationalFunction cb = b ? RationalFunction(*b) : RationalFunction(Polynomial::variable(t, "B"));
  const auto ny = static_cast<std::size_t>(n * (n + 1) / 2);
  const auto nc = static_cast<std::size_t>(coordinate_count(n, m));

  RFMatrix yinv = inverse(symbolic_y(t, n));
  std::vector<RFMatrix> units;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) units.push_back(yinv * symmetric_unit(n, i, j));

  MetricTensor mt;
  mt.n = n;
  mt.m = m;
  mt.g = RFMatrix(nc, nc);
  for (std::size_t p = 0; p < ny; ++p)
    for (std::size_t q = p; q < ny; ++q) {
      RationalFunction e = ca * (units[p] * units[q]).trace();
      mt.g(p, q) = e;
      mt.g(q, p) = e;
    }
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < n; ++l)
      for (int l2 = 0; l2 < n; ++l2) {
        std::size_t r = ny + static_cast<std::size_t>(k * n + l);
        std::size_t c = ny + static_cast<std::size_t>(k * n + l2);
        mt.g(r, c) = cb * yinv(l, l2);
      }
  return mt;
}

RationalFunction VolumeDensity::squared() const {
  Rational twice = exponent * 2;
  return RationalFunction(1) / det_y.pow(static_cast<int>(twice.get_num().get_si()));
}

std::string VolumeDensity::to_string() const {
  std::ostringstream os;
  os << "(" << det_y.to_string() << ")^(-" << exponent.get_str() << ")";
  return os.str();
}

VolumeDensity volume_density(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("volume: need n >= 1 and m >= 0");
  VolumeDensity v;
  v.det_y = determinant(symbolic_y(coordinate_table(n, m), n));
  v.exponent = Rational(n + m + 1, 2);
  v.exponent.canonicalize();
  return v;
}

GeometryInvariance metric_and_volume_invariance(const ActionMap& action, int points, std::uint64_t seed) {
  const int n = action.n(), m = action.m();
  const Rational det_g = determinant(action.element().g);
  if (det_g == 0) throw std::domain_error("action: g is singular");
  MetricTensor mt = metric_matrix(n, m);
  const QMatrix& jq = action.jacobian();
  RFMatrix j = jq.map([](const Rational& r) { return RationalFunction(r); });
  RFMatrix jt = j.transpose();
  const Rational det_j = determinant(jq);
  const int w = n + m + 1;

  GeometryInvariance out;
  std::ostringstream detail;
  Rational det_g_pow = 1;
  for (int k = 0; k < 2 * w; ++k) det_g_pow *= det_g;
  if (det_j * det_j != det_g_pow) {
    out.volume = false;
    detail << "det(J)^2 = " << Rational(det_j * det_j).get_str() << " differs from det(g)^" << 2 * w << "; ";
  }

  Sampler sampler(seed);
  for (int s = 0; s < points; ++s) {
    Point p = sampler.point(n, m);
    Point q = act(action.element(), p);
    ++out.points;
    if (jt * mt.at(q) * j != mt.at(p)) {
      if (out.metric) detail << "metric differs at point " << s << "; ";
      out.metric = false;
    }
    Rational dy = determinant(p.y), dq = determinant(q.y);
    Rational lhs = det_j * det_j, rhs = 1;
    for (int k = 0; k < w; ++k) {
      rhs *= dq;
      lhs *= dy;
    }
    // (det Y*)^{-w} det(J)^2 == (det Y)^{-w}, cleared of denominators.
    if (lhs != rhs) {
      if (out.volume) detail << "volume density differs at point " << s << "; ";
      out.volume = false;
    }
  }
  out.detail = detail.str();
  if (out.detail.empty()) out.detail = "ok";
  return out;
}

DiffOperator laplace_beltrami(const MetricTensor& metric, const LaplaceBeltramiLimits& limits) {
  const int n = metric.n, m = metric.m;
  if (n > limits.max_n || m > limits.max_m) {
    std::ostringstream os;
    os << "laplace_beltrami: (n, m) = (" << n << ", " << m << ") exceeds the limit (" << limits.max_n << ", "
       << limits.max_m << ")";
    throw std::invalid_argument(os.str());
  }
  const auto ny = static_cast<std::size_t>(n * (n + 1) / 2);
  const auto nc = static_cast<std::size_t>(coordinate_count(n, m));
  const RFMatrix& g = metric.g;

  // The metric is block diagonal in (Y, V); invert and take determinants per block.
  RFMatrix gy(ny, ny);
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < ny; ++j) gy(i, j) = g(i, j);
  RFMatrix ginv(nc, nc);
  RFMatrix gy_inv = inverse(gy);
  RationalFunction det = determinant(gy);
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < ny; ++j) ginv(i, j) = gy_inv(i, j);
  for (std::size_t i = ny; i < nc; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (!g(i, j).is_zero() || !g(j, i).is_zero()) throw std::invalid_argument("laplace_beltrami: metric is not block diagonal");
  if (nc > ny) {
    RFMatrix gv(nc - ny, nc - ny);
    for (std::size_t i = ny; i < nc; ++i)
      for (std::size_t j = ny; j < nc; ++j) gv(i - ny, j - ny) = g(i, j);
    RFMatrix gv_inv = inverse(gv);
    det *= determinant(gv);
    for (std::size_t i = ny; i < nc; ++i)
      for (std::size_t j = ny; j < nc; ++j) ginv(i, j) = gv_inv(i - ny, j - ny);
  }

  std::vector<RationalFunction> log_det(nc);
  for (std::size_t i = 0; i < nc; ++i) log_det[i] = det.diff(i) / det * RationalFunction(Rational(1, 2));

  DiffOperator out(n, m);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (ginv(i, j).is_zero()) continue;
      out.add_term(Monomial::var(i) * Monomial::var(j), ginv(i, j));
      out.add_term(Monomial::var(j), ginv(i, j).diff(i) + ginv(i, j) * log_det[i]);
    }
  return out;
}

LaplacianComparison compare_laplacian(int n, int m, LaplacianConvention convention) {
  OperatorSpec spec;
  spec.family = OperatorFamily::laplacian;
  spec.convention = convention;
  DiffOperator lb = laplace_beltrami(metric_matrix(n, m), LaplaceBeltramiLimits{n, m});
  DiffOperator diff = lb - build_operator(spec, n, m);
  LaplacianComparison c;
  c.n = n;
  c.m = m;
  c.convention = convention;
  c.equal = diff.is_zero();
  c.difference = diff.is_zero() ? "0" : diff.to_string();
  return c;
}

}  // namespace invop
