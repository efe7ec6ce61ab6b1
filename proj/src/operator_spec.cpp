#include "invop/operator_spec.hpp"

#include <stdexcept>

#include "invop/group.hpp"
#include "invop/operator_matrix.hpp"
#include "invop/spec_text.hpp"

namespace invop {

namespace {

struct FamilyInfo {
  OperatorFamily family;
  const char* tag;
  std::vector<const char*> keys;
  const char* matrix_key;
};

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> info = {
      {OperatorFamily::selberg, "Selberg", {"i"}, nullptr},
      {OperatorFamily::d, "D", {"j"}, nullptr},
      {OperatorFamily::psi, "Psi", {"p", "q"}, nullptr},
      {OperatorFamily::delta, "Delta", {"p", "q"}, nullptr},
      {OperatorFamily::l, "L", {"p"}, nullptr},
      {OperatorFamily::s, "S", {"j", "p"}, nullptr},
      {OperatorFamily::phi_s, "Phi", {"j"}, "S"},
      {OperatorFamily::l_s, "LS", {"p"}, "S"},
      {OperatorFamily::phi_ipj_s, "PhiIPJ", {"i", "p", "j"}, "S"},
      {OperatorFamily::jacobi_m, "M", {}, "M"},
      {OperatorFamily::laplacian, "Laplacian", {}, nullptr},
  };
  return info;
}

const FamilyInfo& info_of(OperatorFamily f) {
  for (const auto& i : families())
    if (i.family == f) return i;
  throw std::logic_error("unknown operator family");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string matrix_text(const QMatrix& q) { return matrix_to_json(q).dump(); }

}  // namespace

std::string OperatorSpec::name() const {
  const FamilyInfo& info = info_of(family);
  std::string s = info.tag;
  if (!indices.empty()) {
    s += "_";
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
  }
  return s;
}

std::string OperatorSpec::text() const {
  const FamilyInfo& info = info_of(family);
  std::string s = std::string(info.tag) + ":";
  std::string params;
  auto add = [&](const std::string& kv) { params += (params.empty() ? "" : ",") + kv; };
  for (std::size_t i = 0; i < info.keys.size() && i < indices.size(); ++i)
    add(std::string(info.keys[i]) + "=" + std::to_string(indices[i]));
  if (family == OperatorFamily::laplacian) {
    if (a) add("A=" + a->get_str());
    if (b) add("B=" + b->get_str());
    add(std::string("convention=") + (convention == LaplacianConvention::paper ? "paper" : "trace"));
  }
  if (strict) add("strict=1");
  s += params;
  if (info.matrix_key && matrix) s += (params.empty() ? "" : ";") + std::string(info.matrix_key) + "=" + matrix_text(*matrix);
  return s;
}

OperatorSpec parse_operator_spec(const std::string& text) {
  SpecText st = parse_spec_text(text);
  const FamilyInfo* info = nullptr;
  for (const auto& i : families())
    if (st.tag == i.tag) info = &i;
  if (!info) throw std::invalid_argument("unknown operator family '" + st.tag + "'");
  OperatorSpec spec;
  spec.family = info->family;
  for (const char* k : info->keys) spec.indices.push_back(st.integer(k));
  if (info->matrix_key && st.has(info->matrix_key)) spec.matrix = st.matrix(info->matrix_key);
  if (spec.family == OperatorFamily::laplacian) {
    auto param = [&](const char* key) -> std::optional<Rational> {
      if (!st.has(key) || st.params.at(key) == key) return std::nullopt;
      Rational r = st.rational(key);
      require(r > 0, std::string("Laplacian: ") + key + " must be positive");
      return r;
    };
    spec.a = param("A");
    spec.b = param("B");
    if (st.has("convention")) {
      const std::string& c = st.params.at("convention");
      if (c == "paper") spec.convention = LaplacianConvention::paper;
      else if (c == "trace") spec.convention = LaplacianConvention::trace;
      else throw std::invalid_argument("Laplacian: convention must be paper or trace");
    }
  }
  if (st.has("strict")) spec.strict = st.integer("strict") != 0;
  for (const auto& [k, v] : st.params) {
    bool known = k == "strict" || (info->matrix_key && k == info->matrix_key);
    for (const char* key : info->keys) known = known || k == key;
    if (spec.family == OperatorFamily::laplacian) known = known || k == "A" || k == "B" || k == "convention";
    require(known, st.tag + ": unknown parameter '" + k + "'");
  }
  return spec;
}

DiffOperator build_operator(const std::string& spec, int n, int m) {
  return build_operator(parse_operator_spec(spec), n, m);
}

DiffOperator build_operator(const OperatorSpec& spec, int n, int m) {
  require(n >= 1 && m >= 0, "build_operator: need n >= 1, m >= 0");
  const FamilyInfo& info = info_of(spec.family);
  require(spec.indices.size() == info.keys.size(), spec.name() + ": wrong number of indices");
  auto in_range = [&](std::size_t pos, int lo, int hi) {
    int v = spec.indices[pos];
    require(v >= lo && v <= hi, std::string(info.tag) + ": index " + info.keys[pos] + "=" + std::to_string(v) +
                                    " out of range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  };
  auto matrix_param = [&]() -> QMatrix {
    if (!spec.matrix) {
      require(m == 0, std::string(info.tag) + ": parameter " + info.matrix_key + " is required");
      return QMatrix();
    }
    require(spec.matrix->rows() == static_cast<std::size_t>(m) && spec.matrix->cols() == static_cast<std::size_t>(m),
            std::string(info.tag) + ": " + info.matrix_key + " must be " + std::to_string(m) + "x" + std::to_string(m));
    return *spec.matrix;
  };

  BaseMatrices b = build_base_matrices(n, m);
  TablePtr t = coordinate_table(n, m);
  auto y_dy = [&] { return b.y * b.dy; };
  auto weighted_v = [&](const QMatrix& s) {
    OperatorMatrix sm = OperatorMatrix::constant(n, m, s.map([](const Rational& r) { return RationalFunction(r); }));
    return b.y * (b.dv.transpose() * sm * b.dv);
  };
  auto y_v = [&] { return b.y * (b.dv.transpose() * b.dv); };
  auto mixed = [&](const QMatrix& s) {
    OperatorMatrix sm = OperatorMatrix::constant(n, m, s.map([](const Rational& r) { return RationalFunction(r); }));
    return b.y * (Rational(2) * b.dy + b.dv.transpose() * sm * b.dv);
  };

  switch (spec.family) {
    case OperatorFamily::selberg:
      in_range(0, 1, n);
      return y_dy().pow(spec.indices[0]).trace();
    case OperatorFamily::d:
      in_range(0, 1, n);
      return (Rational(2) * y_dy()).pow(spec.indices[0]).trace();
    case OperatorFamily::psi:
    case OperatorFamily::delta: {
      in_range(0, 1, m);
      in_range(1, spec.indices[0], m);
      OperatorMatrix prod = spec.family == OperatorFamily::psi
                                ? b.dv * b.y * b.dv.transpose()
                                : b.dv * (Rational(2) * y_dy()) * b.y * b.dv.transpose();
      return prod(static_cast<std::size_t>(spec.indices[0] - 1), static_cast<std::size_t>(spec.indices[1] - 1));
    }
    case OperatorFamily::l:
      in_range(0, 1, m);
      return y_v().pow(spec.indices[0]).trace();
    case OperatorFamily::s:
      in_range(0, 1, n);
      in_range(1, 1, m);
      return ((Rational(2) * y_dy()).pow(spec.indices[0]) * y_v().pow(spec.indices[1])).trace();
    case OperatorFamily::phi_s:
      in_range(0, 1, n);
      return mixed(matrix_param()).pow(spec.indices[0]).trace();
    case OperatorFamily::l_s:
      in_range(0, 1, m);
      return weighted_v(matrix_param()).pow(spec.indices[0]).trace();
    case OperatorFamily::phi_ipj_s: {
      in_range(0, 1, n);
      in_range(1, 1, m);
      in_range(2, 1, n);
      QMatrix s = matrix_param();
      return ((Rational(2) * y_dy()).pow(spec.indices[0]) * weighted_v(s).pow(spec.indices[1]) *
              mixed(s).pow(spec.indices[2]))
          .trace();
    }
    case OperatorFamily::jacobi_m: {
      QMatrix mm = matrix_param();
      if (spec.strict) {
        require(is_symmetric(mm) && is_positive_definite(mm), "M: matrix must be symmetric positive definite");
        for (std::size_t i = 0; i < mm.rows(); ++i)
          for (std::size_t j = 0; j < mm.cols(); ++j) {
            Rational twice = mm(i, j) * 2;
            bool ok = i == j ? mm(i, j).get_den() == 1 : twice.get_den() == 1;
            require(ok, "M: matrix must be half-integral");
          }
      }
      QMatrix inv;
      try {
        inv = inverse(mm);
      } catch (const std::domain_error&) {
        throw std::domain_error("M: matrix is singular");
      }
      RationalFunction c(Polynomial(1), Polynomial::variable(t, "pi") * Rational(8));
      OperatorMatrix minv = OperatorMatrix::constant(n, m, inv.map([&](const Rational& r) { return c * r; }));
      OperatorMatrix inner = b.dy + b.dv.transpose() * minv * b.dv;
      RFMatrix yrf(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) yrf(i - 1, j - 1) = Polynomial::variable(t, i <= j ? y_name(i, j) : y_name(j, i));
      return determinant(inner).times_function(determinant(yrf));
    }
    case OperatorFamily::laplacian: {
      RationalFunction a = spec.a ? RationalFunction(*spec.a) : RationalFunction(Polynomial::variable(t, "A"));
      RationalFunction bb = spec.b ? RationalFunction(*spec.b) : RationalFunction(Polynomial::variable(t, "B"));
      RationalFunction ia = RationalFunction(1) / a, ib = RationalFunction(1) / bb;
      OperatorMatrix ydy = y_dy();
      DiffOperator out = (ydy * ydy).trace().times_function(ia);
      out -= ydy.trace().times_function(ia * RationalFunction(Rational(m, 2)));
      OperatorMatrix v = b.dv * b.y * b.dv.transpose();
      DiffOperator vpart(n, m);
      for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k)
        for (std::size_t p = k; p < static_cast<std::size_t>(m); ++p)
          if (p == k || spec.convention == LaplacianConvention::paper) vpart += v(k, p);
      out += vpart.times_function(ib);
      return out;
    }
  }
  throw std::logic_error("unhandled operator family");
}

std::vector<OperatorSpec> all_operator_specs(int n, int m) {
  std::vector<OperatorSpec> out;
  auto add = [&](OperatorFamily f, std::vector<int> idx, std::optional<QMatrix> mat = std::nullopt) {
    OperatorSpec s;
    s.family = f;
    s.indices = std::move(idx);
    s.matrix = std::move(mat);
    out.push_back(std::move(s));
  };
  QMatrix s_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  QMatrix m_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      s_matrix(i, j) = i == j ? Rational(i + 1) : (i < j ? Rational(1, 2) : Rational(-1, 3));
      m_matrix(i, j) = i == j ? Rational(1) : Rational(1, 2);
    }
  for (int i = 1; i <= n; ++i) add(OperatorFamily::selberg, {i});
  for (int j = 1; j <= n; ++j) add(OperatorFamily::d, {j});
  for (int p = 1; p <= m; ++p)
    for (int q = p; q <= m; ++q) {
      add(OperatorFamily::psi, {p, q});
      add(OperatorFamily::delta, {p, q});
    }
  for (int p = 1; p <= m; ++p) add(OperatorFamily::l, {p});
  for (int j = 1; j <= n; ++j)
    for (int p = 1; p <= m; ++p) add(OperatorFamily::s, {j, p});
  for (int j = 1; j <= n; ++j) add(OperatorFamily::phi_s, {j}, s_matrix);
  for (int p = 1; p <= m; ++p) add(OperatorFamily::l_s, {p}, s_matrix);
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= m; ++p)
      for (int j = 1; j <= n; ++j) add(OperatorFamily::phi_ipj_s, {i, p, j}, s_matrix);
  add(OperatorFamily::jacobi_m, {}, m_matrix);
  for (auto c : {LaplacianConvention::paper, LaplacianConvention::trace}) {
    if (c == LaplacianConvention::trace && m < 2) continue;
    OperatorSpec s;
    s.family = OperatorFamily::laplacian;
    s.convention = c;
    out.push_back(s);
  }
  return out;
}

}  // namespace invop
