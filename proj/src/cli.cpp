#include "invop/cli.hpp"

#include <CLI11.hpp>

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "invop/geodesic.hpp"
#include "invop/group.hpp"
#include "invop/invariance.hpp"
#include "invop/metric.hpp"
#include "invop/operator_spec.hpp"
#include "invop/report.hpp"
#include "invop/sampling.hpp"
#include "invop/spec_text.hpp"
#include "invop/text_format.hpp"
#include "invop/theta.hpp"

namespace invop {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Eigen::MatrixXd parse_float_matrix(const std::string& text, const std::string& what) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw UsageError("malformed " + what + " matrix '" + text + "'");
  }
  if (!j.is_array()) throw UsageError(what + ": expected a JSON array of rows");
  const auto rows = j.size();
  const auto cols = rows ? j[0].size() : 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw UsageError(what + ": ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_number()) throw UsageError(what + ": entries must be numbers");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j[i][k].get<double>();
    }
  }
  return m;
}

nlohmann::json float_matrix_json(const Eigen::MatrixXd& m) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    j.push_back(row);
  }
  return j;
}

std::string float_matrix_text(const Eigen::MatrixXd& m) {
  std::ostringstream os;
  os.precision(17);
  os << float_matrix_json(m).dump();
  return os.str();
}

void print_operator(std::ostream& out, const DiffOperator& d, OutputFormat f) {
  switch (f) {
    case OutputFormat::text:
      out << d.to_string() << "\n";
      break;
    case OutputFormat::latex:
      out << latex(d) << "\n";
      break;
    case OutputFormat::json:
      out << nlohmann::json{{"n", d.n()}, {"m", d.m()}, {"text", d.to_string()}, {"exact", serialize(d)}}.dump(2)
          << "\n";
      break;
  }
}

/// Short display name: the family tag when it has a single instance at (n, m).
std::string display_name(const OperatorSpec& spec, int n, int m) {
  int count = 0;
  for (const auto& s : all_operator_specs(n, m))
    if (s.family == spec.family) ++count;
  std::string name = spec.name();
  if (count == 1 && !spec.matrix) name = name.substr(0, name.find('_'));
  return name;
}

std::string scaled(const Rational& c, const std::string& name) {
  if (c == 1) return name;
  if (c == -1) return "-" + name;
  return c.get_str() + "·" + name;
}

int emit_check(std::ostream& out, OutputFormat f, bool ok, const std::string& what, const nlohmann::json& detail) {
  if (f == OutputFormat::json) {
    nlohmann::json j = detail;
    j["check"] = what;
    j["status"] = ok ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    out << what << ": " << (ok ? "pass" : "fail") << "\n";
    for (const auto& [k, v] : detail.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariant differential operators on P_n x R^(m,n)", "invop"};
  app.require_subcommand(1);

  Config config;
  std::string config_path, format_text, seed_text;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--format", format_text, "text, json or latex");
  app.add_option("--seed", seed_text, "seed of every sampled object");
  int n = -1, m = -1, height = -1, samples = -1;
  bool timing = false;
  app.add_option("--n", n, "size of Y");
  app.add_option("--m", m, "rows of V");
  app.add_option("--height", height, "height bound of sampled rationals");
  app.add_option("--samples", samples, "number of sampled elements per check");
  app.add_flag("--timing", timing, "include wall time in reports");
  app.fallthrough();

  std::string spec, left, right, poly, func;
  int degree = -1, n_max = 3, det_power = 0, coeff_degree = -1;
  std::string a_text, b_text, convention_text;
  std::string k_text, lambda_text, z_text, y0_text, v0_text, y1_text, v1_text;
  double t_value = 0, a_value = 1, b_value = 1;
  std::vector<int> criteria;
  bool compare = false;

  auto* build = app.add_subcommand("build-op", "expand an operator family in normal order");
  build->add_option("--spec", spec, "operator spec such as D:j=2")->required();
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a function");
  apply_cmd->add_option("--spec", spec)->required();
  apply_cmd->add_option("--f", func, "infix rational function of the coordinates")->required();
  auto* comm = app.add_subcommand("commutator", "commutator of two operators");
  comm->add_option("--left", left)->required();
  comm->add_option("--right", right)->required();
  auto* inv = app.add_subcommand("check-invariance", "exact invariance under sampled group elements");
  inv->add_option("--spec", spec)->required();
  inv->add_option("--degree", degree, "test degree (default order + 2)");
  auto* tl = app.add_subcommand("theta-local", "symbol of Theta(P) at a sampled point");
  tl->add_option("--poly", poly, "invariant polynomial such as xi:p=1,q=1")->required();
  auto* tc = app.add_subcommand("theta-closed", "Theta(P) in closed form");
  tc->add_option("--poly", poly)->required();
  tc->add_option("--det-power", det_power, "power of det(Y) in the coefficient denominators");
  tc->add_option("--coeff-degree", coeff_degree, "degree of the coefficient ansatz");
  auto* conj = app.add_subcommand("check-conjecture", "Phi(q_i) against tr((2 Y dY)^i)");
  conj->add_option("--n-max", n_max);
  auto* kill = app.add_subcommand("check-killing", "closed Killing form against tr(ad ad)");
  auto* jac = app.add_subcommand("check-jacobi", "Jacobi identity of the Lie bracket");
  auto* met = app.add_subcommand("metric", "metric tensor in the coordinates");
  met->add_option("--A", a_text);
  met->add_option("--B", b_text);
  auto* vol = app.add_subcommand("check-volume", "metric and volume invariance");
  auto* lb = app.add_subcommand("laplace-beltrami", "Laplace-Beltrami operator of the metric");
  lb->add_flag("--compare", compare, "print the difference to the closed Laplacian");
  lb->add_option("--convention", convention_text, "paper or trace");
  auto* geo = app.add_subcommand("geodesic", "evaluate the curve through the origin");
  geo->add_option("--k", k_text, "orthogonal matrix (default identity)");
  geo->add_option("--lambda", lambda_text, "JSON array of reals")->required();
  geo->add_option("--z", z_text, "m x n matrix (default zero)");
  geo->add_option("--t", t_value);
  auto* dist = app.add_subcommand("distance", "distance formula between two points");
  dist->add_option("--y0", y0_text)->required();
  dist->add_option("--v0", v0_text);
  dist->add_option("--y1", y1_text)->required();
  dist->add_option("--v1", v1_text);
  dist->add_option("--A", a_value);
  dist->add_option("--B", b_value);
  dist->add_option("--convention", convention_text, "as-printed or sqrt-scaled");
  auto* rep = app.add_subcommand("report", "acceptance report");
  rep->add_option("--criterion", criteria, "criteria to run (default all)");

  std::vector<std::string> argv_store{"invop"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) load_config_file(config, config_path);
    apply_environment(config);
    std::ostringstream overrides;
    if (!format_text.empty()) overrides << "format = " << format_text << "\n";
    if (!seed_text.empty()) overrides << "seed = " << seed_text << "\n";
    if (n >= 0) overrides << "n = " << n << "\n";
    if (m >= 0) overrides << "m = " << m << "\n";
    if (height >= 0) overrides << "height = " << height << "\n";
    if (samples >= 0) overrides << "samples = " << samples << "\n";
    if (timing) overrides << "timing = 1\n";
    apply_config_text(config, overrides.str());
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  const int N = config.n, M = config.m;
  const OutputFormat fmt = config.format;

  try {
    if (build->parsed()) {
      print_operator(out, build_operator(spec, N, M), fmt);
      return 0;
    }
    if (apply_cmd->parsed()) {
      DiffOperator d = build_operator(spec, N, M);
      RationalFunction f = parse_infix(func, d.table());
      RationalFunction r = apply(d, f);
      if (fmt == OutputFormat::json)
        out << nlohmann::json{{"text", r.to_string()}, {"exact", serialize(r)}}.dump(2) << "\n";
      else
        out << (fmt == OutputFormat::latex ? latex(r) : r.to_string()) << "\n";
      return 0;
    }
    if (comm->parsed()) {
      OperatorSpec ls = parse_operator_spec(left), rs = parse_operator_spec(right);
      DiffOperator a = build_operator(ls, N, M), b = build_operator(rs, N, M);
      DiffOperator c = commutator(a, b);
      std::string text;
      if (c.is_zero())
        text = "0";
      else if (auto k = proportionality(c, b))
        text = scaled(*k, display_name(rs, N, M));
      else if (auto k2 = proportionality(c, a))
        text = scaled(*k2, display_name(ls, N, M));
      if (text.empty()) {
        print_operator(out, c, fmt);
      } else if (fmt == OutputFormat::json) {
        out << nlohmann::json{{"commutator", text}, {"exact", serialize(c)}}.dump(2) << "\n";
      } else {
        out << text << "\n";
      }
      return 0;
    }
    if (inv->parsed()) {
      DiffOperator d = build_operator(spec, N, M);
      Sampler s(config.seed, config.height);
      bool ok = true;
      nlohmann::json elements = nlohmann::json::array();
      for (int i = 0; i < config.samples; ++i) {
        GroupElement g = s.group_element(N, M);
        auto r = invariance_check(d, ActionMap(g), degree >= 0 ? static_cast<std::uint32_t>(degree) : d.order() + 2);
        ok = ok && r.invariant;
        elements.push_back({{"g", matrix_to_json(g.g)}, {"lambda", matrix_to_json(g.lambda)},
                            {"invariant", r.invariant}, {"monomials", r.monomials_checked}, {"detail", r.detail}});
      }
      return emit_check(out, fmt, ok, "invariance of " + parse_operator_spec(spec).text(), {{"elements", elements}});
    }
    if (tl->parsed()) {
      InvariantPolynomial p = parse_invariant_poly(poly, N, M);
      Sampler s(config.seed, config.height);
      LocalSymbol sym = theta_local(p, s.group_element(N, M), {true, config.samples, config.seed});
      out << sym.to_json().dump(2) << "\n";
      return 0;
    }
    if (tc->parsed()) {
      ThetaClosedOptions o;
      o.seed = config.seed;
      o.det_power = det_power;
      o.coeff_degree = coeff_degree;
      o.invariance_samples = config.samples;
      auto r = theta_closed(parse_invariant_poly(poly, N, M), o);
      print_operator(out, r.op, fmt);
      if (fmt == OutputFormat::text) err << r.detail << "\n";
      return r.invariant ? 0 : 1;
    }
    if (conj->parsed()) {
      bool ok = true;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& e : conjecture_check(n_max, config.seed)) {
        if (e.asserted) ok = ok && e.equal;
        rows.push_back({{"n", e.n},
                        {"i", e.i},
                        {"equal", e.equal},
                        {"status", e.asserted ? (e.equal ? "pass" : "fail") : "report-only"},
                        {"difference", e.difference}});
      }
      if (fmt == OutputFormat::json) {
        out << nlohmann::json{{"check", "conjecture"}, {"status", ok ? "pass" : "fail"}, {"entries", rows}}.dump(2)
            << "\n";
      } else {
        for (const auto& r : rows)
          out << "n=" << r["n"].get<int>() << " i=" << r["i"].get<int>() << ": " << r["status"].get<std::string>()
              << (r["equal"].get<bool>() ? "" : " difference " + r["difference"].get<std::string>()) << "\n";
        out << "conjecture: " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? 0 : 1;
    }
    if (kill->parsed() || jac->parsed()) {
      Sampler s(config.seed, config.height);
      const int trials = std::max(20, config.samples);
      int good = 0;
      for (int t = 0; t < trials; ++t) {
        AlgebraElement a = s.algebra_element(N, M), b = s.algebra_element(N, M);
        if (kill->parsed()) {
          if (killing_closed(a, b) == killing_trace(a, b)) ++good;
        } else {
          AlgebraElement c = s.algebra_element(N, M);
          AlgebraElement sum = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
          if (sum.x.is_zero_matrix() && sum.z.is_zero_matrix()) ++good;
        }
      }
      return emit_check(out, fmt, good == trials, kill->parsed() ? "killing form" : "jacobi identity",
                        {{"samples", trials}, {"agree", good}});
    }
    if (met->parsed()) {
      std::optional<Rational> a, b;
      if (!a_text.empty()) a = parse_rational(a_text);
      if (!b_text.empty()) b = parse_rational(b_text);
      MetricTensor mt = metric_matrix(N, M, a, b);
      TablePtr t = coordinate_table(N, M);
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < mt.g.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < mt.g.cols(); ++j)
          row.push_back(fmt == OutputFormat::latex ? latex(mt.g(i, j)) : mt.g(i, j).to_string());
        rows.push_back(row);
      }
      VolumeDensity v = volume_density(N, M);
      if (fmt == OutputFormat::json) {
        out << nlohmann::json{{"metric", rows}, {"volume_density", v.to_string()}}.dump(2) << "\n";
      } else {
        out << "coordinates:";
        for (int i = 0; i < coordinate_count(N, M); ++i) out << " " << (*t)[static_cast<std::size_t>(i)].name;
        out << "\n";
        for (const auto& row : rows) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " | " : "") << row[j].get<std::string>();
          out << "\n";
        }
        out << "volume density: " << v.to_string() << "\n";
      }
      return 0;
    }
    if (vol->parsed()) {
      Sampler s(config.seed, config.height);
      bool ok = true;
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < config.samples; ++i) {
        auto g = metric_and_volume_invariance(ActionMap(s.group_element(N, M)), config.samples,
                                              config.seed + static_cast<std::uint64_t>(i));
        ok = ok && g.metric && g.volume;
        rows.push_back({{"metric", g.metric}, {"volume", g.volume}, {"points", g.points}, {"detail", g.detail}});
      }
      return emit_check(out, fmt, ok, "metric and volume invariance", {{"elements", rows}});
    }
    if (lb->parsed()) {
      DiffOperator d = laplace_beltrami(metric_matrix(N, M), config.lb_limits);
      if (!compare) {
        print_operator(out, d, fmt);
        return 0;
      }
      LaplacianConvention conv = convention_text.empty() ? config.laplacian : parse_laplacian_convention(convention_text);
      OperatorSpec ls;
      ls.family = OperatorFamily::laplacian;
      ls.convention = conv;
      DiffOperator diff = d - build_operator(ls, N, M);
      return emit_check(out, fmt, diff.is_zero(), "laplace-beltrami against the closed Laplacian (" + to_string(conv) + ")",
                        {{"difference", diff.is_zero() ? "0" : diff.to_string()}});
    }
    if (geo->parsed()) {
      GeodesicParams gp;
      Eigen::MatrixXd lam = parse_float_matrix("[" + lambda_text + "]", "lambda");
      gp.lambda = lam.row(0).transpose();
      const auto dim = gp.lambda.size();
      gp.k = k_text.empty() ? Eigen::MatrixXd::Identity(dim, dim) : parse_float_matrix(k_text, "k");
      gp.z = z_text.empty() ? Eigen::MatrixXd::Zero(M, dim) : parse_float_matrix(z_text, "Z");
      FloatPoint p = geodesic_eval(gp, t_value);
      FloatPoint tan = geodesic_tangent0(gp);
      if (fmt == OutputFormat::json) {
        out << nlohmann::json{{"t", t_value},
                              {"Y", float_matrix_json(p.y)},
                              {"V", float_matrix_json(p.v)},
                              {"tangent0", {{"Y", float_matrix_json(tan.y)}, {"V", float_matrix_json(tan.v)}}}}
                   .dump(2)
            << "\n";
      } else {
        out << "Y = " << float_matrix_text(p.y) << "\nV = " << float_matrix_text(p.v) << "\n";
      }
      return 0;
    }
    if (dist->parsed()) {
      FloatPoint p0{parse_float_matrix(y0_text, "Y0"), Eigen::MatrixXd()}, p1{parse_float_matrix(y1_text, "Y1"), Eigen::MatrixXd()};
      const auto dim = p0.y.rows();
      p0.v = v0_text.empty() ? Eigen::MatrixXd::Zero(0, dim) : parse_float_matrix(v0_text, "V0");
      p1.v = v1_text.empty() ? Eigen::MatrixXd::Zero(p0.v.rows(), dim) : parse_float_matrix(v1_text, "V1");
      if (v0_text.empty() && !v1_text.empty()) p0.v = Eigen::MatrixXd::Zero(p1.v.rows(), dim);
      DistanceConvention conv = convention_text.empty() ? config.distance : parse_distance_convention(convention_text);
      DistanceResult r = distance(p0, p1, a_value, b_value, conv);
      std::ostringstream v;
      v.precision(17);
      v << r.value;
      if (fmt == OutputFormat::json)
        out << nlohmann::json{{"distance", r.value}, {"t", r.t}, {"delta", r.delta}, {"g", float_matrix_json(r.g)},
                              {"convention", to_string(conv)}}
                   .dump(2)
            << "\n";
      else
        out << v.str() << "\n";
      return 0;
    }
    if (rep->parsed()) {
      Report r = report_suite(config, criteria);
      if (fmt == OutputFormat::json) {
        nlohmann::json j = r.to_json(config.timing);
        j["config"] = {{"seed", std::to_string(config.seed)}, {"height", config.height}, {"samples", config.samples},
                       {"distance", to_string(config.distance)}};
        out << j.dump(2) << "\n";
      } else {
        out << r.to_text(config.timing);
      }
      for (int c : r.criteria())
        if (!r.passed(c)) return 1;
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace invop
