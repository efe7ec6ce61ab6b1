#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invop/geodesic.hpp"
#include "invop/metric.hpp"
#include "invop/operator_spec.hpp"

namespace invop {

enum class OutputFormat { text, json, latex };

struct Config {
  int n = 2;
  int m = 1;
  std::uint64_t seed = 0;
  int height = 10;
  int samples = 5;
  LaplacianConvention laplacian = LaplacianConvention::paper;
  DistanceConvention distance = DistanceConvention::as_printed;
  OutputFormat format = OutputFormat::text;
  LaplaceBeltramiLimits lb_limits;
  bool timing = false;  // include wall time in reports
};

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& s);
std::string to_string(LaplacianConvention c);
LaplacianConvention parse_laplacian_convention(const std::string& s);

/// Applies "key = value" lines ('#' starts a comment). Keys: n, m, seed,
/// height, samples, laplacian, distance, format, lb_max_n, lb_max_m, timing.
/// Throws std::invalid_argument on unknown keys or bad values.
void apply_config_text(Config& c, const std::string& text);
void load_config_file(Config& c, const std::string& path);
/// INVOP_SEED and INVOP_FORMAT override the corresponding fields.
void apply_environment(Config& c);

enum class CheckStatus { pass, fail, report_only };
std::string to_string(CheckStatus s);

struct Check {
  int criterion = 0;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string identity;  // the statement being checked
  std::string expected;
  std::string actual;
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::vector<Check> checks;

  /// True when no check of the criterion failed and at least one ran.
  bool passed(int criterion) const;
  std::vector<int> criteria() const;
  /// "criterion N: PASS (k checks)" or "criterion N: FAIL (names of failures)".
  std::string summary_line(int criterion) const;
  nlohmann::json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

/// Runs the listed acceptance criteria (all of 1..9 when empty), in order.
Report report_suite(const Config& config, const std::vector<int>& criteria = {});

/// The individual criteria. Each appends its checks to `out`.
void criterion_theta_n1(const Config& c, Report& out);
void criterion_theta_n2(const Config& c, Report& out);
void criterion_conjecture(const Config& c, Report& out);
void criterion_invariance(const Config& c, Report& out);
void criterion_selberg(const Config& c, Report& out);
void criterion_lie(const Config& c, Report& out);
void criterion_geometry(const Config& c, Report& out);
void criterion_geodesic(const Config& c, Report& out);
void criterion_properties(const Config& c, Report& out);

}  // namespace invop
