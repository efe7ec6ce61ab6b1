#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invop/cli.hpp"

namespace invop {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(cli, commutator_reports_multiple) {
  Outcome r = run({"commutator", "--n", "2", "--m", "1", "--left", "D:j=1", "--right", "Psi:p=1,q=1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2·Psi\n");
}

TEST(cli, check_conjecture_passes) {
  Outcome r = run({"check-conjecture", "--n-max", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("conjecture: pass"), std::string::npos);
}

TEST(cli, build_op_formats) {
  Outcome text = run({"build-op", "--n", "2", "--m", "1", "--spec", "D:j=1"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("y11"), std::string::npos);
  Outcome tex = run({"build-op", "--n", "2", "--m", "1", "--format", "latex", "--spec", "D:j=1"});
  EXPECT_EQ(tex.code, 0);
  EXPECT_NE(tex.out.find("\\partial"), std::string::npos);
  Outcome js = run({"build-op", "--n", "2", "--m", "1", "--format", "json", "--spec", "D:j=1"});
  EXPECT_EQ(nlohmann::json::parse(js.out)["n"], 2);
}

TEST(cli, usage_errors_exit_2) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"build-op", "--spec", "D:j="}).code, 2);
  EXPECT_EQ(run({"build-op", "--n", "2", "--spec", "D:j=5"}).code, 2);
  EXPECT_EQ(run({"distance", "--y0", "[[1,2],[2,1]]", "--y1", "[[1,0],[0,1]]"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(cli, config_file_and_environment) {
  auto path = std::filesystem::temp_directory_path() / "invop_cli_test.conf";
  {
    std::ofstream f(path);
    f << "# test configuration\nn = 1\nm = 0\nformat = json\n";
  }
  Outcome r = run({"--config", path.string(), "metric"});
  EXPECT_EQ(r.code, 0) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["metric"].size(), 1u);

  setenv("INVOP_FORMAT", "text", 1);
  Outcome t = run({"--config", path.string(), "metric"});
  unsetenv("INVOP_FORMAT");
  EXPECT_NE(t.out.find("coordinates: y11"), std::string::npos);
  // command-line flags win over both
  Outcome f = run({"--config", path.string(), "--n", "2", "metric"});
  EXPECT_EQ(nlohmann::json::parse(f.out)["metric"].size(), 3u);

  {
    std::ofstream f2(path);
    f2 << "colour = red\n";
  }
  EXPECT_EQ(run({"--config", path.string(), "metric"}).code, 2);
  std::filesystem::remove(path);
}

TEST(cli, report_is_deterministic) {
  Outcome a = run({"--format", "json", "report", "--criterion", "1"});
  Outcome b = run({"--format", "json", "report", "--criterion", "1"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  for (const auto& c : j["checks"]) EXPECT_FALSE(c.contains("seconds"));
}

TEST(cli, statuses_do_not_depend_on_seed) {
  auto statuses = [](const std::string& seed) {
    nlohmann::json j = nlohmann::json::parse(run({"--format", "json", "--seed", seed, "report", "--criterion", "9"}).out);
    std::vector<std::string> s;
    for (const auto& c : j["checks"]) s.push_back(c["name"].get<std::string>() + "=" + c["status"].get<std::string>());
    return s;
  };
  EXPECT_EQ(statuses("0"), statuses("1"));
}

TEST(cli, distance_prints_value) {
  Outcome r = run({"distance", "--y0", "[[1]]", "--y1", "[[7.38905609893065]]"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 2.0, 1e-12);
}

}  // namespace
}  // namespace invop
