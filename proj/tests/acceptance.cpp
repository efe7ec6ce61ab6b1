#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invop/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-9", "invop_acceptance"};
  std::vector<int> criteria;
  std::uint64_t seed = 0;
  bool verbose = false;
  app.add_option("--criterion", criteria, "criteria to run (default all)");
  app.add_option("--seed", seed);
  app.add_flag("--verbose", verbose, "print every check");
  CLI11_PARSE(app, argc, argv);

  invop::Config config;
  config.seed = seed;
  invop::Report r;
  try {
    r = invop::report_suite(config, criteria);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (verbose) {
    std::cout << r.to_text();
  } else {
    for (const auto& c : r.checks)
      if (c.status != invop::CheckStatus::pass) {
        std::cout << "[" << invop::to_string(c.status) << "] " << c.criterion << " " << c.name << "\n";
        if (!c.detail.empty()) std::cout << "    " << c.detail << "\n";
      }
    for (int c : r.criteria()) std::cout << r.summary_line(c) << "\n";
  }
  for (int c : r.criteria())
    if (!r.passed(c)) return 1;
  return 0;
}
