#include "cudim/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"cudim: covering dimension checks for finite and symbolic Cu-semigroups"};
  cudim::JobSpec job;
  std::string catalog, input, expect, report_out;
  app.add_option("--catalog", catalog, "catalog key, e.g. E(4), HomE(2,5), Z");
  app.add_option("--input", input, "input document (presentation, space, chain or retract)");
  app.add_option("--task", job.tasks, "task to run; repeatable")->required();
  app.add_option("--depth", job.depth, "basis depth for symbolic inputs")->capture_default_str();
  app.add_option("--slack", job.slack, "extra depth for existential searches")
      ->capture_default_str();
  app.add_option("--r-max", job.r_max, "largest r in dimension instances (0: default)")
      ->capture_default_str();
  app.add_option("--n-max", job.n_max, "largest n for almost divisibility")->capture_default_str();
  app.add_option("--seed", job.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--expect", expect, "expectation document");
  app.add_option("--report-out", report_out, "write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cudim::exit_input_error;
  }
  if (!catalog.empty()) job.catalog = catalog;
  if (!input.empty()) job.input = input;
  if (!expect.empty()) job.expect = expect;

  if (report_out.empty()) return cudim::run(job, std::cout, std::cerr);
  std::ofstream out(report_out);
  if (!out) {
    std::cerr << "error: cannot write " << report_out << "\n";
    return cudim::exit_input_error;
  }
  return cudim::run(job, out, std::cerr);
}
