// One PASS/FAIL line per criterion; exit status 0 only if all pass.

#include <iostream>

#include <CLI11.hpp>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  nara::AcceptanceOptions options;
  std::vector<int> only;
  bool verbose = false;
  app.add_flag("--extended", options.extended, "longer sweeps and prefixes");
  app.add_option("--only", only, "criterion numbers to run")->check(CLI::Range(1, 16));
  app.add_flag("-v,--verbose", verbose, "print each line as it finishes");
  CLI11_PARSE(app, argc, argv);
  options.only.insert(only.begin(), only.end());
  if (verbose) options.log = &std::cerr;

  const auto results = nara::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << nara::format_result(r) << "\n";
    failed += !r.pass;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
