// Times single-threaded experiment runs on the reference parameter sets.
#include <cstdlib>
#include <iostream>

#include "lepkit/harness.hpp"

int main(int argc, char** argv) {
  const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 50;
  lepkit::ExperimentOptions opt;
  opt.threads = 1;
  for (const auto& row : lepkit::reference_rows()) {
    const lepkit::ExperimentParams params{lepkit::field_of_order(row.q), row.n, row.k, std::nullopt};
    const auto rep = lepkit::run_experiment(params, trials, 1, opt);
    std::cout << lepkit::report_summary(rep);
  }
}
