#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lepkit/instances.hpp"
#include "lepkit/solver.hpp"

namespace lepkit {

struct ExperimentParams {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  // Force a construction form; otherwise select_construction decides.
  std::optional<ConstructionForm> form;
};

struct ExperimentOptions {
  // Trial t uses child_seed(master, first_trial + t); lets runs be split into chunks.
  std::uint64_t first_trial = 0;
  // Also run the distinguisher on an equivalent pair in every trial.
  bool equivalent_pairs = true;
  // 0 = LEPKIT_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

// Aggregate of a Monte Carlo run. Random pairs give p_t (event T: both side
// intersections trivial) and fp_given_t (diagonal multisets matched although
// the codes are independent); equivalent pairs give fn_count, which must be 0.
struct ExperimentReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  ConstructionForm form = ConstructionForm::OddPrime;
  std::uint64_t dim_bound = 0;
  std::uint32_t diag_q = 0;
  std::uint64_t seed = 0;

  std::uint64_t trials = 0;
  std::uint64_t t_count = 0;
  std::uint64_t fp_matches = 0;
  std::uint64_t equivalent_trials = 0;
  std::uint64_t eq_t_count = 0;
  std::uint64_t fn_count = 0;
  // Diagonal entries outside the subfield of order diag_q.
  std::uint64_t subfield_violations = 0;
  // Side codes whose dimension exceeded dim_bound.
  std::uint64_t bound_violations = 0;

  double p_t = 0;
  double fp_given_t = 0;
  double estimate = 0;
  double wall_time = 0;

  void recompute_rates();
};

ExperimentReport run_experiment(const ExperimentParams& params, std::uint64_t trials, std::uint64_t master_seed,
                                const ExperimentOptions& options = {});

// Sum of two reports over the same parameters (e.g. consecutive chunks).
ExperimentReport merge_reports(const ExperimentReport& a, const ExperimentReport& b);

std::string csv_header();
std::string csv_row(const ExperimentReport& r);
nlohmann::json report_to_json(const ExperimentReport& r);
std::string report_summary(const ExperimentReport& r);

unsigned default_thread_count();

// Published reference statistics for the four benchmark parameter sets.
struct ReferenceRow {
  std::uint32_t q;
  std::size_t n;
  std::size_t k;
  ConstructionForm form;
  double p_t;
  double fp_given_t;
  double estimate;
};

const std::vector<ReferenceRow>& reference_rows();

}  // namespace lepkit
