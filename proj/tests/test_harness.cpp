#include <doctest.h>

#include "lepkit/harness.hpp"

using namespace lepkit;

namespace {

bool same_counts(const ExperimentReport& a, const ExperimentReport& b) {
  return a.trials == b.trials && a.t_count == b.t_count && a.fp_matches == b.fp_matches &&
         a.eq_t_count == b.eq_t_count && a.fn_count == b.fn_count &&
         a.subfield_violations == b.subfield_violations && a.bound_violations == b.bound_violations;
}

}  // namespace

TEST_CASE("zero trials") {
  ExperimentParams params{field_of_order(5), 100, 10, std::nullopt};
  auto rep = run_experiment(params, 0, 1);
  CHECK(rep.trials == 0);
  CHECK(rep.t_count == 0);
  CHECK(rep.fp_matches == 0);
  CHECK(rep.fn_count == 0);
  CHECK(rep.p_t == 0);
  CHECK(rep.fp_given_t == 0);
  CHECK(rep.form == ConstructionForm::OddPrime);
  CHECK(rep.dim_bound == 55);
  CHECK(rep.diag_q == 5);
}

TEST_CASE("reports are reproducible and independent of scheduling") {
  ExperimentParams params{field_of_order(9), 60, 6, std::nullopt};
  ExperimentOptions one;
  one.threads = 1;
  ExperimentOptions four;
  four.threads = 4;
  auto a = run_experiment(params, 24, 99, one);
  auto b = run_experiment(params, 24, 99, four);
  CHECK(same_counts(a, b));
  CHECK(a.t_count <= a.trials);
  CHECK(a.fn_count == 0);
  CHECK(a.subfield_violations == 0);
  CHECK(a.bound_violations == 0);

  // Chunks recombine to the whole run.
  ExperimentOptions first = one, second = one;
  second.first_trial = 10;
  auto c = merge_reports(run_experiment(params, 10, 99, first), run_experiment(params, 14, 99, second));
  CHECK(same_counts(a, c));
  CHECK(c.p_t == doctest::Approx(a.p_t));

  auto d = run_experiment(params, 24, 100, one);
  CHECK(d.seed == 100);
}

TEST_CASE("random-only runs skip the equivalent pairs") {
  ExperimentParams params{field_of_order(5), 40, 4, std::nullopt};
  ExperimentOptions opt;
  opt.equivalent_pairs = false;
  opt.threads = 1;
  auto rep = run_experiment(params, 8, 5, opt);
  CHECK(rep.equivalent_trials == 0);
  CHECK(rep.eq_t_count == 0);
  ExperimentOptions full;
  full.threads = 1;
  auto both = run_experiment(params, 8, 5, full);
  CHECK(both.t_count == rep.t_count);
  CHECK(both.fp_matches == rep.fp_matches);
  CHECK(both.equivalent_trials == 8);
}

TEST_CASE("forced forms and unattackable parameters") {
  ExperimentParams params{field_of_order(16), 100, 8, ConstructionForm::FrobeniusGeneral};
  CHECK_THROWS_AS(run_experiment(params, 1, 1), NoApplicablePlan);
  ExperimentParams bad{field_of_order(5), 100, 50, std::nullopt};
  CHECK_THROWS_AS(run_experiment(bad, 1, 1), NoApplicablePlan);
  ExperimentParams a{field_of_order(5), 100, 10, std::nullopt};
  ExperimentParams b{field_of_order(7), 100, 5, std::nullopt};
  CHECK_THROWS_AS(merge_reports(run_experiment(a, 0, 1), run_experiment(b, 0, 1)), InvalidArgument);
}

TEST_CASE("report formats") {
  CHECK(csv_header() == "q,n,k,form,trials,t_count,fp_matches,fn_count,p_t,fp_given_t,estimate,seed");
  ExperimentParams params{field_of_order(5), 40, 4, std::nullopt};
  ExperimentOptions opt;
  opt.threads = 1;
  auto rep = run_experiment(params, 4, 3, opt);
  const auto row = csv_row(rep);
  CHECK(row.rfind("5,40,4,OddPrime,4,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 11);
  auto j = report_to_json(rep);
  CHECK(j["trials"] == 4);
  CHECK(j["seed"] == "3");
  CHECK(report_summary(rep).find("OddPrime") != std::string::npos);
}

TEST_CASE("reference rows") {
  const auto& rows = reference_rows();
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    auto plan = select_construction(*field_of_order(r.q), r.k, r.n);
    CHECK(plan.form == r.form);
  }
}
