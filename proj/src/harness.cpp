#include "lepkit/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace lepkit {

namespace {

struct TrialRecord {
  bool t_random = false;
  bool match_random = false;
  bool eq_t = false;
  bool false_negative = false;
  std::uint64_t subfield_violations = 0;
  std::uint64_t bound_violations = 0;
};

struct TrialContext {
  const ExperimentParams& params;
  const ConstructionPlan& plan;
  unsigned subfield_degree;
  bool equivalent_pairs;
};

void audit(const DistinguishOutcome& out, const TrialContext& ctx, TrialRecord& rec) {
  const FieldSpec& f = *ctx.params.field;
  for (const auto* diag : {&out.diag_a, &out.diag_b})
    for (auto x : *diag)
      if (!f.in_subfield(x, ctx.subfield_degree)) ++rec.subfield_violations;
  for (auto d : {out.dim_a1, out.dim_a2, out.dim_b1, out.dim_b2})
    if (d > ctx.plan.dim_bound) ++rec.bound_violations;
}

TrialRecord run_trial(const TrialContext& ctx, std::uint64_t trial_seed) {
  TrialRecord rec;
  const auto& p = ctx.params;
  const LepInstance rnd = random_pair(p.field, p.n, p.k, child_seed(trial_seed, 0));
  const auto out = distinguish(rnd.code_a, rnd.code_b, ctx.plan);
  rec.t_random = out.t_held;
  rec.match_random = out.t_held && out.verdict == Verdict::LikelyEquivalent;
  audit(out, ctx, rec);
  if (ctx.equivalent_pairs) {
    const LepInstance eq = equivalent_pair(p.field, p.n, p.k, std::nullopt, child_seed(trial_seed, 1));
    const auto eo = distinguish(eq.code_a, eq.code_b, ctx.plan);
    rec.eq_t = eo.t_held;
    rec.false_negative = eo.verdict == Verdict::NotEquivalent;
    audit(eo, ctx, rec);
  }
  return rec;
}

unsigned degree_of(std::uint32_t sub_order, unsigned p) {
  unsigned d = 0;
  for (std::uint32_t x = 1; x < sub_order; x *= p) ++d;
  return d;
}

}  // namespace

void ExperimentReport::recompute_rates() {
  p_t = trials ? static_cast<double>(t_count) / static_cast<double>(trials) : 0.0;
  fp_given_t = t_count ? static_cast<double>(fp_matches) / static_cast<double>(t_count) : 0.0;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("LEPKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

ExperimentReport run_experiment(const ExperimentParams& params, std::uint64_t trials, std::uint64_t master_seed,
                                const ExperimentOptions& options) {
  if (!params.field) throw InvalidArgument("run_experiment: no field");
  const auto start = std::chrono::steady_clock::now();
  const ConstructionPlan plan = params.form ? select_construction(*params.field, params.k, params.n, *params.form)
                                            : select_construction(*params.field, params.k, params.n);

  ExperimentReport rep;
  rep.q = params.field->order();
  rep.n = params.n;
  rep.k = params.k;
  rep.form = plan.form;
  rep.dim_bound = plan.dim_bound;
  rep.diag_q = diag_subfield(plan, *params.field);
  rep.estimate = fp_estimate(rep.diag_q, static_cast<double>(params.n));
  rep.seed = master_seed;
  rep.trials = trials;

  const TrialContext ctx{params, plan, degree_of(rep.diag_q, params.field->characteristic()),
                         options.equivalent_pairs};
  std::vector<TrialRecord> records(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        records[t] = run_trial(ctx, child_seed(master_seed, options.first_trial + t));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = trials;
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(options.threads ? options.threads : default_thread_count(),
                                                    std::max<std::uint64_t>(trials, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : records) {
    rep.t_count += r.t_random;
    rep.fp_matches += r.match_random;
    rep.eq_t_count += r.eq_t;
    rep.fn_count += r.false_negative;
    rep.subfield_violations += r.subfield_violations;
    rep.bound_violations += r.bound_violations;
  }
  rep.equivalent_trials = options.equivalent_pairs ? trials : 0;
  rep.recompute_rates();
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

ExperimentReport merge_reports(const ExperimentReport& a, const ExperimentReport& b) {
  if (a.q != b.q || a.n != b.n || a.k != b.k || a.form != b.form)
    throw InvalidArgument("merge_reports: reports describe different parameters");
  ExperimentReport r = a;
  r.trials += b.trials;
  r.t_count += b.t_count;
  r.fp_matches += b.fp_matches;
  r.equivalent_trials += b.equivalent_trials;
  r.eq_t_count += b.eq_t_count;
  r.fn_count += b.fn_count;
  r.subfield_violations += b.subfield_violations;
  r.bound_violations += b.bound_violations;
  r.wall_time += b.wall_time;
  r.recompute_rates();
  return r;
}

std::string csv_header() { return "q,n,k,form,trials,t_count,fp_matches,fn_count,p_t,fp_given_t,estimate,seed"; }

std::string csv_row(const ExperimentReport& r) {
  std::ostringstream os;
  os << r.q << ',' << r.n << ',' << r.k << ',' << to_string(r.form) << ',' << r.trials << ',' << r.t_count << ','
     << r.fp_matches << ',' << r.fn_count << ',' << std::setprecision(6) << r.p_t << ',' << r.fp_given_t << ','
     << r.estimate << ',' << r.seed;
  return os.str();
}

nlohmann::json report_to_json(const ExperimentReport& r) {
  return nlohmann::json{{"q", r.q},
                        {"n", r.n},
                        {"k", r.k},
                        {"form", std::string(to_string(r.form))},
                        {"dim_bound", r.dim_bound},
                        {"diag_q", r.diag_q},
                        {"trials", r.trials},
                        {"t_count", r.t_count},
                        {"fp_matches", r.fp_matches},
                        {"equivalent_trials", r.equivalent_trials},
                        {"eq_t_count", r.eq_t_count},
                        {"fn_count", r.fn_count},
                        {"subfield_violations", r.subfield_violations},
                        {"bound_violations", r.bound_violations},
                        {"p_t", r.p_t},
                        {"fp_given_t", r.fp_given_t},
                        {"estimate", r.estimate},
                        {"seed", std::to_string(r.seed)},
                        {"wall_time", r.wall_time}};
}

std::string report_summary(const ExperimentReport& r) {
  std::ostringstream os;
  os << "[" << r.n << "," << r.k << "]_" << r.q << "  " << to_string(r.form) << " (dim bound " << r.dim_bound
     << ", diagonal in GF(" << r.diag_q << "))\n"
     << "  trials        " << r.trials << "\n"
     << "  P(T)          " << std::setprecision(4) << r.p_t << "  (" << r.t_count << " trials)\n"
     << "  match | T     " << r.fp_given_t << "  (" << r.fp_matches << " matches)\n"
     << "  estimate      " << r.estimate << "\n"
     << "  false neg.    " << r.fn_count << " of " << r.equivalent_trials << " equivalent pairs\n"
     << "  wall time     " << std::setprecision(3) << r.wall_time << " s\n";
  return os.str();
}

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows{
      {5, 100, 10, ConstructionForm::OddPrime, 0.630, 1.84e-4, 3.54e-5},
      {8, 300, 6, ConstructionForm::FrobeniusGeneral, 0.175, 0.0646, 0.0326},
      {9, 100, 12, ConstructionForm::Hermitian, 0.518, 0.0125, 4.135e-3},
      {16, 100, 8, ConstructionForm::Hermitian, 0.619, 1.40e-3, 3.59e-4},
  };
  return rows;
}

}  // namespace lepkit
