#include "lepkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lepkit/harness.hpp"
#include "lepkit/reduction.hpp"
#include "lepkit/serialize.hpp"

namespace lepkit {

namespace {

int exit_for_verdict(Verdict v) {
  switch (v) {
    case Verdict::LikelyEquivalent: return 0;
    case Verdict::NotEquivalent: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return kExitInternal;
}

int cmd_field_info(unsigned p, unsigned m, std::ostream& out) {
  const auto f = make_field(p, m);
  nlohmann::json j = field_to_json(*f);
  j["q"] = f->order();
  out << j.dump() << "\n";
  return 0;
}

int cmd_gen(const std::string& kind, std::uint32_t q, std::size_t n, std::size_t k,
            std::optional<std::uint32_t> subgroup_r, std::uint64_t seed, const std::string& path, std::ostream& out) {
  const auto field = field_of_order(q);
  if (k < 1 || k > n) throw InvalidArgument("need 1 <= k <= n");
  LepInstance inst = kind == "pair" ? equivalent_pair(field, n, k, subgroup_r, seed) : random_pair(field, n, k, seed);
  write_instance(path, inst);
  out << "wrote " << (kind == "pair" ? "equivalent" : "random") << " [" << n << "," << k << "]_" << q
      << " instance to " << path << "\n";
  return 0;
}

int cmd_distinguish(const std::string& path, const std::string& form_name, std::ostream& out) {
  const LepInstance inst = read_instance(path);
  const FieldSpec& f = *inst.code_a.field();
  const std::size_t n = inst.code_a.length();
  const std::size_t k = inst.code_a.dimension();
  ConstructionPlan plan;
  if (form_name.empty()) {
    plan = select_construction(f, k, n);
  } else {
    const auto form = parse_form(form_name);
    if (!form) throw InvalidArgument("unknown construction form \"" + form_name + "\"");
    plan = select_construction(f, k, n, *form);
  }
  const auto outcome = distinguish(inst.code_a, inst.code_b, plan);
  nlohmann::json j = outcome_to_json(outcome);
  j["plan"] = plan_to_json(plan);
  j["diag_subfield"] = diag_subfield(plan, f);
  j["estimate"] = fp_estimate(diag_subfield(plan, f), static_cast<double>(n));
  out << j.dump() << "\n";
  return exit_for_verdict(outcome.verdict);
}

int cmd_reduce(const std::string& in_path, std::uint32_t r, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  const LepInstance inst = read_instance(in_path);
  auto [ca, cb] = reduce_to_pep(inst.code_a, inst.code_b, r);
  LepInstance red;
  red.code_a = std::move(ca);
  red.code_b = std::move(cb);
  red.metadata.seed = inst.metadata.seed;
  red.metadata.reduced_from = in_path;
  red.metadata.reduction_r = r;
  bool lifted_ok = false;
  if (inst.witness) {
    const auto sub = make_subgroup(inst.code_a.field(), r);
    const auto lifted = lift_witness(*inst.witness, sub);
    if (lifted.is_permutation) {
      MonomialWitness w;
      w.d.assign(lifted.perm.size(), FieldSpec::one());
      w.perm = lifted.perm;
      w.s_matrix = inst.witness->s_matrix;
      red.witness = std::move(w);
      red.metadata.subgroup_r = 1;
      lifted_ok = true;
    } else {
      err << "note: witness scalars are not all in the order-" << r
          << " subgroup; the reduced instance is written without a witness\n";
    }
  }
  write_instance(out_path, red);
  nlohmann::json j{{"n", red.code_a.length()},
                   {"k", red.code_a.dimension()},
                   {"r", r},
                   {"witness_lifted", lifted_ok},
                   {"self_orthogonal", dual(red.code_a).contains(red.code_a)},
                   {"out", out_path}};
  if (lifted_ok) j["witness_verified"] = verify_witness(red);
  out << j.dump() << "\n";
  return 0;
}

int cmd_experiment(std::uint32_t q, std::size_t n, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                   const std::string& form_name, const std::string& csv, bool as_json, unsigned threads,
                   std::ostream& out) {
  ExperimentParams params{field_of_order(q), n, k, std::nullopt};
  if (!form_name.empty()) {
    params.form = parse_form(form_name);
    if (!params.form) throw InvalidArgument("unknown construction form \"" + form_name + "\"");
  }
  ExperimentOptions opt;
  opt.threads = threads;
  const auto rep = run_experiment(params, trials, seed, opt);
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw Error("cannot open " + csv);
    f << csv_header() << "\n" << csv_row(rep) << "\n";
  }
  if (as_json)
    out << report_to_json(rep).dump() << "\n";
  else
    out << report_summary(rep);
  return rep.fn_count == 0 ? 0 : 1;
}

int cmd_reference(std::uint64_t trials, std::uint64_t seed, unsigned threads, std::ostream& out) {
  ExperimentOptions opt;
  opt.threads = threads;
  out << std::left << std::setw(14) << "params" << std::setw(18) << "form" << std::setw(18) << "P(T) obs/ref"
      << std::setw(26) << "match|T obs/ref" << std::setw(24) << "estimate obs/ref"
      << "fn\n";
  std::uint64_t fn = 0;
  for (const auto& row : reference_rows()) {
    const ExperimentParams params{field_of_order(row.q), row.n, row.k, std::nullopt};
    const auto rep = run_experiment(params, trials, seed, opt);
    fn += rep.fn_count;
    std::ostringstream p, pt, m, e;
    p << "[" << row.n << "," << row.k << "]_" << row.q;
    pt << std::setprecision(3) << rep.p_t << " / " << row.p_t;
    m << std::setprecision(3) << rep.fp_given_t << " / " << row.fp_given_t;
    e << std::setprecision(4) << rep.estimate << " / " << row.estimate;
    out << std::left << std::setw(14) << p.str() << std::setw(18) << to_string(rep.form) << std::setw(18) << pt.str()
        << std::setw(26) << m.str() << std::setw(24) << e.str() << rep.fn_count << "\n";
  }
  return fn == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-code distinguisher and closure reduction for linear code equivalence", "lepkit"};
  app.require_subcommand(1);

  unsigned fp = 0, fm = 0;
  auto* field_info = app.add_subcommand("field-info", "Print the canonical GF(p^m)");
  field_info->add_option("p", fp, "characteristic")->required();
  field_info->add_option("m", fm, "extension degree")->required();

  std::string gen_kind, gen_out;
  std::uint32_t q = 0;
  std::size_t n = 0, k = 0;
  std::uint32_t subgroup_r = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("kind", gen_kind, "pair (equivalent, with witness) or random")
      ->required()
      ->check(CLI::IsMember({"pair", "random"}));
  gen->add_option("--q", q, "field size")->required();
  gen->add_option("--n", n, "code length")->required();
  gen->add_option("--k", k, "code dimension")->required();
  auto* gen_sub = gen->add_option("--subgroup-r", subgroup_r, "draw witness scalars from the order-r subgroup");
  gen->add_option("--seed", seed, "seed")->required();
  gen->add_option("--out", gen_out, "output file")->required();

  std::string dist_file, plan_form;
  auto* dist = app.add_subcommand("distinguish", "Run the distinguisher on an instance");
  dist->add_option("file", dist_file, "instance file")->required();
  dist->add_option("--plan-form", plan_form, "force a construction form");

  std::string red_file, red_out;
  std::uint32_t red_r = 0;
  auto* red = app.add_subcommand("reduce", "Partial-closure reduction to permutation equivalence");
  red->add_option("file", red_file, "instance file")->required();
  red->add_option("--r", red_r, "closure order, divides q-1")->required();
  red->add_option("--out", red_out, "output file")->required();

  double q_diag = 0, est_n = 0;
  auto* est = app.add_subcommand("estimate", "False-positive estimate for the diagonal test");
  est->add_option("--q-diag", q_diag, "size of the field holding the diagonal")->required();
  est->add_option("--n", est_n, "code length")->required();

  std::uint64_t trials = 0;
  std::string csv, exp_form;
  bool as_json = false;
  unsigned threads = 0;
  auto* exp = app.add_subcommand("experiment", "Monte Carlo run on random and equivalent pairs");
  exp->add_option("--q", q, "field size")->required();
  exp->add_option("--n", n, "code length")->required();
  exp->add_option("--k", k, "code dimension")->required();
  exp->add_option("--trials", trials, "number of trials")->required();
  exp->add_option("--seed", seed, "master seed")->required();
  exp->add_option("--csv", csv, "write a CSV report");
  exp->add_option("--plan-form", exp_form, "force a construction form");
  exp->add_flag("--json", as_json, "print the report as JSON");
  exp->add_option("--threads", threads, "worker threads (default LEPKIT_THREADS or all cores)");

  auto* ref = app.add_subcommand("reference", "Run the four reference parameter sets");
  ref->add_option("--trials", trials, "trials per row")->required();
  ref->add_option("--seed", seed, "master seed")->required();
  ref->add_option("--threads", threads, "worker threads");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*field_info) return cmd_field_info(fp, fm, out);
    if (*gen) {
      std::optional<std::uint32_t> r;
      if (*gen_sub) r = subgroup_r;
      return cmd_gen(gen_kind, q, n, k, r, seed, gen_out, out);
    }
    if (*dist) return cmd_distinguish(dist_file, plan_form, out);
    if (*red) return cmd_reduce(red_file, red_r, red_out, out, err);
    if (*est) {
      out << std::setprecision(6) << fp_estimate(q_diag, est_n) << "\n";
      return 0;
    }
    if (*exp) return cmd_experiment(q, n, k, trials, seed, exp_form, csv, as_json, threads, out);
    if (*ref) return cmd_reference(trials, seed, threads, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const NoApplicablePlan& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace lepkit
