#include "lepkit/serialize.hpp"

#include <fstream>
#include <sstream>

namespace lepkit {

using nlohmann::json;

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

json elems_to_json(const std::vector<Fq>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x.value);
  return a;
}

}  // namespace

json field_to_json(const FieldSpec& f) {
  return json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}, {"alpha", f.alpha().value}};
}

FieldPtr field_from_json(const json& j) {
  const auto p = get_field<unsigned>(j, "p");
  const auto m = get_field<unsigned>(j, "m");
  FieldPtr f;
  try {
    f = make_field(p, m);
  } catch (const Error& e) {
    throw FormatError(std::string("unsupported field: ") + e.what());
  }
  if (j.contains("modulus") && get_field<std::vector<unsigned>>(j, "modulus") != f->modulus())
    throw FormatError("field modulus differs from the canonical modulus for GF(" + std::to_string(f->order()) + ")");
  if (j.contains("alpha") && get_field<unsigned>(j, "alpha") != f->alpha().value)
    throw FormatError("field alpha differs from the canonical primitive element");
  return f;
}

json matrix_to_json(const MatFq& m) { return m.to_ints(); }

MatFq matrix_from_json(const FieldPtr& field, const json& j, std::size_t cols) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  try {
    rows = j.get<std::vector<std::vector<std::int64_t>>>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("matrix entries must be integers: ") + e.what());
  }
  for (const auto& r : rows)
    if (r.size() != cols) throw FormatError("matrix row of length " + std::to_string(r.size()) + ", expected " +
                                            std::to_string(cols));
  try {
    if (rows.empty()) return MatFq(field, 0, cols);
    return MatFq::from_ints(field, rows);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

json instance_to_json(const LepInstance& inst) {
  json j;
  j["format"] = kInstanceFormat;
  j["field"] = field_to_json(*inst.code_a.field());
  j["n"] = inst.code_a.length();
  j["k"] = inst.code_a.dimension();
  j["gen_a"] = matrix_to_json(inst.code_a.generator());
  j["gen_b"] = matrix_to_json(inst.code_b.generator());
  if (inst.witness) {
    const auto& w = *inst.witness;
    j["witness"] = json{{"d", elems_to_json(w.d)},
                        {"perm", w.perm},
                        {"s", w.s_matrix ? matrix_to_json(*w.s_matrix) : json(nullptr)}};
  } else {
    j["witness"] = nullptr;
  }
  json meta{{"seed", inst.metadata.seed}};
  meta["subgroup_r"] = inst.metadata.subgroup_r ? json(*inst.metadata.subgroup_r) : json(nullptr);
  if (inst.metadata.reduced_from) meta["reduced_from"] = *inst.metadata.reduced_from;
  if (inst.metadata.reduction_r) meta["r"] = *inst.metadata.reduction_r;
  j["metadata"] = meta;
  return j;
}

LepInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  if (get_field<std::string>(j, "format") != kInstanceFormat)
    throw FormatError("unknown instance format \"" + j.at("format").get<std::string>() + "\"");
  const FieldPtr field = field_from_json(j.at("field"));
  const auto n = get_field<std::size_t>(j, "n");
  const auto k = get_field<std::size_t>(j, "k");
  if (!j.contains("gen_a") || !j.contains("gen_b")) throw FormatError("missing generator matrix");

  LepInstance inst;
  const auto load_code = [&](const char* key) {
    const MatFq g = matrix_from_json(field, j.at(key), n);
    auto code = LinearCode::from_generator(g);
    if (code.dimension() != k)
      throw FormatError(std::string(key) + " has rank " + std::to_string(code.dimension()) + ", expected k = " +
                        std::to_string(k));
    return code;
  };
  inst.code_a = load_code("gen_a");
  inst.code_b = load_code("gen_b");

  if (j.contains("witness") && !j.at("witness").is_null()) {
    const json& wj = j.at("witness");
    MonomialWitness w;
    for (auto v : get_field<std::vector<std::int64_t>>(wj, "d")) {
      if (!field->contains(v)) throw FormatError("witness entry " + std::to_string(v) + " is not a field element");
      w.d.push_back(field->element(v));
    }
    w.perm = get_field<std::vector<std::size_t>>(wj, "perm");
    if (wj.contains("s") && !wj.at("s").is_null()) w.s_matrix = matrix_from_json(field, wj.at("s"), k);
    try {
      w.validate(n);
    } catch (const InvalidArgument& e) {
      throw FormatError(e.what());
    }
    inst.witness = std::move(w);
  }

  if (j.contains("metadata") && j.at("metadata").is_object()) {
    const json& m = j.at("metadata");
    if (m.contains("seed") && m.at("seed").is_string()) inst.metadata.seed = m.at("seed").get<std::string>();
    if (m.contains("subgroup_r") && !m.at("subgroup_r").is_null())
      inst.metadata.subgroup_r = get_field<std::uint32_t>(m, "subgroup_r");
    if (m.contains("reduced_from")) inst.metadata.reduced_from = get_field<std::string>(m, "reduced_from");
    if (m.contains("r")) inst.metadata.reduction_r = get_field<std::uint32_t>(m, "r");
  }
  return inst;
}

std::string dump_canonical(const json& j) { return j.dump() + "\n"; }

void write_instance(const std::filesystem::path& path, const LepInstance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << dump_canonical(instance_to_json(inst));
  if (!out) throw Error("failed writing " + path.string());
}

LepInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

json plan_to_json(const ConstructionPlan& plan) {
  const auto factors = [](const std::vector<FactorSpec>& v) {
    json a = json::array();
    for (const auto& f : v) a.push_back(json{{"power", f.power}, {"frob", f.frob}});
    return a;
  };
  return json{{"form", std::string(to_string(plan.form))},
              {"factors1", factors(plan.factors1)},
              {"factors2", factors(plan.factors2)},
              {"i", plan.i_exp()},
              {"j", plan.j_exp()},
              {"dim_bound", plan.dim_bound}};
}

json outcome_to_json(const DistinguishOutcome& out) {
  json j{{"verdict", std::string(to_string(out.verdict))},
         {"t_held", out.t_held},
         {"dims", json{{"A1", out.dim_a1}, {"A2", out.dim_a2}, {"B1", out.dim_b1}, {"B2", out.dim_b2}}},
         {"a_side_trivial", out.a_side_trivial},
         {"b_evaluated", out.b_evaluated},
         {"b_side_trivial", out.b_side_trivial},
         {"diag_a", elems_to_json(out.diag_a)},
         {"diag_b", elems_to_json(out.diag_b)}};
  if (!out.reason.empty()) j["reason"] = out.reason;
  return j;
}

}  // namespace lepkit
