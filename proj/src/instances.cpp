#include "lepkit/instances.hpp"

#include <numeric>
#include <string>

namespace lepkit {

void MonomialWitness::validate(std::size_t n) const {
  if (d.size() != n || perm.size() != n)
    throw InvalidArgument("witness has length " + std::to_string(d.size()) + "/" + std::to_string(perm.size()) +
                          ", expected " + std::to_string(n));
  for (auto x : d)
    if (!x) throw InvalidArgument("witness scaling vector has a zero entry");
  std::vector<bool> seen(n, false);
  for (auto c : perm) {
    if (c >= n || seen[c]) throw InvalidArgument("witness permutation is not a bijection");
    seen[c] = true;
  }
}

MatFq MonomialWitness::monomial_matrix(const FieldPtr& field) const {
  return MatFq::diagonal(field, d) * permutation_matrix(field, perm);
}

MatFq apply_monomial(const MatFq& g, const std::vector<Fq>& d, const std::vector<std::size_t>& perm) {
  if (d.size() != g.cols() || perm.size() != g.cols()) throw ShapeMismatch("monomial does not match matrix width");
  const FieldSpec& f = g.f();
  MatFq out(g.field(), g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t c = 0; c < g.cols(); ++c) out(i, perm[c]) = f.mul(g(i, c), d[c]);
  return out;
}

MatFq permutation_matrix(const FieldPtr& field, const std::vector<std::size_t>& perm) {
  MatFq p(field, perm.size(), perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) p(c, perm.at(c)) = FieldSpec::one();
  return p;
}

LinearCode random_code(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 1 || k > n) throw InvalidArgument("random_code: need 1 <= k <= n");
  Rng rng(seed);
  const std::uint32_t q = field->order();
  for (;;) {
    MatFq g(field, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (auto& x : g.row(i)) x = Fq{static_cast<std::uint16_t>(rng.below(q))};
    auto code = LinearCode::from_generator(g);
    if (code.dimension() == k) return code;
  }
}

MatFq random_invertible(const FieldPtr& field, std::size_t k, Rng& rng) {
  const std::uint32_t q = field->order();
  for (;;) {
    MatFq s(field, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (auto& x : s.row(i)) x = Fq{static_cast<std::uint16_t>(rng.below(q))};
    if (s.rank() == k) return s;
  }
}

MonomialWitness random_monomial(const FieldPtr& field, std::size_t n, std::size_t k,
                                std::optional<std::uint32_t> subgroup_r, std::uint64_t seed) {
  const std::uint32_t group = field->order() - 1;
  const std::uint32_t r = subgroup_r.value_or(group);
  if (r < 1 || group % r != 0)
    throw InvalidArgument("subgroup order " + std::to_string(r) + " does not divide q-1 = " + std::to_string(group));
  Rng rng(seed);
  MonomialWitness w;
  // Elements of the order-r subgroup are alpha^(s (q-1)/r).
  w.d.resize(n);
  for (auto& x : w.d) x = field->exp(static_cast<std::int64_t>(rng.below(r)) * (group / r));
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(w.perm[i - 1], w.perm[rng.below(i)]);
  if (k > 0) w.s_matrix = random_invertible(field, k, rng);
  return w;
}

LepInstance equivalent_pair(const FieldPtr& field, std::size_t n, std::size_t k,
                            std::optional<std::uint32_t> subgroup_r, std::uint64_t seed) {
  LepInstance inst;
  inst.code_a = random_code(field, n, k, child_seed(seed, 0));
  auto w = random_monomial(field, n, k, subgroup_r, child_seed(seed, 1));
  const MatFq moved = apply_monomial(inst.code_a.generator(), w.d, w.perm);
  inst.code_b = LinearCode::from_generator(*w.s_matrix * moved);
  inst.witness = std::move(w);
  inst.metadata.seed = std::to_string(seed);
  inst.metadata.subgroup_r = subgroup_r;
  return inst;
}

LepInstance random_pair(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t seed) {
  LepInstance inst;
  inst.code_a = random_code(field, n, k, child_seed(seed, 0));
  inst.code_b = random_code(field, n, k, child_seed(seed, 1));
  inst.metadata.seed = std::to_string(seed);
  return inst;
}

bool verify_witness(const LepInstance& inst) {
  if (!inst.witness) throw InvalidArgument("verify_witness: instance carries no witness");
  const auto& w = *inst.witness;
  try {
    w.validate(inst.code_a.length());
  } catch (const InvalidArgument&) {
    return false;
  }
  if (inst.code_a.length() != inst.code_b.length()) return false;
  return LinearCode::from_generator(apply_monomial(inst.code_a.generator(), w.d, w.perm)) == inst.code_b;
}

}  // namespace lepkit
