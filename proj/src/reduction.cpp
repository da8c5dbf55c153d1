#include "lepkit/reduction.hpp"

#include <algorithm>
#include <string>

namespace lepkit {

bool SubgroupSpec::contains(Fq x) const { return x && field->dlog(x) % index() == 0; }

SubgroupSpec make_subgroup(FieldPtr field, std::uint32_t r) {
  const std::uint32_t group = field->order() - 1;
  if (r < 1 || group % r != 0)
    throw InvalidArgument("subgroup order " + std::to_string(r) + " does not divide q-1 = " + std::to_string(group));
  SubgroupSpec sub;
  sub.field = field;
  sub.r = r;
  const std::uint32_t idx = group / r;
  sub.generator = field->exp(idx);
  for (std::uint32_t s = 0; s < r; ++s) sub.members.push_back(field->exp(static_cast<std::int64_t>(s) * idx));
  for (std::uint32_t t = 0; t < idx; ++t) sub.coset_reps.push_back(field->exp(t));
  return sub;
}

ScalarDecomposition decompose_scalar(Fq d, const SubgroupSpec& sub) {
  if (!d) throw DivisionByZero("decompose_scalar: zero has no coset decomposition");
  const std::uint32_t j = sub.field->dlog(d);
  const std::uint32_t idx = sub.index();
  return {j / idx, j % idx};
}

std::pair<LinearCode, LinearCode> reduce_to_pep(const LinearCode& a, const LinearCode& b, std::uint32_t r) {
  require_compatible(a, b, "reduce_to_pep");
  return {closure(a, r), closure(b, r)};
}

MatFq BlockMonomial::block(const FieldPtr& field, std::size_t i) const {
  MatFq m(field, r, r);
  for (std::uint32_t src = 0; src < r; ++src) m(src, (src + r - shift.at(i)) % r) = scalar.at(i);
  return m;
}

LiftedWitness lift_witness(const MonomialWitness& witness, const SubgroupSpec& sub) {
  const std::size_t n = witness.length();
  witness.validate(n);
  const std::uint32_t r = sub.r;
  LiftedWitness out;
  out.blocks.r = r;
  out.perm.resize(static_cast<std::size_t>(r) * n);
  out.column_scale.resize(static_cast<std::size_t>(r) * n);
  out.is_permutation = true;
  for (std::size_t c = 0; c < n; ++c) {
    const auto [s, t] = decompose_scalar(witness.d[c], sub);
    const Fq scale = sub.field->exp(t);
    out.blocks.shift.push_back(s);
    out.blocks.exponent.push_back(t);
    out.blocks.scalar.push_back(scale);
    if (t != 0) out.is_permutation = false;
    // beta^b d_c = alpha^t beta^(b+s): copy b+s of coordinate c becomes copy b of perm[c].
    for (std::uint32_t src_copy = 0; src_copy < r; ++src_copy) {
      const std::size_t src = static_cast<std::size_t>(src_copy) * n + c;
      const std::uint32_t dst_copy = (src_copy + r - s) % r;
      out.perm[src] = static_cast<std::size_t>(dst_copy) * n + witness.perm[c];
      out.column_scale[src] = scale;
    }
  }
  return out;
}

MatFq apply_lifted(const MatFq& closure_gen, const LiftedWitness& lifted) {
  return apply_monomial(closure_gen, lifted.column_scale, lifted.perm);
}

MatFq lifted_matrix(const FieldPtr& field, const LiftedWitness& lifted) {
  const std::size_t n = lifted.perm.size();
  MatFq m(field, n, n);
  for (std::size_t src = 0; src < n; ++src) m(src, lifted.perm[src]) = lifted.column_scale[src];
  return m;
}

bool is_subgroup_instance(const MonomialWitness& witness, const SubgroupSpec& sub) {
  return std::ranges::all_of(witness.d, [&](Fq x) { return sub.contains(x); });
}

}  // namespace lepkit
