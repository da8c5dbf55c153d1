#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lepkit/codes.hpp"
#include "lepkit/instances.hpp"

namespace lepkit {

// U = <alpha^((q-1)/r)>, the order-r subgroup of F_q^*, with the coset
// representatives 1, alpha, ..., alpha^((q-1)/r - 1).
struct SubgroupSpec {
  FieldPtr field;
  std::uint32_t r = 1;
  Fq generator;
  std::vector<Fq> members;     // generator^s, s = 0..r-1
  std::vector<Fq> coset_reps;  // alpha^t, t = 0..(q-1)/r - 1

  std::uint32_t index() const { return (field->order() - 1) / r; }
  bool contains(Fq x) const;
};

SubgroupSpec make_subgroup(FieldPtr field, std::uint32_t r);

// d = alpha^(s (q-1)/r + t) with 0 <= s < r and 0 <= t < (q-1)/r.
struct ScalarDecomposition {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  friend bool operator==(const ScalarDecomposition&, const ScalarDecomposition&) = default;
};

ScalarDecomposition decompose_scalar(Fq d, const SubgroupSpec& sub);

// Partial closures of both codes, each of length r*n.
std::pair<LinearCode, LinearCode> reduce_to_pep(const LinearCode& a, const LinearCode& b, std::uint32_t r);

// Block-monomial part of a lifted witness. Block i acts on the r copies of
// coordinate i (closure columns b*n + i): it shifts the copy index left by
// shift[i] and scales by alpha^t[i].
struct BlockMonomial {
  std::uint32_t r = 1;
  std::vector<std::uint32_t> shift;
  std::vector<std::uint32_t> exponent;  // t_i
  std::vector<Fq> scalar;               // alpha^t_i

  // Block i as an explicit r x r monomial matrix.
  MatFq block(const FieldPtr& field, std::size_t i) const;
};

// Witness for the closures: closure column src maps to column perm[src] and
// is multiplied by column_scale[src]. When every d_i is in U the scales are
// all 1 and the map is a permutation of the r*n coordinates.
struct LiftedWitness {
  std::vector<std::size_t> perm;
  std::vector<Fq> column_scale;
  BlockMonomial blocks;
  bool is_permutation = false;
};

LiftedWitness lift_witness(const MonomialWitness& witness, const SubgroupSpec& sub);

// Applies the lifted map to the columns of a closure generator matrix.
MatFq apply_lifted(const MatFq& closure_gen, const LiftedWitness& lifted);

// Monomial on the r*n closure coordinates as an explicit matrix (for checks).
MatFq lifted_matrix(const FieldPtr& field, const LiftedWitness& lifted);

bool is_subgroup_instance(const MonomialWitness& witness, const SubgroupSpec& sub);

}  // namespace lepkit
