#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lepkit/codes.hpp"
#include "lepkit/rng.hpp"

namespace lepkit {

// Secret of an equivalence B = S A D P: D = diag(d), and column c of S A D
// lands on column perm[c].
struct MonomialWitness {
  std::optional<MatFq> s_matrix;
  std::vector<Fq> d;
  std::vector<std::size_t> perm;

  std::size_t length() const { return d.size(); }
  // Throws InvalidArgument if d has a zero entry or perm is not a bijection.
  void validate(std::size_t n) const;
  // The n x n matrix D P.
  MatFq monomial_matrix(const FieldPtr& field) const;
};

// G D P: column c of G scaled by d[c] is written to column perm[c].
MatFq apply_monomial(const MatFq& g, const std::vector<Fq>& d, const std::vector<std::size_t>& perm);

// Permutation matrix P with P(c, perm[c]) = 1, so (G P)[:, perm[c]] = G[:, c].
MatFq permutation_matrix(const FieldPtr& field, const std::vector<std::size_t>& perm);

struct InstanceMetadata {
  std::string seed;
  std::optional<std::uint32_t> subgroup_r;
  // Set on instances produced by the closure reduction.
  std::optional<std::string> reduced_from;
  std::optional<std::uint32_t> reduction_r;
};

struct LepInstance {
  LinearCode code_a;
  LinearCode code_b;
  std::optional<MonomialWitness> witness;
  InstanceMetadata metadata;
};

LinearCode random_code(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t seed);

// Uniform invertible k x k matrix.
MatFq random_invertible(const FieldPtr& field, std::size_t k, Rng& rng);

// Uniform d over U^n (or (F_q^*)^n when subgroup_r is empty or q-1), uniform
// permutation and uniform invertible k x k S.
MonomialWitness random_monomial(const FieldPtr& field, std::size_t n, std::size_t k,
                                std::optional<std::uint32_t> subgroup_r, std::uint64_t seed);

LepInstance equivalent_pair(const FieldPtr& field, std::size_t n, std::size_t k,
                            std::optional<std::uint32_t> subgroup_r, std::uint64_t seed);

LepInstance random_pair(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t seed);

// True iff code_a.gen * D * P spans code_b. Throws InvalidArgument without a witness.
bool verify_witness(const LepInstance& inst);

}  // namespace lepkit
