#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lepkit/codes.hpp"

namespace lepkit {

// One factor of a side code: frobenius_code(power_code(C, power), frob).
struct FactorSpec {
  unsigned power = 1;
  unsigned frob = 0;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

// Listed in tie-break order.
enum class ConstructionForm { OddPrime, FrobeniusGeneral, FrobeniusOdd, Hermitian, OddDegree };

std::string_view to_string(ConstructionForm form);
std::optional<ConstructionForm> parse_form(std::string_view name);

// Recipe for the two side codes A_1, A_2 (and B_1, B_2) fed to the
// distinguisher. B_1 = S_1 A_1 D^i P and B_2 = S_2 A_2 D^j P for an
// equivalence B = S A D P, with (q-1) | (i+j).
struct ConstructionPlan {
  ConstructionForm form = ConstructionForm::OddPrime;
  unsigned characteristic = 0;
  unsigned degree = 0;
  std::vector<FactorSpec> factors1;
  std::vector<FactorSpec> factors2;
  // Upper bound on dim(A_1) = dim(A_2) from the product of power-code dimensions.
  std::uint64_t dim_bound = 0;

  // Sum over factors of power * p^frob.
  std::uint64_t i_exp() const;
  std::uint64_t j_exp() const;
  std::size_t total_factors() const { return factors1.size() + factors2.size(); }
  // Sanity of the exponents: (q-1) | (i+j).
  bool exponents_valid() const;
};

// Every construction the field shape admits, with its bound for dimension k,
// regardless of whether the bound is below n.
std::vector<ConstructionPlan> candidate_constructions(const FieldSpec& field, std::uint64_t k);

// Candidate with the smallest dim_bound < n; ties go to fewer factors, then
// to the form listed first. Throws NoApplicablePlan if none is below n.
ConstructionPlan select_construction(const FieldSpec& field, std::uint64_t k, std::uint64_t n);
// As above restricted to one form.
ConstructionPlan select_construction(const FieldSpec& field, std::uint64_t k, std::uint64_t n,
                                     ConstructionForm form);

LinearCode build_side(const LinearCode& c, const std::vector<FactorSpec>& factors);

// C2.gen^T (C1.gen C2.gen^T)^-1 C1.gen. Throws DimMismatch when the
// dimensions differ and NotInvertible when C1 meets the dual of C2.
MatFq adj(const LinearCode& c1, const LinearCode& c2);

// Diagonal of adj(c1, c2). Uses adj(C1, C2) = I - adj(C2^perp, C1^perp) when
// the duals are smaller. Same errors as adj().
std::vector<Fq> adj_diagonal(const LinearCode& c1, const LinearCode& c2);

// Diagonal entries sorted by encoding.
std::vector<Fq> diag_multiset(const MatFq& m);
std::vector<Fq> sorted_multiset(std::vector<Fq> values);

enum class Verdict { LikelyEquivalent, NotEquivalent, Inconclusive };
std::string_view to_string(Verdict v);

struct DistinguishOutcome {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t dim_a1 = 0, dim_a2 = 0, dim_b1 = 0, dim_b2 = 0;
  bool a_side_trivial = false;  // A_1 meets A_2^perp only in 0
  bool b_side_trivial = false;
  bool b_evaluated = false;     // B side is skipped once the A side fails
  bool t_held = false;
  std::vector<Fq> diag_a;       // sorted
  std::vector<Fq> diag_b;
  std::string reason;           // set for Inconclusive
};

// Power-code distinguisher. Verdicts:
//  - NotEquivalent only when both adjacency matrices exist and their diagonal
//    multisets differ; equivalent inputs never get this verdict.
//  - Inconclusive when a side code is degenerate (zero or full space), the
//    dimensions disagree, or a side code meets the dual of its partner.
DistinguishOutcome distinguish(const LinearCode& a, const LinearCode& b, const ConstructionPlan& plan);

// Estimated probability that two random vectors of F_qd^n have the same
// multiset of entries: qd^(qd/2) (4 pi n)^((1-qd)/2).
double fp_estimate(double q_diag, double n);

// Order of the smallest subfield F_{p^d} forced to hold the adjacency
// diagonal: d is the least divisor of m such that shifting every Frobenius
// exponent by d maps the factor lists onto themselves or onto each other.
std::uint32_t diag_subfield(const ConstructionPlan& plan, const FieldSpec& field);

}  // namespace lepkit
