#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lepkit/matrix.hpp"

namespace lepkit {

// An [n, k]_q linear code, stored by its RREF generator matrix.
//
// The generator is canonical: two LinearCode values describe the same
// subspace iff their generators compare equal. k = 0 (zero code) and k = n
// (full space) are valid.
class LinearCode {
 public:
  LinearCode() = default;

  // Code spanned by the rows of m; dependent rows are dropped.
  static LinearCode from_generator(const MatFq& m);
  static LinearCode zero(FieldPtr field, std::size_t n);
  static LinearCode full(FieldPtr field, std::size_t n);

  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const MatFq& generator() const { return gen_; }
  const FieldPtr& field() const { return gen_.field(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return dimension() == 0; }
  bool is_full() const { return dimension() == length(); }
  bool contains(std::span<const Fq> word) const;
  bool contains(const LinearCode& sub) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
  MatFq gen_;
  std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);
// Dual with respect to sum x_i y_i^(p^(m/2)); requires even extension degree.
LinearCode hermitian_dual(const LinearCode& c);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
// Smallest code containing both.
LinearCode code_sum(const LinearCode& a, const LinearCode& b);
LinearCode hull(const LinearCode& c);
LinearCode hermitian_hull(const LinearCode& c);

LinearCode schur_product_codes(const LinearCode& a, const LinearCode& b);
LinearCode power_code(const LinearCode& c, unsigned l);
LinearCode frobenius_code(const LinearCode& c, unsigned i);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);  // saturates at UINT64_MAX
std::uint64_t expected_power_dim(std::uint64_t k, unsigned l, std::uint64_t n);

// (1, a^((q-1)/r), a^(2(q-1)/r), ..., a^((r-1)(q-1)/r)) for the canonical primitive a.
std::vector<Fq> closure_vector(const FieldSpec& f, std::uint32_t r);
// r-th partial closure: code generated by closure_vector(r) (x) gen, length r*n.
LinearCode closure(const LinearCode& c, std::uint32_t r);

void require_compatible(const LinearCode& a, const LinearCode& b, const char* what);

}  // namespace lepkit
