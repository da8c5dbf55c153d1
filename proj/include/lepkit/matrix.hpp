#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lepkit/field.hpp"

namespace lepkit {

class MatFq;

struct RrefResult;

// Dense row-major matrix over a FieldSpec.
class MatFq {
 public:
  MatFq() = default;
  MatFq(FieldPtr field, std::size_t rows, std::size_t cols);

  static MatFq identity(FieldPtr field, std::size_t n);
  // Entries given as field encodings.
  static MatFq from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);
  static MatFq from_ints(FieldPtr field, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& data);
  // Single-row matrix.
  static MatFq row_vector(FieldPtr field, std::span<const Fq> entries);
  static MatFq diagonal(FieldPtr field, std::span<const Fq> entries);

  const FieldPtr& field() const { return field_; }
  const FieldSpec& f() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fq operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fq& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Fq> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Fq> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fq> data() const { return data_; }

  std::vector<std::vector<std::int64_t>> to_ints() const;

  RrefResult rref() const;
  std::size_t rank() const;
  MatFq transpose() const;
  // Throws SingularMatrix unless square and of full rank.
  MatFq inverse() const;
  // Basis (one row per vector, in RREF) of {x : M x^T = 0}.
  MatFq right_kernel() const;
  // Rows [begin, end).
  MatFq row_slice(std::size_t begin, std::size_t end) const;
  // Entry-wise Frobenius a -> a^(p^i).
  MatFq frobenius(unsigned i) const;
  // Entry-wise power a -> a^e.
  MatFq entry_pow(std::uint64_t e) const;

  friend bool operator==(const MatFq& a, const MatFq& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq> data_;
};

struct RrefResult {
  MatFq reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

MatFq operator*(const MatFq& a, const MatFq& b);
MatFq operator+(const MatFq& a, const MatFq& b);

// Rows of `top` followed by rows of `bottom`.
MatFq vstack(const MatFq& top, const MatFq& bottom);
MatFq hstack(const MatFq& left, const MatFq& right);
MatFq block_diag(std::span<const MatFq> blocks);
// [a_1 M | a_2 M | ... | a_r M] for the row vector a = (a_1..a_r).
MatFq kron(std::span<const Fq> a, const MatFq& m);

// X with lhs * X = rhs, lhs square. Throws SingularMatrix if lhs is singular.
MatFq solve(const MatFq& lhs, const MatFq& rhs);

}  // namespace lepkit
