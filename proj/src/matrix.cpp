#include "lepkit/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lepkit {

namespace {

void require_field(const FieldPtr& f) {
  if (!f) throw InvalidArgument("matrix without a field");
}

std::string shape(const MatFq& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// In-place RREF over the first `limit` columns; row operations act on full rows.
std::vector<std::size_t> eliminate(MatFq& a, std::size_t limit) {
  const FieldSpec& f = a.f();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && !a(sel, c)) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(r).begin());
    auto prow = a.row(r).subspan(c);
    const Fq pinv = f.inv(prow[0]);
    if (pinv != FieldSpec::one()) f.scale(prow, pinv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Fq x = a(i, c);
      if (!x) continue;
      f.axpy(a.row(i).subspan(c), prow, f.neg(x));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

MatFq::MatFq(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
  require_field(field_);
}

MatFq MatFq::identity(FieldPtr field, std::size_t n) {
  MatFq m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldSpec::one();
  return m;
}

MatFq MatFq::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  MatFq m(std::move(field), nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw ShapeMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = m.f().element(rows[i][j]);
  }
  return m;
}

MatFq MatFq::from_ints(FieldPtr field, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& data) {
  if (data.size() != rows * cols) throw ShapeMismatch("data length does not match " + std::to_string(rows) + "x" +
                                                      std::to_string(cols));
  MatFq m(std::move(field), rows, cols);
  for (std::size_t i = 0; i < data.size(); ++i) m.data_[i] = m.f().element(data[i]);
  return m;
}

MatFq MatFq::row_vector(FieldPtr field, std::span<const Fq> entries) {
  MatFq m(std::move(field), 1, entries.size());
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

MatFq MatFq::diagonal(FieldPtr field, std::span<const Fq> entries) {
  MatFq m(std::move(field), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<std::vector<std::int64_t>> MatFq::to_ints() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).value;
  return out;
}

RrefResult MatFq::rref() const {
  RrefResult res;
  res.reduced = *this;
  res.pivots = eliminate(res.reduced, cols_);
  res.rank = res.pivots.size();
  return res;
}

std::size_t MatFq::rank() const { return rref().rank; }

MatFq MatFq::transpose() const {
  MatFq t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatFq MatFq::inverse() const {
  if (rows_ != cols_) throw SingularMatrix("inverse of non-square " + shape(*this) + " matrix");
  return solve(*this, identity(field_, rows_));
}

MatFq MatFq::right_kernel() const {
  const auto [r, rank, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  MatFq k(field_, cols_ - rank, cols_);
  std::size_t out = 0;
  for (std::size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    k(out, fc) = FieldSpec::one();
    for (std::size_t j = 0; j < rank; ++j) k(out, pivots[j]) = f().neg(r(j, fc));
    ++out;
  }
  return k.rref().reduced;
}

MatFq MatFq::row_slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw ShapeMismatch("row slice out of range");
  MatFq m(field_, end - begin, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>(end * cols_), m.data_.begin());
  return m;
}

MatFq MatFq::frobenius(unsigned i) const {
  MatFq m = *this;
  for (auto& x : m.data_) x = f().frobenius(x, i);
  return m;
}

MatFq MatFq::entry_pow(std::uint64_t e) const {
  MatFq m = *this;
  for (auto& x : m.data_) x = f().pow(x, e);
  return m;
}

bool operator==(const MatFq& a, const MatFq& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.field_ && b.field_ && !(*a.field_ == *b.field_)) return false;
  return a.data_ == b.data_;
}

MatFq operator*(const MatFq& a, const MatFq& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matmul " + shape(a) + " * " + shape(b));
  require_same_field(a.f(), b.f(), "matmul");
  const FieldSpec& f = a.f();
  MatFq c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto crow = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) f.axpy(crow, b.row(k), a(i, k));
  }
  return c;
}

MatFq operator+(const MatFq& a, const MatFq& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("add " + shape(a) + " + " + shape(b));
  require_same_field(a.f(), b.f(), "add");
  MatFq c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) c.f().axpy(c.row(i), b.row(i), FieldSpec::one());
  return c;
}

MatFq vstack(const MatFq& top, const MatFq& bottom) {
  if (top.cols() != bottom.cols()) throw ShapeMismatch("vstack " + shape(top) + " / " + shape(bottom));
  require_same_field(top.f(), bottom.f(), "vstack");
  MatFq m(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) std::ranges::copy(top.row(i), m.row(i).begin());
  for (std::size_t i = 0; i < bottom.rows(); ++i) std::ranges::copy(bottom.row(i), m.row(top.rows() + i).begin());
  return m;
}

MatFq hstack(const MatFq& left, const MatFq& right) {
  if (left.rows() != right.rows()) throw ShapeMismatch("hstack " + shape(left) + " | " + shape(right));
  require_same_field(left.f(), right.f(), "hstack");
  MatFq m(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    std::ranges::copy(left.row(i), m.row(i).begin());
    std::ranges::copy(right.row(i), m.row(i).begin() + static_cast<std::ptrdiff_t>(left.cols()));
  }
  return m;
}

MatFq block_diag(std::span<const MatFq> blocks) {
  if (blocks.empty()) throw ShapeMismatch("block_diag of no blocks");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks[0].f(), b.f(), "block_diag");
    rows += b.rows();
    cols += b.cols();
  }
  MatFq m(blocks[0].field(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

MatFq kron(std::span<const Fq> a, const MatFq& m) {
  if (a.empty()) throw ShapeMismatch("kron with an empty vector");
  const FieldSpec& f = m.f();
  MatFq out(m.field(), m.rows(), a.size() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t b = 0; b < a.size(); ++b) {
      auto dst = out.row(i).subspan(b * m.cols(), m.cols());
      f.axpy(dst, m.row(i), a[b]);
    }
  }
  return out;
}

MatFq solve(const MatFq& lhs, const MatFq& rhs) {
  if (lhs.rows() != lhs.cols()) throw SingularMatrix("solve with non-square " + shape(lhs) + " matrix");
  if (lhs.rows() != rhs.rows()) throw ShapeMismatch("solve " + shape(lhs) + " \\ " + shape(rhs));
  require_same_field(lhs.f(), rhs.f(), "solve");
  const std::size_t n = lhs.rows();
  MatFq aug = hstack(lhs, rhs);
  const auto pivots = eliminate(aug, n);
  if (pivots.size() != n) throw SingularMatrix("matrix is singular (rank " + std::to_string(pivots.size()) + " < " +
                                               std::to_string(n) + ")");
  MatFq x(lhs.field(), n, rhs.cols());
  for (std::size_t i = 0; i < n; ++i)
    std::ranges::copy(aug.row(i).subspan(n), x.row(i).begin());
  return x;
}

}  // namespace lepkit
