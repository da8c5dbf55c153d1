#include "lepkit/codes.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lepkit {

LinearCode LinearCode::from_generator(const MatFq& m) {
  auto [reduced, rank, pivots] = m.rref();
  LinearCode c;
  c.gen_ = reduced.row_slice(0, rank);
  c.pivots_ = std::move(pivots);
  return c;
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return from_generator(MatFq(std::move(field), 0, n)); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
  return from_generator(MatFq::identity(std::move(field), n));
}

bool LinearCode::contains(std::span<const Fq> word) const {
  if (word.size() != length()) return false;
  const FieldSpec& f = gen_.f();
  std::vector<Fq> w(word.begin(), word.end());
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const Fq x = w[pivots_[j]];
    if (x) f.axpy(w, gen_.row(j), f.neg(x));
  }
  return std::ranges::all_of(w, [](Fq x) { return !x; });
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (sub.length() != length()) return false;
  for (std::size_t i = 0; i < sub.dimension(); ++i)
    if (!contains(sub.gen_.row(i))) return false;
  return true;
}

void require_compatible(const LinearCode& a, const LinearCode& b, const char* what) {
  if (a.length() != b.length())
    throw ShapeMismatch(std::string(what) + ": code lengths " + std::to_string(a.length()) + " and " +
                        std::to_string(b.length()) + " differ");
  require_same_field(*a.field(), *b.field(), what);
}

LinearCode dual(const LinearCode& c) { return LinearCode::from_generator(c.generator().right_kernel()); }

LinearCode hermitian_dual(const LinearCode& c) {
  const unsigned m = c.field()->degree();
  if (m % 2 != 0)
    throw InvalidArgument("hermitian dual needs an even-degree extension, got GF(" +
                          std::to_string(c.field()->order()) + ")");
  return dual(frobenius_code(c, m / 2));
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
  require_compatible(a, b, "intersect");
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const MatFq checks = vstack(dual(a).generator(), dual(b).generator());
  return LinearCode::from_generator(checks.right_kernel());
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  require_compatible(a, b, "code_sum");
  return LinearCode::from_generator(vstack(a.generator(), b.generator()));
}

LinearCode hull(const LinearCode& c) { return intersect(c, dual(c)); }

LinearCode hermitian_hull(const LinearCode& c) { return intersect(c, hermitian_dual(c)); }

namespace {

// Span of row(i) * row(j) over the given index pairs.
template <typename Pairs>
LinearCode span_of_products(const LinearCode& a, const LinearCode& b, const Pairs& pairs, std::size_t count) {
  const FieldSpec& f = *a.field();
  const std::size_t n = a.length();
  MatFq prod(a.field(), count, n);
  std::size_t r = 0;
  for (auto [i, j] : pairs) {
    auto dst = prod.row(r++);
    const auto u = a.generator().row(i);
    const auto v = b.generator().row(j);
    for (std::size_t c = 0; c < n; ++c) dst[c] = f.mul(u[c], v[c]);
  }
  return LinearCode::from_generator(prod);
}

}  // namespace

LinearCode schur_product_codes(const LinearCode& a, const LinearCode& b) {
  require_compatible(a, b, "schur_product_codes");
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (a == b) {
    // u*v = v*u, so the upper triangle already spans.
    for (std::size_t i = 0; i < a.dimension(); ++i)
      for (std::size_t j = i; j < a.dimension(); ++j) pairs.emplace_back(i, j);
  } else {
    for (std::size_t i = 0; i < a.dimension(); ++i)
      for (std::size_t j = 0; j < b.dimension(); ++j) pairs.emplace_back(i, j);
  }
  return span_of_products(a, b, pairs, pairs.size());
}

LinearCode power_code(const LinearCode& c, unsigned l) {
  if (l < 1) throw InvalidArgument("power_code: exponent must be at least 1");
  LinearCode acc = c;
  for (unsigned i = 1; i < l; ++i) {
    if (acc.is_full() || acc.is_zero()) break;
    acc = schur_product_codes(acc, c);
  }
  return acc;
}

LinearCode frobenius_code(const LinearCode& c, unsigned i) {
  if (i % c.field()->degree() == 0) return c;
  // Frobenius fixes 0 and 1, so the image of an RREF matrix is still RREF.
  return LinearCode::from_generator(c.generator().frobenius(i));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 r = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > cap) return cap;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t expected_power_dim(std::uint64_t k, unsigned l, std::uint64_t n) {
  if (l < 1) throw InvalidArgument("expected_power_dim: exponent must be at least 1");
  return std::min(binomial(k + l - 1, l), n);
}

std::vector<Fq> closure_vector(const FieldSpec& f, std::uint32_t r) {
  const std::uint32_t group = f.order() - 1;
  if (r < 1 || group % r != 0)
    throw InvalidArgument("closure: r = " + std::to_string(r) + " does not divide q-1 = " + std::to_string(group));
  const std::uint32_t step = group / r;
  std::vector<Fq> a(r);
  for (std::uint32_t b = 0; b < r; ++b) a[b] = f.exp(static_cast<std::int64_t>(b) * step);
  return a;
}

LinearCode closure(const LinearCode& c, std::uint32_t r) {
  const auto a = closure_vector(*c.field(), r);
  return LinearCode::from_generator(kron(a, c.generator()));
}

}  // namespace lepkit
