#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lepkit/error.hpp"

namespace lepkit {

// An element of GF(p^m). The polynomial sum c_i x^i is packed as sum c_i p^i,
// so the base-p digits of `value` are the coefficients (low degree first).
struct Fq {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(Fq, Fq) = default;
  explicit constexpr operator bool() const { return value != 0; }
};

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 1u << 16;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// Concrete GF(p^m) with log/antilog tables.
//
// The modulus is the smallest monic irreducible polynomial of degree m over
// F_p (low-degree coefficients compared as a base-p integer); alpha is the
// smallest encoding of multiplicative order q-1. Both choices are fixed, so
// make_field(p, m) is a pure function of its arguments.
//
// Instances are immutable and shared through FieldPtr.
class FieldSpec {
 public:
  static FieldPtr make(unsigned p, unsigned m, std::uint32_t max_order = kDefaultMaxFieldOrder);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  // Coefficients c_0..c_m, c_m = 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Fq alpha() const { return alpha_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  // exp_table()[e] = alpha^e for 0 <= e < q-1.
  std::span<const std::uint16_t> exp_table() const { return {exp_.data(), q_ - 1}; }

  static constexpr Fq zero() { return Fq{0}; }
  static constexpr Fq one() { return Fq{1}; }

  Fq element(std::int64_t encoding) const;
  bool contains(std::int64_t encoding) const { return encoding >= 0 && encoding < static_cast<std::int64_t>(q_); }

  Fq add(Fq a, Fq b) const {
    if (full_tables_) return Fq{add_tab_[a.value * q_ + b.value]};
    if (p_ == 2) return Fq{static_cast<std::uint16_t>(a.value ^ b.value)};
    return zech_add(a, b);
  }
  Fq neg(Fq a) const { return Fq{neg_[a.value]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (full_tables_) return Fq{mul_tab_[a.value * q_ + b.value]};
    if (!a || !b) return zero();
    return Fq{exp_[log_[a.value] + log_[b.value]]};
  }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  // 0^0 = 1.
  Fq pow(Fq a, std::uint64_t e) const;
  // alpha^e for any integer e.
  Fq exp(std::int64_t e) const;
  // Discrete log base alpha, in [0, q-1).
  std::uint32_t dlog(Fq a) const;
  // a^(p^i); i is taken mod m.
  Fq frobenius(Fq a, unsigned i) const { return Fq{frob_[(i % m_) * q_ + a.value]}; }
  // True when a lies in the subfield of order p^d (d must divide m).
  bool in_subfield(Fq a, unsigned d) const { return frobenius(a, d) == a; }

  // dst[c] += f * src[c]
  void axpy(std::span<Fq> dst, std::span<const Fq> src, Fq f) const;
  void scale(std::span<Fq> v, Fq f) const;
  Fq dot(std::span<const Fq> a, std::span<const Fq> b) const;

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_ && a.m_ == b.m_; }

 private:
  FieldSpec() = default;
  Fq zech_add(Fq a, Fq b) const;

  unsigned p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  Fq alpha_;
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<std::uint16_t> exp_;   // length 2(q-1) so log sums need no reduction
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> frob_;  // m tables of size q
  std::vector<std::int32_t> zech_;   // log(1 + alpha^e), -1 when 1 + alpha^e = 0
  bool full_tables_ = false;
  std::vector<std::uint16_t> add_tab_;
  std::vector<std::uint16_t> mul_tab_;
};

inline FieldPtr make_field(unsigned p, unsigned m, std::uint32_t max_order = kDefaultMaxFieldOrder) {
  return FieldSpec::make(p, m, max_order);
}

// Field of the given prime-power order.
FieldPtr field_of_order(std::uint32_t q, std::uint32_t max_order = kDefaultMaxFieldOrder);

bool is_prime(std::uint64_t n);

// Throws FieldMismatch unless both fields describe the same GF(p^m).
void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* what);

}  // namespace lepkit
