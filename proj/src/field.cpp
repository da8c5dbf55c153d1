#include "lepkit/field.hpp"

#include <algorithm>
#include <sstream>

namespace lepkit {

namespace {

// Fields up to this order get full q*q addition and multiplication tables.
constexpr std::uint32_t kFullTableOrder = 256;

using Poly = std::vector<unsigned>;  // coefficients over F_p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  // b is monic here, so no inverse of the leading coefficient is needed.
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), mod, p);
}

Poly decode(std::uint32_t v, unsigned p, unsigned m) {
  Poly r(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    r[i] = v % p;
    v /= p;
  }
  trim(r);
  return r;
}

std::uint32_t encode(const Poly& a, unsigned p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

bool irreducible(const Poly& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = decode(static_cast<std::uint32_t>(low), p, static_cast<unsigned>(d));
      g.resize(d, 0);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr FieldSpec::make(unsigned p, unsigned m, std::uint32_t max_order) {
  if (!is_prime(p)) throw InvalidArgument("make_field: characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("make_field: extension degree must be at least 1");
  const std::uint32_t limit = std::min(max_order, kDefaultMaxFieldOrder);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > limit)
      throw InvalidArgument("make_field: " + std::to_string(p) + "^" + std::to_string(m) +
                            " exceeds the table limit " + std::to_string(limit));
  }

  std::shared_ptr<FieldSpec> f(new FieldSpec());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<std::uint32_t>(q);

  // Smallest monic irreducible: x^m + low, with low scanned as a base-p integer.
  Poly modulus;
  for (std::uint32_t low = 0; low < f->q_; ++low) {
    Poly cand = decode(low, p, m);
    cand.resize(m, 0);
    cand.push_back(1);
    if (irreducible(cand, p)) {
      modulus = std::move(cand);
      break;
    }
  }
  f->modulus_ = modulus;

  const std::uint32_t group = f->q_ - 1;
  const auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    Poly base = decode(a, p, m);
    Poly acc{1};
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, base, modulus, p);
      base = poly_mulmod(base, base, modulus, p);
      e >>= 1;
    }
    return encode(acc, p);
  };
  const auto factors = prime_factors(group);
  std::uint32_t alpha = 0;
  for (std::uint32_t a = 1; a < f->q_; ++a) {
    bool primitive = true;
    for (auto l : factors) {
      if (slow_pow(a, group / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      alpha = a;
      break;
    }
  }
  f->alpha_ = Fq{static_cast<std::uint16_t>(alpha)};

  f->exp_.assign(2 * static_cast<std::size_t>(group), 0);
  f->log_.assign(f->q_, 0);
  const Poly alpha_poly = decode(alpha, p, m);
  Poly cur{1};
  for (std::uint32_t e = 0; e < group; ++e) {
    const std::uint32_t v = encode(cur, p);
    f->exp_[e] = f->exp_[e + group] = static_cast<std::uint16_t>(v);
    f->log_[v] = e;
    cur = poly_mulmod(cur, alpha_poly, modulus, p);
  }

  const auto digit_add = [&](std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  };

  f->neg_.resize(f->q_);
  for (std::uint32_t a = 0; a < f->q_; ++a) {
    std::uint32_t r = 0, scale = 1, x = a;
    for (unsigned i = 0; i < m; ++i) {
      r += ((p - x % p) % p) * scale;
      x /= p;
      scale *= p;
    }
    f->neg_[a] = static_cast<std::uint16_t>(r);
  }

  f->zech_.resize(group);
  for (std::uint32_t e = 0; e < group; ++e) {
    const std::uint32_t s = digit_add(1, f->exp_[e]);
    f->zech_[e] = s == 0 ? -1 : static_cast<std::int32_t>(f->log_[s]);
  }

  f->frob_.resize(static_cast<std::size_t>(m) * f->q_);
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < m; ++i) {
    for (std::uint32_t a = 0; a < f->q_; ++a) {
      f->frob_[i * f->q_ + a] =
          a == 0 ? 0 : f->exp_[static_cast<std::uint32_t>((f->log_[a] * pi) % group)];
    }
    pi *= p;
  }

  if (f->q_ <= kFullTableOrder) {
    const std::size_t qq = static_cast<std::size_t>(f->q_) * f->q_;
    f->add_tab_.resize(qq);
    f->mul_tab_.resize(qq);
    for (std::uint32_t a = 0; a < f->q_; ++a) {
      for (std::uint32_t b = 0; b < f->q_; ++b) {
        f->add_tab_[a * f->q_ + b] = static_cast<std::uint16_t>(digit_add(a, b));
        f->mul_tab_[a * f->q_ + b] = (a == 0 || b == 0) ? 0 : f->exp_[f->log_[a] + f->log_[b]];
      }
    }
    f->full_tables_ = true;
  }
  return f;
}

FieldPtr field_of_order(std::uint32_t q, std::uint32_t max_order) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
  return make_field(p, m, max_order);
}

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* what) {
  if (!(a == b)) throw FieldMismatch(std::string(what) + ": operands live in different fields");
}

Fq FieldSpec::element(std::int64_t encoding) const {
  if (!contains(encoding))
    throw InvalidArgument("value " + std::to_string(encoding) + " is not an element of GF(" + std::to_string(q_) +
                          ")");
  return Fq{static_cast<std::uint16_t>(encoding)};
}

Fq FieldSpec::inv(Fq a) const {
  if (!a) throw DivisionByZero("inverse of zero");
  const std::uint32_t l = log_[a.value];
  return Fq{exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

Fq FieldSpec::pow(Fq a, std::uint64_t e) const {
  if (e == 0) return one();
  if (!a) return zero();
  return Fq{exp_[static_cast<std::uint32_t>((log_[a.value] * (e % (q_ - 1))) % (q_ - 1))]};
}

Fq FieldSpec::exp(std::int64_t e) const {
  const std::int64_t group = q_ - 1;
  std::int64_t r = e % group;
  if (r < 0) r += group;
  return Fq{exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t FieldSpec::dlog(Fq a) const {
  if (!a) throw DivisionByZero("discrete log of zero");
  return log_[a.value];
}

Fq FieldSpec::zech_add(Fq a, Fq b) const {
  if (!a) return b;
  if (!b) return a;
  if (m_ == 1) {
    std::uint32_t s = a.value + b.value;
    if (s >= p_) s -= p_;
    return Fq{static_cast<std::uint16_t>(s)};
  }
  const std::uint32_t la = log_[a.value];
  const std::uint32_t lb = log_[b.value];
  const std::uint32_t e = lb >= la ? lb - la : lb + (q_ - 1) - la;
  const std::int32_t z = zech_[e];
  if (z < 0) return zero();
  return Fq{exp_[la + static_cast<std::uint32_t>(z)]};
}

void FieldSpec::axpy(std::span<Fq> dst, std::span<const Fq> src, Fq f) const {
  if (!f) return;
  const std::size_t n = std::min(dst.size(), src.size());
  if (full_tables_) {
    const std::uint16_t* mrow = &mul_tab_[f.value * q_];
    if (p_ == 2) {
      for (std::size_t c = 0; c < n; ++c) dst[c].value ^= mrow[src[c].value];
    } else if (m_ == 1) {
      for (std::size_t c = 0; c < n; ++c) {
        unsigned s = dst[c].value + mrow[src[c].value];
        if (s >= p_) s -= p_;
        dst[c].value = static_cast<std::uint16_t>(s);
      }
    } else {
      const std::uint16_t* at = add_tab_.data();
      for (std::size_t c = 0; c < n; ++c) dst[c].value = at[dst[c].value * q_ + mrow[src[c].value]];
    }
    return;
  }
  const std::uint32_t lf = log_[f.value];
  for (std::size_t c = 0; c < n; ++c) {
    if (!src[c]) continue;
    const Fq prod{exp_[log_[src[c].value] + lf]};
    dst[c] = add(dst[c], prod);
  }
}

void FieldSpec::scale(std::span<Fq> v, Fq f) const {
  for (auto& x : v) x = mul(x, f);
}

Fq FieldSpec::dot(std::span<const Fq> a, std::span<const Fq> b) const {
  const std::size_t n = std::min(a.size(), b.size());
  if (p_ == 2) {
    std::uint16_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc ^= mul(a[i], b[i]).value;
    return Fq{acc};
  }
  if (m_ == 1) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += mul(a[i], b[i]).value;
    return Fq{static_cast<std::uint16_t>(acc % p_)};
  }
  Fq acc = zero();
  for (std::size_t i = 0; i < n; ++i) acc = add(acc, mul(a[i], b[i]));
  return acc;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ") = GF(" << p_ << "^" << m_ << "), modulus [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "], alpha = " << alpha_.value;
  return os.str();
}

}  // namespace lepkit
