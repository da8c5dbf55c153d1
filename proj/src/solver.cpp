#include "lepkit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

namespace lepkit {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > cap / a) return cap;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

std::uint64_t exponent_of(const std::vector<FactorSpec>& factors, unsigned p) {
  std::uint64_t s = 0;
  for (const auto& f : factors) s += f.power * ipow(p, f.frob);
  return s;
}

// G1 * G2^T via row dot products.
MatFq gram(const MatFq& g1, const MatFq& g2) {
  const FieldSpec& f = g1.f();
  MatFq k(g1.field(), g1.rows(), g2.rows());
  for (std::size_t a = 0; a < g1.rows(); ++a)
    for (std::size_t b = 0; b < g2.rows(); ++b) k(a, b) = f.dot(g1.row(a), g2.row(b));
  return k;
}

void check_adj_args(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2, "adj");
  if (c1.dimension() != c2.dimension())
    throw DimMismatch("adj: dimensions " + std::to_string(c1.dimension()) + " and " +
                      std::to_string(c2.dimension()) + " differ");
}

// (G1 G2^T)^-1 G1
MatFq adj_right_factor(const MatFq& g1, const MatFq& g2) {
  try {
    return solve(gram(g1, g2), g1);
  } catch (const SingularMatrix&) {
    throw NotInvertible("adj: C1 * C2^T is singular (C1 meets the dual of C2)");
  }
}

std::vector<Fq> direct_diagonal(const MatFq& g1, const MatFq& g2) {
  const FieldSpec& f = g1.f();
  const std::size_t n = g1.cols();
  std::vector<Fq> diag(n, FieldSpec::zero());
  if (g1.rows() == 0) return diag;
  const MatFq x = adj_right_factor(g1, g2);
  for (std::size_t a = 0; a < x.rows(); ++a) {
    const auto lhs = g2.row(a);
    const auto rhs = x.row(a);
    for (std::size_t u = 0; u < n; ++u) diag[u] = f.add(diag[u], f.mul(lhs[u], rhs[u]));
  }
  return diag;
}

std::vector<FactorSpec> sorted_factors(std::vector<FactorSpec> v) {
  std::ranges::sort(v, [](const FactorSpec& a, const FactorSpec& b) {
    return std::tie(a.power, a.frob) < std::tie(b.power, b.frob);
  });
  return v;
}

std::vector<FactorSpec> shifted(const std::vector<FactorSpec>& v, unsigned d, unsigned m) {
  std::vector<FactorSpec> out = v;
  for (auto& f : out) f.frob = (f.frob + d) % m;
  return sorted_factors(std::move(out));
}

ConstructionPlan make_plan(ConstructionForm form, const FieldSpec& field, std::vector<FactorSpec> f1,
                           std::vector<FactorSpec> f2, std::uint64_t bound) {
  ConstructionPlan plan;
  plan.form = form;
  plan.characteristic = field.characteristic();
  plan.degree = field.degree();
  plan.factors1 = std::move(f1);
  plan.factors2 = std::move(f2);
  plan.dim_bound = bound;
  return plan;
}

}  // namespace

std::string_view to_string(ConstructionForm form) {
  switch (form) {
    case ConstructionForm::OddPrime: return "OddPrime";
    case ConstructionForm::FrobeniusGeneral: return "FrobeniusGeneral";
    case ConstructionForm::FrobeniusOdd: return "FrobeniusOdd";
    case ConstructionForm::Hermitian: return "Hermitian";
    case ConstructionForm::OddDegree: return "OddDegree";
  }
  return "?";
}

std::optional<ConstructionForm> parse_form(std::string_view name) {
  for (auto f : {ConstructionForm::OddPrime, ConstructionForm::FrobeniusGeneral, ConstructionForm::FrobeniusOdd,
                 ConstructionForm::Hermitian, ConstructionForm::OddDegree}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::uint64_t ConstructionPlan::i_exp() const { return exponent_of(factors1, characteristic); }
std::uint64_t ConstructionPlan::j_exp() const { return exponent_of(factors2, characteristic); }

bool ConstructionPlan::exponents_valid() const {
  const std::uint64_t group = ipow(characteristic, degree) - 1;
  return group > 0 && (i_exp() + j_exp()) % group == 0;
}

std::vector<ConstructionPlan> candidate_constructions(const FieldSpec& field, std::uint64_t k) {
  const unsigned p = field.characteristic();
  const unsigned m = field.degree();
  const std::uint32_t q = field.order();
  std::vector<ConstructionPlan> out;

  // A^(r) on both sides, q = 2r + 1.
  if (q % 2 == 1) {
    const unsigned r = (q - 1) / 2;
    const std::vector<FactorSpec> f{{r, 0}};
    out.push_back(make_plan(ConstructionForm::OddPrime, field, f, f, binomial(k + r - 1, r)));
  }
  // Product of Frobenius images of A^(p-1), both sides.
  if (m >= 2) {
    std::vector<FactorSpec> f;
    for (unsigned i = 0; i < m; ++i) f.push_back({p - 1, i});
    out.push_back(make_plan(ConstructionForm::FrobeniusGeneral, field, f, f, sat_pow(binomial(k + p - 2, p - 1), m)));
  }
  // Same with A^(r), p = 2r + 1.
  if (m >= 2 && p % 2 == 1) {
    const unsigned r = (p - 1) / 2;
    std::vector<FactorSpec> f;
    for (unsigned i = 0; i < m; ++i) f.push_back({r, i});
    out.push_back(make_plan(ConstructionForm::FrobeniusOdd, field, f, f, sat_pow(binomial(k + r - 1, r), m)));
  }
  // Half the Frobenius orbit on A_1; A_2 = A_1^[p^l].
  if (m % 2 == 0) {
    const unsigned l = m / 2;
    std::vector<FactorSpec> f1, f2;
    for (unsigned i = 0; i < l; ++i) {
      f1.push_back({p - 1, i});
      f2.push_back({p - 1, l + i});
    }
    out.push_back(make_plan(ConstructionForm::Hermitian, field, f1, f2, sat_pow(binomial(k + p - 2, p - 1), l)));
  }
  // m = 2l + 1: the middle Frobenius index l is shared with power r on both sides.
  if (m >= 3 && m % 2 == 1 && p % 2 == 1) {
    const unsigned l = (m - 1) / 2;
    const unsigned r = (p - 1) / 2;
    std::vector<FactorSpec> f1, f2;
    for (unsigned i = 0; i < l; ++i) f1.push_back({p - 1, i});
    f1.push_back({r, l});
    f2.push_back({r, l});
    for (unsigned i = l + 1; i <= 2 * l; ++i) f2.push_back({p - 1, i});
    const std::uint64_t bound = sat_mul(sat_pow(binomial(k + p - 2, p - 1), l), binomial(k + r - 1, r));
    out.push_back(make_plan(ConstructionForm::OddDegree, field, f1, f2, bound));
  }
  return out;
}

namespace {

ConstructionPlan pick(std::vector<ConstructionPlan> plans, const FieldSpec& field, std::uint64_t k, std::uint64_t n) {
  if (k < 1 || n <= k) throw InvalidArgument("select_construction: need 1 <= k < n");
  std::ostringstream why;
  const ConstructionPlan* best = nullptr;
  for (const auto& plan : plans) {
    if (plan.dim_bound >= n) {
      why << " " << to_string(plan.form) << " bound " << plan.dim_bound << " >= n = " << n << ";";
      continue;
    }
    if (!best || std::tuple(plan.dim_bound, plan.total_factors(), plan.form) <
                     std::tuple(best->dim_bound, best->total_factors(), best->form))
      best = &plan;
  }
  if (!best) {
    std::string msg = "no construction applies to [" + std::to_string(n) + "," + std::to_string(k) + "]_" +
                      std::to_string(field.order()) + ":";
    msg += plans.empty() ? " the field admits no construction" : why.str();
    throw NoApplicablePlan(msg);
  }
  return *best;
}

}  // namespace

ConstructionPlan select_construction(const FieldSpec& field, std::uint64_t k, std::uint64_t n) {
  return pick(candidate_constructions(field, k), field, k, n);
}

ConstructionPlan select_construction(const FieldSpec& field, std::uint64_t k, std::uint64_t n,
                                     ConstructionForm form) {
  auto plans = candidate_constructions(field, k);
  std::erase_if(plans, [form](const ConstructionPlan& p) { return p.form != form; });
  if (plans.empty())
    throw NoApplicablePlan("construction " + std::string(to_string(form)) + " does not apply to GF(" +
                           std::to_string(field.order()) + ")");
  return pick(std::move(plans), field, k, n);
}

LinearCode build_side(const LinearCode& c, const std::vector<FactorSpec>& factors) {
  if (factors.empty()) throw InvalidArgument("build_side: empty factor list");
  std::map<unsigned, LinearCode> powers;
  const auto factor_code = [&](const FactorSpec& fs) {
    auto it = powers.find(fs.power);
    if (it == powers.end()) it = powers.emplace(fs.power, power_code(c, fs.power)).first;
    return frobenius_code(it->second, fs.frob);
  };
  LinearCode acc = factor_code(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) acc = schur_product_codes(acc, factor_code(factors[i]));
  return acc;
}

MatFq adj(const LinearCode& c1, const LinearCode& c2) {
  check_adj_args(c1, c2);
  const MatFq& g1 = c1.generator();
  const MatFq& g2 = c2.generator();
  if (g1.rows() == 0) return MatFq(c1.field(), c1.length(), c1.length());
  return g2.transpose() * adj_right_factor(g1, g2);
}

std::vector<Fq> adj_diagonal(const LinearCode& c1, const LinearCode& c2) {
  check_adj_args(c1, c2);
  const std::size_t n = c1.length();
  const std::size_t k = c1.dimension();
  if (k <= n - k) return direct_diagonal(c1.generator(), c2.generator());
  // adj(C1, C2) projects onto C2 along C1^perp; I - adj(C1, C2) projects onto
  // C1^perp along C2, which is adj(C2^perp, C1^perp).
  auto diag = direct_diagonal(dual(c2).generator(), dual(c1).generator());
  const FieldSpec& f = *c1.field();
  for (auto& x : diag) x = f.sub(FieldSpec::one(), x);
  return diag;
}

std::vector<Fq> sorted_multiset(std::vector<Fq> values) {
  std::ranges::sort(values);
  return values;
}

std::vector<Fq> diag_multiset(const MatFq& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("diag_multiset of a non-square matrix");
  std::vector<Fq> d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d[i] = m(i, i);
  return sorted_multiset(std::move(d));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::LikelyEquivalent: return "LikelyEquivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

DistinguishOutcome distinguish(const LinearCode& a, const LinearCode& b, const ConstructionPlan& plan) {
  require_compatible(a, b, "distinguish");
  if (a.dimension() != b.dimension())
    throw DimMismatch("distinguish: codes of dimension " + std::to_string(a.dimension()) + " and " +
                      std::to_string(b.dimension()));
  if (plan.characteristic != a.field()->characteristic() || plan.degree != a.field()->degree())
    throw InvalidArgument("distinguish: plan was built for a different field");

  DistinguishOutcome out;
  const bool symmetric = plan.factors1 == plan.factors2;
  // When factors2 is a Frobenius shift of factors1, A_2 is the image of A_1.
  std::optional<unsigned> shift;
  if (!symmetric) {
    const auto f1 = sorted_factors(plan.factors1);
    const auto f2 = sorted_factors(plan.factors2);
    for (unsigned d = 1; d < plan.degree && !shift; ++d)
      if (shifted(f1, d, plan.degree) == f2) shift = d;
  }

  // Returns the diagonal, or an empty optional with out.reason set.
  const auto side = [&](const LinearCode& c, std::size_t& d1, std::size_t& d2, bool& trivial,
                        const char* name) -> std::optional<std::vector<Fq>> {
    const LinearCode s1 = build_side(c, plan.factors1);
    const LinearCode s2 = symmetric ? s1 : shift ? frobenius_code(s1, *shift) : build_side(c, plan.factors2);
    d1 = s1.dimension();
    d2 = s2.dimension();
    if (d1 != d2) {
      out.reason = std::string("dim(") + name + "_1) != dim(" + name + "_2)";
      return std::nullopt;
    }
    if (s1.is_zero() || s1.is_full()) {
      out.reason = std::string(name) + "_1 is " + (s1.is_zero() ? "the zero code" : "the full space");
      return std::nullopt;
    }
    try {
      auto diag = adj_diagonal(s1, s2);
      trivial = true;
      return sorted_multiset(std::move(diag));
    } catch (const NotInvertible&) {
      out.reason = std::string(name) + "_1 meets the dual of " + name + "_2";
      return std::nullopt;
    }
  };

  auto da = side(a, out.dim_a1, out.dim_a2, out.a_side_trivial, "A");
  if (!da) return out;
  out.b_evaluated = true;
  auto db = side(b, out.dim_b1, out.dim_b2, out.b_side_trivial, "B");
  if (!db) return out;
  out.t_held = true;
  out.diag_a = std::move(*da);
  out.diag_b = std::move(*db);
  if (out.dim_a1 != out.dim_b1) {
    out.reason = "side codes of A and B have different dimensions";
    return out;
  }
  out.verdict = out.diag_a == out.diag_b ? Verdict::LikelyEquivalent : Verdict::NotEquivalent;
  return out;
}

double fp_estimate(double q_diag, double n) {
  if (q_diag < 2 || n < 1) throw InvalidArgument("fp_estimate: need q_diag >= 2 and n >= 1");
  return std::pow(q_diag, q_diag / 2) * std::pow(4 * std::numbers::pi * n, (1 - q_diag) / 2);
}

std::uint32_t diag_subfield(const ConstructionPlan& plan, const FieldSpec& field) {
  const unsigned m = field.degree();
  if (plan.degree != m || plan.characteristic != field.characteristic())
    throw InvalidArgument("diag_subfield: plan was built for a different field");
  const auto f1 = sorted_factors(plan.factors1);
  const auto f2 = sorted_factors(plan.factors2);
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const auto s1 = shifted(f1, d, m);
    const auto s2 = shifted(f2, d, m);
    if ((s1 == f1 && s2 == f2) || (s1 == f2 && s2 == f1))
      return static_cast<std::uint32_t>(ipow(field.characteristic(), d));
  }
  return field.order();
}

}  // namespace lepkit
