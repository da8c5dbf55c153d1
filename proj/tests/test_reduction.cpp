#include <doctest.h>

#include <algorithm>

#include "lepkit/reduction.hpp"
#include "oracles.hpp"

using namespace lepkit;

namespace {

// closure(B) must equal the image of closure(A) under the lifted monomial.
bool lifted_maps_closures(const LepInstance& inst, const SubgroupSpec& sub) {
  const auto lifted = lift_witness(*inst.witness, sub);
  const auto [ca, cb] = reduce_to_pep(inst.code_a, inst.code_b, sub.r);
  return LinearCode::from_generator(apply_lifted(ca.generator(), lifted)) == cb;
}

}  // namespace

TEST_CASE("subgroups of F_5") {
  auto f5 = make_field(5, 1);
  auto u2 = make_subgroup(f5, 2);
  CHECK(u2.members == std::vector<Fq>{Fq{1}, Fq{4}});
  CHECK(u2.coset_reps == std::vector<Fq>{Fq{1}, Fq{2}});
  CHECK(u2.index() == 2);
  CHECK(u2.contains(Fq{4}));
  CHECK(!u2.contains(Fq{2}));
  CHECK(!u2.contains(Fq{0}));

  auto u4 = make_subgroup(f5, 4);
  auto m4 = u4.members;
  std::ranges::sort(m4);
  CHECK(m4 == std::vector<Fq>{Fq{1}, Fq{2}, Fq{3}, Fq{4}});
  CHECK(make_subgroup(f5, 1).members == std::vector<Fq>{Fq{1}});
  CHECK_THROWS_AS(make_subgroup(f5, 3), InvalidArgument);
}

TEST_CASE("subgroup members are exactly the r-th roots of unity") {
  for (std::uint32_t q : {7u, 9u, 13u, 16u, 25u}) {
    auto f = field_of_order(q);
    for (std::uint32_t r = 1; r < q; ++r) {
      if ((q - 1) % r) continue;
      auto sub = make_subgroup(f, r);
      std::vector<Fq> roots;
      for (std::uint16_t x = 1; x < q; ++x)
        if (f->pow(Fq{x}, r) == FieldSpec::one()) roots.push_back(Fq{x});
      auto members = sub.members;
      std::ranges::sort(members);
      CHECK(members == roots);
    }
  }
}

TEST_CASE("scalar decomposition") {
  auto f5 = make_field(5, 1);
  auto u2 = make_subgroup(f5, 2);
  CHECK(decompose_scalar(Fq{3}, u2) == ScalarDecomposition{1, 1});
  CHECK(decompose_scalar(Fq{4}, u2) == ScalarDecomposition{1, 0});
  CHECK(decompose_scalar(Fq{1}, u2) == ScalarDecomposition{0, 0});
  CHECK_THROWS_AS(decompose_scalar(Fq{0}, u2), DivisionByZero);

  // d = beta^s alpha^t for every d, every subgroup.
  auto f16 = make_field(2, 4);
  for (std::uint32_t r : {1u, 3u, 5u, 15u}) {
    auto sub = make_subgroup(f16, r);
    for (std::uint16_t x = 1; x < 16; ++x) {
      auto [s, t] = decompose_scalar(Fq{x}, sub);
      CHECK(s < r);
      CHECK(t < sub.index());
      CHECK(f16->mul(f16->pow(sub.generator, s), f16->exp(t)) == Fq{x});
    }
  }
}

TEST_CASE("reduce_to_pep") {
  auto f5 = make_field(5, 1);
  auto inst = random_pair(f5, 20, 5, 3);
  auto [a1, b1] = reduce_to_pep(inst.code_a, inst.code_b, 1);
  CHECK(a1 == inst.code_a);
  CHECK(b1 == inst.code_b);

  for (std::uint32_t q : {4u, 5u, 7u, 8u}) {
    auto f = field_of_order(q);
    auto pair = random_pair(f, 20, 5, q);
    auto [ca, cb] = reduce_to_pep(pair.code_a, pair.code_b, q - 1);
    CHECK(dual(ca).contains(ca));
    CHECK(dual(cb).contains(cb));
  }
  CHECK_THROWS_AS(reduce_to_pep(inst.code_a, inst.code_b, 3), InvalidArgument);
  CHECK_THROWS_AS(reduce_to_pep(inst.code_a, random_code(f5, 19, 5, 1), 2), ShapeMismatch);
}

TEST_CASE("the partial closure with r = q-1 is the classical closure") {
  for (std::uint32_t q : {5u, 8u, 9u}) {
    auto f = field_of_order(q);
    auto c = random_code(f, 10, 3, q);
    // Powers of alpha by repeated multiplication.
    std::vector<Fq> all;
    Fq x = FieldSpec::one();
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      all.push_back(x);
      x = f->mul(x, f->alpha());
    }
    CHECK(closure(c, q - 1) == LinearCode::from_generator(kron(all, c.generator())));
  }
}

TEST_CASE("lifted witnesses on LEP(U) instances") {
  auto f5 = make_field(5, 1);
  auto u2 = make_subgroup(f5, 2);
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto inst = equivalent_pair(f5, 20, 5, 2, s);
    CHECK(is_subgroup_instance(*inst.witness, u2));
    auto lifted = lift_witness(*inst.witness, u2);
    CHECK(lifted.is_permutation);
    CHECK(std::ranges::all_of(lifted.column_scale, [](Fq x) { return x == FieldSpec::one(); }));
    CHECK(lifted_maps_closures(inst, u2));
    // The lifted map is a bijection on the 2n closure coordinates.
    auto sorted = lifted.perm;
    std::ranges::sort(sorted);
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
  }
}

TEST_CASE("lifting with scalars outside U") {
  auto f5 = make_field(5, 1);
  auto u2 = make_subgroup(f5, 2);
  auto inst = equivalent_pair(f5, 12, 4, std::nullopt, 5);
  auto& w = *inst.witness;
  w.d[0] = Fq{2};
  inst.code_b = LinearCode::from_generator(apply_monomial(inst.code_a.generator(), w.d, w.perm));
  CHECK(!is_subgroup_instance(w, u2));
  auto lifted = lift_witness(w, u2);
  CHECK(!lifted.is_permutation);
  CHECK(lifted.blocks.exponent[0] == 1);
  CHECK(lifted.blocks.scalar[0] == Fq{2});
  // Still a monomial map between the closures.
  CHECK(lifted_maps_closures(inst, u2));
}

TEST_CASE("identity witness lifts to I_r (x) P") {
  auto f7 = make_field(7, 1);
  auto sub = make_subgroup(f7, 3);
  MonomialWitness w;
  w.d.assign(5, FieldSpec::one());
  w.perm = {2, 0, 1, 4, 3};
  auto lifted = lift_witness(w, sub);
  CHECK(lifted.is_permutation);
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < 5; ++c) CHECK(lifted.perm[b * 5 + c] == b * 5 + w.perm[c]);
  auto p = permutation_matrix(f7, w.perm);
  std::vector<MatFq> blocks(3, p);
  CHECK(lifted_matrix(f7, lifted) == block_diag(blocks));
}

TEST_CASE("block structure of the lifted monomial") {
  auto f13 = make_field(13, 1);
  auto sub = make_subgroup(f13, 4);
  auto inst = equivalent_pair(f13, 9, 3, std::nullopt, 8);
  auto lifted = lift_witness(*inst.witness, sub);
  CHECK(lifted_maps_closures(inst, sub));
  const auto big = lifted_matrix(f13, lifted);
  for (std::size_t c = 0; c < 9; ++c) {
    // Restrict the big matrix to coordinate c's copies and perm[c]'s copies.
    MatFq blk(f13, 4, 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) blk(a, b) = big(a * 9 + c, b * 9 + inst.witness->perm[c]);
    CHECK(blk == lifted.blocks.block(f13, c));
  }
}

TEST_CASE("subgroup instance classification") {
  auto f7 = make_field(7, 1);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto w = random_monomial(f7, 10, 3, std::nullopt, s);
    CHECK(is_subgroup_instance(w, make_subgroup(f7, 6)));
    const bool all_one = std::ranges::all_of(w.d, [](Fq x) { return x == FieldSpec::one(); });
    CHECK(is_subgroup_instance(w, make_subgroup(f7, 1)) == all_one);
    auto signed_perm = random_monomial(f7, 10, 3, 2, s);
    CHECK(is_subgroup_instance(signed_perm, make_subgroup(f7, 2)));
    for (auto x : signed_perm.d) CHECK((x == Fq{1} || x == Fq{6}));
  }
}

TEST_CASE("closures are self-orthogonal for r > 2") {
  for (std::uint32_t q = 3; q <= 128; ++q) {
    FieldPtr f;
    try {
      f = field_of_order(q);
    } catch (const InvalidArgument&) {
      continue;
    }
    for (std::uint32_t r = 1; r < q; ++r) {
      if ((q - 1) % r) continue;
      const auto a = closure_vector(*f, r);
      Fq s{0};
      for (auto x : a) s = f->add(s, f->mul(x, x));
      CAPTURE(q);
      CAPTURE(r);
      CHECK((s == FieldSpec::zero()) == (r > 2));
    }
  }
}
