#include <doctest.h>

#include "lepkit/matrix.hpp"
#include "oracles.hpp"

using namespace lepkit;

TEST_CASE("rref examples") {
  auto f5 = make_field(5, 1);
  auto r = MatFq::identity(f5, 3).rref();
  CHECK(r.reduced == MatFq::identity(f5, 3));
  CHECK(r.rank == 3);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  auto d = MatFq::from_ints(f5, {{2, 4}, {1, 2}}).rref();
  CHECK(d.reduced == MatFq::from_ints(f5, {{1, 2}, {0, 0}}));
  CHECK(d.rank == 1);
  CHECK(d.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank matches span enumeration") {
  auto f7 = make_field(7, 1);
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto m = oracle::random_matrix(f7, 4, 8, s);
    if (s % 3 == 0) {
      // force a dependency
      for (std::size_t c = 0; c < 8; ++c) m(3, c) = f7->add(m(0, c), f7->mul(Fq{3}, m(1, c)));
    }
    CHECK(m.rank() == oracle::span_dim(*f7, 8, oracle::rows_of(m)));
  }
  auto f4 = make_field(2, 2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = oracle::random_matrix(f4, 5, 6, 100 + s);
    CHECK(m.rank() == oracle::span_dim(*f4, 6, oracle::rows_of(m)));
  }
}

TEST_CASE("rref output is reduced and spans the same space") {
  auto f9 = make_field(3, 2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = oracle::random_matrix(f9, 3, 5, s);
    auto r = m.rref();
    for (std::size_t i = 0; i < r.rank; ++i) {
      CHECK(r.reduced(i, r.pivots[i]) == FieldSpec::one());
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) CHECK(r.reduced(j, r.pivots[i]) == FieldSpec::zero());
    }
    CHECK(oracle::span_set(*f9, 5, oracle::rows_of(m)) == oracle::span_set(*f9, 5, oracle::rows_of(r.reduced)));
  }
}

TEST_CASE("inverse") {
  auto f5 = make_field(5, 1);
  CHECK(MatFq::from_ints(f5, {{1, 1}, {0, 1}}).inverse() == MatFq::from_ints(f5, {{1, 4}, {0, 1}}));
  CHECK(MatFq::identity(f5, 4).inverse() == MatFq::identity(f5, 4));
  CHECK_THROWS_AS(MatFq::from_ints(f5, {{1, 2}, {2, 4}}).inverse(), SingularMatrix);
  CHECK_THROWS_AS(MatFq(f5, 2, 3).inverse(), SingularMatrix);

  auto f16 = make_field(2, 4);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = oracle::random_matrix(f16, 6, 6, s);
    if (m.rank() < 6) continue;
    CHECK(m * m.inverse() == MatFq::identity(f16, 6));
    CHECK(m.inverse() * m == MatFq::identity(f16, 6));
  }
}

TEST_CASE("right kernel") {
  auto f2 = make_field(2, 1);
  CHECK(MatFq::from_ints(f2, {{1, 1, 1}}).right_kernel() == MatFq::from_ints(f2, {{1, 0, 1}, {0, 1, 1}}));

  auto f5 = make_field(5, 1);
  CHECK(MatFq::from_ints(f5, {{1, 2}, {3, 4}}).right_kernel().rows() == 0);

  auto f9 = make_field(3, 2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto m = oracle::random_matrix(f9, 3, 7, s);
    auto k = m.right_kernel();
    CHECK(k.rows() == 7 - m.rank());
    CHECK(m * k.transpose() == MatFq(f9, 3, k.rows()));
  }

  // Full kernel against enumeration of F_q^n.
  auto f3 = make_field(3, 1);
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto m = oracle::random_matrix(f3, 3, 6, 50 + s);
    if (s % 2) m = vstack(m, m.row_slice(0, 1));
    const auto brute = oracle::kernel_set(*f3, m);
    const auto ours = oracle::span_set(*f3, 6, oracle::rows_of(m.right_kernel()));
    CHECK(ours == std::set<oracle::Word>(brute.begin(), brute.end()));
  }
}

TEST_CASE("products and stacking") {
  auto f5 = make_field(5, 1);
  auto m = MatFq::from_ints(f5, {{1, 2, 3}, {4, 0, 1}});
  const std::vector<Fq> one{Fq{1}};
  CHECK(kron(one, m) == m);
  const std::vector<Fq> a{Fq{1}, Fq{2}};
  CHECK(kron(a, MatFq::identity(f5, 2)) == MatFq::from_ints(f5, {{1, 0, 2, 0}, {0, 1, 0, 2}}));

  CHECK(m.transpose().transpose() == m);
  CHECK(m * MatFq::identity(f5, 3) == m);
  CHECK(m * m.transpose() == MatFq::from_ints(f5, {{14 % 5, 7 % 5}, {7 % 5, 17 % 5}}));
  CHECK(m + m == MatFq::from_ints(f5, {{2, 4, 1}, {3, 0, 2}}));

  CHECK(vstack(m, m).rows() == 4);
  CHECK(hstack(m, m) == MatFq::from_ints(f5, {{1, 2, 3, 1, 2, 3}, {4, 0, 1, 4, 0, 1}}));

  std::vector<MatFq> blocks{MatFq::from_ints(f5, {{2}}), MatFq::from_ints(f5, {{1, 1}, {0, 3}})};
  CHECK(block_diag(blocks) == MatFq::from_ints(f5, {{2, 0, 0}, {0, 1, 1}, {0, 0, 3}}));

  const std::vector<Fq> dg{Fq{1}, Fq{2}, Fq{3}};
  CHECK(MatFq::diagonal(f5, dg) == MatFq::from_ints(f5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));

  CHECK_THROWS_AS(m * m, ShapeMismatch);
  CHECK_THROWS_AS(m + m.transpose(), ShapeMismatch);
  CHECK_THROWS_AS(vstack(m, m.transpose()), ShapeMismatch);
  CHECK_THROWS_AS(m * MatFq::identity(make_field(7, 1), 3), FieldMismatch);
}

TEST_CASE("solve") {
  auto f7 = make_field(7, 1);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto a = oracle::random_matrix(f7, 4, 4, s);
    auto b = oracle::random_matrix(f7, 4, 3, s + 100);
    if (a.rank() < 4) {
      CHECK_THROWS_AS(solve(a, b), SingularMatrix);
      continue;
    }
    CHECK(a * solve(a, b) == b);
  }
}

TEST_CASE("entry-wise maps") {
  auto f9 = make_field(3, 2);
  auto m = oracle::random_matrix(f9, 3, 4, 7);
  CHECK(m.frobenius(1) == m.entry_pow(3));
  CHECK(m.frobenius(2) == m);
  CHECK(m.entry_pow(1) == m);
  auto ints = m.to_ints();
  CHECK(MatFq::from_ints(f9, ints) == m);
  CHECK_THROWS_AS(MatFq::from_ints(f9, {{9}}), InvalidArgument);
  CHECK_THROWS_AS(MatFq::from_ints(f9, {{1, 2}, {1}}), ShapeMismatch);
}
