#include <doctest.h>

#include <random>

#include "symcheck/exact.hpp"

using namespace symcheck;

namespace {

ExactMatrix sigma_x() { return ExactMatrix::from_rows({{0, 1}, {1, 0}}); }

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<ExactComplex> e;
  for (std::size_t k = 0; k < r * c; ++k) {
    e.emplace_back(ExactComplex::rational(num(rng), den(rng)) + ExactComplex::i() * ExactComplex::rational(num(rng), den(rng)));
  }
  return {r, c, std::move(e)};
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  const ExactComplex q = ExactComplex::rational(6, -4);
  CHECK(q.re() == mpq_class(-3, 2));
  CHECK(q.re().get_den() == 2);
  CHECK(q == ExactComplex::rational(-3, 2));
  CHECK_THROWS_AS(ExactComplex::rational(1, 0), std::domain_error);
}

TEST_CASE("complex arithmetic is exact") {
  const ExactComplex i = ExactComplex::i();
  CHECK(i * i == ExactComplex(-1));
  CHECK((ExactComplex(1) / ExactComplex::rational(1, 3)) == ExactComplex(3));
  CHECK(ExactComplex(2, 3).conj() == ExactComplex(2, -3));
  CHECK(ExactComplex(3, 4).norm() == 25);
  CHECK((ExactComplex(1) / i) == -i);
  CHECK_THROWS_AS(ExactComplex(1) / ExactComplex(0), std::domain_error);
  CHECK(ExactComplex(mpq_class(1, 2), mpq_class(-1, 3)).str() == "1/2-1/3i");
}

TEST_CASE("identity times identity") {
  CHECK(ExactMatrix::identity(3) * ExactMatrix::identity(3) == ExactMatrix::identity(3));
}

TEST_CASE("self commutator vanishes") {
  CHECK(commutator(sigma_x(), sigma_x()).is_zero());
  CHECK(anticommutator(sigma_x(), sigma_x()) == ExactMatrix::identity(2) * ExactComplex(2));
}

TEST_CASE("dimension mismatch names both shapes") {
  const ExactMatrix a(2, 3);
  const ExactMatrix b(2, 3);
  try {
    (void)(a * b);
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("2x3") != std::string::npos);
  }
  CHECK_THROWS_AS(a + ExactMatrix(3, 2), DimensionError);
  CHECK_THROWS_AS(ExactMatrix(0, 2), DimensionError);
}

TEST_CASE("transpose, conjugate and adjoint") {
  const ExactMatrix m = ExactMatrix::from_rows({{ExactComplex(1, 2), 3}, {0, ExactComplex(0, -1)}});
  CHECK(m.transpose()(0, 1) == ExactComplex(0));
  CHECK(m.transpose()(1, 0) == ExactComplex(3));
  CHECK(m.conj()(0, 0) == ExactComplex(1, -2));
  CHECK(m.adjoint() == m.transpose().conj());
  CHECK(m.adjoint().adjoint() == m);
}

TEST_CASE("nullspace of trivial matrices") {
  const NullspaceResult z = linear_solve(ExactMatrix(2, 2));
  CHECK(z.rank == 0);
  CHECK(z.nullity() == 2);
  const NullspaceResult id = linear_solve(ExactMatrix::identity(4));
  CHECK(id.rank == 4);
  CHECK(id.nullity() == 0);
}

TEST_CASE("nullspace basis is pivot-normalized") {
  // x + 2y + 3z = 0 -> free y, z
  const NullspaceResult r = linear_solve(ExactMatrix::from_rows({{1, 2, 3}}));
  REQUIRE(r.nullity() == 2);
  CHECK(r.basis[0] == ExactMatrix::from_rows({{-2}, {1}, {0}}));
  CHECK(r.basis[1] == ExactMatrix::from_rows({{-3}, {0}, {1}}));
}

TEST_CASE("row space comparisons") {
  const ExactMatrix plane_a = ExactMatrix::from_rows({{1, 0}, {0, 1}});
  const ExactMatrix plane_b = ExactMatrix::from_rows({{1, 1}, {1, -1}});
  CHECK(rowspace_equal(plane_a, plane_b));
  CHECK_FALSE(rowspace_equal(ExactMatrix::from_rows({{1, 0}}), ExactMatrix::from_rows({{0, 1}})));
  CHECK_THROWS_AS(rowspace_equal(plane_a, ExactMatrix::identity(3)), DimensionError);
}

TEST_CASE("row combination witness") {
  const ExactMatrix rows = ExactMatrix::from_rows({{1, 1}, {1, -1}});
  const std::vector<ExactComplex> target{3, 1};
  const auto x = row_combination(rows, target);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == ExactComplex(2));
  CHECK((*x)[1] == ExactComplex(1));
  const std::vector<ExactComplex> outside{0, 1};
  CHECK_FALSE(row_combination(ExactMatrix::from_rows({{1, 0}}), outside).has_value());
}

TEST_CASE("inverse and vectorization") {
  const ExactMatrix m = ExactMatrix::from_rows({{0, ExactComplex::i()}, {1, 1}});
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == ExactMatrix::identity(2));
  CHECK_FALSE(inverse(ExactMatrix::from_rows({{1, 2}, {2, 4}})).has_value());
  const ExactMatrix v = vectorize(m);
  CHECK(v.rows() == 4);
  CHECK(v(1, 0) == ExactComplex::i());
  CHECK(unvectorize(v, 2) == m);
}

TEST_CASE("property: associativity, adjoint involution, nullspace soundness") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 40; ++trial) {
    const ExactMatrix a = random_matrix(rng, 3, 4);
    const ExactMatrix b = random_matrix(rng, 4, 2);
    const ExactMatrix c = random_matrix(rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.adjoint().adjoint() == a);

    // Rank-deficient by construction: last row is a combination of the others.
    ExactMatrix m = random_matrix(rng, 4, 5);
    for (std::size_t j = 0; j < 5; ++j) m(3, j) = m(0, j) * ExactComplex(2) - m(1, j) * ExactComplex::i();
    const NullspaceResult ns = linear_solve(m);
    CHECK(ns.rank + ns.nullity() == 5);
    CHECK(ns.rank <= 3);
    for (const auto& v : ns.basis) CHECK((m * v).is_zero());

    // rowspace_equal is reflexive and symmetric, and invariant under invertible mixing.
    const ExactMatrix mix = ExactMatrix::from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 2, 1}});
    CHECK(rowspace_equal(m, m));
    CHECK(rowspace_equal(m, mix * m));
    CHECK(rowspace_equal(mix * m, m));
  }
}
