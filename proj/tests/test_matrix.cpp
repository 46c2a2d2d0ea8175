#include <doctest.h>

#include "matstar/commutator_decomposition.hpp"
#include "matstar/idempotent.hpp"
#include "matstar/linalg.hpp"
#include "matstar/random.hpp"
#include "oracles.hpp"

using namespace matstar;

namespace {

Vector ints(FieldSpec f, std::initializer_list<std::int64_t> values) {
  Vector v;
  for (auto x : values) v.push_back(Scalar::from_int(f, x));
  return v;
}

void check_pair_invariants(const IdempotentPair& p) {
  CHECK(p.x * p.x == p.x);
  CHECK(p.y * p.y == p.y);
  CHECK((p.x * p.y).is_zero());
  CHECK((p.y * p.x).is_zero());
  CHECK(rank(p.x) == 1);
  CHECK(rank(p.y) == 1);
  CHECK(dot(p.v1, p.u1).is_one());
  CHECK(dot(p.v2, p.u2).is_one());
  CHECK(dot(p.v1, p.u2).is_zero());
  CHECK(dot(p.v2, p.u1).is_zero());
  CHECK(rank_one_idempotent(p.u1, p.v1) == p.x);
  CHECK(rank_one_idempotent(p.u2, p.v2) == p.y);
}

oracle::Mat2 to_ints(const Matrix& m) {
  return {static_cast<std::int64_t>(m(0, 0).residue()), static_cast<std::int64_t>(m(0, 1).residue()),
          static_cast<std::int64_t>(m(1, 0).residue()), static_cast<std::int64_t>(m(1, 1).residue())};
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("matrix units") {
    auto f2 = FieldSpec::prime(2);
    CHECK(matrix_unit(f2, 2, 0, 1) == Matrix::from_ints(f2, {{0, 1}, {0, 0}}));
    auto r = FieldSpec::rational();
    CHECK(matrix_unit(r, 2, 0, 1) * matrix_unit(r, 2, 1, 0) == matrix_unit(r, 2, 0, 0));
    CHECK((matrix_unit(r, 2, 0, 1) * matrix_unit(r, 2, 0, 1)).is_zero());
    auto u = matrix_unit(r, 3, 2, 2);
    CHECK(u(2, 2).is_one());
    CHECK(trace(u).is_one());
    CHECK_THROWS_AS(matrix_unit(r, 2, 2, 0), Error);
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              auto p = matrix_unit(r, n, i, j) * matrix_unit(r, n, k, l);
              CHECK(p == (j == k ? matrix_unit(r, n, i, l) : Matrix::zero(r, n)));
            }
  }

  TEST_CASE("arithmetic") {
    auto r = FieldSpec::rational();
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      auto x = random_matrix(r, 3, rng);
      CHECK(Matrix::identity(r, 3) * x == x);
      CHECK(x * Matrix::identity(r, 3) == x);
      CHECK(x - x == Matrix::zero(r, 3));
      CHECK(-x + x == Matrix::zero(r, 3));
    }
    auto f3 = FieldSpec::prime(3);
    CHECK(matrix_unit(f3, 2, 0, 1) * matrix_unit(f3, 2, 1, 0) == matrix_unit(f3, 2, 0, 0));
    auto half = Matrix::zero(r, 2);
    half.set(0, 0, Scalar::from_rational(mpq_class(1, 2)));
    CHECK(Scalar::from_int(r, 2) * half == Matrix::from_ints(r, {{1, 0}, {0, 0}}));
    CHECK_THROWS_AS(Matrix::identity(r, 2) + Matrix::identity(r, 3), Error);
    CHECK_THROWS_AS(Matrix::identity(r, 2) * Matrix::identity(r, 3), Error);
    CHECK_THROWS_AS(Matrix::identity(r, 2) + Matrix::identity(f3, 2), Error);
    CHECK_THROWS_AS(Matrix::zero(r, 1), Error);
    CHECK_THROWS_AS(Matrix::zero(r, 9), Error);
  }

  TEST_CASE("trace and commutator") {
    auto r = FieldSpec::rational();
    CHECK(trace(Matrix::from_ints(r, {{1, 2}, {3, 4}})) == Scalar::from_int(r, 5));
    auto f2 = FieldSpec::prime(2);
    CHECK(trace(Matrix::identity(f2, 2)).is_zero());
    auto e01 = matrix_unit(r, 2, 0, 1), e10 = matrix_unit(r, 2, 1, 0);
    CHECK(commutator(e01, e10) == matrix_unit(r, 2, 0, 0) - matrix_unit(r, 2, 1, 1));
    CHECK(commutator(matrix_unit(f2, 2, 0, 1), matrix_unit(f2, 2, 1, 0)) == Matrix::identity(f2, 2));
    Rng rng(5);
    for (auto f : {r, FieldSpec::prime(5)}) {
      for (int t = 0; t < 100; ++t) {
        auto x = random_matrix(f, 3, rng), y = random_matrix(f, 3, rng);
        CHECK(trace(x * y) == trace(y * x));
        CHECK(trace(commutator(x, y)).is_zero());
        CHECK(commutator(x, x).is_zero());
      }
    }
  }

  TEST_CASE("rank and inverse") {
    auto r = FieldSpec::rational();
    CHECK(rank(matrix_unit(r, 2, 0, 1)) == 1);
    CHECK(rank(Matrix::identity(r, 3)) == 3);
    CHECK(rank(Matrix::from_ints(r, {{1, 1}, {1, 1}})) == 1);
    CHECK(rank(Matrix::zero(r, 4)) == 0);
    auto m = Matrix::from_ints(r, {{2, 1}, {7, 4}});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == Matrix::identity(r, 2));
    CHECK_FALSE(inverse(Matrix::from_ints(r, {{1, 2}, {2, 4}})));
  }

  TEST_CASE("rank-one idempotents") {
    auto r = FieldSpec::rational();
    CHECK(rank_one_idempotent(ints(r, {1, 0}), ints(r, {1, 0})) == matrix_unit(r, 2, 0, 0));
    auto x = rank_one_idempotent(ints(r, {1, 1}), ints(r, {1, 0}));
    CHECK(x == Matrix::from_ints(r, {{1, 0}, {1, 0}}));
    CHECK(x * x == x);
    CHECK(rank(x) == 1);
    try {
      rank_one_idempotent(ints(r, {1, 0}), ints(r, {0, 1}));
      FAIL("unnormalized factors accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotNormalized);
    }
    Rng rng(8);
    for (auto f : {r, FieldSpec::prime(3), FieldSpec::prime(7)}) {
      for (int t = 0; t < 50; ++t) {
        Vector u, w;
        for (int k = 0; k < 3; ++k) u.push_back(random_scalar(f, rng)), w.push_back(random_scalar(f, rng));
        auto s = dot(w, u);
        if (s.is_zero()) continue;
        for (auto& c : w) c /= s;
        auto e = rank_one_idempotent(u, w);
        CHECK(e * e == e);
        CHECK(rank(e) == 1);
      }
    }
  }

  TEST_CASE("idempotent census against the naive scan") {
    for (std::int64_t p : {2, 3}) {
      auto f = FieldSpec::prime(static_cast<std::uint64_t>(p));
      auto ids = enumerate_rank_one_idempotents(f, 2);
      auto expected = oracle::rank_one_idempotents(p);
      REQUIRE(ids.size() == expected.size());
      for (std::size_t k = 0; k < ids.size(); ++k) CHECK(to_ints(ids[k]) == expected[k]);
      CHECK(orthogonal_idempotent_pairs(f, 2).size() == oracle::orthogonal_pairs(p));
    }
    CHECK(enumerate_rank_one_idempotents(FieldSpec::prime(2), 2).size() == 6);
    CHECK(enumerate_rank_one_idempotents(FieldSpec::prime(3), 2).size() == 12);
    CHECK(orthogonal_idempotent_pairs(FieldSpec::prime(2), 2).size() == 6);
    CHECK_THROWS_AS(enumerate_rank_one_idempotents(FieldSpec::rational(), 2), Error);
    try {
      enumerate_rank_one_idempotents(FieldSpec::prime(7), 3);
      FAIL("census guard not enforced");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
    }
  }

  TEST_CASE("orthogonal pair membership") {
    auto f = FieldSpec::prime(3);
    auto pairs = orthogonal_idempotent_pairs(f, 2);
    auto e00 = matrix_unit(f, 2, 0, 0), e11 = matrix_unit(f, 2, 1, 1);
    bool has = false;
    for (const auto& p : pairs) {
      check_pair_invariants(p);
      if (p.x == e00 && p.y == e11) has = true;
      CHECK_FALSE(p.x == p.y);
    }
    CHECK(has);
  }

  TEST_CASE("sampled orthogonal pairs") {
    for (auto f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(5)}) {
      for (std::size_t n = 2; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) check_pair_invariants(sample_orthogonal_idempotent_pair(f, n, seed));
    }
    auto r = FieldSpec::rational();
    auto a = sample_orthogonal_idempotent_pair(r, 2, 0);
    auto b = sample_orthogonal_idempotent_pair(r, 2, 0);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    auto c = sample_orthogonal_idempotent_pair(r, 2, 1);
    CHECK(c.x == sample_orthogonal_idempotent_pair(r, 2, 1).x);
    auto fixed = make_idempotent_pair(ints(r, {1, 0}), ints(r, {1, 0}), ints(r, {0, 1}), ints(r, {0, 1}));
    CHECK(fixed.x == matrix_unit(r, 2, 0, 0));
    CHECK(fixed.y == matrix_unit(r, 2, 1, 1));
    CHECK_THROWS_AS(make_idempotent_pair(ints(r, {1, 0}), ints(r, {1, 0}), ints(r, {1, 1}), ints(r, {0, 1})), Error);
  }

  TEST_CASE("commutator decomposition") {
    auto r = FieldSpec::rational();
    auto m = matrix_unit(r, 2, 0, 0) - matrix_unit(r, 2, 1, 1);
    auto [x, y] = decompose_traceless(m);
    CHECK(commutator(x, y) == m);
    auto [zx, zy] = decompose_traceless(Matrix::zero(r, 3));
    CHECK(zx.is_zero());
    CHECK(zy.is_zero());
    try {
      decompose_traceless(Matrix::identity(r, 2));
      FAIL("nonzero trace accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotTraceless);
    }
    Rng rng(21);
    for (std::size_t n = 2; n <= 4; ++n)
      for (int t = 0; t < 30; ++t) {
        auto a = random_traceless(r, n, rng);
        auto [p, s] = decompose_traceless(a, static_cast<std::uint64_t>(t));
        CHECK(commutator(p, s) == a);
      }
    // Fields with fewer than n elements take the shift route.
    for (auto f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)})
      for (std::size_t n = 2; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
          auto a = random_traceless(f, n, rng);
          try {
            auto [p, s] = decompose_traceless(a, static_cast<std::uint64_t>(t));
            CHECK(commutator(p, s) == a);
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DecompositionFailed);
            CHECK(f.modulus() == 2);
            CHECK(n >= 5);
          }
        }
    auto f3 = FieldSpec::prime(3);
    for (std::size_t n : {3, 6}) {
      auto scalar = Scalar::from_int(f3, 2) * Matrix::identity(f3, n);
      auto [sx, sy] = decompose_traceless(scalar);
      CHECK(commutator(sx, sy) == scalar);
    }
    auto f2 = FieldSpec::prime(2);
    auto [ix, iy] = decompose_traceless(Matrix::identity(f2, 2));
    CHECK(commutator(ix, iy) == Matrix::identity(f2, 2));
  }

  TEST_CASE("unit labels") {
    CHECK(unit_label(0, 1) == "e_12 (0,1)");
    CHECK(unit_label(2, 2) == "e_33 (2,2)");
  }
}
