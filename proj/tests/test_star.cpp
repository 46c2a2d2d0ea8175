#include <doctest.h>

#include "matstar/axioms.hpp"
#include "matstar/classify.hpp"
#include "matstar/random.hpp"

using namespace matstar;

namespace {

// x * y = tr(x) y on the basis.
StructureTensor trace_left_tensor(FieldSpec f, std::size_t n) {
  return StructureTensor::from_basis_products(f, n, [&](std::size_t l, std::size_t r) {
    return l / n == l % n ? matrix_unit(f, n, r / n, r % n) : Matrix::zero(f, n);
  });
}

LinearMapG minus_identity(FieldSpec f, std::size_t n) {
  return LinearMapG::from_family(-Scalar::one(f), Matrix::zero(f, n));
}

LinearMapG scaled_identity(FieldSpec f, std::size_t n, std::int64_t mu) {
  return LinearMapG::from_family(Scalar::from_int(f, mu), Matrix::zero(f, n));
}

}  // namespace

TEST_SUITE("star") {
  TEST_CASE("ordinary and opposite tensors") {
    auto r = FieldSpec::rational();
    auto ord = tensor_from_ordinary(r, 2), opp = tensor_from_opposite(r, 2);
    CHECK(ord.basis_product(1, 2) == matrix_unit(r, 2, 0, 0));
    CHECK(opp.basis_product(1, 2) == matrix_unit(r, 2, 1, 1));
    auto f2 = FieldSpec::prime(2);
    auto t = tensor_from_ordinary(f2, 2);
    std::size_t ones = 0;
    for (std::size_t l = 0; l < 4; ++l)
      for (std::size_t rr = 0; rr < 4; ++rr)
        for (std::size_t o = 0; o < 4; ++o) ones += t.coefficient(l, rr, o).is_one();
    CHECK(ones == 8);
    CHECK(t.nonzero_count() == 8);
  }

  TEST_CASE("tensor_from_g") {
    for (auto f : {FieldSpec::rational(), FieldSpec::prime(3)}) {
      for (std::size_t n = 2; n <= 3; ++n) {
        CHECK(tensor_from_g(LinearMapG::zero(f, n)) == tensor_from_ordinary(f, n));
        CHECK(tensor_from_g(minus_identity(f, n)) == tensor_from_opposite(f, n));
        Rng rng(n);
        auto g = LinearMapG::from_family(-Scalar::one(f), random_matrix(f, n, rng));
        CHECK(tensor_from_g(g) == tensor_from_opposite(f, n));
        auto g0 = LinearMapG::from_family(Scalar::zero(f), random_matrix(f, n, rng));
        CHECK(tensor_from_g(g0) == tensor_from_ordinary(f, n));
      }
    }
    Rng rng(9);
    auto f = FieldSpec::prime(5);
    for (int t = 0; t < 10; ++t) {
      auto g = random_linear_map(f, 2, rng);
      auto tensor = tensor_from_g(g);
      auto x = random_matrix(f, 2, rng), y = random_matrix(f, 2, rng);
      CHECK(star_eval(tensor, x, y) == x * y + g.apply(commutator(x, y)));
    }
  }

  TEST_CASE("star_eval") {
    auto r = FieldSpec::rational();
    Rng rng(4);
    auto ord = tensor_from_ordinary(r, 3);
    for (int t = 0; t < 100; ++t) {
      auto x = random_matrix(r, 3, rng), y = random_matrix(r, 3, rng);
      CHECK(star_eval(ord, x, y) == x * y);
    }
    for (int t = 0; t < 20; ++t) {
      auto tensor = tensor_from_g(random_linear_map(r, 2, rng));
      auto x = random_matrix(r, 2, rng), y = random_matrix(r, 2, rng), w = random_matrix(r, 2, rng);
      auto two = Scalar::from_int(r, 2);
      CHECK(star_eval(tensor, x, Matrix::identity(r, 2)) == x);
      CHECK(star_eval(tensor, two * x, y) == two * star_eval(tensor, x, y));
      CHECK(star_eval(tensor, x + w, y) == star_eval(tensor, x, y) + star_eval(tensor, w, y));
      CHECK(star_eval(tensor, x, y + w) == star_eval(tensor, x, y) + star_eval(tensor, x, w));
    }
    CHECK_THROWS_AS(star_eval(ord, Matrix::zero(r, 2), Matrix::zero(r, 3)), Error);
  }

  TEST_CASE("associativity") {
    auto r = FieldSpec::rational();
    auto ord = check_associativity(tensor_from_ordinary(r, 3));
    CHECK(ord.holds);
    CHECK(ord.cases_checked == 729);
    CHECK(check_associativity(tensor_from_opposite(FieldSpec::prime(5), 2)).holds);

    auto bad = check_associativity(tensor_from_g(scaled_identity(r, 2, 2)));
    REQUIRE_FALSE(bad.holds);
    REQUIRE(bad.witness);
    const auto& w = std::get<AssociativityWitness>(*bad.witness);
    CHECK(w.indices == std::array<std::size_t, 6>{0, 0, 0, 0, 0, 1});
    // Independent re-check of the witness.
    auto t = tensor_from_g(scaled_identity(r, 2, 2));
    auto u = [&](std::size_t i, std::size_t j) { return matrix_unit(r, 2, i, j); };
    const auto& k = w.indices;
    auto lhs = star_eval(t, u(k[0], k[1]), star_eval(t, u(k[2], k[3]), u(k[4], k[5])));
    auto rhs = star_eval(t, star_eval(t, u(k[0], k[1]), u(k[2], k[3])), u(k[4], k[5]));
    CHECK(lhs == w.left_nested);
    CHECK(rhs == w.right_nested);
    CHECK(lhs != rhs);
    CHECK(bad.describe().find("e_11 (0,0)") != std::string::npos);
  }

  TEST_CASE("basis associativity agrees with random triples") {
    Rng rng(17);
    auto r = FieldSpec::rational();
    for (int t = 0; t < 12; ++t) {
      auto g = t % 3 == 0 ? LinearMapG::from_family(t % 2 ? -Scalar::one(r) : Scalar::zero(r), random_matrix(r, 2, rng))
                          : random_linear_map(r, 2, rng, 1);
      auto tensor = tensor_from_g(g);
      bool basis = check_associativity(tensor).holds;
      bool sampled = true;
      for (int s = 0; s < 100; ++s) {
        auto x = random_matrix(r, 2, rng), y = random_matrix(r, 2, rng), z = random_matrix(r, 2, rng);
        if (star_eval(tensor, x, star_eval(tensor, y, z)) != star_eval(tensor, star_eval(tensor, x, y), z))
          sampled = false;
      }
      CHECK(basis == sampled);
    }
  }

  TEST_CASE("identity") {
    auto r = FieldSpec::rational();
    Rng rng(2);
    for (int t = 0; t < 10; ++t) CHECK(check_identity(tensor_from_g(random_linear_map(r, 3, rng))).holds);
    CHECK(check_identity(tensor_from_ordinary(r, 2)).holds);
    auto t = tensor_from_ordinary(r, 2);
    t.set_coefficient(1, 3, 0, Scalar::one(r));  // e_01 * e_11 picks up e_00
    auto report = check_identity(t);
    REQUIRE_FALSE(report.holds);
    const auto& w = std::get<IdentityWitness>(*report.witness);
    CHECK(w.a == 0);
    CHECK(w.b == 1);
    CHECK(star_eval(t, matrix_unit(r, 2, 0, 1), Matrix::identity(r, 2)) == w.product);
    CHECK(check_left_identity(tensor_from_ordinary(r, 2)).holds);
    CHECK_FALSE(check_left_identity(trace_left_tensor(r, 2)).holds);
  }

  TEST_CASE("trace") {
    auto r = FieldSpec::rational();
    CHECK(check_trace(tensor_from_opposite(r, 3)).holds);
    auto kill = LinearMapG::zero(r, 2);
    for (std::size_t k = 0; k < 2; ++k) kill.set_coefficient(k * 2 + k, 0, Scalar::one(r));  // tr(x) e_00
    CHECK(check_trace(tensor_from_g(kill)).holds);
    auto bump = LinearMapG::zero(r, 2);
    bump.set_coefficient(1, 0, Scalar::one(r));  // g(e_01) = e_00
    auto report = check_trace(tensor_from_g(bump));
    REQUIRE_FALSE(report.holds);
    const auto& w = std::get<TraceWitness>(*report.witness);
    CHECK(w.star_trace != w.ordinary_trace);
  }

  TEST_CASE("trace check matches trace preservation") {
    Rng rng(5);
    for (auto f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(5)}) {
      std::size_t yes = 0, no = 0;
      for (int t = 0; t < 40; ++t) {
        auto g = random_linear_map(f, 2, rng);
        if (t % 2) {
          // Make every image traceless.
          for (std::size_t row = 0; row < 4; ++row)
            g.set_coefficient(row, 3, g.coefficient(row, 3) - (g.coefficient(row, 0) + g.coefficient(row, 3)));
        }
        auto pres = traceless_preservation_check(g).preserves;
        CHECK(pres == check_trace(tensor_from_g(g)).holds);
        (pres ? yes : no) += 1;
      }
      CHECK(yes > 0);
      CHECK(no > 0);
    }
  }

  TEST_CASE("orthogonality") {
    auto f2 = FieldSpec::prime(2);
    auto r = FieldSpec::rational();
    CHECK(check_orthogonality(tensor_from_ordinary(f2, 2), OrthogonalityMode::exhaustive()).holds);
    auto bad = check_orthogonality(trace_left_tensor(f2, 2), OrthogonalityMode::exhaustive());
    REQUIRE_FALSE(bad.holds);
    const auto& w = std::get<OrthogonalityWitness>(*bad.witness);
    CHECK(star_eval(trace_left_tensor(f2, 2), w.pair.x, w.pair.y) == w.product);
    CHECK_FALSE(w.product.is_zero());
    auto fixed = make_idempotent_pair({Scalar::one(r), Scalar::zero(r)}, {Scalar::one(r), Scalar::zero(r)},
                                      {Scalar::zero(r), Scalar::one(r)}, {Scalar::zero(r), Scalar::one(r)});
    CHECK(star_eval(trace_left_tensor(r, 2), fixed.x, fixed.y) == matrix_unit(r, 2, 1, 1));
    CHECK_FALSE(check_orthogonality(trace_left_tensor(r, 2), std::span(&fixed, 1)).holds);
    CHECK_FALSE(check_orthogonality(trace_left_tensor(r, 3), OrthogonalityMode::randomized(100, 1)).holds);
    CHECK_THROWS_AS(check_orthogonality(tensor_from_ordinary(r, 2), OrthogonalityMode::exhaustive()), Error);
    auto randomized = check_orthogonality(tensor_from_ordinary(r, 2), OrthogonalityMode::randomized(25, 3));
    CHECK(randomized.holds);
    CHECK(randomized.mode == CheckMode::randomized);
    CHECK(randomized.trials == 25);
    CHECK(randomized.seed == 3);
  }

  TEST_CASE("every g gives identity, orthogonality and bilinearity") {
    Rng rng(12);
    for (auto f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
      for (int t = 0; t < 8; ++t) {
        auto n = 2 + static_cast<std::size_t>(t % 2);
        auto tensor = tensor_from_g(random_linear_map(f, n, rng));
        CHECK(check_identity(tensor).holds);
        CHECK(check_bilinearity(tensor).holds);
        CHECK(check_orthogonality(tensor, OrthogonalityMode::best_for(f, n, 50, t)).holds);
      }
    }
  }

  TEST_CASE("theorem conclusion") {
    for (auto f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(7)}) {
      for (std::size_t n = 2; n <= 4; ++n) {
        CHECK(theorem_conclusion_check(tensor_from_ordinary(f, n)) == ProductKind::ordinary);
        CHECK(theorem_conclusion_check(tensor_from_opposite(f, n)) == ProductKind::opposite);
      }
    }
    auto r = FieldSpec::rational();
    CHECK(theorem_conclusion_check(tensor_from_g(LinearMapG::zero(r, 2))) == ProductKind::ordinary);
    CHECK(theorem_conclusion_check(tensor_from_g(minus_identity(r, 2))) == ProductKind::opposite);
    CHECK(theorem_conclusion_check(trace_left_tensor(r, 2)) == ProductKind::neither);
  }

  TEST_CASE("all axioms") {
    auto f = FieldSpec::prime(3);
    auto reports = check_all_axioms(tensor_from_ordinary(f, 2), OrthogonalityMode::exhaustive());
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].axiom == Axiom::A);
    CHECK(reports[4].axiom == Axiom::O);
    CHECK(all_hold(reports));
    CHECK_FALSE(all_hold(check_all_axioms(trace_left_tensor(f, 2), OrthogonalityMode::exhaustive())));
  }
}
