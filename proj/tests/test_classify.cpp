#include <doctest.h>

#include <algorithm>

#include "matstar/classify.hpp"
#include "matstar/random.hpp"
#include "oracles.hpp"

using namespace matstar;

namespace {

bool has_row_tagged(const ConstraintSystem& cs, const std::string& tag) {
  return std::any_of(cs.rows.begin(), cs.rows.end(), [&](const ConstraintRow& r) { return r.tag == tag; });
}

void expect_two_products(const ClassificationReport& r) {
  REQUIRE(r.products.size() == 2);
  std::vector<ProductKind> kinds{r.products[0].kind, r.products[1].kind};
  CHECK(std::count(kinds.begin(), kinds.end(), ProductKind::ordinary) == 1);
  CHECK(std::count(kinds.begin(), kinds.end(), ProductKind::opposite) == 1);
  for (const auto& p : r.products) {
    auto expected = p.kind == ProductKind::ordinary ? tensor_from_ordinary(r.field, r.n) : tensor_from_opposite(r.field, r.n);
    CHECK(p.tensor == expected);
  }
  CHECK(r.anomalies.empty());
  CHECK(r.audit_passed);
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("constraint assembly") {
    auto r = FieldSpec::rational();
    auto cs2 = assemble_constraints(r, 2);
    CHECK(cs2.unknowns == 16);
    CHECK(cs2.rows.size() == oracle::constraint_rows(2));
    CHECK(has_row_tagged(cs2, "vanish:g(ij)_{ii}:i=1,j=2 (0,1)"));
    CHECK(has_row_tagged(cs2, "trace:tr(g(e_12 (0,1)))"));
    CHECK(cs2.count("vanish:g(ij)_{kl}") == 0);
    CHECK(cs2.count("vanish:g(ii-jj)_{kl}") == 0);
    CHECK(std::find(cs2.vacuous_sources.begin(), cs2.vacuous_sources.end(), "vanish:g(ij)_{kl}") !=
          cs2.vacuous_sources.end());
    CHECK(cs2.vacuous_sources.size() == 12);

    for (std::size_t n = 2; n <= 4; ++n) {
      auto cs = assemble_constraints(r, n);
      CHECK(cs.rows.size() == oracle::constraint_rows(n));
      CHECK(cs.count("trace") == n * n - 1);
      for (const auto& id : vanishing_identities())
        if (id.arity <= n) CHECK(cs.count("vanish:" + std::string(id.label)) == oracle::falling(n, id.arity));
      for (const auto& row : cs.rows) {
        CHECK_FALSE(row.terms.empty());
        CHECK(row.tag.rfind(row.source + ":", 0) == 0);
      }
    }
    CHECK(assemble_constraints(r, 3).rows.size() == 110);
  }

  TEST_CASE("solution space") {
    for (auto [f, n] : {std::pair{FieldSpec::rational(), std::size_t{2}}, std::pair{FieldSpec::prime(7), std::size_t{3}},
                        std::pair{FieldSpec::prime(5), std::size_t{2}}}) {
      auto cs = assemble_constraints(f, n);
      auto space = solve_linear_space(cs);
      CHECK(space.dimension == n * n + 1);
      for (const auto& g : space.basis) CHECK(satisfies(cs, g));
      CHECK(satisfies(cs, LinearMapG::identity(f, n)));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          CHECK(satisfies(cs, LinearMapG::from_family(Scalar::zero(f), matrix_unit(f, n, k, l))));
    }
    auto r = FieldSpec::rational();
    auto empty = assemble_constraints(r, 2);
    empty.rows.clear();
    auto full = solve_linear_space(empty);
    CHECK(full.dimension == 16);
  }

  TEST_CASE("deleting a row class never shrinks the solution space") {
    for (auto f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
      auto cs = assemble_constraints(f, 3);
      auto base = solve_linear_space(cs).dimension;
      for (const auto& source : cs.sources()) {
        CAPTURE(source);
        auto reduced = cs.without(source);
        CHECK(reduced.rows.size() == cs.rows.size() - cs.count(source));
        CHECK(solve_linear_space(reduced).dimension >= base);
      }
    }
  }

  TEST_CASE("symbolic classification") {
    expect_two_products(classify_symbolic(FieldSpec::rational(), 2));
    expect_two_products(classify_symbolic(FieldSpec::rational(), 3));
    expect_two_products(classify_symbolic(FieldSpec::prime(5), 2));
    auto r5 = classify_symbolic(FieldSpec::prime(5), 3);
    expect_two_products(r5);
    CHECK(r5.family_spans_solution_space);
    CHECK(r5.solution_dimension == 10);
    CHECK(r5.gauge_dimension == 9);
    CHECK(r5.complete);
    auto q = classify_symbolic(FieldSpec::rational(), 2);
    CHECK(q.constraint_rows == 17);
    REQUIRE(q.admissible_lambdas.size() == 2);
    CHECK(q.admissible_lambdas[0].is_zero());
    CHECK(q.admissible_lambdas[1] == -Scalar::one(q.field));
  }

  TEST_CASE("symbolic classification in characteristic two defers to enumeration") {
    auto r = classify_symbolic(FieldSpec::prime(2), 2);
    CHECK_FALSE(r.complete);
    CHECK(r.admissible_lambdas.size() == 2);
    CHECK_FALSE(r.notes.empty());
    CHECK(r.anomalies.empty());
  }

  TEST_CASE("brute force census over GF(2)") {
    auto f = FieldSpec::prime(2);
    auto r = classify_brute(f, 2, BruteScope::all_g);
    CHECK(r.candidates == 65536);
    CHECK(r.admissible.size() == 32);
    CHECK(r.admissible_outside_family == 0);
    CHECK(r.admissible_in_family == 32);
    CHECK(std::is_sorted(r.admissible_indices.begin(), r.admissible_indices.end()));
    CHECK(std::find(r.admissible.begin(), r.admissible.end(), characteristic_two_g()) != r.admissible.end());
    // All 32 members of the family are admissible.
    for (const auto& lambda : enumerate_scalars(f))
      for (std::uint64_t code = 0; code < 16; ++code) {
        auto z = Matrix::zero(f, 2);
        for (std::size_t k = 0; k < 4; ++k) z.set(k / 2, k % 2, Scalar::from_int(f, (code >> k) & 1));
        auto g = LinearMapG::from_family(lambda, z);
        CHECK(std::find(r.admissible.begin(), r.admissible.end(), g) != r.admissible.end());
      }
    CHECK(r.anomalies.empty());
    CHECK(r.products.size() == 2);
    CHECK(r.audit_passed);
    CHECK(r.audited == 32);
    for (std::size_t k = 0; k < r.admissible.size(); ++k)
      CHECK(candidate_g(f, 2, r.admissible_indices[k]) == r.admissible[k]);

    auto single = classify_brute(f, 2, BruteScope::all_g, kDefaultBudget, 1);
    CHECK(single.admissible_indices == r.admissible_indices);
  }

  TEST_CASE("brute force over the solution space") {
    auto r = classify_brute(FieldSpec::prime(3), 2, BruteScope::solution_space_only);
    CHECK(r.candidates == 243);
    CHECK(r.admissible.size() == 2 * 81);
    expect_two_products(r);
    auto two = classify_brute(FieldSpec::prime(2), 2, BruteScope::solution_space_only);
    CHECK(two.anomalies.empty());
    CHECK(two.products.size() == 2);
  }

  TEST_CASE("brute force guards") {
    try {
      classify_brute(FieldSpec::rational(), 2, BruteScope::all_g);
      FAIL("rational brute force accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InfiniteField);
    }
    try {
      classify_brute(FieldSpec::prime(5), 2, BruteScope::all_g);
      FAIL("budget not enforced");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
    }
    CHECK_THROWS_AS(classify_brute(FieldSpec::prime(2), 2, BruteScope::all_g, 1000), Error);
  }

  TEST_CASE("candidate encoding") {
    auto f = FieldSpec::prime(3);
    CHECK(candidate_g(f, 2, 0) == LinearMapG::zero(f, 2));
    auto g = candidate_g(f, 2, 2 + 3 * 1);
    CHECK(g.coefficient(0, 0) == Scalar::from_int(f, 2));
    CHECK(g.coefficient(0, 1).is_one());
    CHECK(g.coefficient(0, 2).is_zero());
  }

  TEST_CASE("random maps outside the family fail an axiom") {
    for (auto f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
      Rng rng(f.modulus() + 99);
      std::size_t tested = 0;
      auto pairs = f.is_finite() ? orthogonal_idempotent_pairs(f, 2) : std::vector<IdempotentPair>{};
      while (tested < 10000) {
        auto g = random_linear_map(f, 2, rng);
        if (extract_lambda_z(g).exact_fit) continue;
        ++tested;
        auto t = tensor_from_g(g);
        bool fails = !traceless_preservation_check(g).preserves || !check_associativity(t).holds;
        if (!fails)
          fails = !(f.is_finite() ? check_orthogonality(t, pairs) : check_orthogonality(t, OrthogonalityMode::randomized(20, tested))).holds;
        CHECK(fails);
      }
    }
  }

  TEST_CASE("characteristic-two display") {
    auto finding = adjudicate_characteristic_two();
    CHECK(finding.induced_equals_display);
    CHECK_FALSE(finding.display_equals_ordinary);
    CHECK(finding.display_equals_opposite);
    CHECK(finding.display_kind == ProductKind::opposite);
    CHECK(all_hold(finding.display_axioms));
    REQUIRE(finding.separation_from_ordinary);
    CHECK_FALSE(finding.separation_from_opposite);
    auto f = FieldSpec::prime(2);
    // x = e_01, y = e_10 separates the display from xy.
    auto display = characteristic_two_display_tensor();
    auto x = matrix_unit(f, 2, 0, 1), y = matrix_unit(f, 2, 1, 0);
    CHECK(star_eval(display, x, y) != x * y);
    CHECK(star_eval(display, x, y) == y * x);
    CHECK(display.nonzero_count() == 8);
  }
}
