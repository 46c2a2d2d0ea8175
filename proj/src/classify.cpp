#include "matstar/classify.hpp"

#include <algorithm>
#include <thread>

#include "matstar/random.hpp"

namespace matstar {

std::string_view to_string(Method method) { return method == Method::symbolic ? "symbolic" : "brute"; }
std::string_view to_string(BruteScope scope) {
  return scope == BruteScope::all_g ? "all_g" : "solution_space_only";
}

namespace {

constexpr int kAuditSamplesPerLambda = 3;
constexpr std::uint64_t kRandomizedTrials = 100;

// Records the product of an audited g, merging equal tensors.
void record_product(ClassificationReport& report, const LinearMapG& g, StructureTensor tensor) {
  for (auto& p : report.products)
    if (p.tensor == tensor) {
      ++p.inducing_count;
      return;
    }
  auto kind = theorem_conclusion_check(tensor);
  if (kind == ProductKind::neither) report.anomalies.push_back(g);
  report.products.push_back(ProductClass{std::move(tensor), kind, g, 1});
}

bool audit(ClassificationReport& report, const StructureTensor& tensor,
           const OrthogonalityMode& mode) {
  ++report.audited;
  auto checks = check_all_axioms(tensor, mode);
  if (all_hold(checks)) return true;
  report.audit_passed = false;
  for (const auto& c : checks)
    if (!c.holds) report.audit_failures.push_back(c.describe());
  return false;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (value > limit / base) return std::nullopt;
    value *= base;
  }
  return value;
}

}  // namespace

ClassificationReport classify_symbolic(FieldSpec f, std::size_t n, std::uint64_t seed) {
  ClassificationReport report;
  report.field = f;
  report.n = n;
  report.method = Method::symbolic;
  report.seed = seed;

  auto cs = assemble_constraints(f, n);
  report.constraint_rows = cs.rows.size();
  for (const auto& src : cs.sources()) report.constraint_sources.emplace_back(src, cs.count(src));
  report.vacuous_sources = cs.vacuous_sources;
  auto space = solve_linear_space(cs);
  report.solution_dimension = space.dimension;
  report.solution_basis = space.basis;

  bool lambda_varies = false;
  for (const auto& g : space.basis) {
    auto lz = extract_lambda_z(g);
    if (!lz.exact_fit) {
      auto [i, j] = *lz.residual_witness;
      throw Error(ErrorKind::UnparameterizableSolution,
                  "nullspace member deviates from lambda x + tr(x) z at " + unit_label(i, j));
    }
    if (!lz.lambda.is_zero()) lambda_varies = true;
  }

  // The family lambda*id + tr(.)e_kl must lie in the solution space and span it.
  bool family_inside = satisfies(cs, LinearMapG::identity(f, n));
  for (std::size_t k = 0; k < n && family_inside; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (!satisfies(cs, LinearMapG::from_family(Scalar::zero(f), matrix_unit(f, n, k, l)))) family_inside = false;
  report.family_spans_solution_space = family_inside && space.dimension == n * n + 1;
  report.gauge_dimension = lambda_varies ? space.dimension - 1 : space.dimension;

  std::vector<Scalar> roots;
  if (f.characteristic() == 2) {
    for (auto& s : enumerate_scalars(f)) roots.push_back(s);
    report.complete = false;
    report.notes.push_back(
        "characteristic two: 2*lambda*(lambda+1) vanishes for every lambda; completeness of the lambda/z family "
        "is not established by the linear constraints, use brute-force enumeration");
  } else {
    roots = {Scalar::zero(f), -Scalar::one(f)};
  }
  for (auto& lambda : roots) {
    if (!quadratic_condition(lambda)) continue;
    if (!lambda_varies && !lambda.is_zero()) continue;
    report.admissible_lambdas.push_back(lambda);
  }

  auto mode = OrthogonalityMode::best_for(f, n, kRandomizedTrials, seed);
  Rng rng(seed);
  for (const auto& lambda : report.admissible_lambdas) {
    for (int s = 0; s < kAuditSamplesPerLambda; ++s) {
      auto z = s == 0 ? Matrix::zero(f, n) : random_matrix(f, n, rng);
      auto g = LinearMapG::from_family(lambda, z);
      auto tensor = tensor_from_g(g);
      if (audit(report, tensor, mode)) record_product(report, g, std::move(tensor));
    }
  }
  return report;
}

LinearMapG candidate_g(FieldSpec f, std::size_t n, std::uint64_t code) {
  auto p = f.modulus();
  auto m = n * n;
  Vector coords;
  coords.reserve(m * m);
  for (std::size_t k = 0; k < m * m; ++k, code /= p)
    coords.push_back(Scalar::from_int(f, static_cast<std::int64_t>(code % p)));
  return LinearMapG::unflatten(f, n, coords);
}

namespace {

LinearMapG span_candidate(FieldSpec f, std::size_t n, const std::vector<LinearMapG>& basis, std::uint64_t code) {
  auto p = f.modulus();
  auto coords = LinearMapG::zero(f, n).flatten();
  for (const auto& b : basis) {
    auto weight = Scalar::from_int(f, static_cast<std::int64_t>(code % p));
    code /= p;
    if (weight.is_zero()) continue;
    auto bv = b.flatten();
    for (std::size_t u = 0; u < coords.size(); ++u)
      if (!bv[u].is_zero()) coords[u] += weight * bv[u];
  }
  return LinearMapG::unflatten(f, n, coords);
}

}  // namespace

ClassificationReport classify_brute(FieldSpec f, std::size_t n, BruteScope scope, std::uint64_t budget,
                                    unsigned threads) {
  if (!f.is_finite()) throw Error(ErrorKind::InfiniteField, "brute-force classification over the rationals");
  ClassificationReport report;
  report.field = f;
  report.n = n;
  report.method = Method::brute;
  report.scope = scope;
  report.budget = budget;

  std::vector<LinearMapG> basis;
  std::size_t digits = n * n * n * n;
  if (scope == BruteScope::solution_space_only) {
    auto cs = assemble_constraints(f, n);
    report.constraint_rows = cs.rows.size();
    for (const auto& src : cs.sources()) report.constraint_sources.emplace_back(src, cs.count(src));
    report.vacuous_sources = cs.vacuous_sources;
    auto space = solve_linear_space(cs);
    report.solution_dimension = space.dimension;
    report.solution_basis = space.basis;
    basis = space.basis;
    digits = space.dimension;
  }
  auto total = checked_power(f.modulus(), digits, budget);
  if (!total)
    throw Error(ErrorKind::SearchSpaceTooLarge, f.to_string() + "^" + std::to_string(digits) +
                                                    " candidates exceed the budget of " + std::to_string(budget));
  report.candidates = *total;

  std::vector<IdempotentPair> pairs;
  bool exhaustive_o = census_feasible(f, n);
  if (exhaustive_o) {
    pairs = orthogonal_idempotent_pairs(f, n);
  } else {
    report.notes.push_back("orthogonality checked in randomized mode: idempotent census exceeds 2^24");
  }
  auto mode = exhaustive_o ? OrthogonalityMode::exhaustive()
                           : OrthogonalityMode::randomized(kRandomizedTrials, report.seed);

  auto make = [&](std::uint64_t code) {
    return scope == BruteScope::all_g ? candidate_g(f, n, code) : span_candidate(f, n, basis, code);
  };
  auto passes = [&](std::uint64_t code) {
    auto g = make(code);
    if (!traceless_preservation_check(g).preserves) return false;
    auto tensor = tensor_from_g(g);
    auto o = exhaustive_o ? check_orthogonality(tensor, pairs) : check_orthogonality(tensor, mode);
    if (!o.holds) return false;
    return check_associativity(tensor).holds;
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, *total));
  std::vector<std::vector<std::uint64_t>> found(workers);
  {
    std::vector<std::jthread> pool;
    auto chunk = (*total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto begin = w * chunk;
        auto end = std::min(*total, begin + chunk);
        for (auto code = begin; code < end; ++code)
          if (passes(code)) found[w].push_back(code);
      });
    }
  }
  for (auto& part : found) report.admissible_indices.insert(report.admissible_indices.end(), part.begin(), part.end());
  std::sort(report.admissible_indices.begin(), report.admissible_indices.end());

  for (auto code : report.admissible_indices) {
    auto g = make(code);
    auto tensor = tensor_from_g(g);
    if (!audit(report, tensor, mode)) continue;
    auto lz = extract_lambda_z(g);
    if (lz.exact_fit) ++report.admissible_in_family;
    else ++report.admissible_outside_family;
    record_product(report, g, std::move(tensor));
    report.admissible.push_back(std::move(g));
  }
  return report;
}

LinearMapG characteristic_two_g() {
  auto f = FieldSpec::prime(2);
  auto g = LinearMapG::zero(f, 2);
  auto one = Scalar::one(f);
  // (alpha beta; gamma eps) -> (alpha beta; gamma alpha)
  g.set_coefficient(0, 0, one);  // alpha -> (0,0)
  g.set_coefficient(0, 3, one);  // alpha -> (1,1)
  g.set_coefficient(1, 1, one);  // beta
  g.set_coefficient(2, 2, one);  // gamma
  return g;
}

StructureTensor characteristic_two_display_tensor() {
  auto f = FieldSpec::prime(2);
  auto t = StructureTensor::zero(f, 2);
  auto one = Scalar::one(f);
  // Flat indices: x = (alpha, beta, gamma, eps) and y = (zeta, eta, theta, iota) in row-major order.
  constexpr std::size_t alpha = 0, beta = 1, gamma = 2, eps = 3;
  constexpr std::size_t zeta = 0, eta = 1, theta = 2, iota = 3;
  t.set_coefficient(alpha, zeta, 0, one);
  t.set_coefficient(gamma, eta, 0, one);
  t.set_coefficient(beta, zeta, 1, one);
  t.set_coefficient(eps, eta, 1, one);
  t.set_coefficient(alpha, theta, 2, one);
  t.set_coefficient(gamma, iota, 2, one);
  t.set_coefficient(beta, theta, 3, one);
  t.set_coefficient(eps, iota, 3, one);
  return t;
}

std::optional<TensorSeparation> first_difference(const StructureTensor& a, const StructureTensor& b) {
  auto m = a.basis_size();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t r = 0; r < m; ++r) {
      auto pa = a.basis_product(l, r);
      auto pb = b.basis_product(l, r);
      if (pa != pb) return TensorSeparation{l, r, std::move(pa), std::move(pb)};
    }
  return std::nullopt;
}

CharacteristicTwoFinding adjudicate_characteristic_two() {
  auto f = FieldSpec::prime(2);
  auto g = characteristic_two_g();
  auto lz = extract_lambda_z(g);
  auto induced = tensor_from_g(g);
  auto display = characteristic_two_display_tensor();
  auto ordinary = tensor_from_ordinary(f, 2);
  auto opposite = tensor_from_opposite(f, 2);

  CharacteristicTwoFinding finding{g, lz, induced, display};
  finding.induced_equals_display = induced == display;
  finding.display_equals_ordinary = display == ordinary;
  finding.display_equals_opposite = display == opposite;
  finding.display_kind = theorem_conclusion_check(display);
  finding.display_axioms = check_all_axioms(display, OrthogonalityMode::exhaustive());
  finding.separation_from_ordinary = first_difference(display, ordinary);
  finding.separation_from_opposite = first_difference(display, opposite);
  return finding;
}

}  // namespace matstar
