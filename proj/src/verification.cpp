#include "matstar/verification.hpp"

#include <algorithm>

#include "matstar/classify.hpp"
#include "matstar/random.hpp"

namespace matstar {

bool SuiteReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

namespace {

constexpr std::uint64_t kMaps = 21;
constexpr std::uint64_t kResidualMaps = 50;
constexpr std::uint64_t kRoundtrips = 20;

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t item) {
  std::uint64_t z = seed + item * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Scalar family_lambda(FieldSpec f, std::uint64_t k) { return k % 2 ? -Scalar::one(f) : Scalar::zero(f); }

// Every image shifted by a multiple of e_00 so that it is traceless.
LinearMapG traceless_images(LinearMapG g) {
  auto n = g.dim();
  for (std::size_t r = 0; r < g.basis_size(); ++r) {
    auto t = Scalar::zero(g.field());
    for (std::size_t k = 0; k < n; ++k) t += g.coefficient(r, k * n + k);
    g.set_coefficient(r, 0, g.coefficient(r, 0) - t);
  }
  return g;
}

void fail(SuiteItem& item, std::string why) {
  item.passed = false;
  item.details.push_back("FAIL " + std::move(why));
}

std::string count_of(std::uint64_t good, std::uint64_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

SuiteItem trace_preservation_item(std::size_t n, std::uint64_t seed) {
  SuiteItem item{"trace-preservation",
                 "g preserves trace zero exactly when xy + g(xy - yx) satisfies the trace axiom", true, {}};
  Rng rng(item_seed(seed, 1));
  for (auto f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
    std::uint64_t preserving = 0, agree = 0;
    for (std::uint64_t k = 0; k < kMaps; ++k) {
      auto g = LinearMapG::zero(f, n);
      switch (k % 3) {
        case 0: g = LinearMapG::from_family(random_scalar(f, rng), random_matrix(f, n, rng)); break;
        case 1: g = traceless_images(random_linear_map(f, n, rng)); break;
        default: g = random_linear_map(f, n, rng); break;
      }
      auto pres = traceless_preservation_check(g);
      auto trace_report = check_trace(tensor_from_g(g));
      if (pres.preserves) {
        ++preserving;
      } else if (trace(g.apply(pres.witness->value)).is_zero()) {
        fail(item, f.to_string() + ": witness " + pres.witness->label + " maps to a traceless matrix");
      }
      if (k % 3 != 2 && !pres.preserves) fail(item, f.to_string() + ": constructed map " + std::to_string(k));
      if (pres.preserves == trace_report.holds) ++agree;
      else fail(item, f.to_string() + ": verdicts disagree on map " + std::to_string(k));
    }
    item.details.push_back(f.to_string() + ": " + count_of(agree, kMaps) + " agree, " +
                           std::to_string(preserving) + " preserving");
  }
  return item;
}

SuiteItem vanishing_item(std::size_t n, std::uint64_t seed) {
  SuiteItem item{"vanishing-identities",
                 "the seventeen entry identities hold for g = lambda x + tr(x) z, lambda in {0, -1}", true, {}};
  Rng rng(item_seed(seed, 2));
  for (auto f : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (std::uint64_t k = 0; k < 2; ++k) {
      auto lambda = family_lambda(f, k);
      auto g = LinearMapG::from_family(lambda, random_matrix(f, n, rng));
      std::size_t pass = 0, vacuous = 0;
      for (const auto& r : vanishing_suite(g)) {
        if (r.status == SuiteStatus::pass) ++pass;
        else if (r.status == SuiteStatus::vacuous) ++vacuous;
        else fail(item, f.to_string() + " lambda=" + lambda.to_string() + ": " + r.label);
      }
      item.details.push_back(f.to_string() + " lambda=" + lambda.to_string() + ": " + std::to_string(pass) +
                             " pass, " + std::to_string(vacuous) + " vacuous");
    }
  }
  return item;
}

SuiteItem residual_item(std::size_t n, std::uint64_t seed) {
  SuiteItem item{"associativity-residual",
                 "basis-level associativity residual vanishes on the family, not on 2*id, and matches the "
                 "associativity check",
                 true, {}};
  Rng rng(item_seed(seed, 3));
  auto q = FieldSpec::rational();
  for (std::uint64_t k = 0; k < 2; ++k) {
    auto g = LinearMapG::from_family(family_lambda(q, k), random_matrix(q, n, rng));
    auto scan = scan_associativity_residual(g);
    if (!scan.all_zero()) fail(item, "family member with lambda=" + family_lambda(q, k).to_string());
    item.details.push_back("rational lambda=" + family_lambda(q, k).to_string() + ": " +
                           std::to_string(scan.tuples_checked) + " tuples, all zero");
  }
  auto twice = LinearMapG::identity(q, n);
  for (std::size_t r = 0; r < twice.basis_size(); ++r) twice.set_coefficient(r, r, Scalar::from_int(q, 2));
  auto scan = scan_associativity_residual(twice);
  if (scan.all_zero()) {
    fail(item, "2*id has zero residual");
  } else {
    const auto& t = *scan.first_nonzero;
    item.details.push_back("rational 2*id: nonzero at " + unit_label(t[0], t[1]) + ", " + unit_label(t[2], t[3]) +
                           ", " + unit_label(t[4], t[5]));
  }

  auto f = FieldSpec::prime(5);
  std::uint64_t agree = 0, associative = 0;
  for (std::uint64_t k = 0; k < kResidualMaps; ++k) {
    auto g = k % 5 == 0 ? LinearMapG::from_family(family_lambda(f, k / 5), random_matrix(f, 2, rng))
                        : random_linear_map(f, 2, rng);
    auto zero = scan_associativity_residual(g).all_zero();
    auto holds = check_associativity(tensor_from_g(g)).holds;
    if (holds) ++associative;
    if (zero == holds) ++agree;
    else fail(item, "gf:5 map " + std::to_string(k) + ": residual and associativity disagree");
  }
  item.details.push_back("gf:5 n=2: " + count_of(agree, kResidualMaps) + " agree, " + std::to_string(associative) +
                         " associative");
  return item;
}

SuiteItem lambda_z_item(std::size_t n, std::uint64_t seed) {
  SuiteItem item{"lambda-z-roundtrip", "lambda and z are recovered exactly from lambda x + tr(x) z", true, {}};
  Rng rng(item_seed(seed, 4));
  for (auto f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
    std::uint64_t exact = 0, rejected = 0;
    for (std::uint64_t k = 0; k < kRoundtrips; ++k) {
      auto lambda = random_scalar(f, rng);
      auto z = random_matrix(f, n, rng);
      auto g = LinearMapG::from_family(lambda, z);
      auto lz = extract_lambda_z(g);
      if (lz.exact_fit && lz.lambda == lambda && lz.z == z) ++exact;
      else fail(item, f.to_string() + ": roundtrip " + std::to_string(k));
      auto bent = g;
      auto in = 1 + rng.below(g.basis_size() - 1);
      bent.set_coefficient(in, 0, bent.coefficient(in, 0) + Scalar::one(f));
      if (!extract_lambda_z(bent).exact_fit) ++rejected;
      else fail(item, f.to_string() + ": perturbed map " + std::to_string(k) + " still fits");
    }
    item.details.push_back(f.to_string() + ": " + count_of(exact, kRoundtrips) + " exact, " +
                           count_of(rejected, kRoundtrips) + " perturbations rejected");
  }
  return item;
}

void expect_two_products(SuiteItem& item, const ClassificationReport& r) {
  auto label = r.field.to_string() + " n=" + std::to_string(r.n);
  bool ordinary = false, opposite = false;
  for (const auto& p : r.products) {
    ordinary |= p.kind == ProductKind::ordinary;
    opposite |= p.kind == ProductKind::opposite;
  }
  auto ok = r.products.size() == 2 && ordinary && opposite && r.anomalies.empty() && r.audit_passed;
  if (!ok) fail(item, label + ": expected exactly the ordinary and opposite products");
  if (r.method == Method::symbolic && !r.family_spans_solution_space)
    fail(item, label + ": lambda/z family does not span the solution space");
  std::string line = label + ": " + std::to_string(r.constraint_rows) + " rows, solution dimension " +
                     std::to_string(r.solution_dimension) + ", products";
  for (const auto& p : r.products) line += " " + std::string(to_string(p.kind));
  item.details.push_back(line);
}

SuiteItem symbolic_item(std::size_t n, std::uint64_t seed) {
  SuiteItem item{"classify-symbolic",
                 "in characteristic other than two the only products are xy and yx", true, {}};
  expect_two_products(item, classify_symbolic(FieldSpec::rational(), n, seed));
  expect_two_products(item, classify_symbolic(FieldSpec::prime(5), 2, seed));
  return item;
}

SuiteItem brute_item() {
  SuiteItem item{"classify-brute", "exhaustive census of every g over GF(2), n = 2", true, {}};
  auto f = FieldSpec::prime(2);
  auto r = classify_brute(f, 2, BruteScope::all_g);
  auto special = characteristic_two_g();
  bool contains = std::find(r.admissible.begin(), r.admissible.end(), special) != r.admissible.end();
  if (r.candidates != 65536) fail(item, "candidate count " + std::to_string(r.candidates));
  if (!contains) fail(item, "g(a b; c e) = (a b; c a) is not admissible");
  if (!r.anomalies.empty()) fail(item, std::to_string(r.anomalies.size()) + " anomalous products");
  if (!r.audit_passed) fail(item, "audit failed");
  item.details.push_back(std::to_string(r.candidates) + " candidates, " + std::to_string(r.admissible.size()) +
                         " admissible (" + std::to_string(r.admissible_in_family) + " of lambda/z form, " +
                         std::to_string(r.admissible_outside_family) + " outside)");
  for (const auto& p : r.products)
    item.details.push_back(std::string(to_string(p.kind)) + ": induced by " + std::to_string(p.inducing_count));
  item.details.push_back(std::string("g(a b; c e) = (a b; c a) admissible: ") + (contains ? "yes" : "no"));
  return item;
}

SuiteItem characteristic_two_item() {
  SuiteItem item{"characteristic-two-display",
                 "exact comparison of the displayed GF(2) product with xy and yx", true, {}};
  auto finding = adjudicate_characteristic_two();
  if (!finding.induced_equals_display) fail(item, "display differs from the product induced by its g");
  if (!all_hold(finding.display_axioms)) fail(item, "display product violates an axiom");
  auto kind = finding.display_equals_ordinary ? ProductKind::ordinary
              : finding.display_equals_opposite ? ProductKind::opposite
                                                : ProductKind::neither;
  if (kind != finding.display_kind) fail(item, "inconsistent classification of the display product");
  item.details.push_back(std::string("induced equals display: ") + (finding.induced_equals_display ? "yes" : "no"));
  item.details.push_back(std::string("display equals xy: ") + (finding.display_equals_ordinary ? "yes" : "no"));
  item.details.push_back(std::string("display equals yx: ") + (finding.display_equals_opposite ? "yes" : "no"));
  item.details.push_back("lambda = " + finding.lambda_z.lambda.to_string() + ", z = " + finding.lambda_z.z.to_string());
  if (finding.separation_from_ordinary) {
    const auto& s = *finding.separation_from_ordinary;
    item.details.push_back("differs from xy at " + unit_label(s.left / 2, s.left % 2) + " * " +
                           unit_label(s.right / 2, s.right % 2) + ": " + s.first.to_string() + " vs " +
                           s.second.to_string());
  }
  return item;
}

}  // namespace

SuiteReport run_verification_suite(std::size_t n, std::uint64_t seed) {
  if (n < kMinDim || n > kMaxDim) throw Error(ErrorKind::DimensionMismatch, "dimension outside [2, 8]");
  SuiteReport report;
  report.n = n;
  report.seed = seed;
  report.items.push_back(trace_preservation_item(n, seed));
  report.items.push_back(vanishing_item(n, seed));
  report.items.push_back(residual_item(n, seed));
  report.items.push_back(lambda_z_item(n, seed));
  report.items.push_back(symbolic_item(n, seed));
  report.items.push_back(brute_item());
  report.items.push_back(characteristic_two_item());
  return report;
}

}  // namespace matstar
