#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "matstar/axioms.hpp"
#include "matstar/constraints.hpp"
#include "matstar/g_analysis.hpp"

namespace matstar {

enum class Method { symbolic, brute };
enum class BruteScope { all_g, solution_space_only };
std::string_view to_string(Method method);
std::string_view to_string(BruteScope scope);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// One distinct product induced by admissible g.
struct ProductClass {
  StructureTensor tensor;
  ProductKind kind;
  LinearMapG representative;
  std::uint64_t inducing_count = 0;
};

struct ClassificationReport {
  FieldSpec field = FieldSpec::rational();
  std::size_t n = 0;
  Method method = Method::symbolic;
  BruteScope scope = BruteScope::all_g;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;

  std::size_t constraint_rows = 0;
  // Row count per provenance source, in assembly order; vacuous sources contribute no rows.
  std::vector<std::pair<std::string, std::size_t>> constraint_sources;
  std::vector<std::string> vacuous_sources;
  std::size_t solution_dimension = 0;
  std::vector<LinearMapG> solution_basis;

  // Symbolic: g = lambda x + tr(x) z with lambda among these and z free.
  bool family_spans_solution_space = false;
  std::vector<Scalar> admissible_lambdas;
  std::size_t gauge_dimension = 0;

  // Brute force: candidate indices (base-p digits of the flattened g, or of
  // the coordinates against solution_basis) that pass every check.
  std::uint64_t candidates = 0;
  std::vector<std::uint64_t> admissible_indices;
  std::vector<LinearMapG> admissible;
  std::uint64_t admissible_in_family = 0;
  std::uint64_t admissible_outside_family = 0;

  std::vector<ProductClass> products;
  std::vector<LinearMapG> anomalies;

  std::uint64_t audited = 0;
  bool audit_passed = true;
  std::vector<std::string> audit_failures;

  /// False when the method cannot certify that nothing was missed.
  bool complete = true;
  std::vector<std::string> notes;
};

/// Linear constraints, nullspace, lambda/z parameterisation, quadratic
/// condition, then a self-audit of sampled family members.
/// Throws UnparameterizableSolution if a nullspace member is not of the
/// lambda/z form.
ClassificationReport classify_symbolic(FieldSpec f, std::size_t n, std::uint64_t seed = 0);

/// Exhaustive enumeration over a finite field with filters T, O, A.
/// threads = 0 uses the hardware concurrency.
ClassificationReport classify_brute(FieldSpec f, std::size_t n, BruteScope scope,
                                    std::uint64_t budget = kDefaultBudget, unsigned threads = 0);

/// g for candidate index `code` in the all_g enumeration: flattened
/// coordinate k is base-p digit k (least significant first).
LinearMapG candidate_g(FieldSpec f, std::size_t n, std::uint64_t code);

/// g(a b; c e) = (a b; c a) over GF(2), n = 2.
LinearMapG characteristic_two_g();

/// The characteristic-two display product
///   (a b; c e) * (z h; t i) = (az+ch  bz+eh; at+ci  bt+ei)
/// encoded literally, one coefficient per monomial.
StructureTensor characteristic_two_display_tensor();

/// First basis pair where two tensors' products differ.
struct TensorSeparation {
  std::size_t left, right;
  Matrix first, second;
};
std::optional<TensorSeparation> first_difference(const StructureTensor& a, const StructureTensor& b);

struct CharacteristicTwoFinding {
  CharacteristicTwoFinding(LinearMapG map, LambdaZReport lz, StructureTensor induced_product,
                           StructureTensor display_product)
      : g(std::move(map)), lambda_z(std::move(lz)), induced(std::move(induced_product)),
        display(std::move(display_product)) {}

  LinearMapG g;
  LambdaZReport lambda_z;
  StructureTensor induced;
  StructureTensor display;
  bool induced_equals_display = false;
  bool display_equals_ordinary = false;
  bool display_equals_opposite = false;
  ProductKind display_kind = ProductKind::neither;
  std::vector<AxiomReport> display_axioms;
  std::optional<TensorSeparation> separation_from_ordinary;
  std::optional<TensorSeparation> separation_from_opposite;
};

/// Compares the product induced by characteristic_two_g() with the literal
/// display tensor and with the ordinary and opposite products.
CharacteristicTwoFinding adjudicate_characteristic_two();

}  // namespace matstar
