#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matstar/idempotent.hpp"
#include "matstar/tensor.hpp"

namespace matstar {

enum class Axiom { A, B, I, T, O };
std::string_view to_string(Axiom axiom);

enum class CheckMode { exhaustive, randomized, structural };
std::string_view to_string(CheckMode mode);

/// e_ab * (e_cd * e_ef) != (e_ab * e_cd) * e_ef; indices are 0-based.
struct AssociativityWitness {
  std::array<std::size_t, 6> indices;
  Matrix left_nested;   // e_ab * (e_cd * e_ef)
  Matrix right_nested;  // (e_ab * e_cd) * e_ef
};

/// e_ab * 1 != e_ab.
struct IdentityWitness {
  std::size_t a, b;
  Matrix product;
};

/// tr(e_ab * e_cd) != tr(e_ab e_cd).
struct TraceWitness {
  std::size_t a, b, c, d;
  Scalar star_trace;
  Scalar ordinary_trace;
};

/// Orthogonal idempotents with x * y != 0.
struct OrthogonalityWitness {
  IdempotentPair pair;
  Matrix product;
};

using Witness = std::variant<AssociativityWitness, IdentityWitness, TraceWitness, OrthogonalityWitness>;

struct AxiomReport {
  explicit AxiomReport(Axiom which) : axiom(which) {}

  Axiom axiom;
  bool holds = true;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t cases_checked = 0;
  std::optional<Witness> witness;

  /// One line, witnesses in 1-based labels with 0-based indices alongside.
  std::string describe() const;
};

struct OrthogonalityMode {
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;

  static OrthogonalityMode exhaustive() { return {}; }
  static OrthogonalityMode randomized(std::uint64_t trials, std::uint64_t seed) {
    return {CheckMode::randomized, trials, seed};
  }
  /// Exhaustive when the idempotent census is feasible, randomized otherwise.
  static OrthogonalityMode best_for(FieldSpec f, std::size_t n, std::uint64_t trials, std::uint64_t seed);
};

/// All n^6 basis triples, lexicographic, first failure as witness.
AxiomReport check_associativity(const StructureTensor& t);

/// Bilinearity holds by construction for a tensor; recorded for completeness.
AxiomReport check_bilinearity(const StructureTensor& t);

/// Right identity only: e_ab * 1 = e_ab.
AxiomReport check_identity(const StructureTensor& t);

/// Left identity 1 * e_ab = e_ab; not part of the axiom suite.
AxiomReport check_left_identity(const StructureTensor& t);

/// tr(e_ab * e_cd) = delta_bc delta_ad on all basis pairs.
AxiomReport check_trace(const StructureTensor& t);

AxiomReport check_orthogonality(const StructureTensor& t, const OrthogonalityMode& mode);
/// Exhaustive check against a precomputed list of pairs.
AxiomReport check_orthogonality(const StructureTensor& t, std::span<const IdempotentPair> pairs);

/// Runs A, B, I, T, O in that order.
std::vector<AxiomReport> check_all_axioms(const StructureTensor& t, const OrthogonalityMode& mode);
bool all_hold(std::span<const AxiomReport> reports);

enum class ProductKind { ordinary, opposite, neither };
std::string_view to_string(ProductKind kind);

/// Exact comparison with the ordinary and opposite tensors.
ProductKind theorem_conclusion_check(const StructureTensor& t);

}  // namespace matstar
