#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matstar/linear_map.hpp"
#include "matstar/tensor.hpp"

namespace matstar {

/// Basis of the traceless matrices: e_ij (i != j) in row-major order,
/// then e_ii - e_(i+1)(i+1).
struct TracelessBasisElement {
  std::string label;
  Matrix value;
};
std::vector<TracelessBasisElement> traceless_basis(FieldSpec f, std::size_t n);

struct TracelessPreservation {
  bool preserves = true;
  std::optional<TracelessBasisElement> witness;
  std::optional<Scalar> witness_trace;
};

/// Whether tr(g(b)) = 0 for every traceless basis element b.
TracelessPreservation traceless_preservation_check(const LinearMapG& g);

/// Difference of the two sides of the basis-level associativity condition
/// for x * y = xy + g(xy - yx):
///
///   [-d_de d_af g(e_cb) + d_de e_ab * g(e_cf) - d_cf e_ab * g(e_ed)]
/// - [-d_af d_bc g(e_ed) + d_bc g(e_ad) * e_ef - d_ad g(e_cb) * e_ef]
///
/// `star` must be tensor_from_g(g).
Matrix associativity_residual(const LinearMapG& g, const StructureTensor& star, const std::array<std::size_t, 6>& idx);
Matrix associativity_residual(const LinearMapG& g, const std::array<std::size_t, 6>& idx);

struct ResidualScan {
  std::uint64_t tuples_checked = 0;
  std::optional<std::array<std::size_t, 6>> first_nonzero;
  std::optional<Matrix> residual;
  bool all_zero() const { return !first_nonzero.has_value(); }
};
/// All n^6 index tuples, lexicographic in (a,b,c,d,e,f), stopping at the first nonzero residual.
ResidualScan scan_associativity_residual(const LinearMapG& g);

/// One of the seventeen entry identities forced by associativity and trace.
/// label reads as g(ij)_{kl} with the pairing convention; `difference` marks
/// the g(ii-jj) family. slots name which of i, j, k, l fill the two subscripts.
struct VanishingIdentity {
  std::string_view label;
  bool difference;
  std::size_t arity;
  std::array<char, 2> slots;
};
std::span<const VanishingIdentity> vanishing_identities();

enum class SuiteStatus { pass, fail, vacuous };
std::string_view to_string(SuiteStatus status);

struct VanishingResult {
  std::string label;
  std::size_t arity = 0;
  SuiteStatus status = SuiteStatus::pass;
  std::uint64_t tuples_checked = 0;
  std::vector<std::size_t> first_violation;  // 0-based i, j[, k[, l]]
  std::optional<Scalar> violating_value;
};

/// Value of an identity at one tuple of distinct indices.
Scalar vanishing_entry(const LinearMapG& g, const VanishingIdentity& id, std::span<const std::size_t> tuple);

/// Every identity over every ordered tuple of distinct indices; identities
/// needing more than n indices are reported vacuous.
std::vector<VanishingResult> vanishing_suite(const LinearMapG& g);

struct LambdaZReport {
  Scalar lambda;
  Matrix z;
  bool exact_fit = true;
  /// Basis unit (i, j) where g(e_ij) != lambda e_ij + tr(e_ij) z.
  std::optional<std::pair<std::size_t, std::size_t>> residual_witness;
};

/// lambda := g(01)_{10}, z := g(e_00) - lambda e_00, then verified on every unit.
LambdaZReport extract_lambda_z(const LinearMapG& g);

/// 2 lambda (lambda + 1) = 0 in the field.
bool quadratic_condition(const Scalar& lambda);

}  // namespace matstar
