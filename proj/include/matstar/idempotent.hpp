#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "matstar/matrix.hpp"

namespace matstar {

/// Finite-field enumerations scan all p^(n^2) matrices; beyond this they refuse.
inline constexpr std::uint64_t kCensusGuard = std::uint64_t{1} << 24;

/// Rank-one idempotents x = u1 v1^T, y = u2 v2^T with xy = yx = 0.
struct IdempotentPair {
  Matrix x;
  Matrix y;
  Vector u1, v1, u2, v2;
};

/// u v^T; requires v.u = 1 (NotNormalized otherwise).
Matrix rank_one_idempotent(const Vector& u, const Vector& v);

/// Writes a rank-one matrix as u v^T (u a nonzero column, v scaled accordingly).
void rank_one_factors(const Matrix& x, Vector& u, Vector& v);

/// True when p^(n^2) fits under kCensusGuard. Throws InfiniteField for the rationals.
bool census_feasible(FieldSpec f, std::size_t n);

/// Every matrix with x^2 = x and rank 1, in ascending base-p order of the
/// row-major entries. InfiniteField / SearchSpaceTooLarge.
std::vector<Matrix> enumerate_rank_one_idempotents(FieldSpec f, std::size_t n);

/// All ordered pairs of rank-one idempotents with xy = yx = 0.
std::vector<IdempotentPair> orthogonal_idempotent_pairs(FieldSpec f, std::size_t n);

/// Seed-deterministic random pair; SamplingFailed after the retry bound.
IdempotentPair sample_orthogonal_idempotent_pair(FieldSpec f, std::size_t n, std::uint64_t seed);

/// Pair from explicit factors; NotNormalized unless all four dot-product
/// conditions hold.
IdempotentPair make_idempotent_pair(Vector u1, Vector v1, Vector u2, Vector v2);

}  // namespace matstar
