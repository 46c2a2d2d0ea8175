#pragma once

// Test-side oracles in plain machine integers, independent of the library.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

using Mat2 = std::array<std::int64_t, 4>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline Mat2 mul(const Mat2& a, const Mat2& b, std::int64_t p) {
  return {mod(a[0] * b[0] + a[1] * b[2], p), mod(a[0] * b[1] + a[1] * b[3], p), mod(a[2] * b[0] + a[3] * b[2], p),
          mod(a[2] * b[1] + a[3] * b[3], p)};
}

inline int rank2(const Mat2& a, std::int64_t p) {
  if (a == Mat2{0, 0, 0, 0}) return 0;
  return mod(a[0] * a[3] - a[1] * a[2], p) == 0 ? 1 : 2;
}

/// Every 2x2 matrix over GF(p) with x^2 = x and rank 1.
inline std::vector<Mat2> rank_one_idempotents(std::int64_t p) {
  std::vector<Mat2> out;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) {
          Mat2 x{a, b, c, d};
          if (mul(x, x, p) == x && rank2(x, p) == 1) out.push_back(x);
        }
  return out;
}

inline std::size_t orthogonal_pairs(std::int64_t p) {
  auto ids = rank_one_idempotents(p);
  std::size_t count = 0;
  for (const auto& x : ids)
    for (const auto& y : ids)
      if (mul(x, y, p) == Mat2{0, 0, 0, 0} && mul(y, x, p) == Mat2{0, 0, 0, 0}) ++count;
  return count;
}

/// Ordered tuples of k distinct indices from n.
inline std::uint64_t falling(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

/// Row count of the constraint assembler: per identity its distinct-index
/// tuple count, then n^2 - 1 trace rows and two relations per ordered pair.
inline std::uint64_t constraint_rows(std::uint64_t n) {
  std::uint64_t arity_four = 2, arity_three = 10, arity_two = 5;
  return arity_four * falling(n, 4) + arity_three * falling(n, 3) + arity_two * falling(n, 2) + (n * n - 1) +
         2 * falling(n, 2);
}

}  // namespace oracle
