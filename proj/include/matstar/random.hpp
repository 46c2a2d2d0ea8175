#pragma once

#include <cstdint>
#include <random>

#include "matstar/field.hpp"
#include "matstar/linear_map.hpp"
#include "matstar/matrix.hpp"

namespace matstar {

/// Seeded generator. Reductions are done by hand rather than through the
/// standard distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform residue for GF(p); for the rationals a small fraction a/b with
/// |a| <= magnitude and 1 <= b <= magnitude.
inline Scalar random_scalar(FieldSpec f, Rng& rng, std::int64_t magnitude = 3) {
  if (f.is_finite()) return Scalar::from_int(f, static_cast<std::int64_t>(rng.below(f.modulus())));
  auto num = rng.between(-magnitude, magnitude);
  auto den = rng.between(1, magnitude);
  return Scalar::from_rational(mpq_class(static_cast<long>(num), static_cast<unsigned long>(den)));
}

inline Matrix random_matrix(FieldSpec f, std::size_t n, Rng& rng, std::int64_t magnitude = 3) {
  auto m = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_scalar(f, rng, magnitude));
  return m;
}

/// Random matrix with the last diagonal entry fixed so the trace vanishes.
inline Matrix random_traceless(FieldSpec f, std::size_t n, Rng& rng, std::int64_t magnitude = 3) {
  auto m = random_matrix(f, n, rng, magnitude);
  m.set(n - 1, n - 1, m(n - 1, n - 1) - trace(m));
  return m;
}

inline LinearMapG random_linear_map(FieldSpec f, std::size_t n, Rng& rng, std::int64_t magnitude = 3) {
  Vector coords;
  for (std::size_t k = 0; k < n * n * n * n; ++k) coords.push_back(random_scalar(f, rng, magnitude));
  return LinearMapG::unflatten(f, n, coords);
}

}  // namespace matstar
