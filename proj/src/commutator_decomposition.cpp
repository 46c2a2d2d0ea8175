#include "matstar/commutator_decomposition.hpp"

#include <optional>

#include "matstar/random.hpp"

namespace matstar {

namespace {

constexpr int kFallbackAttempts = 64;

bool has_distinct_diagonal(FieldSpec f, std::size_t n) { return !f.is_finite() || f.modulus() >= n; }

// Trailing block of m starting at (start, start), size k = n - start.
Vector block_apply(const Matrix& m, std::size_t start, const Vector& v) {
  auto k = m.dim() - start;
  Vector out(k, Scalar::zero(m.field()));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (!v[c].is_zero()) out[r] += m(start + r, start + c) * v[c];
  return out;
}

bool independent(FieldSpec f, std::vector<Vector> columns) {
  auto count = columns.size();
  auto len = columns.front().size();
  return rref(f, std::move(columns), len).rank() == count;
}

// Finds an invertible k x k Q whose first two columns are v and Bv for a v
// with v, Bv independent; nullopt when the trailing block is scalar.
std::optional<Matrix> cyclic_frame(const Matrix& m, std::size_t start) {
  auto f = m.field();
  auto k = m.dim() - start;
  std::vector<Vector> candidates;
  for (std::size_t j = 0; j < k; ++j) {
    Vector e(k, Scalar::zero(f));
    e[j] = Scalar::one(f);
    candidates.push_back(e);
  }
  for (std::size_t j = 1; j < k; ++j) {
    auto e = candidates[0];
    e[j] = Scalar::one(f);
    candidates.push_back(std::move(e));
  }

  for (const auto& v : candidates) {
    auto bv = block_apply(m, start, v);
    if (!independent(f, {v, bv})) continue;
    std::vector<Vector> columns{v, bv};
    for (std::size_t j = 0; j < k && columns.size() < k; ++j) {
      auto trial = columns;
      trial.push_back(candidates[j]);
      if (independent(f, trial)) columns = std::move(trial);
    }
    // Columns become the matrix: Q(r, c) = columns[c][r].
    std::vector<Vector> rows(k, Vector(k, Scalar::zero(f)));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) rows[r][c] = columns[c][r];
    return Matrix::from_rows(f, rows);
  }
  return std::nullopt;
}

Matrix embed(const Matrix& block, std::size_t n, std::size_t start) {
  auto s = Matrix::identity(block.field(), n);
  for (std::size_t r = 0; r < block.dim(); ++r)
    for (std::size_t c = 0; c < block.dim(); ++c) s.set(start + r, start + c, block(r, c));
  return s;
}

// Returns P with P m P^-1 having zero diagonal.
std::optional<Matrix> zero_diagonal_frame(const Matrix& m) {
  auto n = m.dim();
  auto f = m.field();
  auto p = Matrix::identity(f, n);
  auto current = m;
  for (std::size_t start = 0; start + 1 < n; ++start) {
    if (current(start, start).is_zero()) continue;
    auto q = cyclic_frame(current, start);
    if (!q) return std::nullopt;
    auto q_inv = inverse(*q);
    auto s = embed(*q_inv, n, start);
    auto s_inv = embed(*q, n, start);
    current = s * current * s_inv;
    p = s * p;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!current(i, i).is_zero()) return std::nullopt;
  return p;
}

std::optional<std::pair<Matrix, Matrix>> diagonal_route(const Matrix& m) {
  auto n = m.dim();
  auto f = m.field();
  auto p = zero_diagonal_frame(m);
  if (!p) return std::nullopt;
  auto p_inv = inverse(*p);
  auto conj = *p * m * *p_inv;

  auto x = Matrix::zero(f, n);
  auto y = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, i, Scalar::from_int(f, static_cast<std::int64_t>(i + 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) y.set(i, j, conj(i, j) / (x(i, i) - x(j, j)));
  return std::pair{*p_inv * x * *p, *p_inv * y * *p};
}

// Solve xy - yx = m for y with x fixed.
std::optional<Matrix> solve_for_y(const Matrix& x, const Matrix& m) {
  auto n = m.dim();
  auto f = m.field();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector row(n * n, Scalar::zero(f));
      for (std::size_t k = 0; k < n; ++k) {
        row[k * n + j] += x(i, k);
        row[i * n + k] -= x(k, j);
      }
      rows.push_back(std::move(row));
      rhs.push_back(m(i, j));
    }
  auto y = solve_linear(f, rows, rhs);
  if (!y) return std::nullopt;
  return Matrix::from_flat(f, n, std::move(*y));
}

// Similarity to upper Hessenberg form: returns (H, P) with H = P m P^-1.
std::pair<Matrix, Matrix> hessenberg(const Matrix& m) {
  auto f = m.field();
  auto n = m.dim();
  auto h = m;
  auto p = Matrix::identity(f, n);
  auto swap = [&](Matrix& a, std::size_t r, std::size_t s, bool columns_too) {
    for (std::size_t k = 0; k < n; ++k) {
      auto t = a(r, k);
      a.set(r, k, a(s, k));
      a.set(s, k, t);
    }
    if (!columns_too) return;
    for (std::size_t k = 0; k < n; ++k) {
      auto t = a(k, r);
      a.set(k, r, a(k, s));
      a.set(k, s, t);
    }
  };
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t pivot = c + 1;
    while (pivot < n && h(pivot, c).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != c + 1) {
      swap(h, pivot, c + 1, true);
      swap(p, pivot, c + 1, false);
    }
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h(i, c).is_zero()) continue;
      auto factor = h(i, c) / h(c + 1, c);
      for (std::size_t k = 0; k < n; ++k) {
        h.set(i, k, h(i, k) - factor * h(c + 1, k));
        p.set(i, k, p(i, k) - factor * p(c + 1, k));
      }
      for (std::size_t k = 0; k < n; ++k) h.set(k, c + 1, h(k, c + 1) + factor * h(k, i));
    }
  }
  return {std::move(h), std::move(p)};
}

// With x the upper shift N, xy - yx = m is solvable exactly when every lower
// diagonal of m sums to zero. A Hessenberg form has one such diagonal left,
// and a diagonal similarity rescales its entries freely.
std::optional<std::pair<Matrix, Matrix>> shift_route(const Matrix& m, const Matrix& s) {
  auto f = m.field();
  auto n = m.dim();
  auto s_inv = inverse(s);
  if (!s_inv) return std::nullopt;
  auto [h, p] = hessenberg(s * m * *s_inv);
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!h(i + 1, i).is_zero()) live.push_back(i);
  std::vector<Scalar> target(n - 1, Scalar::zero(f));
  if (!live.empty()) {
    auto k = live.size();
    if (k == 1) return std::nullopt;
    auto rest = -Scalar::from_int(f, static_cast<std::int64_t>(k - 2));
    std::optional<Scalar> a;
    for (std::int64_t c = 1; c <= 2 && !a; ++c) {
      auto cand = Scalar::from_int(f, c);
      if (!cand.is_zero() && !(rest - cand).is_zero()) a = cand;
    }
    if (!a) return std::nullopt;
    for (std::size_t t = 0; t + 2 < k; ++t) target[live[t]] = Scalar::one(f);
    target[live[k - 2]] = *a;
    target[live[k - 1]] = rest - *a;
  }
  auto d = Matrix::identity(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto step = h(i + 1, i).is_zero() ? Scalar::one(f) : target[i] / h(i + 1, i);
    d.set(i + 1, i + 1, d(i, i) * step);
  }
  auto t = d * p * s;
  auto t_inv = inverse(t);
  auto shift = Matrix::zero(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) shift.set(i, i + 1, Scalar::one(f));
  auto y = solve_for_y(shift, t * m * *t_inv);
  if (!y) return std::nullopt;
  return std::pair{*t_inv * shift * t, *t_inv * *y * t};
}

}  // namespace

std::pair<Matrix, Matrix> decompose_traceless(const Matrix& m, std::uint64_t seed) {
  if (!trace(m).is_zero()) throw Error(ErrorKind::NotTraceless, "trace " + trace(m).to_string());
  auto n = m.dim();
  auto f = m.field();
  if (m.is_zero()) return {Matrix::zero(f, n), Matrix::zero(f, n)};

  if (has_distinct_diagonal(f, n)) {
    if (auto xy = diagonal_route(m); xy && commutator(xy->first, xy->second) == m) return *xy;
  }

  Rng rng(seed);
  for (int attempt = 0; attempt < kFallbackAttempts; ++attempt) {
    auto s = attempt == 0 ? Matrix::identity(f, n) : random_matrix(f, n, rng);
    if (auto xy = shift_route(m, s); xy && commutator(xy->first, xy->second) == m) return *xy;
  }
  for (int attempt = 0; attempt < kFallbackAttempts; ++attempt) {
    auto x = random_matrix(f, n, rng);
    if (auto y = solve_for_y(x, m)) return {std::move(x), std::move(*y)};
  }
  throw Error(ErrorKind::DecompositionFailed,
              "no x with xy - yx = m found after " + std::to_string(kFallbackAttempts) + " attempts");
}

}  // namespace matstar
