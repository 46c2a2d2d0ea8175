#include "matstar/idempotent.hpp"

#include "matstar/random.hpp"

namespace matstar {

namespace {

Matrix outer(const Vector& u, const Vector& v) {
  auto n = u.size();
  auto m = Matrix::zero(u.front().field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, u[i] * v[j]);
  return m;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector random_vector(FieldSpec f, std::size_t n, Rng& rng) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

Vector axpy(const Vector& y, const Scalar& a, const Vector& x) {
  Vector out(y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= a * x[i];
  return out;
}

Vector scaled(const Vector& x, const Scalar& a) {
  Vector out(x);
  for (auto& s : out) s *= a;
  return out;
}

constexpr int kSamplingRetries = 256;

}  // namespace

Matrix rank_one_idempotent(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "factor lengths differ");
  if (!dot(v, u).is_one()) throw Error(ErrorKind::NotNormalized, "v.u = " + dot(v, u).to_string());
  return outer(u, v);
}

void rank_one_factors(const Matrix& x, Vector& u, Vector& v) {
  auto n = x.dim();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x(i, j).is_zero()) continue;
      u.clear();
      v.clear();
      for (std::size_t r = 0; r < n; ++r) u.push_back(x(r, j));
      auto scale = x(i, j).inv();
      for (std::size_t c = 0; c < n; ++c) v.push_back(x(i, c) * scale);
      return;
    }
  }
  throw Error(ErrorKind::NotNormalized, "zero matrix has no rank-one factorisation");
}

bool census_feasible(FieldSpec f, std::size_t n) {
  if (!f.is_finite()) throw Error(ErrorKind::InfiniteField, "census over the rationals");
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    count *= f.modulus();
    if (count > kCensusGuard) return false;
  }
  return true;
}

std::vector<Matrix> enumerate_rank_one_idempotents(FieldSpec f, std::size_t n) {
  if (!census_feasible(f, n))
    throw Error(ErrorKind::SearchSpaceTooLarge,
                f.to_string() + " n=" + std::to_string(n) + " exceeds 2^24 candidate matrices");
  auto p = f.modulus();
  auto cells = n * n;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < cells; ++k) total *= p;

  auto scalars = enumerate_scalars(f);
  std::vector<Matrix> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    // Most significant digit is entry (0,0), so the order is lexicographic.
    Vector entries(cells, scalars[0]);
    std::uint64_t c = code;
    for (std::size_t k = cells; k-- > 0; c /= p) entries[k] = scalars[c % p];
    auto x = Matrix::from_flat(f, n, std::move(entries));
    if (x * x == x && rank(x) == 1) out.push_back(std::move(x));
  }
  return out;
}

IdempotentPair make_idempotent_pair(Vector u1, Vector v1, Vector u2, Vector v2) {
  if (!dot(v1, u1).is_one() || !dot(v2, u2).is_one() || !dot(v1, u2).is_zero() || !dot(v2, u1).is_zero())
    throw Error(ErrorKind::NotNormalized, "factors violate v1.u1 = v2.u2 = 1, v1.u2 = v2.u1 = 0");
  auto x = outer(u1, v1);
  auto y = outer(u2, v2);
  return IdempotentPair{std::move(x), std::move(y), std::move(u1), std::move(v1), std::move(u2), std::move(v2)};
}

std::vector<IdempotentPair> orthogonal_idempotent_pairs(FieldSpec f, std::size_t n) {
  auto idempotents = enumerate_rank_one_idempotents(f, n);
  std::vector<IdempotentPair> out;
  for (const auto& x : idempotents) {
    for (const auto& y : idempotents) {
      if (!(x * y).is_zero() || !(y * x).is_zero()) continue;
      IdempotentPair pair{x, y, {}, {}, {}, {}};
      rank_one_factors(x, pair.u1, pair.v1);
      rank_one_factors(y, pair.u2, pair.v2);
      out.push_back(std::move(pair));
    }
  }
  return out;
}

IdempotentPair sample_orthogonal_idempotent_pair(FieldSpec f, std::size_t n, std::uint64_t seed) {
  if (n < kMinDim || n > kMaxDim) throw Error(ErrorKind::DimensionMismatch, "dimension outside [2, 8]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kSamplingRetries; ++attempt) {
    auto u1 = random_vector(f, n, rng);
    if (is_zero(u1)) continue;
    auto w = random_vector(f, n, rng);
    auto wu = dot(w, u1);
    if (wu.is_zero()) continue;
    auto v1 = scaled(w, wu.inv());

    // u2 = r - (v1.r) u1 lies in ker(v1).
    auto r = random_vector(f, n, rng);
    auto u2 = axpy(r, dot(v1, r), u1);
    if (is_zero(u2)) continue;

    // s - (s.u1) v1 is orthogonal to u1; normalise against u2.
    auto s = random_vector(f, n, rng);
    auto t = axpy(s, dot(s, u1), v1);
    auto tu = dot(t, u2);
    if (tu.is_zero()) continue;
    auto v2 = scaled(t, tu.inv());
    return make_idempotent_pair(std::move(u1), std::move(v1), std::move(u2), std::move(v2));
  }
  throw Error(ErrorKind::SamplingFailed,
              "no orthogonal idempotent pair after " + std::to_string(kSamplingRetries) + " draws over " + f.to_string());
}

}  // namespace matstar
