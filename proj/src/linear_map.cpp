#include "matstar/linear_map.hpp"

namespace matstar {

LinearMapG::LinearMapG(FieldSpec f, std::size_t n)
    : field_(f), n_(n), table_(n * n, Vector(n * n, Scalar::zero(f))) {
  if (n < kMinDim || n > kMaxDim) throw Error(ErrorKind::DimensionMismatch, "dimension outside [2, 8]");
}

LinearMapG LinearMapG::zero(FieldSpec f, std::size_t n) { return LinearMapG(f, n); }

LinearMapG LinearMapG::identity(FieldSpec f, std::size_t n) {
  LinearMapG g(f, n);
  for (std::size_t r = 0; r < n * n; ++r) g.table_[r][r] = Scalar::one(f);
  return g;
}

LinearMapG LinearMapG::from_family(const Scalar& lambda, const Matrix& z) {
  auto f = z.field();
  auto n = z.dim();
  if (lambda.field() != f) throw Error(ErrorKind::MixedFields, "lambda and z over different fields");
  LinearMapG g(f, n);
  for (std::size_t r = 0; r < n * n; ++r) g.table_[r][r] = lambda;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n * n; ++s) g.table_[i * n + i][s] += z.flat()[s];
  return g;
}

LinearMapG LinearMapG::from_table(FieldSpec f, std::size_t n, std::vector<Vector> table) {
  LinearMapG g(f, n);
  if (table.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "g table must have n^2 rows");
  for (const auto& row : table) {
    if (row.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "g table rows must have n^2 entries");
    for (const auto& s : row)
      if (s.field() != f) throw Error(ErrorKind::MixedFields, "g entry outside " + f.to_string());
  }
  g.table_ = std::move(table);
  return g;
}

void LinearMapG::set_coefficient(std::size_t in, std::size_t out, Scalar value) {
  if (in >= basis_size() || out >= basis_size()) throw Error(ErrorKind::IndexOutOfRange, "g coefficient index");
  if (value.field() != field_) throw Error(ErrorKind::MixedFields, "g entry outside " + field_.to_string());
  table_[in][out] = std::move(value);
}

Matrix LinearMapG::image(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, unit_label(i, j));
  return Matrix::from_flat(field_, n_, table_[i * n_ + j]);
}

Matrix LinearMapG::apply(const Matrix& x) const {
  if (x.dim() != n_) throw Error(ErrorKind::DimensionMismatch, "g applied to a matrix of another size");
  if (x.field() != field_) throw Error(ErrorKind::MixedFields, "g applied to a matrix over another field");
  Vector out(basis_size(), Scalar::zero(field_));
  for (std::size_t r = 0; r < basis_size(); ++r) {
    const auto& xr = x.flat()[r];
    if (xr.is_zero()) continue;
    for (std::size_t s = 0; s < basis_size(); ++s)
      if (!table_[r][s].is_zero()) out[s] += xr * table_[r][s];
  }
  return Matrix::from_flat(field_, n_, std::move(out));
}

Vector LinearMapG::flatten() const {
  Vector out;
  out.reserve(basis_size() * basis_size());
  for (const auto& row : table_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

LinearMapG LinearMapG::unflatten(FieldSpec f, std::size_t n, const Vector& coords) {
  LinearMapG g(f, n);
  auto m = n * n;
  if (coords.size() != m * m) throw Error(ErrorKind::DimensionMismatch, "g coordinate count");
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) g.table_[r][s] = coords[r * m + s];
  return g;
}

Matrix g_apply(const LinearMapG& g, const Matrix& x) { return g.apply(x); }

Scalar pairing_entry(const LinearMapG& g, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  auto n = g.dim();
  if (i >= n || j >= n || k >= n || l >= n) throw Error(ErrorKind::IndexOutOfRange, "pairing entry index");
  return g.coefficient(i * n + j, l * n + k);
}

}  // namespace matstar
