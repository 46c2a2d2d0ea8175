#include "matstar/matrix.hpp"

#include <sstream>

namespace matstar {

namespace {

void check_dim(std::size_t n) {
  if (n < kMinDim || n > kMaxDim)
    throw Error(ErrorKind::DimensionMismatch, "dimension " + std::to_string(n) + " outside [2, 8]");
}

}  // namespace

Matrix::Matrix(FieldSpec f, std::size_t n) : field_(f), n_(n), entries_(n * n, Scalar::zero(f)) {
  check_dim(n);
}

Matrix Matrix::zero(FieldSpec f, std::size_t n) { return Matrix(f, n); }

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(FieldSpec f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  Matrix m(f, rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != m.n_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (auto v : row) m.entries_[i * m.n_ + j++] = Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size());
  for (std::size_t i = 0; i < m.n_; ++i) {
    if (rows[i].size() != m.n_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.n_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_flat(FieldSpec f, std::size_t n, Vector entries) {
  Matrix m(f, n);
  if (entries.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "flat entry count");
  for (const auto& s : entries)
    if (s.field() != f) throw Error(ErrorKind::MixedFields, "entry outside " + f.to_string());
  m.entries_ = std::move(entries);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, unit_label(i, j));
  if (value.field() != field_) throw Error(ErrorKind::MixedFields, "entry outside " + field_.to_string());
  entries_[i * n_ + j] = std::move(value);
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& value) {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, unit_label(i, j));
  entries_[i * n_ + j] += value;
}

bool Matrix::is_zero() const {
  for (const auto& s : entries_)
    if (!s.is_zero()) return false;
  return true;
}

void Matrix::require_compatible(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw Error(ErrorKind::MixedFields, field_.to_string() + " vs " + rhs.field_.to_string());
  if (n_ != rhs.n_) throw Error(ErrorKind::DimensionMismatch, std::to_string(n_) + " vs " + std::to_string(rhs.n_));
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& s : m.entries_) s = -s;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.field() != field_) throw Error(ErrorKind::MixedFields, "scalar outside " + field_.to_string());
  for (auto& e : entries_) e *= s;
  return *this;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << entries_[i * n_ + j].to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::MixedFields, a.field().to_string() + " vs " + b.field().to_string());
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  auto n = a.dim();
  Vector out(n * n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) out[i * n + j] += aik * b(k, j);
    }
  return Matrix::from_flat(a.field(), n, std::move(out));
}

Matrix matrix_unit(FieldSpec f, std::size_t n, std::size_t i, std::size_t j) {
  auto m = Matrix::zero(f, n);
  m.set(i, j, Scalar::one(f));
  return m;
}

Scalar trace(const Matrix& x) {
  auto s = Scalar::zero(x.field());
  for (std::size_t i = 0; i < x.dim(); ++i) s += x(i, i);
  return s;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

std::size_t rank(const Matrix& x) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < x.dim(); ++i)
    rows.emplace_back(x.flat().begin() + static_cast<std::ptrdiff_t>(i * x.dim()),
                      x.flat().begin() + static_cast<std::ptrdiff_t>((i + 1) * x.dim()));
  return rref(x.field(), std::move(rows), x.dim()).rank();
}

std::optional<Matrix> inverse(const Matrix& x) {
  auto n = x.dim();
  auto f = x.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(2 * n, Scalar::zero(f));
    for (std::size_t j = 0; j < n; ++j) row[j] = x(i, j);
    row[n + i] = Scalar::one(f);
    rows.push_back(std::move(row));
  }
  auto e = rref(f, std::move(rows), 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  auto inv = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, e.rows[i][n + j]);
  return inv;
}

std::string unit_label(std::size_t i, std::size_t j) {
  return "e_" + std::to_string(i + 1) + std::to_string(j + 1) + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace matstar
