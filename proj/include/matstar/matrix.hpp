#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "matstar/field.hpp"
#include "matstar/linalg.hpp"

namespace matstar {

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 8;

/// Dense square matrix over one field, 2 <= n <= 8, row-major, 0-based.
class Matrix {
 public:
  static Matrix zero(FieldSpec f, std::size_t n);
  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_ints(FieldSpec f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(FieldSpec f, const std::vector<Vector>& rows);

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  /// Checked assignment: the scalar must come from this matrix's field.
  void set(std::size_t i, std::size_t j, Scalar value);
  void add_to(std::size_t i, std::size_t j, const Scalar& value);

  /// Row-major view of the n^2 entries; index i*n+j is the coordinate of e_ij.
  const Vector& flat() const noexcept { return entries_; }
  static Matrix from_flat(FieldSpec f, std::size_t n, Vector entries);

  bool is_zero() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// "[[a,b],[c,d]]" with canonical scalar strings.
  std::string to_string() const;

 private:
  Matrix(FieldSpec f, std::size_t n);
  void require_compatible(const Matrix& rhs) const;

  FieldSpec field_;
  std::size_t n_;
  Vector entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);
Matrix operator*(Matrix a, const Scalar& s);

/// e_ij: a single 1 at row i, column j.
Matrix matrix_unit(FieldSpec f, std::size_t n, std::size_t i, std::size_t j);

Scalar trace(const Matrix& x);

/// xy - yx.
Matrix commutator(const Matrix& x, const Matrix& y);

std::size_t rank(const Matrix& x);

std::optional<Matrix> inverse(const Matrix& x);

/// 1-based label for reports, e.g. "e_12 (0,1)".
std::string unit_label(std::size_t i, std::size_t j);

}  // namespace matstar
