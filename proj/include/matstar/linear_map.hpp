#pragma once

#include <cstddef>

#include "matstar/matrix.hpp"

namespace matstar {

/// A linear map g on n x n matrices, stored on the matrix-unit basis.
///
/// coefficient(in, out) is the coefficient of e_kl in g(e_ij), where
/// in = i*n + j and out = k*n + l. This is the standard orientation; the
/// transposed G_{kl,ij} reading used in the vanishing identities is only
/// available through pairing_entry().
class LinearMapG {
 public:
  static LinearMapG zero(FieldSpec f, std::size_t n);
  static LinearMapG identity(FieldSpec f, std::size_t n);
  /// g(x) = lambda x + tr(x) z.
  static LinearMapG from_family(const Scalar& lambda, const Matrix& z);
  /// Row r holds the coordinates of g(e_r) for the flat index r.
  static LinearMapG from_table(FieldSpec f, std::size_t n, std::vector<Vector> table);

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t basis_size() const noexcept { return n_ * n_; }

  const Scalar& coefficient(std::size_t in, std::size_t out) const { return table_[in][out]; }
  void set_coefficient(std::size_t in, std::size_t out, Scalar value);

  /// g(e_ij).
  Matrix image(std::size_t i, std::size_t j) const;
  Matrix apply(const Matrix& x) const;

  const std::vector<Vector>& table() const noexcept { return table_; }
  /// Concatenated rows: the n^4 unknowns of the constraint system.
  Vector flatten() const;
  static LinearMapG unflatten(FieldSpec f, std::size_t n, const Vector& coords);

  friend bool operator==(const LinearMapG& a, const LinearMapG& b) = default;

 private:
  LinearMapG(FieldSpec f, std::size_t n);

  FieldSpec field_;
  std::size_t n_;
  std::vector<Vector> table_;
};

Matrix g_apply(const LinearMapG& g, const Matrix& x);

/// tr(g(e_ij) e_kl), i.e. the coefficient of e_lk in g(e_ij); this is the
/// G_{kl,ij} entry written g(ij)_{kl} in the vanishing identities.
Scalar pairing_entry(const LinearMapG& g, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

}  // namespace matstar
