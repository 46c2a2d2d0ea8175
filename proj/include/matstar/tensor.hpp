#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "matstar/linear_map.hpp"
#include "matstar/matrix.hpp"

namespace matstar {

/// Structure constants of a bilinear product on n x n matrices:
/// coefficient(left, right, out) is the coefficient of e_out in e_left * e_right,
/// with every basis index flattened as i*n + j. Stored densely (n^6 scalars).
class StructureTensor {
 public:
  static StructureTensor zero(FieldSpec f, std::size_t n);
  /// Build from the products of basis pairs.
  static StructureTensor from_basis_products(FieldSpec f, std::size_t n,
                                             const std::function<Matrix(std::size_t, std::size_t)>& product);

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t basis_size() const noexcept { return n_ * n_; }

  const Scalar& coefficient(std::size_t left, std::size_t right, std::size_t out) const {
    return coeffs_[index(left, right, out)];
  }
  void set_coefficient(std::size_t left, std::size_t right, std::size_t out, Scalar value);

  /// e_left * e_right as a matrix.
  Matrix basis_product(std::size_t left, std::size_t right) const;

  /// Nonzero (out, coefficient) pairs of e_left * e_right, for contractions.
  const std::vector<std::pair<std::size_t, Scalar>>& sparse_product(std::size_t left, std::size_t right) const {
    return sparse_[left * basis_size() + right];
  }

  std::size_t nonzero_count() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  StructureTensor(FieldSpec f, std::size_t n);
  std::size_t index(std::size_t left, std::size_t right, std::size_t out) const {
    return (left * basis_size() + right) * basis_size() + out;
  }
  void rebuild_sparse(std::size_t left, std::size_t right);

  FieldSpec field_;
  std::size_t n_;
  Vector coeffs_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

/// e_ab * e_cd = delta_bc e_ad.
StructureTensor tensor_from_ordinary(FieldSpec f, std::size_t n);
/// e_ab * e_cd = delta_da e_cb.
StructureTensor tensor_from_opposite(FieldSpec f, std::size_t n);
/// x * y = xy + g(xy - yx).
StructureTensor tensor_from_g(const LinearMapG& g);

/// Bilinear extension of the tensor to arbitrary x, y.
Matrix star_eval(const StructureTensor& t, const Matrix& x, const Matrix& y);

}  // namespace matstar
