#include "matstar/tensor.hpp"

namespace matstar {

StructureTensor::StructureTensor(FieldSpec f, std::size_t n) : field_(f), n_(n) {
  if (n < kMinDim || n > kMaxDim) throw Error(ErrorKind::DimensionMismatch, "dimension outside [2, 8]");
  auto m = n * n;
  coeffs_.assign(m * m * m, Scalar::zero(f));
  sparse_.resize(m * m);
}

StructureTensor StructureTensor::zero(FieldSpec f, std::size_t n) { return StructureTensor(f, n); }

StructureTensor StructureTensor::from_basis_products(FieldSpec f, std::size_t n,
                                                     const std::function<Matrix(std::size_t, std::size_t)>& product) {
  StructureTensor t(f, n);
  auto m = n * n;
  for (std::size_t left = 0; left < m; ++left)
    for (std::size_t right = 0; right < m; ++right) {
      auto value = product(left, right);
      if (value.field() != f || value.dim() != n)
        throw Error(ErrorKind::DimensionMismatch, "basis product outside the tensor's algebra");
      for (std::size_t out = 0; out < m; ++out) t.coeffs_[t.index(left, right, out)] = value.flat()[out];
      t.rebuild_sparse(left, right);
    }
  return t;
}

void StructureTensor::set_coefficient(std::size_t left, std::size_t right, std::size_t out, Scalar value) {
  auto m = basis_size();
  if (left >= m || right >= m || out >= m) throw Error(ErrorKind::IndexOutOfRange, "tensor index");
  if (value.field() != field_) throw Error(ErrorKind::MixedFields, "tensor entry outside " + field_.to_string());
  coeffs_[index(left, right, out)] = std::move(value);
  rebuild_sparse(left, right);
}

void StructureTensor::rebuild_sparse(std::size_t left, std::size_t right) {
  auto& entry = sparse_[left * basis_size() + right];
  entry.clear();
  for (std::size_t out = 0; out < basis_size(); ++out) {
    const auto& c = coeffs_[index(left, right, out)];
    if (!c.is_zero()) entry.emplace_back(out, c);
  }
}

Matrix StructureTensor::basis_product(std::size_t left, std::size_t right) const {
  auto m = basis_size();
  if (left >= m || right >= m) throw Error(ErrorKind::IndexOutOfRange, "tensor index");
  Vector out(m, Scalar::zero(field_));
  for (const auto& [o, c] : sparse_product(left, right)) out[o] = c;
  return Matrix::from_flat(field_, n_, std::move(out));
}

std::size_t StructureTensor::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& entry : sparse_) count += entry.size();
  return count;
}

StructureTensor tensor_from_ordinary(FieldSpec f, std::size_t n) {
  return StructureTensor::from_basis_products(f, n, [&](std::size_t left, std::size_t right) {
    auto [a, b] = std::pair{left / n, left % n};
    auto [c, d] = std::pair{right / n, right % n};
    return b == c ? matrix_unit(f, n, a, d) : Matrix::zero(f, n);
  });
}

StructureTensor tensor_from_opposite(FieldSpec f, std::size_t n) {
  return StructureTensor::from_basis_products(f, n, [&](std::size_t left, std::size_t right) {
    auto [a, b] = std::pair{left / n, left % n};
    auto [c, d] = std::pair{right / n, right % n};
    return d == a ? matrix_unit(f, n, c, b) : Matrix::zero(f, n);
  });
}

StructureTensor tensor_from_g(const LinearMapG& g) {
  auto f = g.field();
  auto n = g.dim();
  // e_ab * e_cd = delta_bc (e_ad + g(e_ad)) - delta_da g(e_cb)
  return StructureTensor::from_basis_products(f, n, [&](std::size_t left, std::size_t right) {
    auto [a, b] = std::pair{left / n, left % n};
    auto [c, d] = std::pair{right / n, right % n};
    auto out = Matrix::zero(f, n);
    if (b == c) out += matrix_unit(f, n, a, d) + g.image(a, d);
    if (d == a) out -= g.image(c, b);
    return out;
  });
}

Matrix star_eval(const StructureTensor& t, const Matrix& x, const Matrix& y) {
  if (x.dim() != t.dim() || y.dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "star_eval operand size");
  if (x.field() != t.field() || y.field() != t.field())
    throw Error(ErrorKind::MixedFields, "star_eval operand field");
  auto m = t.basis_size();
  Vector out(m, Scalar::zero(t.field()));
  for (std::size_t left = 0; left < m; ++left) {
    const auto& xl = x.flat()[left];
    if (xl.is_zero()) continue;
    for (std::size_t right = 0; right < m; ++right) {
      const auto& yr = y.flat()[right];
      if (yr.is_zero()) continue;
      auto w = xl * yr;
      for (const auto& [o, c] : t.sparse_product(left, right)) out[o] += w * c;
    }
  }
  return Matrix::from_flat(t.field(), t.dim(), std::move(out));
}

}  // namespace matstar
