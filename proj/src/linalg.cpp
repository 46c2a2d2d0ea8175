#include "matstar/linalg.hpp"

#include <utility>

namespace matstar {

Echelon rref(FieldSpec f, std::vector<Vector> rows, std::size_t cols) {
  for (const auto& row : rows)
    if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");

  Echelon e{f, cols, {}, {}};
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);

    auto& prow = rows[lead];
    if (!prow[col].is_one()) {
      auto scale = prow[col].inv();
      for (std::size_t c = col; c < cols; ++c)
        if (!prow[c].is_zero()) prow[c] *= scale;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      auto factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!prow[c].is_zero()) rows[r][c] -= factor * prow[c];
    }
    e.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  e.rows = std::move(rows);
  return e;
}

std::vector<Vector> nullspace_basis(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(e.cols, Scalar::zero(e.field));
    v[free] = Scalar::one(e.field);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_linear(FieldSpec f, const std::vector<Vector>& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<Vector> augmented;
  augmented.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    auto row = a[r];
    row.push_back(b[r]);
    augmented.push_back(std::move(row));
  }
  auto e = rref(f, std::move(augmented), cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;

  Vector x(cols, Scalar::zero(f));
  for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = e.rows[r][cols];
  return x;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::DimensionMismatch, "dot product lengths");
  auto s = Scalar::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace matstar
