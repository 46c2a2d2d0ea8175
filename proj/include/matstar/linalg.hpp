#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matstar/field.hpp"

namespace matstar {

using Vector = std::vector<Scalar>;

/// Dense reduced row echelon form: nonzero rows only, each with a leading 1
/// in column pivots[r] and zeros above and below every pivot.
struct Echelon {
  FieldSpec field;
  std::size_t cols = 0;
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(FieldSpec f, std::vector<Vector> rows, std::size_t cols);

/// One basis vector per free column, with a 1 in that column.
std::vector<Vector> nullspace_basis(const Echelon& e);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve_linear(FieldSpec f, const std::vector<Vector>& a, const Vector& b);

Scalar dot(const Vector& a, const Vector& b);

}  // namespace matstar
