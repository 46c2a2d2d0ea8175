#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matstar/linear_map.hpp"

namespace matstar {

/// A homogeneous linear equation in the n^4 coefficients of g.
/// Unknown index u = in * n^2 + out addresses LinearMapG::coefficient(in, out).
struct ConstraintRow {
  std::vector<std::pair<std::size_t, Scalar>> terms;
  /// Equation family, e.g. "vanish:g(ij)_{kl}", "trace", "relation:g(ij)_{ji}=g(ji)_{ij}".
  std::string source;
  /// Source plus the instantiated indices (1-based, 0-based in parentheses).
  std::string tag;
};

struct ConstraintSystem {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t unknowns = 0;
  std::vector<ConstraintRow> rows;
  /// Sources that contributed no rows because they need more than n distinct indices.
  std::vector<std::string> vacuous_sources;

  std::size_t count(std::string_view source) const;
  std::vector<std::string> sources() const;
  /// Copy with every row of one source removed.
  ConstraintSystem without(std::string_view source) const;
};

/// Vanishing-entry rows, trace-preservation rows on the traceless basis, and
/// the two diagonal/off-diagonal relations, all in the pairing convention.
ConstraintSystem assemble_constraints(FieldSpec f, std::size_t n);

/// Evaluates one row at g.
Scalar evaluate(const ConstraintRow& row, const LinearMapG& g);
bool satisfies(const ConstraintSystem& cs, const LinearMapG& g);

struct SolutionSpace {
  std::size_t dimension = 0;
  std::vector<LinearMapG> basis;
};

/// Exact nullspace of the system via reduced row echelon form.
SolutionSpace solve_linear_space(const ConstraintSystem& cs);

}  // namespace matstar
