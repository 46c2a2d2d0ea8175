#include "matstar/g_analysis.hpp"

namespace matstar {

std::vector<TracelessBasisElement> traceless_basis(FieldSpec f, std::size_t n) {
  std::vector<TracelessBasisElement> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back({unit_label(i, j), matrix_unit(f, n, i, j)});
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.push_back({"e_" + std::to_string(i + 1) + std::to_string(i + 1) + " - e_" + std::to_string(i + 2) +
                       std::to_string(i + 2) + " (" + std::to_string(i) + "," + std::to_string(i) + ")-(" +
                       std::to_string(i + 1) + "," + std::to_string(i + 1) + ")",
                   matrix_unit(f, n, i, i) - matrix_unit(f, n, i + 1, i + 1)});
  return out;
}

TracelessPreservation traceless_preservation_check(const LinearMapG& g) {
  TracelessPreservation result;
  for (auto& b : traceless_basis(g.field(), g.dim())) {
    auto t = trace(g.apply(b.value));
    if (t.is_zero()) continue;
    result.preserves = false;
    result.witness = std::move(b);
    result.witness_trace = std::move(t);
    return result;
  }
  return result;
}

Matrix associativity_residual(const LinearMapG& g, const StructureTensor& star, const std::array<std::size_t, 6>& idx) {
  auto f = g.field();
  auto n = g.dim();
  for (auto v : idx)
    if (v >= n) throw Error(ErrorKind::IndexOutOfRange, "residual index");
  auto [a, b, c, d, e, fi] = idx;
  auto unit = [&](std::size_t i, std::size_t j) { return matrix_unit(f, n, i, j); };

  auto lhs = Matrix::zero(f, n);
  if (d == e && a == fi) lhs -= g.image(c, b);
  if (d == e) lhs += star_eval(star, unit(a, b), g.image(c, fi));
  if (c == fi) lhs -= star_eval(star, unit(a, b), g.image(e, d));

  auto rhs = Matrix::zero(f, n);
  if (a == fi && b == c) rhs -= g.image(e, d);
  if (b == c) rhs += star_eval(star, g.image(a, d), unit(e, fi));
  if (a == d) rhs -= star_eval(star, g.image(c, b), unit(e, fi));
  return lhs - rhs;
}

Matrix associativity_residual(const LinearMapG& g, const std::array<std::size_t, 6>& idx) {
  return associativity_residual(g, tensor_from_g(g), idx);
}

ResidualScan scan_associativity_residual(const LinearMapG& g) {
  ResidualScan scan;
  auto star = tensor_from_g(g);
  auto n = g.dim();
  std::array<std::size_t, 6> idx{};
  std::uint64_t total = 1;
  for (int k = 0; k < 6; ++k) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (int k = 5; k >= 0; --k, c /= n) idx[static_cast<std::size_t>(k)] = c % n;
    auto r = associativity_residual(g, star, idx);
    ++scan.tuples_checked;
    if (r.is_zero()) continue;
    scan.first_nonzero = idx;
    scan.residual = std::move(r);
    return scan;
  }
  return scan;
}

namespace {

constexpr std::array<VanishingIdentity, 17> kIdentities{{
    {"g(ij)_{kl}", false, 4, {'k', 'l'}},
    {"g(ii-jj)_{kl}", true, 4, {'k', 'l'}},
    {"g(ij)_{jk}", false, 3, {'j', 'k'}},
    {"g(ij)_{kj}", false, 3, {'k', 'j'}},
    {"g(ij)_{ik}", false, 3, {'i', 'k'}},
    {"g(ij)_{ki}", false, 3, {'k', 'i'}},
    {"g(ij)_{kk}", false, 3, {'k', 'k'}},
    {"g(ii-jj)_{kk}", true, 3, {'k', 'k'}},
    {"g(ii-jj)_{ik}", true, 3, {'i', 'k'}},
    {"g(ii-jj)_{ki}", true, 3, {'k', 'i'}},
    {"g(ii-jj)_{kj}", true, 3, {'k', 'j'}},
    {"g(ii-jj)_{jk}", true, 3, {'j', 'k'}},
    {"g(ij)_{jj}", false, 2, {'j', 'j'}},
    {"g(ij)_{ii}", false, 2, {'i', 'i'}},
    {"g(ij)_{ij}", false, 2, {'i', 'j'}},
    {"g(ii-jj)_{ij}", true, 2, {'i', 'j'}},
    {"g(ii-jj)_{ji}", true, 2, {'j', 'i'}},
}};

std::size_t slot_value(char slot, std::span<const std::size_t> tuple) {
  return tuple[static_cast<std::size_t>(slot - 'i')];
}

// Visits every ordered tuple of `arity` distinct indices below n, lexicographically.
template <typename Visit>
bool for_each_distinct_tuple(std::size_t n, std::size_t arity, Visit&& visit) {
  std::vector<std::size_t> tuple(arity, 0);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < arity; ++k) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (std::size_t k = arity; k-- > 0; c /= n) tuple[k] = c % n;
    bool distinct = true;
    for (std::size_t p = 0; p < arity && distinct; ++p)
      for (std::size_t q = p + 1; q < arity; ++q)
        if (tuple[p] == tuple[q]) distinct = false;
    if (distinct && !visit(std::span<const std::size_t>(tuple))) return false;
  }
  return true;
}

}  // namespace

std::span<const VanishingIdentity> vanishing_identities() { return kIdentities; }

std::string_view to_string(SuiteStatus status) {
  switch (status) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    case SuiteStatus::vacuous: return "vacuous";
  }
  return "?";
}

Scalar vanishing_entry(const LinearMapG& g, const VanishingIdentity& id, std::span<const std::size_t> tuple) {
  auto k = slot_value(id.slots[0], tuple);
  auto l = slot_value(id.slots[1], tuple);
  auto i = tuple[0], j = tuple[1];
  if (!id.difference) return pairing_entry(g, i, j, k, l);
  return pairing_entry(g, i, i, k, l) - pairing_entry(g, j, j, k, l);
}

std::vector<VanishingResult> vanishing_suite(const LinearMapG& g) {
  std::vector<VanishingResult> out;
  for (const auto& id : kIdentities) {
    VanishingResult r;
    r.label = std::string(id.label);
    r.arity = id.arity;
    if (id.arity > g.dim()) {
      r.status = SuiteStatus::vacuous;
      out.push_back(std::move(r));
      continue;
    }
    for_each_distinct_tuple(g.dim(), id.arity, [&](std::span<const std::size_t> tuple) {
      ++r.tuples_checked;
      auto v = vanishing_entry(g, id, tuple);
      if (v.is_zero()) return true;
      r.status = SuiteStatus::fail;
      r.first_violation.assign(tuple.begin(), tuple.end());
      r.violating_value = std::move(v);
      return false;
    });
    out.push_back(std::move(r));
  }
  return out;
}

LambdaZReport extract_lambda_z(const LinearMapG& g) {
  auto f = g.field();
  auto n = g.dim();
  auto lambda = pairing_entry(g, 0, 1, 1, 0);
  auto z = g.image(0, 0) - lambda * matrix_unit(f, n, 0, 0);
  LambdaZReport report{lambda, z, true, std::nullopt};
  for (std::size_t i = 0; i < n && report.exact_fit; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto expected = lambda * matrix_unit(f, n, i, j);
      if (i == j) expected += z;
      if (g.image(i, j) == expected) continue;
      report.exact_fit = false;
      report.residual_witness = std::pair{i, j};
      break;
    }
  return report;
}

bool quadratic_condition(const Scalar& lambda) {
  auto f = lambda.field();
  return (Scalar::from_int(f, 2) * lambda * (lambda + Scalar::one(f))).is_zero();
}

}  // namespace matstar
