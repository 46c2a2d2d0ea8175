#include "matstar/constraints.hpp"

#include <algorithm>
#include <map>

#include "matstar/g_analysis.hpp"

namespace matstar {

namespace {

// Unknown holding the pairing entry g(ab)_{kl} = coefficient of e_lk in g(e_ab).
std::size_t pairing_unknown(std::size_t n, std::size_t a, std::size_t b, std::size_t k, std::size_t l) {
  return (a * n + b) * n * n + (l * n + k);
}

class RowBuilder {
 public:
  explicit RowBuilder(FieldSpec f) : field_(f) {}
  RowBuilder& add(std::size_t unknown, std::int64_t coeff) {
    auto [it, inserted] = terms_.try_emplace(unknown, Scalar::zero(field_));
    it->second += Scalar::from_int(field_, coeff);
    return *this;
  }
  ConstraintRow finish(std::string source, std::string tag) {
    ConstraintRow row{{}, std::move(source), std::move(tag)};
    for (auto& [u, c] : terms_)
      if (!c.is_zero()) row.terms.emplace_back(u, c);
    return row;
  }

 private:
  FieldSpec field_;
  std::map<std::size_t, Scalar> terms_;
};

std::string index_tag(std::span<const std::size_t> tuple) {
  static constexpr char names[] = {'i', 'j', 'k', 'l'};
  std::string one, zero;
  for (std::size_t p = 0; p < tuple.size(); ++p) {
    one += (p ? "," : "") + std::string(1, names[p]) + "=" + std::to_string(tuple[p] + 1);
    zero += (p ? "," : "") + std::to_string(tuple[p]);
  }
  return one + " (" + zero + ")";
}

template <typename Visit>
void for_each_distinct_tuple(std::size_t n, std::size_t arity, Visit&& visit) {
  std::vector<std::size_t> tuple(arity, 0);
  std::size_t total = 1;
  for (std::size_t k = 0; k < arity; ++k) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    auto c = code;
    for (std::size_t k = arity; k-- > 0; c /= n) tuple[k] = c % n;
    bool distinct = true;
    for (std::size_t p = 0; p < arity && distinct; ++p)
      for (std::size_t q = p + 1; q < arity; ++q)
        if (tuple[p] == tuple[q]) distinct = false;
    if (distinct) visit(std::span<const std::size_t>(tuple));
  }
}

}  // namespace

std::size_t ConstraintSystem::count(std::string_view source) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const ConstraintRow& r) { return r.source == source; }));
}

std::vector<std::string> ConstraintSystem::sources() const {
  std::vector<std::string> out;
  for (const auto& r : rows)
    if (std::find(out.begin(), out.end(), r.source) == out.end()) out.push_back(r.source);
  return out;
}

ConstraintSystem ConstraintSystem::without(std::string_view source) const {
  ConstraintSystem out{field, n, unknowns, {}, vacuous_sources};
  for (const auto& r : rows)
    if (r.source != source) out.rows.push_back(r);
  return out;
}

ConstraintSystem assemble_constraints(FieldSpec f, std::size_t n) {
  if (n < kMinDim || n > kMaxDim) throw Error(ErrorKind::DimensionMismatch, "dimension outside [2, 8]");
  ConstraintSystem cs{f, n, n * n * n * n, {}, {}};

  for (const auto& id : vanishing_identities()) {
    auto source = "vanish:" + std::string(id.label);
    if (id.arity > n) {
      cs.vacuous_sources.push_back(source);
      continue;
    }
    for_each_distinct_tuple(n, id.arity, [&](std::span<const std::size_t> t) {
      auto k = t[static_cast<std::size_t>(id.slots[0] - 'i')];
      auto l = t[static_cast<std::size_t>(id.slots[1] - 'i')];
      RowBuilder row(f);
      if (id.difference) {
        row.add(pairing_unknown(n, t[0], t[0], k, l), 1).add(pairing_unknown(n, t[1], t[1], k, l), -1);
      } else {
        row.add(pairing_unknown(n, t[0], t[1], k, l), 1);
      }
      cs.rows.push_back(row.finish(source, source + ":" + index_tag(t)));
    });
  }

  // tr(g(b)) = 0 on the traceless basis.
  auto m = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RowBuilder row(f);
      for (std::size_t k = 0; k < n; ++k) row.add((i * n + j) * m + (k * n + k), 1);
      cs.rows.push_back(row.finish("trace", "trace:tr(g(" + unit_label(i, j) + "))"));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RowBuilder row(f);
    for (std::size_t k = 0; k < n; ++k) {
      row.add((i * n + i) * m + (k * n + k), 1);
      row.add(((i + 1) * n + (i + 1)) * m + (k * n + k), -1);
    }
    cs.rows.push_back(row.finish("trace", "trace:tr(g(" + unit_label(i, i) + " - " + unit_label(i + 1, i + 1) + "))"));
  }

  const std::string diag_source = "relation:g(ii-jj)_{ii}=g(ij)_{ji}";
  const std::string swap_source = "relation:g(ij)_{ji}=g(ji)_{ij}";
  for_each_distinct_tuple(n, 2, [&](std::span<const std::size_t> t) {
    auto i = t[0], j = t[1];
    RowBuilder diag(f);
    diag.add(pairing_unknown(n, i, i, i, i), 1).add(pairing_unknown(n, j, j, i, i), -1);
    diag.add(pairing_unknown(n, i, j, j, i), -1);
    cs.rows.push_back(diag.finish(diag_source, diag_source + ":" + index_tag(t)));
  });
  for_each_distinct_tuple(n, 2, [&](std::span<const std::size_t> t) {
    auto i = t[0], j = t[1];
    RowBuilder swap(f);
    swap.add(pairing_unknown(n, i, j, j, i), 1).add(pairing_unknown(n, j, i, i, j), -1);
    cs.rows.push_back(swap.finish(swap_source, swap_source + ":" + index_tag(t)));
  });
  return cs;
}

Scalar evaluate(const ConstraintRow& row, const LinearMapG& g) {
  auto m = g.basis_size();
  auto s = Scalar::zero(g.field());
  for (const auto& [u, c] : row.terms) s += c * g.coefficient(u / m, u % m);
  return s;
}

bool satisfies(const ConstraintSystem& cs, const LinearMapG& g) {
  for (const auto& row : cs.rows)
    if (!evaluate(row, g).is_zero()) return false;
  return true;
}

SolutionSpace solve_linear_space(const ConstraintSystem& cs) {
  std::vector<Vector> dense;
  dense.reserve(cs.rows.size());
  for (const auto& row : cs.rows) {
    Vector v(cs.unknowns, Scalar::zero(cs.field));
    for (const auto& [u, c] : row.terms) v[u] = c;
    dense.push_back(std::move(v));
  }
  auto echelon = rref(cs.field, std::move(dense), cs.unknowns);
  SolutionSpace space;
  for (const auto& v : nullspace_basis(echelon)) space.basis.push_back(LinearMapG::unflatten(cs.field, cs.n, v));
  space.dimension = space.basis.size();
  return space;
}

}  // namespace matstar
