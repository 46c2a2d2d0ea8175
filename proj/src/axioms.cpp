#include "matstar/axioms.hpp"

#include <sstream>

namespace matstar {

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::A: return "A";
    case Axiom::B: return "B";
    case Axiom::I: return "I";
    case Axiom::T: return "T";
    case Axiom::O: return "O";
  }
  return "?";
}

std::string_view to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::exhaustive: return "exhaustive";
    case CheckMode::randomized: return "randomized";
    case CheckMode::structural: return "structural";
  }
  return "?";
}

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::ordinary: return "ordinary";
    case ProductKind::opposite: return "opposite";
    case ProductKind::neither: return "neither";
  }
  return "?";
}

namespace {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::A: return "associativity";
    case Axiom::B: return "bilinearity";
    case Axiom::I: return "identity";
    case Axiom::T: return "trace";
    case Axiom::O: return "orthogonality";
  }
  return "?";
}

std::string vector_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

struct WitnessPrinter {
  std::ostream& os;
  void operator()(const AssociativityWitness& w) const {
    const auto& k = w.indices;
    auto x = unit_label(k[0], k[1]), y = unit_label(k[2], k[3]), z = unit_label(k[4], k[5]);
    os << x << " * (" << y << " * " << z << ") = " << w.left_nested.to_string() << " but (" << x << " * " << y
       << ") * " << z << " = " << w.right_nested.to_string();
  }
  void operator()(const IdentityWitness& w) const {
    os << unit_label(w.a, w.b) << " * 1 = " << w.product.to_string();
  }
  void operator()(const TraceWitness& w) const {
    os << "tr(" << unit_label(w.a, w.b) << " * " << unit_label(w.c, w.d) << ") = " << w.star_trace.to_string()
       << " but tr(product) = " << w.ordinary_trace.to_string();
  }
  void operator()(const OrthogonalityWitness& w) const {
    os << "x = " << w.pair.x.to_string() << " [u1=" << vector_string(w.pair.u1) << ", v1=" << vector_string(w.pair.v1)
       << "], y = " << w.pair.y.to_string() << " [u2=" << vector_string(w.pair.u2)
       << ", v2=" << vector_string(w.pair.v2) << "], x * y = " << w.product.to_string();
  }
};

// splitmix64 step: decorrelates per-trial seeds drawn from one base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void accumulate_product(const StructureTensor& t, std::size_t left, std::size_t right, const Scalar& weight,
                        Vector& out) {
  for (const auto& [o, c] : t.sparse_product(left, right)) out[o] += weight * c;
}

}  // namespace

std::string AxiomReport::describe() const {
  std::ostringstream os;
  os << to_string(axiom) << " (" << axiom_name(axiom) << "): " << (holds ? "holds" : "FAILS") << " ["
     << to_string(mode);
  if (mode == CheckMode::randomized) os << ", trials=" << trials << ", seed=" << seed;
  os << ", cases=" << cases_checked << "]";
  if (witness) {
    os << " witness: ";
    std::visit(WitnessPrinter{os}, *witness);
  }
  return os.str();
}

OrthogonalityMode OrthogonalityMode::best_for(FieldSpec f, std::size_t n, std::uint64_t trials, std::uint64_t seed) {
  if (f.is_finite() && census_feasible(f, n)) return exhaustive();
  return randomized(trials, seed);
}

AxiomReport check_associativity(const StructureTensor& t) {
  AxiomReport report{Axiom::A};
  auto f = t.field();
  auto m = t.basis_size();
  Vector lhs(m, Scalar::zero(f)), rhs(m, Scalar::zero(f));
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) {
        for (auto& v : lhs) v = Scalar::zero(f);
        for (auto& v : rhs) v = Scalar::zero(f);
        for (const auto& [g, c] : t.sparse_product(r, s)) accumulate_product(t, l, g, c, lhs);
        for (const auto& [g, c] : t.sparse_product(l, r)) accumulate_product(t, g, s, c, rhs);
        ++report.cases_checked;
        if (lhs == rhs) continue;
        auto n = t.dim();
        report.holds = false;
        report.witness = AssociativityWitness{{l / n, l % n, r / n, r % n, s / n, s % n},
                                              Matrix::from_flat(f, n, lhs),
                                              Matrix::from_flat(f, n, rhs)};
        return report;
      }
  return report;
}

AxiomReport check_bilinearity(const StructureTensor& t) {
  AxiomReport report{Axiom::B};
  report.mode = CheckMode::structural;
  report.cases_checked = t.basis_size() * t.basis_size();
  return report;
}

namespace {

AxiomReport identity_probe(const StructureTensor& t, bool right) {
  AxiomReport report{Axiom::I};
  auto f = t.field();
  auto n = t.dim();
  auto one = Matrix::identity(f, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto unit = matrix_unit(f, n, a, b);
      auto product = right ? star_eval(t, unit, one) : star_eval(t, one, unit);
      ++report.cases_checked;
      if (product == unit) continue;
      report.holds = false;
      report.witness = IdentityWitness{a, b, std::move(product)};
      return report;
    }
  return report;
}

}  // namespace

AxiomReport check_identity(const StructureTensor& t) { return identity_probe(t, true); }
AxiomReport check_left_identity(const StructureTensor& t) { return identity_probe(t, false); }

AxiomReport check_trace(const StructureTensor& t) {
  AxiomReport report{Axiom::T};
  auto f = t.field();
  auto n = t.dim();
  auto m = t.basis_size();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t r = 0; r < m; ++r) {
      auto [a, b] = std::pair{l / n, l % n};
      auto [c, d] = std::pair{r / n, r % n};
      auto star_trace = Scalar::zero(f);
      for (const auto& [o, coeff] : t.sparse_product(l, r))
        if (o / n == o % n) star_trace += coeff;
      auto ordinary = Scalar::from_int(f, (b == c && a == d) ? 1 : 0);
      ++report.cases_checked;
      if (star_trace == ordinary) continue;
      report.holds = false;
      report.witness = TraceWitness{a, b, c, d, std::move(star_trace), std::move(ordinary)};
      return report;
    }
  return report;
}

AxiomReport check_orthogonality(const StructureTensor& t, std::span<const IdempotentPair> pairs) {
  AxiomReport report{Axiom::O};
  for (const auto& pair : pairs) {
    auto product = star_eval(t, pair.x, pair.y);
    ++report.cases_checked;
    if (product.is_zero()) continue;
    report.holds = false;
    report.witness = OrthogonalityWitness{pair, std::move(product)};
    return report;
  }
  return report;
}

AxiomReport check_orthogonality(const StructureTensor& t, const OrthogonalityMode& mode) {
  if (mode.mode == CheckMode::exhaustive) {
    if (!t.field().is_finite())
      throw Error(ErrorKind::InfiniteField, "exhaustive orthogonality check over the rationals");
    auto pairs = orthogonal_idempotent_pairs(t.field(), t.dim());
    return check_orthogonality(t, pairs);
  }
  AxiomReport report{Axiom::O};
  report.mode = CheckMode::randomized;
  report.seed = mode.seed;
  report.trials = mode.trials;
  for (std::uint64_t k = 0; k < mode.trials; ++k) {
    auto pair = sample_orthogonal_idempotent_pair(t.field(), t.dim(), derive_seed(mode.seed, k));
    auto product = star_eval(t, pair.x, pair.y);
    ++report.cases_checked;
    if (product.is_zero()) continue;
    report.holds = false;
    report.witness = OrthogonalityWitness{std::move(pair), std::move(product)};
    return report;
  }
  return report;
}

std::vector<AxiomReport> check_all_axioms(const StructureTensor& t, const OrthogonalityMode& mode) {
  return {check_associativity(t), check_bilinearity(t), check_identity(t), check_trace(t),
          check_orthogonality(t, mode)};
}

bool all_hold(std::span<const AxiomReport> reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

ProductKind theorem_conclusion_check(const StructureTensor& t) {
  if (t == tensor_from_ordinary(t.field(), t.dim())) return ProductKind::ordinary;
  if (t == tensor_from_opposite(t.field(), t.dim())) return ProductKind::opposite;
  return ProductKind::neither;
}

}  // namespace matstar
