#include "matstar/io.hpp"

#include <iomanip>

namespace matstar {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_value(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    schema_error(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar scalar_value(FieldSpec f, const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
      schema_error(where, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
  schema_error(where, "expected a scalar string");
}

FieldSpec field_value(const Json& j) {
  const auto& f = member(j, "field", "/field");
  if (!f.is_string()) schema_error("/field", "expected a string");
  try {
    return FieldSpec::parse(f.get<std::string>());
  } catch (const Error& e) {
    schema_error("/field", e.what());
  }
}

std::size_t dim_value(const Json& j) {
  auto n = index_value(member(j, "n", "/n"), "/n");
  if (n < kMinDim || n > kMaxDim) schema_error("/n", "dimension must be in [2, 8]");
  return n;
}

std::array<std::size_t, 2> pair_value(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema_error(where, "expected [row, column]");
  std::array<std::size_t, 2> out{index_value(j[0], where + "/0"), index_value(j[1], where + "/1")};
  if (out[0] >= n || out[1] >= n) schema_error(where, "index out of range");
  return out;
}

Json unit_json(std::size_t i, std::size_t j) { return Json::array({i, j}); }

Json scalars_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

Json labelled_indices(std::initializer_list<std::size_t> idx) {
  Json one = Json::array(), zero = Json::array();
  for (auto v : idx) {
    one.push_back(v + 1);
    zero.push_back(v);
  }
  return Json{{"one_based", one}, {"zero_based", zero}};
}

struct WitnessJson {
  Json operator()(const AssociativityWitness& w) const {
    const auto& k = w.indices;
    return Json{{"kind", "basis_triple"},
                {"label", unit_label(k[0], k[1]) + " * (" + unit_label(k[2], k[3]) + " * " + unit_label(k[4], k[5]) +
                              ")"},
                {"indices", labelled_indices({k[0], k[1], k[2], k[3], k[4], k[5]})},
                {"x_star_yz", to_json(w.left_nested)},
                {"xy_star_z", to_json(w.right_nested)}};
  }
  Json operator()(const IdentityWitness& w) const {
    return Json{{"kind", "basis_unit"},
                {"label", unit_label(w.a, w.b)},
                {"indices", labelled_indices({w.a, w.b})},
                {"x_star_one", to_json(w.product)}};
  }
  Json operator()(const TraceWitness& w) const {
    return Json{{"kind", "basis_pair"},
                {"label", unit_label(w.a, w.b) + " * " + unit_label(w.c, w.d)},
                {"indices", labelled_indices({w.a, w.b, w.c, w.d})},
                {"trace_star", w.star_trace.to_string()},
                {"trace_ordinary", w.ordinary_trace.to_string()}};
  }
  Json operator()(const OrthogonalityWitness& w) const {
    return Json{{"kind", "idempotent_pair"},
                {"x", to_json(w.pair.x)},
                {"y", to_json(w.pair.y)},
                {"u1", scalars_json(w.pair.u1)},
                {"v1", scalars_json(w.pair.v1)},
                {"u2", scalars_json(w.pair.u2)},
                {"v2", scalars_json(w.pair.v2)},
                {"x_star_y", to_json(w.product)}};
  }
};

Json product_json(const ProductClass& p) {
  return Json{{"kind", to_string(p.kind)},
              {"inducing_count", p.inducing_count},
              {"representative_g", to_json(p.representative)},
              {"tensor", to_json(p.tensor)}};
}

Json separation_json(const std::optional<TensorSeparation>& s, std::size_t n) {
  if (!s) return nullptr;
  return Json{{"left", unit_label(s->left / n, s->left % n)},
              {"right", unit_label(s->right / n, s->right % n)},
              {"first", to_json(s->first)},
              {"second", to_json(s->second)}};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    auto limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < limit; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                      " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"field", m.field().to_string()}, {"n", m.dim()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  auto f = field_value(j);
  auto n = dim_value(j);
  const auto& rows = member(j, "entries", "/entries");
  if (!rows.is_array() || rows.size() != n) schema_error("/entries", "expected n rows");
  auto m = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto where = "/entries/" + std::to_string(i);
    if (!rows[i].is_array() || rows[i].size() != n) schema_error(where, "expected n entries");
    for (std::size_t k = 0; k < n; ++k) m.set(i, k, scalar_value(f, rows[i][k], where + "/" + std::to_string(k)));
  }
  return m;
}

Json to_json(const StructureTensor& t) {
  auto n = t.dim();
  auto m = t.basis_size();
  Json entries = Json::array();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t r = 0; r < m; ++r)
      for (const auto& [o, c] : t.sparse_product(l, r))
        entries.push_back(Json{{"left", unit_json(l / n, l % n)},
                               {"right", unit_json(r / n, r % n)},
                               {"out", unit_json(o / n, o % n)},
                               {"coeff", c.to_string()}});
  return Json{{"field", t.field().to_string()}, {"n", n}, {"entries", std::move(entries)}};
}

StructureTensor tensor_from_json(const Json& j) {
  auto f = field_value(j);
  auto n = dim_value(j);
  const auto& entries = member(j, "entries", "/entries");
  if (!entries.is_array()) schema_error("/entries", "expected an array");
  auto t = StructureTensor::zero(f, n);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto where = "/entries/" + std::to_string(k);
    const auto& e = entries[k];
    auto left = pair_value(member(e, "left", where), n, where + "/left");
    auto right = pair_value(member(e, "right", where), n, where + "/right");
    auto out = pair_value(member(e, "out", where), n, where + "/out");
    auto c = scalar_value(f, member(e, "coeff", where), where + "/coeff");
    auto li = left[0] * n + left[1], ri = right[0] * n + right[1], oi = out[0] * n + out[1];
    t.set_coefficient(li, ri, oi, t.coefficient(li, ri, oi) + c);
  }
  return t;
}

Json to_json(const LinearMapG& g) {
  Json table = Json::array();
  for (const auto& row : g.table()) table.push_back(scalars_json(row));
  return Json{{"field", g.field().to_string()}, {"n", g.dim()}, {"orientation", "standard"}, {"g", std::move(table)}};
}

LinearMapG linear_map_from_json(const Json& j) {
  auto f = field_value(j);
  auto n = dim_value(j);
  if (auto it = j.find("orientation"); it != j.end() && *it != "standard")
    schema_error("/orientation", "only \"standard\" orientation is supported");
  const auto& table = member(j, "g", "/g");
  auto m = n * n;
  if (!table.is_array() || table.size() != m) schema_error("/g", "expected n^2 rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m; ++r) {
    auto where = "/g/" + std::to_string(r);
    if (!table[r].is_array() || table[r].size() != m) schema_error(where, "expected n^2 entries");
    Vector row;
    for (std::size_t s = 0; s < m; ++s) row.push_back(scalar_value(f, table[r][s], where + "/" + std::to_string(s)));
    rows.push_back(std::move(row));
  }
  return LinearMapG::from_table(f, n, std::move(rows));
}

ProductInput product_input_from_json(const Json& j) {
  if (!j.is_object()) schema_error("/", "expected an object");
  if (j.contains("g")) return linear_map_from_json(j);
  if (j.contains("entries")) {
    const auto& e = j["entries"];
    if (e.is_array() && (e.empty() || e.front().is_object())) return tensor_from_json(j);
    schema_error("/entries", "expected tensor entries ({left,right,out,coeff} objects)");
  }
  schema_error("/", "neither a structure tensor (\"entries\") nor a linear map (\"g\")");
}

Json to_json(const AxiomReport& r) {
  Json j{{"axiom", to_string(r.axiom)}, {"holds", r.holds}, {"mode", to_string(r.mode)}};
  if (r.mode == CheckMode::randomized) {
    j["trials"] = r.trials;
    j["seed"] = r.seed;
  }
  j["cases_checked"] = r.cases_checked;
  j["witness"] = r.witness ? std::visit(WitnessJson{}, *r.witness) : Json(nullptr);
  return j;
}

Json to_json(const LambdaZReport& r) {
  Json j{{"lambda", r.lambda.to_string()}, {"z", to_json(r.z)}, {"exact_fit", r.exact_fit}};
  j["residual_witness"] =
      r.residual_witness ? Json(unit_label(r.residual_witness->first, r.residual_witness->second)) : Json(nullptr);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j{{"field", r.field.to_string()}, {"n", r.n}, {"method", to_string(r.method)}};
  if (r.method == Method::brute) {
    j["scope"] = to_string(r.scope);
    j["budget"] = r.budget;
  }
  j["seed"] = r.seed;
  j["constraint_rows"] = r.constraint_rows;
  Json sources = Json::array();
  for (const auto& [source, rows] : r.constraint_sources) sources.push_back(Json{{"source", source}, {"rows", rows}});
  j["constraint_sources"] = std::move(sources);
  j["vacuous_sources"] = r.vacuous_sources;
  Json basis = Json::array();
  for (const auto& g : r.solution_basis) basis.push_back(to_json(g));
  j["solution_space"] = Json{{"dimension", r.solution_dimension}, {"basis", std::move(basis)}};

  if (r.method == Method::symbolic) {
    Json lambdas = Json::array();
    for (const auto& l : r.admissible_lambdas) lambdas.push_back(l.to_string());
    j["admissible_g"] = Json{{"family", "g(x) = lambda*x + tr(x)*z"},
                             {"lambdas", std::move(lambdas)},
                             {"gauge_dimension", r.gauge_dimension},
                             {"family_spans_solution_space", r.family_spans_solution_space}};
  } else {
    Json maps = Json::array();
    for (const auto& g : r.admissible) maps.push_back(to_json(g));
    j["candidates"] = r.candidates;
    j["admissible_g"] = Json{{"count", r.admissible.size()},
                             {"in_lambda_z_family", r.admissible_in_family},
                             {"outside_lambda_z_family", r.admissible_outside_family},
                             {"candidate_indices", r.admissible_indices},
                             {"maps", std::move(maps)}};
  }
  Json products = Json::array();
  for (const auto& p : r.products) products.push_back(product_json(p));
  j["products"] = std::move(products);
  Json anomalies = Json::array();
  for (const auto& g : r.anomalies) anomalies.push_back(to_json(g));
  j["anomalies"] = std::move(anomalies);
  j["audit"] = Json{{"checked", r.audited}, {"passed", r.audit_passed}, {"failures", r.audit_failures}};
  j["complete"] = r.complete;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CharacteristicTwoFinding& f) {
  Json axioms = Json::array();
  for (const auto& a : f.display_axioms) axioms.push_back(to_json(a));
  return Json{{"g", to_json(f.g)},
              {"lambda_z", to_json(f.lambda_z)},
              {"induced_equals_display", f.induced_equals_display},
              {"display_equals_ordinary", f.display_equals_ordinary},
              {"display_equals_opposite", f.display_equals_opposite},
              {"display_kind", to_string(f.display_kind)},
              {"display_axioms", std::move(axioms)},
              {"separation_from_ordinary", separation_json(f.separation_from_ordinary, 2)},
              {"separation_from_opposite", separation_json(f.separation_from_opposite, 2)},
              {"display_tensor", to_json(f.display)}};
}

Json to_json(const SuiteReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items)
    items.push_back(Json{{"id", i.id},
                         {"description", i.description},
                         {"status", i.passed ? "pass" : "fail"},
                         {"details", i.details}});
  return Json{{"n", r.n}, {"seed", r.seed}, {"items", std::move(items)}, {"passed", r.passed()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace matstar
