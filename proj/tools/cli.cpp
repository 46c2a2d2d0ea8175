#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "matstar/io.hpp"

namespace matstar::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string field;
  std::optional<std::size_t> n;
  std::string input;
  std::string method;
  std::string scope = "all_g";
  std::string ortho;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
  std::string format = "text";

  Json to_json() const {
    Json j{{"command", command}};
    if (command == "check") {
      j["input"] = input;
      if (!field.empty()) j["field"] = field;
      if (n) j["n"] = *n;
      j["ortho"] = ortho.empty() ? "auto" : ortho;
      j["trials"] = trials;
      j["seed"] = seed;
    } else if (command == "classify") {
      j["field"] = field;
      j["n"] = n.value_or(2);
      j["method"] = method;
      if (method == "brute") {
        j["scope"] = scope;
        j["budget"] = budget;
      }
      j["seed"] = seed;
    } else {
      j["n"] = n.value_or(3);
      j["seed"] = seed;
    }
    j["format"] = format;
    return j;
  }

  std::string to_text() const {
    std::string s = "config:";
    auto j = to_json();
    for (const auto& [key, value] : j.items())
      s += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    return s;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  auto json = parse_json(read_file(cfg.input));
  auto input = product_input_from_json(json);
  bool from_g = std::holds_alternative<LinearMapG>(input);
  auto tensor = from_g ? tensor_from_g(std::get<LinearMapG>(input)) : std::get<StructureTensor>(input);

  if (!cfg.field.empty() && FieldSpec::parse(cfg.field) != tensor.field())
    throw Error(ErrorKind::MixedFields, "--field " + cfg.field + " but the input is over " + tensor.field().to_string());
  if (cfg.n && *cfg.n != tensor.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "--n " + std::to_string(*cfg.n) + " but the input has n=" + std::to_string(tensor.dim()));

  OrthogonalityMode mode;
  if (cfg.ortho.empty()) mode = OrthogonalityMode::best_for(tensor.field(), tensor.dim(), cfg.trials, cfg.seed);
  else if (cfg.ortho == "exhaustive") mode = OrthogonalityMode::exhaustive();
  else mode = OrthogonalityMode::randomized(cfg.trials, cfg.seed);
  if (mode.mode == CheckMode::exhaustive) {
    if (!tensor.field().is_finite()) throw Error(ErrorKind::InfiniteField, "exhaustive orthogonality over the rationals");
    if (!census_feasible(tensor.field(), tensor.dim()))
      throw Error(ErrorKind::SearchSpaceTooLarge, "idempotent census exceeds 2^24, use --ortho randomized");
  }

  auto reports = check_all_axioms(tensor, mode);
  bool ok = all_hold(reports);
  if (cfg.format == "json") {
    Json axioms = Json::array();
    for (const auto& r : reports) axioms.push_back(to_json(r));
    Json j{{"config", cfg.to_json()},
           {"input_kind", from_g ? "g" : "tensor"},
           {"field", tensor.field().to_string()},
           {"n", tensor.dim()},
           {"axioms", std::move(axioms)},
           {"kind", to_string(theorem_conclusion_check(tensor))},
           {"passed", ok}};
    out << dump(j);
  } else {
    out << cfg.to_text() << "\n";
    out << "input: " << (from_g ? "g" : "tensor") << " over " << tensor.field().to_string() << ", n=" << tensor.dim()
        << "\n";
    for (const auto& r : reports) out << r.describe() << "\n";
    out << "kind: " << to_string(theorem_conclusion_check(tensor)) << "\n";
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kAxiomFailure;
}

void print_classification(const ClassificationReport& r, std::ostream& out) {
  out << "field: " << r.field.to_string() << ", n=" << r.n << ", method=" << to_string(r.method) << "\n";
  if (r.method == Method::brute) {
    out << "candidates: " << r.candidates << "\n";
    out << "admissible g: " << r.admissible.size() << " (" << r.admissible_in_family << " of lambda/z form, "
        << r.admissible_outside_family << " outside)\n";
    for (std::size_t k = 0; k < r.admissible.size(); ++k) {
      auto lz = extract_lambda_z(r.admissible[k]);
      out << "  #" << r.admissible_indices[k] << ": ";
      if (lz.exact_fit) out << "lambda=" << lz.lambda.to_string() << " z=" << lz.z.to_string() << "\n";
      else out << "not of lambda/z form\n";
    }
  }
  if (r.constraint_rows) out << "constraint rows: " << r.constraint_rows << "\n";
  if (r.method == Method::symbolic || r.scope == BruteScope::solution_space_only)
    out << "solution dimension: " << r.solution_dimension << "\n";
  if (r.method == Method::symbolic) {
    out << "family spans solution space: " << (r.family_spans_solution_space ? "yes" : "no") << "\n";
    out << "admissible lambda:";
    for (const auto& l : r.admissible_lambdas) out << " " << l.to_string();
    out << "\ngauge dimension (z): " << r.gauge_dimension << "\n";
  }
  out << "products: " << r.products.size() << "\n";
  for (const auto& p : r.products)
    out << "  " << to_string(p.kind) << ", induced by " << p.inducing_count << " audited g\n";
  out << "anomalies: " << r.anomalies.size() << "\n";
  out << "audit: " << r.audited << " checked, " << (r.audit_passed ? "passed" : "FAILED") << "\n";
  for (const auto& f : r.audit_failures) out << "  " << f << "\n";
  out << "complete: " << (r.complete ? "yes" : "no") << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  auto f = FieldSpec::parse(cfg.field);
  auto n = cfg.n.value_or(2);
  if (n < kMinDim || n > kMaxDim) throw Error(ErrorKind::DimensionMismatch, "--n must be in [2, 8]");
  ClassificationReport report;
  if (cfg.method == "symbolic") {
    report = classify_symbolic(f, n, cfg.seed);
  } else {
    auto scope = cfg.scope == "all_g" ? BruteScope::all_g : BruteScope::solution_space_only;
    report = classify_brute(f, n, scope, cfg.budget, cfg.threads);
    report.seed = cfg.seed;
  }
  if (cfg.format == "json") {
    out << dump(Json{{"config", cfg.to_json()}, {"report", to_json(report)}});
  } else {
    out << cfg.to_text() << "\n";
    print_classification(report, out);
  }
  return report.anomalies.empty() ? kOk : kAnomaly;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto report = run_verification_suite(cfg.n.value_or(3), cfg.seed);
  if (cfg.format == "json") {
    out << dump(Json{{"config", cfg.to_json()}, {"suite", to_json(report)}});
  } else {
    out << cfg.to_text() << "\n";
    for (const auto& item : report.items) {
      out << (item.passed ? "PASS " : "FAIL ") << item.id << ": " << item.description << "\n";
      for (const auto& d : item.details) out << "    " << d << "\n";
    }
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kOk : kAxiomFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify and classify trace- and orthogonality-constrained products on n x n matrices"};
  app.name("matstar");
  app.require_subcommand(1);
  RunConfig cfg;
  std::size_t n = 0;
  auto formats = CLI::IsMember({"text", "json"});

  auto* check = app.add_subcommand("check", "Run the axiom checks on a structure tensor or a map g");
  check->add_option("--input", cfg.input, "JSON file holding a structure tensor or a map g")->required();
  check->add_option("--field", cfg.field, "Expected field (rational or gf:<p>)");
  auto* check_n = check->add_option("--n", n, "Expected dimension");
  check->add_option("--ortho", cfg.ortho, "Orthogonality mode")->check(CLI::IsMember({"exhaustive", "randomized"}));
  check->add_option("--trials", cfg.trials, "Randomized orthogonality trials")->capture_default_str();
  check->add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  check->add_option("--format", cfg.format)->check(formats)->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify every admissible product");
  classify->add_option("--field", cfg.field, "rational or gf:<p>")->required();
  auto* classify_n = classify->add_option("--n", n, "Dimension (default 2)");
  classify->add_option("--method", cfg.method)->required()->check(CLI::IsMember({"symbolic", "brute"}));
  classify->add_option("--scope", cfg.scope)->check(CLI::IsMember({"all_g", "solution_space_only"}))
      ->capture_default_str();
  classify->add_option("--budget", cfg.budget, "Largest brute-force candidate count")->capture_default_str();
  classify->add_option("--seed", cfg.seed)->capture_default_str();
  classify->add_option("--threads", cfg.threads, "Brute-force workers, 0 for all cores")->capture_default_str();
  classify->add_option("--format", cfg.format)->check(formats)->capture_default_str();

  auto* verify = app.add_subcommand("verify-paper", "Run the whole-result regression suite");
  auto* verify_n = verify->add_option("--n", n, "Dimension for the n-dependent items (default 3)");
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--format", cfg.format)->check(formats)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }
  if (check_n->count() || classify_n->count() || verify_n->count()) cfg.n = n;

  try {
    if (check->parsed()) {
      cfg.command = "check";
      return cmd_check(cfg, out);
    }
    if (classify->parsed()) {
      cfg.command = "classify";
      return cmd_classify(cfg, out);
    }
    cfg.command = "verify-paper";
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace matstar::cli
