#include "stdist/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json_detail.hpp"
#include "stdist/errors.hpp"
#include "stdist/serialize.hpp"

namespace stdist::io {

using detail::json;

Command parse_command(const std::string& text) {
  if (text == "growth") return Command::Growth;
  if (text == "period") return Command::Period;
  if (text == "tree-verify") return Command::TreeVerify;
  if (text == "tree-period") return Command::TreePeriod;
  if (text == "invariant") return Command::Invariant;
  if (text == "orbit") return Command::Orbit;
  if (text == "suite") return Command::Suite;
  throw InvalidArgumentError("unknown command '" + text +
                             "' (growth, period, tree-verify, tree-period, invariant, orbit, suite)");
}

std::string command_name(Command command) {
  switch (command) {
    case Command::Growth: return "growth";
    case Command::Period: return "period";
    case Command::TreeVerify: return "tree-verify";
    case Command::TreePeriod: return "tree-period";
    case Command::Invariant: return "invariant";
    case Command::Orbit: return "orbit";
    case Command::Suite: return "suite";
  }
  return "suite";
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  throw InvalidArgumentError("unknown format '" + text + "' (json, csv, text)");
}

void validate(const RunConfig& config) {
  switch (config.command) {
    case Command::Growth:
    case Command::Period:
      coxeter::validate_type({coxeter::parse_family(config.family), config.rank});
      if (config.max_length < 0) throw InvalidArgumentError("--K must be >= 0");
      if (config.command == Command::Period) {
        period::validate_prime_power(config.q_F);
        if (config.max_length < 1) throw InvalidArgumentError("period needs --K >= 1");
      }
      break;
    case Command::TreeVerify:
    case Command::TreePeriod:
    case Command::Invariant:
      period::validate_prime_power(config.q_F);
      if (config.depth < 1) throw InvalidArgumentError("--depth must be >= 1");
      if (config.command == Command::Invariant && config.depth < 2)
        throw InvalidArgumentError("invariant needs --depth >= 2");
      break;
    case Command::Orbit:
    case Command::Suite:
      break;
  }
  if (config.element_budget == 0) throw InvalidArgumentError("--budget must be positive");
}

namespace {

struct Rendered {
  SuiteReport report;
  json payload;
  std::string csv;
  std::string text;
};

std::string rational_rows_csv(const std::string& index_name, const std::vector<Rational>& values) {
  std::ostringstream out;
  out << index_name << ",num,den\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    out << i << ',' << boost::multiprecision::numerator(values[i]) << ','
        << boost::multiprecision::denominator(values[i]) << '\n';
  return out.str();
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + to_string(values[i]);
  return out + "]";
}

coxeter::GrowthSeries growth_for(const RunConfig& config, const std::optional<GrowthCache>& cache) {
  const coxeter::CoxeterSystem system =
      coxeter::build_affine_system(coxeter::parse_family(config.family), config.rank);
  return cached_growth(system, config.max_length, cache ? &*cache : nullptr, config.element_budget);
}

Rendered run_growth(const RunConfig& config, const std::optional<GrowthCache>& cache) {
  Rendered r;
  const coxeter::GrowthSeries series = growth_for(config, cache);
  r.report = growth_checks(series, std::min(8, series.truncation()));
  r.payload = detail::growth_series_json(series);
  std::ostringstream csv;
  csv << "k,a_k\n";
  for (std::size_t k = 0; k < series.coefficients.size(); ++k) csv << k << ',' << series.coefficients[k] << '\n';
  r.csv = csv.str();
  std::ostringstream text;
  text << "growth ~" << coxeter::to_string(series.type) << " K=" << series.truncation() << ": [";
  for (std::size_t k = 0; k < series.coefficients.size(); ++k) text << (k ? "," : "") << series.coefficients[k];
  text << "]\n";
  r.text = text.str();
  return r;
}

Rendered run_period(const RunConfig& config, const std::optional<GrowthCache>& cache) {
  Rendered r;
  const coxeter::GrowthSeries series = growth_for(config, cache);
  const period::PeriodResult result = period::compute_period(series, config.q_F);
  r.report = period_checks(series, config.q_F);
  if (series.type.rank == 1) {
    r.report.add("rank-one-period q_F=" + std::to_string(config.q_F), "lambda(f) = 1 - 2/(q_F+1)",
                 result.closed_form_value == make_rational(config.q_F - 1, config.q_F + 1),
                 "lambda=" + to_string(result.closed_form_value));
  }
  r.payload = detail::period_result_json(result);
  r.csv = rational_rows_csv("k", result.partial_sums);
  r.text = "period ~" + coxeter::to_string(series.type) + " q_F=" + std::to_string(config.q_F) +
           " q_E=" + std::to_string(result.q_E) + ": closed form " +
           to_string(result.closed_form_value) + ", S_" + std::to_string(series.truncation()) + " = " +
           to_string(result.partial_sums.back()) + "\n";
  return r;
}

void export_tree(const RunConfig& config, const tree::TreePair& tree) {
  if (!config.tree_out.empty()) {
    std::ofstream out(config.tree_out);
    if (!out) throw InvalidArgumentError("cannot write " + config.tree_out);
    out << to_json(tree);
  }
  if (!config.cocycle_out.empty()) {
    std::ofstream out(config.cocycle_out);
    if (!out) throw InvalidArgumentError("cannot write " + config.cocycle_out);
    out << cocycle_to_csv(tree::iwahori_cocycle(tree));
  }
}

Rendered run_tree_verify(const RunConfig& config) {
  Rendered r;
  const tree::TreePair tree = tree::build_tree_pair(config.q_F, config.depth);
  export_tree(config, tree);
  r.report = tree_checks(tree, config.seed);
  const tree::StructureReport structure = tree::verify_structure(tree);
  r.payload = json{{"q_F", tree.q_F()},
                   {"q_E", tree.q_E()},
                   {"depth", tree.depth()},
                   {"vertices", tree.vertices().size()},
                   {"edges", tree.edges().size()},
                   {"f_sphere_sizes", structure.f_sphere_sizes},
                   {"e_sphere_sizes", structure.e_sphere_sizes}};
  r.csv = cocycle_to_csv(tree::iwahori_cocycle(tree));
  r.text = "tree q_F=" + std::to_string(tree.q_F()) + " q_E=" + std::to_string(tree.q_E()) +
           " depth=" + std::to_string(tree.depth()) + ": " + std::to_string(tree.vertices().size()) +
           " vertices, " + std::to_string(tree.edges().size()) + " edges\n";
  return r;
}

Rendered run_tree_period(const RunConfig& config) {
  Rendered r;
  const tree::TreePair tree = tree::build_tree_pair(config.q_F, config.depth);
  export_tree(config, tree);
  const std::vector<Rational> sums = tree::tree_period(tree, tree::iwahori_cocycle(tree));
  for (const auto& check : tree_checks(tree, config.seed, 0).checks)
    if (check.name.rfind("tree-period", 0) == 0) r.report.checks.push_back(check);
  const Rational limit = make_rational(config.q_F - 1, config.q_F + 1);
  r.payload = json{{"q_F", tree.q_F()},
                   {"q_E", tree.q_E()},
                   {"depth", tree.depth()},
                   {"partial_sums", detail::rational_list_json(sums)},
                   {"limit", detail::rational_json(limit)}};
  r.csv = rational_rows_csv("m", sums);
  r.text = "tree period q_F=" + std::to_string(config.q_F) + ": S = " + join_rationals(sums) +
           ", limit " + to_string(limit) + "\n";
  return r;
}

Rendered run_invariant(const RunConfig& config) {
  Rendered r;
  const tree::TreePair tree = tree::build_tree_pair(config.q_F, config.depth);
  r.report = invariant_checks(tree);
  const tree::InvariantSolution solution = tree::invariant_solver(tree);
  r.payload = json{{"q_F", tree.q_F()},
                   {"q_E", tree.q_E()},
                   {"depth", tree.depth()},
                   {"dimension", solution.dimension},
                   {"profile", detail::rational_list_json(solution.profile)}};
  r.csv = rational_rows_csv("delta", solution.profile);
  r.text = "invariant q_F=" + std::to_string(config.q_F) + ": dimension " +
           std::to_string(solution.dimension) + ", profile " + join_rationals(solution.profile) + "\n";
  return r;
}

Rendered run_orbit(const RunConfig& config) {
  Rendered r;
  const residue::FiniteFieldPair fields = residue::build_fields(config.p, config.n);
  r.report = orbit_checks(fields);
  const residue::OrbitReport affine = residue::affine_square_orbits(fields);
  const residue::OrbitReport closure = residue::inversion_closure_orbits(fields);
  r.payload = json{{"p", fields.p()},
                   {"n", fields.n()},
                   {"q", fields.q()},
                   {"modulus_base", fields.modulus_base()},
                   {"modulus_ext", fields.modulus_ext()},
                   {"affine_square", detail::orbit_report_json(affine)},
                   {"inversion_closure", detail::orbit_report_json(closure)}};
  std::ostringstream csv;
  csv << "stage,orbit,representative,size\n";
  for (std::size_t i = 0; i < affine.orbit_sizes.size(); ++i)
    csv << "affine_square," << i << ',' << affine.representatives[i] << ',' << affine.orbit_sizes[i] << '\n';
  for (std::size_t i = 0; i < closure.orbit_sizes.size(); ++i)
    csv << "inversion_closure," << i << ',' << closure.representatives[i] << ',' << closure.orbit_sizes[i]
        << '\n';
  r.csv = csv.str();
  std::ostringstream text;
  text << "orbits q=" << fields.q() << ": affine-square " << affine.orbit_count << " orbit(s), "
       << "after inversion closure " << closure.orbit_count << " orbit(s)\n";
  r.text = text.str();
  return r;
}

Rendered run_suite_command(const RunConfig& config, const std::optional<GrowthCache>& cache) {
  Rendered r;
  SuiteOptions options;
  options.cache = cache ? &*cache : nullptr;
  options.seed = config.seed;
  options.element_budget = config.element_budget;
  r.report = run_suite(options);
  r.payload = nullptr;
  r.csv = render_csv(r.report);
  return r;
}

json checks_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"reference", c.reference},
                      {"status", status_name(c.status)},
                      {"witness", c.witness}});
  return checks;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  try {
    validate(config);
    std::optional<GrowthCache> cache;
    if (!config.cache_dir.empty()) cache.emplace(config.cache_dir, &std::cerr);

    Rendered r;
    switch (config.command) {
      case Command::Growth: r = run_growth(config, cache); break;
      case Command::Period: r = run_period(config, cache); break;
      case Command::TreeVerify: r = run_tree_verify(config); break;
      case Command::TreePeriod: r = run_tree_period(config); break;
      case Command::Invariant: r = run_invariant(config); break;
      case Command::Orbit: r = run_orbit(config); break;
      case Command::Suite: r = run_suite_command(config, cache); break;
    }
    outcome.report = r.report;
    outcome.exit_code = r.report.passed() ? kExitPass : kExitCheckFailure;
    switch (config.format) {
      case OutputFormat::Json:
        outcome.output = detail::dump(json{{"schema_version", kSchemaVersion},
                                           {"kind", "run"},
                                           {"command", command_name(config.command)},
                                           {"result", r.payload},
                                           {"checks", checks_json(r.report)},
                                           {"passed", r.report.passed()}});
        break;
      case OutputFormat::Csv:
        outcome.output = r.csv;
        break;
      case OutputFormat::Text:
        outcome.output = r.text + render_text(r.report);
        break;
    }
  } catch (const InvalidArgumentError& e) {
    outcome.output = std::string("error: ") + e.what() + "\n";
    outcome.exit_code = kExitUsage;
  } catch (const BudgetExceededError& e) {
    outcome.output = std::string("error: ") + e.what() + "\n";
    outcome.exit_code = kExitBudget;
  } catch (const ModelError& e) {
    outcome.output = std::string("model inconsistency: ") + e.what() + "\n";
    outcome.exit_code = kExitCheckFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    outcome.output = std::string("error: ") + e.what() + "\n";
    outcome.exit_code = kExitUsage;
  }
  return outcome;
}

}  // namespace stdist::io
