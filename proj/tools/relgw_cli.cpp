// Command-line front end: compute, product, punctured, verify, export.
//
// Exit codes: 0 success, 1 solver or consistency failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relgw/errors.hpp"
#include "relgw/puncture.hpp"
#include "relgw/seeds.hpp"
#include "relgw/serialize.hpp"
#include "relgw/solver.hpp"
#include "relgw/theta_ring.hpp"
#include "relgw/verify.hpp"

namespace {

using namespace relgw;

constexpr int kExitOk = 0;
constexpr int kExitSolver = 1;
constexpr int kExitConfig = 2;

enum class OutputFormat { Table, Json, Csv };

struct RunConfig {
  int max_degree = 2;
  std::optional<std::string> slab_file;
  std::optional<int> triple_bound_override;
  OutputFormat output_format = OutputFormat::Table;
  std::optional<std::string> output_path;
  bool dump_equations = false;
  bool allow_offgrade = false;
  unsigned jobs = 1;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

void validate(const RunConfig& config) {
  if (config.max_degree < 1) throw ConfigError("--max-degree must be >= 1");
  if (config.triple_bound_override && *config.triple_bound_override < 3 * config.max_degree) {
    throw ConfigError("--triple-bound must be >= 3 * max degree (" + std::to_string(3 * config.max_degree) + ")");
  }
  if (config.jobs < 1) throw ConfigError("--jobs must be >= 1");
}

SlabCoefficients load_slab(const RunConfig& config) {
  return config.slab_file ? load_slab_file(*config.slab_file) : default_slab_table();
}

ComputeOptions compute_options(const RunConfig& config) {
  ComputeOptions options;
  options.triple_bound = config.triple_bound_override;
  options.jobs = config.jobs;
  options.log = [](const std::string& message) { std::cerr << message << '\n'; };
  return options;
}

ComputeResult compute(const RunConfig& config, int degree) {
  return compute_up_to(degree, load_slab(config), compute_options(config));
}

void emit(const RunConfig& config, const std::string& text) {
  if (!config.output_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*config.output_path);
  if (!out) throw ConfigError("cannot write " + *config.output_path);
  out << text;
}

void dump_equations(const std::vector<SolveReport>& reports) {
  for (const auto& report : reports) {
    std::cerr << "# degree " << report.degree << ": " << report.equations.size() << " equations\n";
    for (const auto& e : report.equations) std::cerr << e.str() << '\n';
  }
}

std::string table_text(const InvariantTable& table, const std::vector<SolveReport>& reports) {
  std::ostringstream out;
  for (const auto& report : reports) {
    out << "degree " << report.degree << ": " << report.num_unknowns << " unknowns, " << report.num_equations
        << " equations, rank " << report.rank << ", triple bound " << report.triple_bound << ", "
        << (report.consistent ? "consistent" : "INCONSISTENT") << '\n';
    for (const auto& id : unknowns_at_degree(report.degree)) {
      const Rational value = id.kind() == InvariantKind::TwoPoint ? table.two_point(id.a(), id.b())
                                                                  : table.three_point_r0(id.a(), id.b());
      out << "  " << id.key() << " = " << value << '\n';
    }
  }
  return out.str();
}

int cmd_compute(const RunConfig& config) {
  const auto result = compute(config, config.max_degree);
  if (config.dump_equations) dump_equations(result.reports);
  switch (config.output_format) {
    case OutputFormat::Table:
      emit(config, table_text(result.table, result.reports));
      break;
    case OutputFormat::Json: {
      Json doc;
      doc["table"] = table_to_json(result.table);
      doc["reports"] = Json::array();
      for (const auto& r : result.reports) doc["reports"].push_back(report_to_json(r, config.dump_equations));
      emit(config, doc.dump(2) + "\n");
      break;
    }
    case OutputFormat::Csv:
      emit(config, table_to_csv(result.table));
      break;
  }
  return kExitOk;
}

int cmd_export(const RunConfig& config) {
  const auto result = compute(config, config.max_degree);
  if (config.dump_equations) dump_equations(result.reports);
  if (config.output_format == OutputFormat::Csv) {
    emit(config, table_to_csv(result.table));
  } else {
    emit(config, table_to_json(result.table).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_product(const RunConfig& config, int p, int q) {
  if (p < 0 || q < 0) throw ConfigError("generator indices must be non-negative");
  const auto result = compute(config, config.max_degree);
  const auto product = mul_basis(p, q, config.max_degree, ConcreteMode(result.table));
  switch (config.output_format) {
    case OutputFormat::Table:
      emit(config, to_string(product) + "\n");
      break;
    case OutputFormat::Json:
      emit(config, theta_to_json(product).dump(2) + "\n");
      break;
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "theta,k,value\n";
      for (auto it = product.terms().rbegin(); it != product.terms().rend(); ++it) {
        for (int k = 0; k <= it->second.bound(); ++k) {
          if (!it->second[k].is_zero()) out << "theta_" << it->first << ',' << k << ',' << it->second[k] << '\n';
        }
      }
      emit(config, out.str());
      break;
    }
  }
  return kExitOk;
}

std::string render_punctured(const RunConfig& config, const std::vector<PuncturedRow>& rows, bool single) {
  switch (config.output_format) {
    case OutputFormat::Json:
      return punctured_to_json(rows).dump(2) + "\n";
    case OutputFormat::Csv:
      return punctured_to_csv(rows);
    case OutputFormat::Table:
      break;
  }
  if (single) return rows.front().value.str() + "\n";
  std::ostringstream out;
  for (const auto& row : rows) {
    const auto& q = row.query;
    out << "N_{" << q.p << "," << q.q << "," << q.r << "}^" << q.d << " = " << row.value << '\n';
  }
  return out.str();
}

int cmd_punctured(const RunConfig& config, const std::vector<int>& args, std::optional<int> batch_degree, int cap) {
  if (batch_degree) {
    if (!args.empty()) throw ConfigError("give either P Q R D or --degree, not both");
    if (*batch_degree < 0) throw ConfigError("--degree must be >= 0");
    if (cap < 0) throw ConfigError("--cap must be >= 0");
    InvariantTable table;
    if (*batch_degree > 0) table = compute(config, *batch_degree).table;
    emit(config, render_punctured(config, punctured_table(*batch_degree, table, cap), false));
    return kExitOk;
  }
  if (args.size() != 4) throw ConfigError("punctured expects P Q R D (or --degree D for a batch)");
  const PuncturedQuery query{args[0], args[1], args[2], args[3]};
  if (query.p < 0 || query.q < 0 || query.r < 0 || query.d < 0) {
    throw ConfigError("contact orders and degree must be non-negative");
  }
  InvariantTable table;
  if (query.graded() && query.d > 0) table = compute(config, query.d).table;
  const Rational value = punctured_invariant(query, table, config.allow_offgrade);
  emit(config, render_punctured(config, {{query, value}}, true));
  return kExitOk;
}

int cmd_verify(const RunConfig& config) {
  VerifyOptions options;
  options.max_degree = config.max_degree;
  options.slab = load_slab(config);
  options.triple_bound = config.triple_bound_override;
  options.jobs = config.jobs;
  const auto outcome = run_golden_checks(options);

  std::ostringstream out;
  for (const auto& check : outcome.checks) {
    out << (check.passed ? "PASS  " : "FAIL  ") << check.name << "  (" << check.detail << ")\n";
  }
  if (outcome.computed && config.max_degree >= 3) {
    std::vector<SolveReport> derived;
    for (const auto& r : outcome.computed->reports) {
      if (r.degree >= 3) derived.push_back(r);
    }
    out << "derived invariants:\n" << table_text(outcome.computed->table, derived);
  }
  const bool ok = outcome.all_passed();
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  emit(config, out.str());
  return ok ? kExitOk : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative and punctured Gromov-Witten invariants of (P^2, smooth cubic)"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "table";
  std::optional<std::string> slab_file;
  std::optional<int> triple_bound;
  std::optional<std::string> output;
  app.add_option("--max-degree", config.max_degree, "Largest curve degree to solve (truncation bound)")
      ->capture_default_str();
  app.add_option("--slab-file", slab_file, "JSON file {\"slab\": {\"d\": \"n_d\"}} overriding the built-in coefficients");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();
  app.add_option("--output", output, "Write output to PATH instead of stdout");
  app.add_flag("--dump-equations", config.dump_equations, "Print the normalized system of every degree to stderr");
  app.add_flag("--allow-offgrade", config.allow_offgrade, "Return 0 for punctured queries with p+q-r != 3d");
  app.add_option("--triple-bound", triple_bound, "Largest p, q, r used when generating equations");
  app.add_option("--jobs", config.jobs, "Threads for equation generation")->capture_default_str();

  auto* compute_cmd = app.add_subcommand("compute", "Solve every degree up to --max-degree and print the table");
  auto* export_cmd = app.add_subcommand("export", "Write the solved table as JSON (default) or CSV");

  auto* product_cmd = app.add_subcommand("product", "Expand theta_P * theta_Q at truncation --max-degree");
  int p = 0;
  int q = 0;
  product_cmd->add_option("P", p)->required();
  product_cmd->add_option("Q", q)->required();

  auto* punctured_cmd = app.add_subcommand("punctured", "Punctured invariant N_{PQR}^D, or a batch with --degree");
  std::vector<int> punctured_args;
  std::optional<int> batch_degree;
  int cap = 6;
  punctured_cmd->add_option("args", punctured_args, "P Q R D")->expected(0, 4);
  punctured_cmd->add_option("--degree", batch_degree, "List every graded query of this degree");
  punctured_cmd->add_option("--cap", cap, "Largest p, q in a batch listing")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the known-value and consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    config.slab_file = slab_file;
    config.triple_bound_override = triple_bound;
    config.output_path = output;
    config.output_format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Table;
    validate(config);

    if (*compute_cmd) return cmd_compute(config);
    if (*export_cmd) return cmd_export(config);
    if (*product_cmd) return cmd_product(config, p, q);
    if (*punctured_cmd) return cmd_punctured(config, punctured_args, batch_degree, cap);
    if (*verify_cmd) return cmd_verify(config);
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const MissingCoefficient& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GradingViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitConfig;
}
