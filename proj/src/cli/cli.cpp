#include "orthant/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "orthant/convergence.hpp"
#include "orthant/enumerate.hpp"
#include "orthant/model.hpp"
#include "orthant/report.hpp"

namespace orthant::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;
constexpr int kDefaultVerifyNmax = 200;

struct GlobalOptions {
  std::string input;
  std::string output;
  std::string mode;
  std::optional<std::uint64_t> budget;
};

std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ModelSpec load_model(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return parse_model_text(read_stream(in));
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::InvalidModel, "cannot read model file '" + path + "'");
  return parse_model_text(read_stream(file));
}

std::uint64_t budget_for(const GlobalOptions& global, const ModelSpec& model) {
  if (global.budget) return *global.budget;
  return model.options.budget.value_or(kDefaultBudget);
}

Mode mode_for(const GlobalOptions& global, const ModelSpec& model, Mode fallback) {
  if (!global.mode.empty()) return parse_mode(global.mode);
  return model.options.mode.value_or(fallback);
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

// Decimal text of exp(log_value) with 17 significant digits, without
// overflowing double.
std::string format_from_log(double log_value, bool negative = false) {
  if (std::isinf(log_value) && log_value < 0) return "0";
  std::string sign = negative ? "-" : "";
  if (log_value < 700.0) return sign + format_double(std::exp(log_value));
  const double log10_value = log_value / std::log(10.0);
  double exponent = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exponent);
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.16fe+%.0f", mantissa, exponent);
  return sign + buffer;
}

std::string format_point(const std::vector<int>& point) {
  std::string out = "\"(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(point[i]);
  }
  return out + ")\"";
}

bool all_ones(const StepWeights& weights) {
  for (const auto& w : weights) {
    if (w != 1) return false;
  }
  return true;
}

bool all_integers(const StepWeights& weights) {
  for (const auto& w : weights) {
    if (w.get_den() != 1) return false;
  }
  return true;
}

std::vector<double> log_totals_for(const ModelSpec& model, int n_max, Mode mode,
                                   std::uint64_t budget, bool origin) {
  EnumerateOptions options;
  options.budget_bytes = budget;
  if (mode == Mode::floating) {
    auto weights = to_double(model.weights);
    auto table = enumerate<double>(model.steps, weights, n_max, options);
    return origin ? table.log_origins() : table.log_totals();
  }
  if (all_integers(model.weights)) {
    std::vector<Integer> weights;
    if (!all_ones(model.weights)) {
      for (const auto& w : model.weights) weights.push_back(w.get_num());
    }
    auto table = enumerate<Integer>(model.steps, weights, n_max, options);
    return origin ? table.log_origins() : table.log_totals();
  }
  auto table = enumerate<Rational>(model.steps, model.weights, n_max, options);
  return origin ? table.log_origins() : table.log_totals();
}

// --- analyze -------------------------------------------------------------

json cmd_analyze(const ModelSpec& model) { return analysis_report(model, analyze(model)); }

// --- classify ------------------------------------------------------------

json cmd_classify(const ModelSpec& model) { return classification_report(model); }

// --- verify --------------------------------------------------------------

struct VerifyOptions {
  int n_max = 0;
  double tol_gamma = 0.05;
  double tol_exp = 0.1;
  std::vector<double> candidates;
  std::string p_evaluation = "at_point";
  bool excursions = false;
};

double relative_error(double estimate, double reference) {
  return std::fabs(estimate - reference) / std::fabs(reference);
}

json cmd_verify(const ModelSpec& model, const GlobalOptions& global, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int n_max = options.n_max > 0 ? options.n_max : model.options.n_max.value_or(kDefaultVerifyNmax);
  const Mode mode = mode_for(global, model, Mode::floating);
  const std::uint64_t budget = budget_for(global, model);
  PEvaluation p_evaluation;
  if (options.p_evaluation == "at_point") {
    p_evaluation = PEvaluation::at_point;
  } else if (options.p_evaluation == "at_ones") {
    p_evaluation = PEvaluation::at_ones;
  } else {
    throw Error(ErrorKind::InvalidModel, "--p-evaluation must be at_point or at_ones");
  }

  Analysis analysis = analyze(model, p_evaluation);
  const auto& formula = analysis.formula;
  auto log_counts = log_totals_for(model, n_max, mode, budget, false);

  json out;
  out["n_max"] = n_max;
  out["mode"] = mode == Mode::exact ? "exact" : "float";
  out["p_evaluation"] = options.p_evaluation;
  out["formula"] = to_json(formula);
  out["tol_gamma"] = options.tol_gamma;
  out["tol_exp"] = options.tol_exp;

  auto constant = estimate_constant(log_counts, formula.beta, formula.base, formula.exponent);
  out["constant"] = to_json(constant);
  bool pass_gamma = true;
  bool any_class = false;
  for (auto [name, estimate, reference] :
       {std::tuple{"even", &constant.even, formula.gamma_even}, std::tuple{"odd", &constant.odd, formula.gamma_odd}}) {
    if (!estimate->present) continue;
    any_class = true;
    const double error = relative_error(estimate->value, reference);
    out[std::string("gamma_extrapolated_") + name] = estimate->value;
    out[std::string("gamma_formula_") + name] = reference;
    out[std::string("gamma_ratio_") + name] = estimate->value / reference;
    out[std::string("gamma_rel_error_") + name] = error;
    pass_gamma = pass_gamma && error <= options.tol_gamma;
  }
  pass_gamma = pass_gamma && any_class;

  bool pass_exponent = true;
  if (n_max >= 60) {
    auto exponent = estimate_exponent(log_counts, formula.beta, formula.base);
    out["exponent"] = to_json(exponent);
    out["exponent_estimated"] = exponent.value;
    out["exponent_formula"] = formula.exponent.get_d();
    out["exponent_abs_error"] = std::fabs(exponent.value - formula.exponent.get_d());
    pass_exponent = std::fabs(exponent.value - formula.exponent.get_d()) <= options.tol_exp;
  } else {
    out["exponent"] = nullptr;
  }

  if (!options.candidates.empty()) {
    json candidates = json::array();
    json matched = json::array();
    const double reference = constant.even.present ? constant.even.value : constant.odd.value;
    for (double candidate : options.candidates) {
      const double error = relative_error(reference, candidate);
      const bool match = error <= options.tol_gamma;
      candidates.push_back({{"value", candidate}, {"rel_error", error}, {"match", match}});
      if (match) matched.push_back(candidate);
    }
    out["candidates"] = candidates;
    out["matched_candidates"] = matched;
  }

  bool pass_excursions = true;
  if (options.excursions) {
    auto log_origin = log_totals_for(model, n_max, mode, budget, true);
    std::vector<Rational> ones(model.steps.dimension(), Rational(1));
    const Rational base = inventory_eval<Rational>(model.steps, ones, analysis.weighting.omega);
    auto exponent = estimate_exponent(log_origin, analysis.weighting.beta, base);
    const double expected = -1.5 * static_cast<double>(model.steps.dimension());
    pass_excursions = std::fabs(exponent.value - expected) <= options.tol_exp;
    out["excursions"] = {{"base", to_string(base)},
                         {"exponent_estimated", exponent.value},
                         {"exponent_expected", expected},
                         {"estimate", to_json(exponent)},
                         {"pass", pass_excursions}};
  }

  out["pass_gamma"] = pass_gamma;
  out["pass_exponent"] = pass_exponent;
  out["non_convergence"] = constant.non_convergence();
  out["pass"] = pass_gamma && pass_exponent && pass_excursions;
  out["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

// --- regions -------------------------------------------------------------

std::vector<Rational> parse_axis_grid(const std::string& spec) {
  std::vector<Rational> points;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream stream(spec);
    for (std::string part; std::getline(stream, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw Error(ErrorKind::InvalidModel, "grid range must be lo:hi:count");
    const Rational lo = parse_rational(parts[0]);
    const Rational hi = parse_rational(parts[1]);
    const int count = std::stoi(parts[2]);
    if (lo <= 0 || hi <= 0 || count < 1) {
      throw Error(ErrorKind::InvalidModel, "grid range needs positive bounds and count >= 1");
    }
    for (int k = 0; k < count; ++k) {
      if (k == 0) {
        points.push_back(lo);
      } else if (k == count - 1) {
        points.push_back(hi);
      } else {
        const double t = static_cast<double>(k) / (count - 1);
        const double value = std::exp((1 - t) * std::log(lo.get_d()) + t * std::log(hi.get_d()));
        points.push_back(approximate_rational(value, 10000));
      }
    }
  } else {
    std::stringstream stream(spec);
    for (std::string part; std::getline(stream, part, ',');) points.push_back(parse_rational(part));
  }
  for (const auto& p : points) {
    if (p <= 0) throw Error(ErrorKind::NonPositiveWeight, "grid values must be positive");
  }
  if (points.empty()) throw Error(ErrorKind::InvalidModel, "empty grid");
  return points;
}

std::vector<std::vector<Rational>> parse_grid(const std::string& spec, std::size_t dimension) {
  std::vector<std::string> axes;
  std::stringstream stream(spec);
  for (std::string part; std::getline(stream, part, ';');) axes.push_back(part);
  if (axes.size() == 1) axes.assign(dimension, axes.front());
  if (axes.size() != dimension) {
    throw Error(ErrorKind::DimensionMismatch, "grid needs one axis spec or one per dimension");
  }
  std::vector<std::vector<Rational>> grid;
  for (const auto& axis : axes) grid.push_back(parse_axis_grid(axis));
  return grid;
}

void cmd_regions(const ModelSpec& model, const std::string& grid_spec, std::ostream& out) {
  const std::size_t d = model.steps.dimension();
  auto grid = parse_grid(grid_spec, d);
  // Sweeps α over the grid; a non-central model keeps its symmetric part ω.
  StepWeights omega;
  if (!all_ones(model.weights)) {
    auto weighting = resolve_weighting(model);
    if (weighting.kind == WeightingKind::factored) omega = weighting.omega;
  }

  for (std::size_t i = 0; i < d; ++i) out << "alpha_" << i + 1 << ",";
  out << "base,exponent,gamma_even\n";
  std::vector<std::size_t> index(d, 0);
  while (true) {
    std::vector<Rational> alpha;
    for (std::size_t i = 0; i < d; ++i) alpha.push_back(grid[i][index[i]]);
    auto formula = asymptotic_formula(model.steps, alpha, omega, Rational(1));
    for (const auto& a : alpha) out << to_string(a) << ",";
    out << to_string(formula.base) << "," << to_string(formula.exponent) << ","
        << format_double(formula.gamma_even) << "\n";
    std::size_t axis = d;
    while (axis-- > 0) {
      if (++index[axis] < grid[axis].size()) break;
      index[axis] = 0;
    }
    if (axis == static_cast<std::size_t>(-1)) break;
  }
}

// --- enumerate -----------------------------------------------------------

template <class Value>
std::string format_value(const Value& value, double log_scale) {
  if constexpr (std::is_same_v<Value, double>) {
    return value == 0 ? "0" : format_from_log(std::log(std::fabs(value)) + log_scale, value < 0);
  } else {
    (void)log_scale;
    return to_string(value);
  }
}

template <class Value>
void write_table(const EnumerationTable<Value>& table, bool by_endpoint, std::ostream& out) {
  if (by_endpoint) {
    out << "n,point,count\n";
    for (int n = 0; n <= table.n_max; ++n) {
      for (const auto& entry : table.layers[n]) {
        out << n << "," << format_point(entry.point) << "," << format_value(entry.value, table.log_scale[n])
            << "\n";
      }
    }
    return;
  }
  out << "n,total,origin\n";
  for (int n = 0; n <= table.n_max; ++n) {
    out << n << "," << format_value(table.totals[n], table.log_scale[n]) << ","
        << format_value(table.origin[n], table.log_scale[n]) << "\n";
  }
}

void cmd_enumerate(const ModelSpec& model, const GlobalOptions& global, int n_max_flag, bool by_endpoint,
                   std::ostream& out) {
  const int n_max = n_max_flag >= 0 ? n_max_flag : model.options.n_max.value_or(10);
  EnumerateOptions options;
  options.keep_layers = by_endpoint;
  options.budget_bytes = budget_for(global, model);
  const Mode mode = mode_for(global, model, Mode::exact);
  if (mode == Mode::floating) {
    auto weights = to_double(model.weights);
    write_table(enumerate<double>(model.steps, weights, n_max, options), by_endpoint, out);
  } else if (all_ones(model.weights)) {
    write_table(enumerate<Integer>(model.steps, {}, n_max, options), by_endpoint, out);
  } else {
    write_table(enumerate<Rational>(model.steps, model.weights, n_max, options), by_endpoint, out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotics and exact enumeration of weighted reflectable orthant walks", "orthant"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  std::uint64_t budget = 0;
  app.add_option("--input", global.input, "Model JSON file (default: stdin)");
  app.add_option("--output", global.output, "Write the report to FILE instead of stdout");
  app.add_option("--mode", global.mode, "Arithmetic for enumeration: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  auto* budget_option = app.add_option("--budget", budget, "Enumeration memory budget in bytes");

  std::string positional;
  auto add_model_arg = [&](CLI::App* sub) { sub->add_option("model", positional, "Model JSON file"); };

  auto* analyze_cmd = app.add_subcommand("analyze", "Asymptotic formula for a model (JSON)");
  add_model_arg(analyze_cmd);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the formula against exact enumeration (JSON)");
  add_model_arg(verify_cmd);
  verify_cmd->add_option("--nmax", verify.n_max, "Largest walk length");
  verify_cmd->add_option("--tol-gamma", verify.tol_gamma, "Relative tolerance on the constant");
  verify_cmd->add_option("--tol-exp", verify.tol_exp, "Absolute tolerance on the exponent");
  verify_cmd->add_option("--candidate", verify.candidates, "Reference constant to compare against (repeatable)")
      ->allow_extra_args(false);
  verify_cmd->add_option("--p-evaluation", verify.p_evaluation, "at_point or at_ones")
      ->check(CLI::IsMember({"at_point", "at_ones"}));
  verify_cmd->add_flag("--excursions", verify.excursions, "Also check the excursion exponent -3d/2");

  std::string grid;
  auto* regions_cmd = app.add_subcommand("regions", "Phase-diagram grid over alpha (CSV)");
  add_model_arg(regions_cmd);
  regions_cmd->add_option("--grid", grid,
                          "Per-axis values: 'v1,v2,...' or 'lo:hi:count' (log-spaced); ';' separates axes")
      ->required();

  int enumerate_nmax = -1;
  bool by_endpoint = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exact walk counts (CSV)");
  add_model_arg(enumerate_cmd);
  enumerate_cmd->add_option("--nmax", enumerate_nmax, "Largest walk length");
  enumerate_cmd->add_flag("--by-endpoint", by_endpoint, "One row per (n, endpoint)");

  auto* classify_cmd = app.add_subcommand("classify", "Weighting classification (JSON)");
  add_model_arg(classify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kValidationError;
  }
  if (budget_option->count() > 0) global.budget = budget;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!global.output.empty()) {
    file.open(global.output);
    if (!file) {
      err << "cannot open output file '" << global.output << "'\n";
      return kValidationError;
    }
    sink = &file;
  }

  const std::string model_path = positional.empty() ? global.input : positional;
  try {
    ModelSpec model = load_model(model_path, in);
    if (analyze_cmd->parsed()) {
      *sink << cmd_analyze(model).dump(2) << "\n";
    } else if (classify_cmd->parsed()) {
      *sink << cmd_classify(model).dump(2) << "\n";
    } else if (verify_cmd->parsed()) {
      *sink << cmd_verify(model, global, verify).dump(2) << "\n";
    } else if (regions_cmd->parsed()) {
      cmd_regions(model, grid, *sink);
    } else if (enumerate_cmd->parsed()) {
      cmd_enumerate(model, global, enumerate_nmax, by_endpoint, *sink);
    }
  } catch (const BudgetExceeded& e) {
    *sink << error_report(e).dump(2) << "\n";
    err << e.what() << "\n";
    return kBudgetError;
  } catch (const Error& e) {
    *sink << error_report(e).dump(2) << "\n";
    err << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    *sink << json{{"error", "InvalidModel"}, {"message", e.what()}}.dump(2) << "\n";
    err << e.what() << "\n";
    return kValidationError;
  }
  return kSuccess;
}

}  // namespace orthant::cli
