#include "bvineq/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "bvineq/bound_report.hpp"
#include "bvineq/corpus.hpp"
#include "bvineq/inequalities.hpp"
#include "bvineq/lambda_grid.hpp"
#include "bvineq/landau.hpp"
#include "bvineq/quadrature.hpp"
#include "bvineq/registry.hpp"
#include "bvineq/sharpness.hpp"

namespace bvineq {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string p_list_text(const std::vector<double>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ";" : "") + format_real(ps[i]);
  return s;
}

json config_json(const RunConfig& cfg) {
  json j{{"command", to_string(cfg.command)},
         {"seed", cfg.seed},
         {"count", cfg.count},
         {"p", cfg.p_list},
         {"tolerance", cfg.tolerance}};
  if (cfg.function_file) j["function"] = *cfg.function_file;
  if (cfg.registry_file) j["registry"] = *cfg.registry_file;
  return j;
}

// CSV provenance line: schema version and every config default in effect.
std::string csv_preamble(const RunConfig& cfg) {
  return fmt::format("# schema={} command={} seed={} count={} p={} tolerance={}\n", kSchemaVersion,
                     to_string(cfg.command), cfg.seed, cfg.count, p_list_text(cfg.p_list),
                     format_real(cfg.tolerance));
}

void emit_reports(const RunConfig& cfg, const std::vector<BoundReport>& reports, std::size_t violations,
                  std::ostream& out, json extra = json::object()) {
  if (cfg.output_format == OutputFormat::csv) {
    out << csv_preamble(cfg) << kBoundReportCsvHeader << '\n';
    for (const auto& r : reports) out << to_csv_row(r) << '\n';
    return;
  }
  json doc{{"schema", kSchemaVersion}, {"config", config_json(cfg)}};
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  doc["reports"] = std::move(arr);
  doc["summary"] = {{"reports", reports.size()}, {"violations", violations}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  out << doc.dump(2) << '\n';
}

std::vector<double> require_p_list(const RunConfig& cfg) {
  if (cfg.p_list.empty()) throw UsageError("--p needs at least one value");
  return cfg.p_list;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::verify: return "verify";
    case Command::sharpness: return "sharpness";
    case Command::landau: return "landau";
    case Command::minimize: return "minimize";
    case Command::kernel: return "kernel";
  }
  return "?";
}

void RunConfig::validate() const {
  if (count < 1) throw UsageError(fmt::format("--count must be >= 1 (got {})", count));
  if (!(tolerance > 0) || !std::isfinite(tolerance)) throw UsageError("--tolerance must be positive");
  for (double p : p_list) {
    if (!(p >= 1) || !std::isfinite(p)) throw UsageError(fmt::format("--p values must be finite and >= 1 (got {})", p));
  }
  const bool needs_p = command == Command::verify || command == Command::sharpness || command == Command::kernel;
  if (needs_p && p_list.empty()) throw UsageError("--p needs at least one value");
  if (samples < 1) throw UsageError("--samples must be >= 1");
  if (command == Command::minimize) {
    if (!(C > 0) || !(D > 0)) throw UsageError("minimize: C and D must be positive");
    if (!(r > 0 && r <= 1) || !(u > 0 && u <= 1)) throw UsageError("minimize: r and u must lie in (0, 1]");
  }
  if (command == Command::kernel && !(kernel_a < kernel_b)) throw UsageError("kernel: need a < b");
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto ps = require_p_list(cfg);

  std::vector<PiecewiseFunction> functions;
  std::vector<std::optional<std::uint64_t>> seeds;
  if (cfg.function_file) {
    try {
      functions.push_back(parse_function_spec(read_file(*cfg.function_file)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    seeds.emplace_back(std::nullopt);
  } else {
    for (int i = 0; i < cfg.count; ++i) {
      functions.push_back(corpus_function(cfg.seed, static_cast<std::uint64_t>(i)));
      seeds.emplace_back(corpus_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    }
  }

  std::vector<BoundReport> reports;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const auto& f = functions[i];
    std::vector<BoundReport> batch{baseline_mean_sup(f), reverse_sup(f)};
    for (double p : ps) {
      batch.push_back(baseline_mean_lp(f, p));
      batch.push_back(reverse_lp(f, p));
    }
    if (cfg.ostrowski) {
      auto sweep = ostrowski_sweep(f);
      batch.push_back(*std::min_element(sweep.begin(), sweep.end(),
                                        [](const auto& x, const auto& y) { return x.gap < y.gap; }));
    }
    for (auto& r : batch) {
      r.seed = seeds[i];
      reports.push_back(std::move(r));
    }
  }
  const auto violations = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [&](const auto& r) { return !r.holds(cfg.tolerance); }));
  emit_reports(cfg, reports, violations, out);
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_sharpness(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto ps = require_p_list(cfg);

  struct Row {
    std::string inequality;
    std::optional<double> p, b;
    double implied;
    double target;
  };
  std::vector<Row> rows;
  std::vector<SharpnessEstimate> estimates;

  GeneratorProfile profile;
  estimates.push_back(empirical_constant_search(SharpInequality::reverse_sup, 0, cfg.count, profile, cfg.seed));
  for (double p : ps) {
    estimates.push_back(empirical_constant_search(SharpInequality::reverse_lp, p, cfg.count, profile, cfg.seed));
  }
  for (const auto& e : estimates) {
    rows.push_back({inequality_name(e.inequality), e.p, e.witness.b, e.constant_lower_bound, e.target});
  }
  for (double p : ps) {
    for (double b : kStepFamily) rows.push_back({"step_family", p, b, step_constant_lower_bound(b, p), 0.5});
  }
  for (int k = 1; k <= 4; ++k) {
    const double b = std::pow(10.0, k);
    const double p = 10.0 * k;
    rows.push_back({"step_ladder", p, b, step_constant_lower_bound(b, p), 0.5});
  }
  rows.push_back({"step_ladder", 200.0, 1e4, step_constant_lower_bound(1e4, 200.0), 0.5});

  const auto violations = static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [&](const Row& r) { return r.implied > r.target + cfg.tolerance; }));

  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  if (cfg.output_format == OutputFormat::csv) {
    out << csv_preamble(cfg) << "inequality,p,b,implied_constant,target\n";
    for (const auto& r : rows) {
      out << fmt::format("{},{},{},{},{}\n", r.inequality, opt(r.p), opt(r.b), format_real(r.implied),
                         format_real(r.target));
    }
  } else {
    json doc{{"schema", kSchemaVersion}, {"config", config_json(cfg)}};
    json est = json::array();
    for (const auto& e : estimates) est.push_back(to_json(e));
    doc["estimates"] = std::move(est);
    json arr = json::array();
    for (const auto& r : rows) {
      json row{{"inequality", r.inequality}, {"implied_constant", r.implied}, {"target", r.target}};
      row["p"] = r.p ? json(*r.p) : json(nullptr);
      row["b"] = r.b ? json(*r.b) : json(nullptr);
      arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    doc["summary"] = {{"rows", rows.size()}, {"violations", violations}};
    out << doc.dump(2) << '\n';
  }
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_landau(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  std::vector<AnalyticTestFunction> registry;
  if (cfg.registry_file) {
    try {
      registry = parse_registry(read_file(*cfg.registry_file));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(e.what());
    }
  } else {
    registry = default_registry();
  }

  std::vector<BoundReport> reports;
  for (const auto& tf : registry) {
    if (tf.model) {
      for (const auto& source : growth_sources(tf)) {
        const double worst = growth_certificate_worst_ratio(tf, source.growth, cfg.samples, cfg.seed);
        // The certificate holds when the worst sampled ratio is <= 1 (+1e-9).
        auto r = BoundReport::make("growth_certificate", worst, 1.0 + 1e-9);
        r.function_digest = tf.name;
        r.params["V"] = source.growth.V;
        r.params["r"] = source.growth.r;
        r.params["samples"] = cfg.samples;
        reports.push_back(std::move(r));
      }
    }
    for (auto& r : landau_sweep(tf)) reports.push_back(std::move(r));
  }
  const auto violations = static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [&](const auto& r) {
    return r.name == "growth_certificate" ? r.gap < 0 : !r.holds(cfg.tolerance);
  }));
  json extra{{"reference", {{"classical_landau_half_line", kClassicalLandauHalfLine},
                            {"classical_landau_real_line", kClassicalLandauRealLine}}}};
  emit_reports(cfg, reports, violations, out, extra);
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_minimize(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto closed = minimize_landau_objective(cfg.C, cfg.D, cfg.r, cfg.u);
  const auto oracle = lambda_grid_minimum(cfg.C, cfg.D, cfg.r, cfg.u);
  const double delta = std::abs(closed.value - oracle.value) / closed.value;
  if (cfg.output_format == OutputFormat::csv) {
    out << csv_preamble(cfg) << "C,D,r,u,lambda0,value,oracle_lambda,oracle_value,relative_delta\n";
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", format_real(cfg.C), format_real(cfg.D), format_real(cfg.r),
                       format_real(cfg.u), format_real(closed.lambda0), format_real(closed.value),
                       format_real(oracle.lambda), format_real(oracle.value), format_real(delta));
  } else {
    json doc{{"schema", kSchemaVersion},
             {"config", config_json(cfg)},
             {"C", cfg.C},
             {"D", cfg.D},
             {"r", cfg.r},
             {"u", cfg.u},
             {"lambda0", closed.lambda0},
             {"value", closed.value},
             {"oracle_lambda", oracle.lambda},
             {"oracle_value", oracle.value},
             {"relative_delta", delta}};
    out << doc.dump(2) << '\n';
  }
  return delta <= cfg.tolerance ? kExitOk : kExitViolation;
}

int cmd_kernel(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const Interval iv(cfg.kernel_a, cfg.kernel_b);
  struct Row {
    double p, closed, quad, delta, q;
  };
  std::vector<Row> rows;
  for (double p : require_p_list(cfg)) {
    auto power = [&](double x) { return std::pow(midpoint_kernel(iv, x), p); };
    const double integral_p = quadrature::integrate(power, iv.a, iv.midpoint()).value +
                              quadrature::integrate(power, iv.midpoint(), iv.b).value;
    const double quad = std::pow(integral_p, 1 / p);
    const double closed = midpoint_kernel_pnorm(iv, p);
    rows.push_back({p, closed, quad, std::abs(closed - quad), kernel_growth_factor(p)});
  }
  const auto violations = static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [&](const Row& r) { return r.delta > cfg.tolerance * std::max(1.0, r.closed); }));
  if (cfg.output_format == OutputFormat::csv) {
    out << csv_preamble(cfg) << "p,closed_form,quadrature,abs_delta,q\n";
    for (const auto& r : rows) {
      out << fmt::format("{},{},{},{},{}\n", format_real(r.p), format_real(r.closed), format_real(r.quad),
                         format_real(r.delta), format_real(r.q));
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"p", r.p}, {"closed_form", r.closed}, {"quadrature", r.quad}, {"abs_delta", r.delta}, {"q", r.q}});
    }
    json doc{{"schema", kSchemaVersion}, {"config", config_json(cfg)}, {"interval", {iv.a, iv.b}}, {"rows", arr}};
    out << doc.dump(2) << '\n';
  }
  return violations == 0 ? kExitOk : kExitViolation;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::verify: return cmd_verify(cfg, out);
      case Command::sharpness: return cmd_sharpness(cfg, out);
      case Command::landau: return cmd_landau(cfg, out);
      case Command::minimize: return cmd_minimize(cfg, out);
      case Command::kernel: return cmd_kernel(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bvineq
