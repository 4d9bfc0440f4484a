// actdyn: command line front end for the activity dynamics library.
//
// Exit codes: 0 success, 1 input error, 2 numerical failure (divergence,
// non-convergence, unidentifiable ratio).

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "actdyn/dynamics.hpp"
#include "actdyn/error.hpp"
#include "actdyn/estimate.hpp"
#include "actdyn/io.hpp"
#include "actdyn/metrics.hpp"
#include "actdyn/preprocess.hpp"
#include "actdyn/spectral.hpp"
#include "actdyn/synth.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace actdyn;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write " + p.string());
  return out;
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  return in;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw InputError("config key '" + key + "': not a number: '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InputError("config key '" + key + "': not a boolean: '" + v + "'");
}

ObjectiveKind parse_objective(const std::string& v) {
  if (v == "aggregate") return ObjectiveKind::AggregateSum;
  if (v == "peruser") return ObjectiveKind::PerUser;
  throw InputError("objective must be 'aggregate' or 'peruser', got '" + v + "'");
}

const char* objective_name(ObjectiveKind k) { return k == ObjectiveKind::AggregateSum ? "aggregate" : "peruser"; }

/// Numerical settings shared by estimate and simulate. Unset flags fall back to
/// the config file, then to library defaults.
struct NumericFlags {
  std::optional<double> dtau, tau_per_step, eta, eps, gamma, ratio_init;
  std::optional<int> T, max_iter;
  std::optional<std::string> objective;
  bool no_newton = false;
  bool chained = false;
  std::string config;

  void add_dynamics(CLI::App* app) {
    app->add_option("--dtau", dtau, "Euler step in dimensionless time");
    app->add_option("--tau-per-step", tau_per_step, "Dimensionless time per observed week");
    app->add_option("--config", config, "Flat key = value config file; flags take precedence")
        ->check(CLI::ExistingFile);
  }

  void add_estimation(CLI::App* app) {
    add_dynamics(app);
    app->add_option("--T", T, "Observed weeks per fitting window");
    app->add_option("--eta", eta, "Gradient-descent learning rate");
    app->add_option("--eps", eps, "Convergence threshold on the ratio update");
    app->add_option("--max-iter", max_iter, "Iteration cap per window");
    app->add_option("--objective", objective, "aggregate | peruser");
    app->add_option("--gamma", gamma, "Regularisation weight on (kappa1 - ratio)^2");
    app->add_option("--ratio-init", ratio_init, "Initial ratio (default kappa1)");
    app->add_flag("--no-newton", no_newton, "Plain gradient descent");
    app->add_flag("--chained", chained, "Seed each predicted week from the previous prediction");
  }

  void resolve(EstimationConfig& cfg, ObjectiveSpec& spec, bool& chain) const {
    std::map<std::string, std::string> kv;
    if (!config.empty()) {
      auto in = open_in(config);
      kv = io::read_config(in);
    }
    for (const auto& [k, v] : kv) {
      if (k == "dtau") cfg.dynamics.dtau = to_double(k, v);
      else if (k == "tau_per_step") cfg.dynamics.tau_per_step = to_double(k, v);
      else if (k == "T") cfg.T_weeks = static_cast<int>(to_double(k, v));
      else if (k == "eta") cfg.eta = to_double(k, v);
      else if (k == "eps") cfg.eps = to_double(k, v);
      else if (k == "max_iter") cfg.max_iterations = static_cast<int>(to_double(k, v));
      else if (k == "use_newton") cfg.use_newton = to_bool(k, v);
      else if (k == "ratio_init") cfg.ratio_init = to_double(k, v);
      else if (k == "objective") spec.kind = parse_objective(v);
      else if (k == "gamma") spec.gamma = to_double(k, v);
      else if (k == "chained") chain = to_bool(k, v);
      else throw InputError("unknown config key '" + k + "'");
    }
    if (dtau) cfg.dynamics.dtau = *dtau;
    if (tau_per_step) cfg.dynamics.tau_per_step = *tau_per_step;
    if (T) cfg.T_weeks = *T;
    if (eta) cfg.eta = *eta;
    if (eps) cfg.eps = *eps;
    if (max_iter) cfg.max_iterations = *max_iter;
    if (no_newton) cfg.use_newton = false;
    if (ratio_init) cfg.ratio_init = *ratio_init;
    if (objective) spec.kind = parse_objective(*objective);
    if (gamma) spec.gamma = *gamma;
    if (chained) chain = true;
    if (spec.gamma < 0.0) throw InputError("gamma must be nonnegative");
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
};

json dynamics_json(const DynamicsParams& d) {
  return json{{"dtau", d.dtau}, {"tau_per_step", d.tau_per_step}, {"substeps", d.substeps()}};
}

json estimation_json(const EstimationConfig& c, const ObjectiveSpec& s, bool chained) {
  json j{{"T", c.T_weeks},
         {"eta", c.eta},
         {"eps", c.eps},
         {"max_iter", c.max_iterations},
         {"use_newton", c.use_newton},
         {"ratio_init", c.ratio_init ? json(*c.ratio_init) : json("kappa1")},
         {"objective", objective_name(s.kind)},
         {"gamma", s.gamma},
         {"chained", chained}};
  j["dynamics"] = dynamics_json(c.dynamics);
  return j;
}

json preprocess_json(const PreprocessConfig& p) {
  return json{{"rolling_window_days", p.rolling_window_days},
              {"min_total_activity", p.min_total_activity},
              {"window_weeks", p.window_weeks},
              {"lead_weeks", p.lead_weeks}};
}

json digests(const std::vector<fs::path>& files) {
  json j = json::object();
  for (const auto& f : files) j[f.string()] = io::sha256_file(f);
  return j;
}

void write_manifest(const fs::path& path, const std::string& command, const std::vector<std::string>& argv,
                    json config, const std::vector<fs::path>& inputs, const std::vector<fs::path>& outputs,
                    json results) {
  json m;
  m["command"] = command;
  m["argv"] = argv;
  m["tool_version"] = kVersion;
  m["wall_clock_utc"] = utc_now();
  m["config"] = std::move(config);
  m["inputs"] = digests(inputs);
  m["outputs"] = digests(outputs);
  m["results"] = std::move(results);
  auto out = open_out(path);
  out << m.dump(2) << '\n';
}

SpectralResult spectral_or_fail(const CollaborationNetwork& net) {
  if (net.node_count() == 0) throw InputError("network has no nodes");
  return largest_eigenvalue(net);
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  std::string events, mode = "qa", out_network, activity_out;
  PreprocessConfig pre;
};

int run_ingest(const IngestArgs& a) {
  auto in = open_in(a.events);
  const auto events = io::read_events_csv(in);
  const auto net = a.mode == "qa" ? build_qa_network(events) : build_wiki_network(events);
  const double k1 = spectral_or_fail(net).kappa1;
  io::save_network(a.out_network, net, &k1);
  std::cerr << "network: n=" << net.node_count() << " m=" << net.edge_count() << " kappa1=" << k1 << '\n';

  json summary{{"n", net.node_count()},
               {"m", net.edge_count()},
               {"isolated_node_count", net.isolated_node_count()},
               {"kappa1", k1}};
  if (!a.activity_out.empty()) {
    auto trimmed = preprocess_events(events, a.pre);
    for (const auto& w : trimmed.warnings) std::cerr << "warning: " << w << '\n';
    auto out = open_out(a.activity_out);
    io::write_activity_csv(out, trimmed.series);
    summary["activity_users"] = trimmed.series.n_users();
    summary["activity_weeks"] = trimmed.series.n_weeks();
    summary["preprocess"] = preprocess_json(a.pre);
  }
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& network, bool spectrum) {
  const auto net = io::load_network(network);
  const auto sr = spectral_or_fail(net);
  json j{{"n", net.node_count()},
         {"m", net.edge_count()},
         {"isolated_node_count", net.isolated_node_count()},
         {"kappa1", sr.kappa1},
         {"iterations", sr.iterations},
         {"residual", sr.residual}};
  if (spectrum) j["spectrum"] = full_spectrum_small(net);
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string network, activity, out, manifest, predictions;
  NumericFlags flags;
};

int run_estimate(const EstimateArgs& a, const std::vector<std::string>& argv) {
  EstimationConfig cfg;
  ObjectiveSpec spec;
  bool chained = false;
  a.flags.resolve(cfg, spec, chained);

  const auto net = io::load_network(a.network);
  auto ain = open_in(a.activity);
  const auto series = io::read_activity_csv(ain);
  const auto states = align_to_network(series, net);
  const double k1 = spectral_or_fail(net).kappa1;
  std::cerr << "estimating " << series.n_weeks() << " weeks, T=" << cfg.T_weeks << ", kappa1=" << k1 << '\n';

  const auto ratios = sliding_window_fit(states, net, k1, cfg, spec);
  std::size_t failed = 0, unconverged = 0;
  for (const auto& e : ratios.entries) {
    if (!e.ok()) {
      ++failed;
      std::cerr << "window " << io::format_date(series.weeks[e.first_week]) << ": " << e.error << '\n';
    } else if (!e.converged) {
      ++unconverged;
    }
  }
  {
    auto out = open_out(a.out);
    io::write_ratio_csv(out, ratios, series.weeks);
  }
  std::vector<fs::path> outputs{a.out};

  json results{{"kappa1", k1},
               {"windows", ratios.entries.size()},
               {"failed_windows", failed},
               {"unconverged_windows", unconverged}};

  if (!a.predictions.empty() && failed < ratios.entries.size()) {
    const auto pred = predict_weeks(states, net, ratios, cfg.dynamics, chained);
    auto out = open_out(a.predictions);
    out << "target_week,predicted_aggregate,observed_aggregate\n";
    WeeklyStates observed, predicted;
    for (std::size_t k = 0; k < pred.target_weeks.size(); ++k) {
      const auto w = pred.target_weeks[k];
      out << io::format_date(series.weeks.front() + std::chrono::days{7 * static_cast<long>(w)}) << ','
          << io::format_double(pred.aggregate[k]) << ',';
      if (w < states.size()) {
        out << io::format_double(std::accumulate(states[w].begin(), states[w].end(), 0.0));
        if (!pred.diverged[k]) {
          observed.push_back(states[w]);
          predicted.push_back(pred.states[k]);
        }
      }
      out << '\n';
    }
    if (!observed.empty()) results["rmse_per_user_week"] = rmse_per_user_week(observed, predicted);
    outputs.emplace_back(a.predictions);
  }

  if (!a.manifest.empty()) {
    write_manifest(a.manifest, "estimate", argv, estimation_json(cfg, spec, chained),
                   {a.network, a.activity}, outputs, results);
  }
  std::cout << results.dump(2) << '\n';
  if (failed == ratios.entries.size()) {
    std::cerr << "error: no window could be fitted\n";
    return kExitNumerical;
  }
  if (!ratios.any_converged()) {
    std::cerr << "error: no window converged\n";
    return kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string network, ratios_file, init = "random", out, per_user, summary;
  std::optional<double> ratio;
  std::optional<int> weeks;
  std::uint64_t seed = 1;
  double init_lo = 0.0, init_hi = 0.1;
  NumericFlags flags;
};

std::vector<double> read_init(const fs::path& p, const CollaborationNetwork& net) {
  auto in = open_in(p);
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> x(net.node_count(), 0.0);
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    if (!header) {
      if (line.rfind("user,value", 0) != 0) throw InputError("init file line 1: expected header 'user,value'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError("init file line " + std::to_string(lineno) + ": expected 'user,value'");
    const auto idx = net.index_of(line.substr(0, comma));
    if (!idx) throw InputError("init file line " + std::to_string(lineno) + ": unknown user");
    x[*idx] = to_double("value", line.substr(comma + 1, line.find_last_not_of("\r") - comma));
  }
  return x;
}

int run_simulate(const SimulateArgs& a, const std::vector<std::string>& argv) {
  EstimationConfig cfg;
  ObjectiveSpec spec;
  bool chained = false;
  a.flags.resolve(cfg, spec, chained);
  DynamicsParams dyn = cfg.dynamics;

  const auto net = io::load_network(a.network);
  const double k1 = spectral_or_fail(net).kappa1;

  std::vector<double> schedule;
  if (a.ratio) {
    if (!a.weeks) throw InputError("--weeks is required with --ratio");
    if (*a.weeks < 1) throw InputError("--weeks must be at least 1");
    schedule.assign(static_cast<std::size_t>(*a.weeks), *a.ratio);
  } else {
    auto in = open_in(a.ratios_file);
    for (const auto& row : io::read_ratio_csv(in)) schedule.push_back(row.ratio);
    if (schedule.empty()) throw InputError("ratio file has no fitted ratios");
    if (a.weeks) {
      if (*a.weeks < 1) throw InputError("--weeks must be at least 1");
      if (static_cast<std::size_t>(*a.weeks) > schedule.size()) throw InputError("--weeks exceeds the number of ratios");
      schedule.resize(static_cast<std::size_t>(*a.weeks));
    }
  }
  for (double r : schedule) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InputError("ratios must be positive");
  }

  const auto x0 = a.init == "random" ? random_initial_activity(net, a.init_lo, a.init_hi, a.seed)
                                     : read_init(a.init, net);
  const auto trace = euler_integrate(net, x0, schedule, dyn);
  {
    auto out = open_out(a.out);
    io::write_trace_csv(out, trace);
  }
  std::vector<fs::path> outputs{a.out};
  if (!a.per_user.empty()) {
    auto out = open_out(a.per_user);
    io::write_trace_wide_csv(out, trace, net);
    outputs.emplace_back(a.per_user);
  }

  const double ref_ratio = schedule.back();
  const auto stab = classify_stability(k1, ref_ratio);
  json summary;
  if (a.ratio) {
    summary["ratio"] = *a.ratio;
  } else {
    summary["ratios"] = schedule;
  }
  summary["kappa1"] = k1;
  summary["stable"] = stab.stability == Stability::Stable;
  summary["marginal"] = stab.marginal;
  summary["diverged"] = trace.diverged;
  summary["negativity_events"] = trace.negativity_events;
  summary["steps"] = trace.states.size() - 1;
  summary["final_aggregate"] = trace.aggregate.back();
  summary["dynamics"] = dynamics_json(dyn);
  summary["seed"] = a.seed;
  if (!a.summary.empty()) {
    auto out = open_out(a.summary);
    out << summary.dump(2) << '\n';
  }
  std::cout << summary.dump(2) << '\n';
  (void)argv;
  if (trace.diverged) {
    std::cerr << "error: simulation diverged\n";
    return kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  std::string ratios, activity, json_out;
  std::optional<double> kappa1, mean_weekly, last_month;
};

std::string grouped(double v) {
  const long long r = std::llround(v);
  std::string digits = std::to_string(r < 0 ? -r : r), out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k > 0 && (digits.size() - k) % 3 == 0) out += ',';
    out += digits[k];
  }
  return (r < 0 ? "-" : "") + out;
}

int run_metrics(const MetricsArgs& a) {
  auto rin = open_in(a.ratios);
  std::vector<double> ratios;
  for (const auto& row : io::read_ratio_csv(rin)) ratios.push_back(row.ratio);
  const double rho = normalized_ratio_sd(ratios, *a.kappa1);

  MomentumReport report;
  if (a.mean_weekly && a.last_month) {
    report = momentum(rho, *a.mean_weekly, *a.last_month);
  } else if (!a.activity.empty()) {
    auto ain = open_in(a.activity);
    const auto series = io::read_activity_csv(ain);
    report = momentum(rho, series.weekly_totals());
  } else {
    throw InputError("metrics needs --activity or both --mean-weekly and --last-month");
  }

  json j{{"rho", report.rho},
         {"system_mass", report.system_mass},
         {"activity_mean_weekly", report.activity_mean_weekly},
         {"activity_last_month", report.activity_last_month},
         {"momentum_average", report.momentum_average},
         {"momentum_last_month", report.momentum_last_month}};
  if (!a.json_out.empty()) {
    auto out = open_out(a.json_out);
    out << j.dump(2) << '\n';
  }
  std::cout << "Activity (last month) | rho    | System Mass | Activity Momentum (last month)\n";
  std::ostringstream row;
  row << grouped(report.activity_mean_weekly) << " (" << grouped(report.activity_last_month) << ") | "
      << std::fixed << std::setprecision(4) << report.rho << " | " << std::setprecision(2) << report.system_mass
      << " | " << grouped(report.momentum_average) << " (" << grouped(report.momentum_last_month) << ")";
  std::cout << row.str() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  std::string scenario = "increasing", out_activity, out_network;
  ScenarioSpec spec;
};

int run_synth(SynthArgs a) {
  if (a.scenario == "increasing") a.spec.kind = ScenarioKind::Increasing;
  else if (a.scenario == "decreasing") a.spec.kind = ScenarioKind::Decreasing;
  else if (a.scenario == "variable") a.spec.kind = ScenarioKind::Variable;
  else throw InputError("scenario must be increasing, decreasing or variable");
  const auto net = karate_club();
  const auto series = scenario_series(a.spec, net);
  {
    auto out = open_out(a.out_activity);
    io::write_activity_csv(out, series);
  }
  if (!a.out_network.empty()) {
    const double k1 = largest_eigenvalue(net).kappa1;
    io::save_network(a.out_network, net, &k1);
  }
  json j{{"scenario", a.scenario},
         {"weeks", a.spec.n_weeks},
         {"seed", a.spec.seed},
         {"base_level", a.spec.base_level},
         {"step", a.spec.step},
         {"weekly_totals", series.weekly_totals()}};
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Activity dynamics on collaboration networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  const std::vector<std::string> args(argv, argv + argc);

  IngestArgs ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Build a collaboration network (and optionally weekly activity) from an event log");
  c_ingest->add_option("events", ingest.events, "Event CSV")->required()->check(CLI::ExistingFile);
  c_ingest->add_option("--mode", ingest.mode, "qa | wiki")->check(CLI::IsMember({"qa", "wiki"}));
  c_ingest->add_option("--out", ingest.out_network, "Edge list to write (sidecar gets .json appended)")->required();
  c_ingest->add_option("--activity-out", ingest.activity_out, "Write the preprocessed weekly activity CSV");
  c_ingest->add_option("--rolling-days", ingest.pre.rolling_window_days)->check(CLI::PositiveNumber);
  c_ingest->add_option("--min-activity", ingest.pre.min_total_activity);
  c_ingest->add_option("--window-weeks", ingest.pre.window_weeks)->check(CLI::PositiveNumber);
  c_ingest->add_option("--lead-weeks", ingest.pre.lead_weeks)->check(CLI::NonNegativeNumber);

  std::string analyze_net;
  bool analyze_spectrum = false;
  auto* c_analyze = app.add_subcommand("analyze", "Report size and spectral radius of a network");
  c_analyze->add_option("network", analyze_net, "Edge list")->required()->check(CLI::ExistingFile);
  c_analyze->add_flag("--spectrum", analyze_spectrum, "Also print the full spectrum (small graphs)");

  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate", "Fit weekly ratios with the sliding-window protocol");
  c_est->add_option("--network", est.network)->required()->check(CLI::ExistingFile);
  c_est->add_option("--activity", est.activity)->required()->check(CLI::ExistingFile);
  c_est->add_option("--out", est.out, "Ratio CSV")->required();
  c_est->add_option("--manifest", est.manifest, "Run manifest JSON");
  c_est->add_option("--predictions", est.predictions, "One-week-ahead prediction CSV");
  std::uint64_t est_seed = 0;
  c_est->add_option("--seed", est_seed, "Accepted for symmetry; estimation is deterministic");
  est.flags.add_estimation(c_est);

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Integrate the model on a network");
  c_sim->add_option("--network", sim.network)->required()->check(CLI::ExistingFile);
  auto* o_ratio = c_sim->add_option("--ratio", sim.ratio, "Constant ratio");
  auto* o_ratios = c_sim->add_option("--ratios", sim.ratios_file, "Ratio CSV, one ratio per simulated week")
                       ->check(CLI::ExistingFile);
  o_ratio->excludes(o_ratios);
  c_sim->add_option("--init", sim.init, "'random' or a CSV with header user,value");
  c_sim->add_option("--seed", sim.seed, "Seed for random initial activity");
  c_sim->add_option("--init-lo", sim.init_lo);
  c_sim->add_option("--init-hi", sim.init_hi);
  c_sim->add_option("--weeks", sim.weeks, "Observation steps to simulate");
  c_sim->add_option("--out", sim.out, "Aggregate trace CSV")->required();
  c_sim->add_option("--per-user", sim.per_user, "Wide per-user trace CSV");
  c_sim->add_option("--summary", sim.summary, "Summary JSON");
  sim.flags.add_dynamics(c_sim);

  MetricsArgs met;
  auto* c_met = app.add_subcommand("metrics", "System Mass and Activity Momentum from fitted ratios");
  c_met->add_option("--ratios", met.ratios)->required()->check(CLI::ExistingFile);
  c_met->add_option("--activity", met.activity, "Weekly activity CSV")->check(CLI::ExistingFile);
  c_met->add_option("--kappa1", met.kappa1)->required();
  c_met->add_option("--mean-weekly", met.mean_weekly, "Average weekly activity (overrides --activity)");
  c_met->add_option("--last-month", met.last_month, "Activity in the last four weeks (overrides --activity)");
  c_met->add_option("--json", met.json_out, "Write the report as JSON");

  SynthArgs syn;
  auto* c_syn = app.add_subcommand("synth", "Synthetic scenario on the karate club network");
  c_syn->add_option("--scenario", syn.scenario, "increasing | decreasing | variable");
  c_syn->add_option("--seed", syn.spec.seed);
  c_syn->add_option("--weeks", syn.spec.n_weeks)->check(CLI::PositiveNumber);
  c_syn->add_option("--base", syn.spec.base_level);
  c_syn->add_option("--step", syn.spec.step);
  c_syn->add_option("--out-activity", syn.out_activity)->required();
  c_syn->add_option("--out-network", syn.out_network, "Also write the karate club edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*c_ingest) return run_ingest(ingest);
    if (*c_analyze) return run_analyze(analyze_net, analyze_spectrum);
    if (*c_est) return run_estimate(est, args);
    if (*c_sim) {
      if (!sim.ratio && sim.ratios_file.empty()) throw InputError("one of --ratio or --ratios is required");
      return run_simulate(sim, args);
    }
    if (*c_met) return run_metrics(met);
    if (*c_syn) return run_synth(syn);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
