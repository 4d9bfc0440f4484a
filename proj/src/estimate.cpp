#include "actdyn/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "actdyn/error.hpp"

namespace actdyn {

namespace {

constexpr double kMinRatio = 1e-9;
constexpr int kMaxHalvings = 30;

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

void check_window(std::span<const std::vector<double>> window, const CollaborationNetwork& net) {
  if (window.size() < 2) throw std::invalid_argument("estimation window needs at least two weeks");
  for (const auto& x : window) {
    if (x.size() != net.node_count()) {
      throw std::invalid_argument("weekly state length does not match node count");
    }
  }
}

}  // namespace

void EstimationConfig::validate() const {
  if (T_weeks < 2) throw std::invalid_argument("T_weeks must be at least 2");
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (ratio_init && !(*ratio_init > 0.0)) throw std::invalid_argument("ratio_init must be positive");
  DynamicsParams d = dynamics;
  d.ratio = 1.0;
  d.validate();
}

bool RatioSeries::any_converged() const {
  return std::any_of(entries.begin(), entries.end(), [](const RatioEntry& e) { return e.ok() && e.converged; });
}

std::vector<double> RatioSeries::ratios() const {
  std::vector<double> out;
  for (const auto& e : entries) {
    if (e.ok()) out.push_back(e.ratio);
  }
  return out;
}

std::vector<double> simulate_one_week(const CollaborationNetwork& net, std::span<const double> x_k,
                                      double ratio, const DynamicsParams& dyn) {
  if (x_k.size() != net.node_count()) {
    throw std::invalid_argument("simulate_one_week: state length does not match node count");
  }
  const std::size_t sub = dyn.substeps();
  std::vector<double> x(x_k.begin(), x_k.end()), scratch;
  if (!euler_advance(net, x, ratio, dyn.tau_per_step / static_cast<double>(sub), sub, scratch)) {
    throw NumericalError("simulated week diverged");
  }
  return x;
}

double objective(std::span<const std::vector<double>> window, const CollaborationNetwork& net,
                 double ratio, const ObjectiveSpec& spec, double kappa1,
                 const DynamicsParams& dyn) {
  check_window(window, net);
  const std::size_t sub = dyn.substeps();
  const double h = dyn.tau_per_step / static_cast<double>(sub);
  std::vector<double> x, scratch;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < window.size(); ++k) {
    x = window[k];
    if (!euler_advance(net, x, ratio, h, sub, scratch)) return std::numeric_limits<double>::infinity();
    const auto& observed = window[k + 1];
    if (spec.kind == ObjectiveKind::AggregateSum) {
      const double e = sum(observed) - sum(x);
      total += e * e;
    } else {
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = observed[i] - x[i];
        total += e * e;
      }
    }
  }
  double j = total / static_cast<double>(window.size() - 1);
  if (spec.gamma > 0.0) j += spec.gamma * (kappa1 - ratio) * (kappa1 - ratio);
  return j;
}

ObjectiveDerivatives objective_derivatives(std::span<const std::vector<double>> window,
                                           const CollaborationNetwork& net, double ratio,
                                           const ObjectiveSpec& spec, double kappa1,
                                           const DynamicsParams& dyn) {
  auto f = [&](double r) { return objective(window, net, r, spec, kappa1, dyn); };
  const double h = 1e-6 * std::max(1.0, ratio);
  ObjectiveDerivatives d;
  d.value = f(ratio);
  const double jp = f(ratio + h);
  const double jm = f(ratio - h);
  d.gradient = (jp - jm) / (2.0 * h);
  d.curvature = (jp - 2.0 * d.value + jm) / (h * h);
  return d;
}

FitResult fit_ratio(std::span<const std::vector<double>> window, const CollaborationNetwork& net,
                    double kappa1, const EstimationConfig& cfg, const ObjectiveSpec& spec) {
  cfg.validate();
  check_window(window, net);
  if (spec.gamma < 0.0) throw std::invalid_argument("regularization gamma must be nonnegative");
  const bool all_zero = std::all_of(window.begin(), window.end(), [](const std::vector<double>& x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
  });
  if (all_zero && spec.gamma == 0.0) {
    throw NumericalError("window has no activity: objective is constant, ratio not identifiable");
  }

  auto f = [&](double r) { return objective(window, net, r, spec, kappa1, cfg.dynamics); };

  double r = std::max(cfg.ratio_init.value_or(kappa1), kMinRatio);
  double j = f(r);
  if (!std::isfinite(j)) {
    r = std::max(2.0 * kappa1, kMinRatio);
    j = f(r);
    if (!std::isfinite(j)) {
      throw NumericalError("objective is not finite at the initial ratio or at 2*kappa1");
    }
  }

  FitResult res;
  res.objective_history.push_back(j);
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    res.iterations = static_cast<std::size_t>(it);
    const auto [value, grad, curv] = objective_derivatives(window, net, r, spec, kappa1, cfg.dynamics);
    (void)value;

    // Where the objective is concave the Newton step is taken with |curvature|,
    // which keeps it a descent direction on the flat tails of the objective.
    double step;
    if (cfg.use_newton && std::isfinite(curv) && curv != 0.0) {
      step = -grad / std::abs(curv);
    } else {
      step = -cfg.eta * grad;
    }
    if (!std::isfinite(step)) step = -std::copysign(cfg.eta, grad);

    bool accepted = false;
    bool small_update = false;
    for (int halving = 0; halving <= kMaxHalvings; ++halving, step *= 0.5) {
      const double candidate = std::max(r + step, kMinRatio);
      const double update = candidate - r;
      if (std::abs(update) < cfg.eps) {
        small_update = true;
        break;
      }
      const double jc = f(candidate);
      if (jc <= j) {
        r = candidate;
        j = jc;
        res.objective_history.push_back(j);
        accepted = true;
        break;
      }
    }
    // No decreasing step exists at the resolution of the objective: r is a
    // numerical stationary point.
    if (small_update || !accepted) {
      res.converged = true;
      break;
    }
  }
  res.ratio = r;
  res.final_objective = j;
  return res;
}

RatioSeries sliding_window_fit(const WeeklyStates& states, const CollaborationNetwork& net,
                               double kappa1, const EstimationConfig& cfg,
                               const ObjectiveSpec& spec) {
  cfg.validate();
  const auto t = static_cast<std::size_t>(cfg.T_weeks);
  if (states.size() < t) {
    throw InputError("series has " + std::to_string(states.size()) + " weeks, fewer than T_weeks = " +
                     std::to_string(t));
  }
  RatioSeries out;
  for (std::size_t first = 0; first + t <= states.size(); ++first) {
    RatioEntry e;
    e.first_week = first;
    e.last_week = first + t - 1;
    e.target_week = first + t;
    try {
      const auto fit = fit_ratio(std::span(states).subspan(first, t), net, kappa1, cfg, spec);
      e.ratio = fit.ratio;
      e.converged = fit.converged;
      e.iterations = fit.iterations;
      e.objective = fit.final_objective;
    } catch (const NumericalError& ex) {
      e.error = ex.what();
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

Prediction predict_weeks(const WeeklyStates& states, const CollaborationNetwork& net,
                         const RatioSeries& ratios, const DynamicsParams& dyn, bool chained) {
  Prediction out;
  bool previous_valid = false;
  for (const auto& e : ratios.entries) {
    if (!e.ok()) continue;
    if (e.target_week == 0 || e.target_week > states.size()) {
      throw std::invalid_argument("predict_weeks: target week outside the series");
    }
    const bool chain_from_prediction =
        chained && previous_valid && out.target_weeks.back() + 1 == e.target_week;
    const auto& seed = chain_from_prediction ? out.states.back() : states[e.target_week - 1];
    std::vector<double> x;
    bool diverged = false;
    try {
      x = simulate_one_week(net, seed, e.ratio, dyn);
    } catch (const NumericalError&) {
      diverged = true;
      x.assign(net.node_count(), std::numeric_limits<double>::quiet_NaN());
    }
    out.target_weeks.push_back(e.target_week);
    out.aggregate.push_back(sum(x));
    out.diverged.push_back(diverged);
    out.states.push_back(std::move(x));
    previous_valid = !diverged;
  }
  return out;
}

}  // namespace actdyn
