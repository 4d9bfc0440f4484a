#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "actdyn/dynamics.hpp"
#include "actdyn/graph.hpp"

namespace actdyn {

/// Weekly activity states in network index order: states[week][node].
using WeeklyStates = std::vector<std::vector<double>>;

enum class ObjectiveKind { AggregateSum, PerUser };

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::AggregateSum;
  double gamma = 0.0;  // weight of gamma * (kappa1 - ratio)^2
};

struct EstimationConfig {
  int T_weeks = 4;  // observed weeks per fitting window
  double eta = 1e-4;
  double eps = 1e-12;
  int max_iterations = 20000;
  bool use_newton = true;
  std::optional<double> ratio_init;  // kappa1 when unset
  DynamicsParams dynamics{};         // ratio field ignored

  void validate() const;
};

struct FitResult {
  double ratio = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  double final_objective = 0.0;
  std::vector<double> objective_history;  // objective after each accepted iterate, starting with the initial one
};

struct ObjectiveDerivatives {
  double value = 0.0;
  double gradient = 0.0;   // dJ/dratio, central difference
  double curvature = 0.0;  // d2J/dratio2, second-order difference
};

struct RatioEntry {
  std::size_t first_week = 0;   // window [first_week, last_week]
  std::size_t last_week = 0;
  std::size_t target_week = 0;  // last_week + 1; may equal the series length (forecast)
  double ratio = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  double objective = 0.0;
  std::string error;  // non-empty when the window could not be fitted

  bool ok() const { return error.empty(); }
};

struct RatioSeries {
  std::vector<RatioEntry> entries;

  bool any_converged() const;
  /// Ratios of successfully fitted windows.
  std::vector<double> ratios() const;
};

struct Prediction {
  std::vector<std::size_t> target_weeks;
  WeeklyStates states;  // one predicted state per target week
  std::vector<double> aggregate;
  std::vector<bool> diverged;
};

/// One observation step of the model from `x_k`. Throws NumericalError on divergence.
std::vector<double> simulate_one_week(const CollaborationNetwork& net, std::span<const double> x_k,
                                      double ratio, const DynamicsParams& dyn);

/// Mean squared one-week-ahead error over the consecutive weeks of `window`,
/// each prediction seeded from the observed preceding week, plus the optional
/// regularisation term. Returns +inf if any simulated week diverges.
double objective(std::span<const std::vector<double>> window, const CollaborationNetwork& net,
                 double ratio, const ObjectiveSpec& spec, double kappa1,
                 const DynamicsParams& dyn);

/// Finite-difference derivatives of the objective with step 1e-6 * max(1, ratio).
ObjectiveDerivatives objective_derivatives(std::span<const std::vector<double>> window,
                                           const CollaborationNetwork& net, double ratio,
                                           const ObjectiveSpec& spec, double kappa1,
                                           const DynamicsParams& dyn);

/// Gradient descent on the scalar ratio with optional Newton steps and
/// backtracking. Derivatives are central finite differences.
FitResult fit_ratio(std::span<const std::vector<double>> window, const CollaborationNetwork& net,
                    double kappa1, const EstimationConfig& cfg, const ObjectiveSpec& spec);

/// Fits every run of cfg.T_weeks consecutive weeks; the ratio of the window
/// ending at week w is used to predict week w + 1.
RatioSeries sliding_window_fit(const WeeklyStates& states, const CollaborationNetwork& net,
                               double kappa1, const EstimationConfig& cfg,
                               const ObjectiveSpec& spec);

/// One-week-ahead predictions for each fitted entry. By default every week is
/// seeded from the observed previous week; `chained` seeds from the previous
/// prediction instead when one exists.
Prediction predict_weeks(const WeeklyStates& states, const CollaborationNetwork& net,
                         const RatioSeries& ratios, const DynamicsParams& dyn,
                         bool chained = false);

}  // namespace actdyn
