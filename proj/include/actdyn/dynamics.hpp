#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "actdyn/graph.hpp"

namespace actdyn {

/// Integration settings for the dimensionless activity model
///   dx_i/dtau = -ratio * x_i + sum_j A_ij x_j / sqrt(1 + x_j^2).
struct DynamicsParams {
  double ratio = 1.0;         // lambda / mu
  double dtau = 0.01;         // Euler step
  double tau_per_step = 1.0;  // dimensionless time per observation step (one week)

  void validate() const;
  /// Number of Euler sub-steps per observation step, ceil(tau_per_step / dtau).
  std::size_t substeps() const;
};

/// Dimensional influence parameters; only used by the conversion helpers.
struct PeerInfluenceParams {
  double q = 1.0;    // peer influence intensity
  double a_c = 1.0;  // critical activity

  double mu() const { return q / a_c; }
};

inline constexpr double kDivergenceBound = 1e9;

struct ActivityState {
  std::vector<double> x;
  double tau = 0.0;
};

struct SimulationTrace {
  std::vector<ActivityState> states;  // states[0] is the initial state
  std::vector<double> aggregate;      // sum of x per recorded state
  bool diverged = false;
  std::size_t negativity_events = 0;  // observation steps ending with some x_i < 0
};

enum class Stability { Stable, Unstable };

struct StabilityClass {
  Stability stability = Stability::Unstable;
  bool marginal = false;
};

/// x / sqrt(1 + x^2): dimensionless saturating peer influence.
double peer_influence(double x);

/// dg/da = q a_c^2 / (a_c^2 + a^2)^{3/2} for g(a) = q a / sqrt(a_c^2 + a^2).
double influence_growth_rate(double a, const PeerInfluenceParams& p);

/// Dimensional influence g(a) = q a / sqrt(a_c^2 + a^2).
double influence(double a, const PeerInfluenceParams& p);

inline double to_relative_activity(double a, const PeerInfluenceParams& p) { return a / p.a_c; }
inline double to_dimensionless_time(double t, const PeerInfluenceParams& p) { return p.mu() * t; }
inline double ratio_from_rates(double lambda, const PeerInfluenceParams& p) { return lambda / p.mu(); }

void derivative(const CollaborationNetwork& net, std::span<const double> x, double ratio,
                std::span<double> out);
std::vector<double> derivative(const CollaborationNetwork& net, const ActivityState& state,
                               double ratio);

/// Advances `x` in place by `steps` Euler steps of size `h`. Returns false and
/// stops as soon as some |x_i| exceeds kDivergenceBound or becomes non-finite.
/// `scratch` is resized as needed.
bool euler_advance(const CollaborationNetwork& net, std::vector<double>& x, double ratio,
                   double h, std::size_t steps, std::vector<double>& scratch);

SimulationTrace euler_integrate(const CollaborationNetwork& net, std::span<const double> x0,
                                const DynamicsParams& params, std::size_t n_steps);

/// Same, with a per-step ratio schedule: step k uses ratios[k] (params.ratio is ignored).
SimulationTrace euler_integrate(const CollaborationNetwork& net, std::span<const double> x0,
                                std::span<const double> ratios, const DynamicsParams& params);

/// Stable iff kappa1 < ratio; the boundary is Unstable and flagged marginal.
StabilityClass classify_stability(double kappa1, double ratio);

struct FixedPointResult {
  bool found = false;
  std::vector<double> x;
  double tau = 0.0;            // integration time used
  double derivative_norm = 0;  // ||dx/dtau||_inf at the returned state
  std::string diagnostic;
};

/// Integrates from `x_init` until ||dx/dtau||_inf < tol. Reports not-found when
/// the trajectory collapses onto the inactive state, diverges, or `max_tau`
/// is exhausted.
FixedPointResult find_active_fixed_point(const CollaborationNetwork& net, double ratio,
                                         std::span<const double> x_init, double tol = 1e-8,
                                         double max_tau = 1e4, double dtau = 0.01);

/// c0 * exp((kappa_r - ratio) * tau): linearised evolution of one eigenmode.
double linearized_coefficient_decay(double kappa_r, double ratio, double tau, double c0);

}  // namespace actdyn
