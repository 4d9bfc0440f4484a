#include "actdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace actdyn {

void DynamicsParams::validate() const {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw std::invalid_argument("ratio must be positive");
  if (!(dtau > 0.0) || !std::isfinite(dtau)) throw std::invalid_argument("dtau must be positive");
  if (!(tau_per_step >= dtau) || !std::isfinite(tau_per_step)) {
    throw std::invalid_argument("tau_per_step must be at least dtau");
  }
}

std::size_t DynamicsParams::substeps() const {
  // tolerate representation error in e.g. 1.0 / 0.01
  return static_cast<std::size_t>(std::ceil(tau_per_step / dtau - 1e-9));
}

double peer_influence(double x) { return x / std::sqrt(1.0 + x * x); }

double influence(double a, const PeerInfluenceParams& p) {
  return p.q * a / std::sqrt(p.a_c * p.a_c + a * a);
}

double influence_growth_rate(double a, const PeerInfluenceParams& p) {
  const double u = a / p.a_c;
  const double s = 1.0 + u * u;
  return p.mu() / (s * std::sqrt(s));
}

void derivative(const CollaborationNetwork& net, std::span<const double> x, double ratio,
                std::span<double> out) {
  const std::size_t n = net.node_count();
  if (x.size() != n || out.size() != n) {
    throw std::invalid_argument("derivative: state length does not match node count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j : net.neighbors(i)) s += peer_influence(x[j]);
    out[i] = -ratio * x[i] + s;
  }
}

std::vector<double> derivative(const CollaborationNetwork& net, const ActivityState& state,
                               double ratio) {
  std::vector<double> out(net.node_count());
  derivative(net, state.x, ratio, out);
  return out;
}

bool euler_advance(const CollaborationNetwork& net, std::vector<double>& x, double ratio,
                   double h, std::size_t steps, std::vector<double>& scratch) {
  const std::size_t n = x.size();
  scratch.resize(n);
  for (std::size_t s = 0; s < steps; ++s) {
    derivative(net, x, ratio, scratch);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += h * scratch[i];
      ok &= std::abs(x[i]) <= kDivergenceBound;  // false for NaN too
    }
    if (!ok) return false;
  }
  return true;
}

SimulationTrace euler_integrate(const CollaborationNetwork& net, std::span<const double> x0,
                                std::span<const double> ratios, const DynamicsParams& params) {
  if (ratios.empty()) throw std::invalid_argument("euler_integrate: n_steps must be at least 1");
  if (x0.size() != net.node_count()) {
    throw std::invalid_argument("euler_integrate: initial state length does not match node count");
  }
  for (double r : ratios) {
    DynamicsParams p = params;
    p.ratio = r;
    p.validate();
  }
  const std::size_t sub = params.substeps();
  const double h = params.tau_per_step / static_cast<double>(sub);

  SimulationTrace trace;
  std::vector<double> x(x0.begin(), x0.end()), scratch;
  auto record = [&](double tau) {
    trace.aggregate.push_back(std::accumulate(x.begin(), x.end(), 0.0));
    trace.states.push_back({x, tau});
  };
  record(0.0);
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    const bool ok = euler_advance(net, x, ratios[k], h, sub, scratch);
    record(static_cast<double>(k + 1) * params.tau_per_step);
    if (!ok) {
      trace.diverged = true;
      break;
    }
    if (std::any_of(x.begin(), x.end(), [](double v) { return v < 0.0; })) {
      ++trace.negativity_events;
    }
  }
  return trace;
}

SimulationTrace euler_integrate(const CollaborationNetwork& net, std::span<const double> x0,
                                const DynamicsParams& params, std::size_t n_steps) {
  params.validate();
  if (n_steps < 1) throw std::invalid_argument("euler_integrate: n_steps must be at least 1");
  const std::vector<double> schedule(n_steps, params.ratio);
  return euler_integrate(net, x0, schedule, params);
}

StabilityClass classify_stability(double kappa1, double ratio) {
  if (!std::isfinite(kappa1) || !std::isfinite(ratio) || !(ratio > 0.0)) {
    throw std::invalid_argument("classify_stability: need finite kappa1 and positive ratio");
  }
  if (kappa1 < ratio) return {Stability::Stable, false};
  return {Stability::Unstable, kappa1 == ratio};
}

FixedPointResult find_active_fixed_point(const CollaborationNetwork& net, double ratio,
                                         std::span<const double> x_init, double tol,
                                         double max_tau, double dtau) {
  if (!(ratio > 0.0)) throw std::invalid_argument("find_active_fixed_point: ratio must be positive");
  if (x_init.size() != net.node_count()) {
    throw std::invalid_argument("find_active_fixed_point: state length does not match node count");
  }
  if (std::any_of(x_init.begin(), x_init.end(), [](double v) { return !(v > 0.0); })) {
    throw std::invalid_argument("find_active_fixed_point: initial state must be strictly positive");
  }

  // Below this sup-norm the state is treated as having collapsed to zero.
  const double zero_level = std::max(1e-6, 1e3 * tol);
  const double initial_level = *std::max_element(x_init.begin(), x_init.end());

  FixedPointResult res;
  std::vector<double> x(x_init.begin(), x_init.end()), dx(x.size());
  const auto max_steps = static_cast<std::size_t>(std::ceil(max_tau / dtau));
  for (std::size_t s = 0;; ++s) {
    derivative(net, x, ratio, dx);
    double dnorm = 0.0, xnorm = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      dnorm = std::max(dnorm, std::abs(dx[i]));
      xnorm = std::max(xnorm, std::abs(x[i]));
    }
    res.tau = static_cast<double>(s) * dtau;
    res.derivative_norm = dnorm;
    if (xnorm < std::min(zero_level, 1e-3 * initial_level) || xnorm == 0.0) {
      res.diagnostic = "trajectory collapsed onto the inactive state";
      return res;
    }
    if (dnorm < tol) {
      if (xnorm < zero_level) {
        res.diagnostic = "converged to the inactive state";
        return res;
      }
      res.found = true;
      res.x = std::move(x);
      return res;
    }
    if (s == max_steps) {
      res.diagnostic = "max_tau exhausted before convergence";
      return res;
    }
    bool ok = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += dtau * dx[i];
      ok &= std::abs(x[i]) <= kDivergenceBound;
    }
    if (!ok) {
      res.diagnostic = "trajectory diverged";
      return res;
    }
  }
}

double linearized_coefficient_decay(double kappa_r, double ratio, double tau, double c0) {
  return c0 * std::exp((kappa_r - ratio) * tau);
}

}  // namespace actdyn
