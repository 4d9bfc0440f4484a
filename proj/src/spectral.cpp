#include "actdyn/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace actdyn {

namespace {

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

SpectralResult largest_eigenvalue(const CollaborationNetwork& net, double tol,
                                  std::size_t max_iter) {
  const std::size_t n = net.node_count();
  if (n == 0) throw std::invalid_argument("largest_eigenvalue: empty network");
  if (!(tol > 0.0)) throw std::invalid_argument("largest_eigenvalue: tol must be positive");

  SpectralResult result;
  if (net.edge_count() == 0) {
    result.eigenvector.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    return result;
  }

  // kappa1 >= max(sqrt(max degree), mean degree)
  const double mean_degree = 2.0 * static_cast<double>(net.edge_count()) / static_cast<double>(n);
  const double lower = std::max(std::sqrt(static_cast<double>(net.max_degree())), mean_degree);
  const double shift = 0.5 * lower;

  std::mt19937_64 rng(0x5eed);
  std::vector<double> v(n), av(n);
  for (auto& x : v) x = 1.0 + 1e-3 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  double nv = norm2(v);
  for (auto& x : v) x /= nv;

  double residual = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    apply_adjacency(net, v, av);
    const double theta = dot(v, av);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = av[i] - theta * v[i];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    if (residual <= tol) {
      result.kappa1 = theta;
      result.iterations = it;
      result.residual = residual;
      result.eigenvector = std::move(v);
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = av[i] + shift * v[i];
    nv = norm2(v);
    for (auto& x : v) x /= nv;
  }
  throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         residual);
}

std::vector<double> full_spectrum_small(const CollaborationNetwork& net, std::size_t n_limit) {
  const std::size_t n = net.node_count();
  if (n > n_limit) {
    throw std::invalid_argument("full_spectrum_small: " + std::to_string(n) +
                                " nodes exceeds limit " + std::to_string(n_limit) +
                                "; use largest_eigenvalue for large networks");
  }
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& [i, j] : net.edges()) {
    a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
    a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolve failed");
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace actdyn
