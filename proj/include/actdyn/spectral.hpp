#pragma once

#include <cstddef>
#include <vector>

#include "actdyn/error.hpp"
#include "actdyn/graph.hpp"

namespace actdyn {

struct SpectralResult {
  double kappa1 = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;            // ||A v - kappa1 v||_2 for unit v
  std::vector<double> eigenvector;  // unit 2-norm, nonnegative orientation
};

/// Thrown when power iteration exhausts its budget; carries the last residual.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : NumericalError(what), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

 private:
  double last_residual_;
};

/// Spectral radius of the adjacency matrix by shifted power iteration.
///
/// Iterates on A + cI with c a fraction of a lower bound on the spectral
/// radius, so the -kappa1 eigenvalue of bipartite graphs cannot tie with
/// +kappa1. The start vector is all-ones plus a small fixed-seed perturbation.
/// Converged when the Rayleigh-quotient residual drops below `tol`.
SpectralResult largest_eigenvalue(const CollaborationNetwork& net, double tol = 1e-10,
                                  std::size_t max_iter = 200000);

/// All eigenvalues of A, descending, from a dense symmetric eigensolve.
/// Refuses graphs with more than `n_limit` nodes.
std::vector<double> full_spectrum_small(const CollaborationNetwork& net,
                                        std::size_t n_limit = 2000);

}  // namespace actdyn
