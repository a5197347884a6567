#pragma once

#include <Eigen/Dense>
#include <limits>

#include "hubnet/prox.hpp"

namespace hubnet {

enum class FeasibleSet { kPositiveDefinite, kPsdFloor, kSymmetricOnly };

// Loss-specific part of the ADMM iteration. Implementations must return a
// theta inside their feasible set and be safe to share read-only across
// threads.
class LossModel {
 public:
  virtual ~LossModel() = default;

  virtual int dim() const = 0;

  // Minimizes loss(Theta) + (rho/2) ||Theta - target||_F^2 over the feasible
  // set, where target = theta_tilde - w1.
  virtual Eigen::MatrixXd theta_update(const Eigen::MatrixXd& target, double rho) const = 0;

  virtual double loss_value(const Eigen::MatrixXd& theta) const = 0;

  virtual FeasibleSet feasible_set() const = 0;
};

struct SolveOptions {
  double rho = 2.5;
  double tau = 1e-7;
  int max_iter = 10000;
};

struct SolveReport {
  HubDecomposition decomposition;
  int iterations = 0;
  bool converged = false;
  double final_relative_change = std::numeric_limits<double>::infinity();
  double objective_value = 0.0;
  double wall_seconds = 0.0;
  // Primal-vs-consensus Frobenius gaps at exit.
  double residual_theta = 0.0;
  double residual_v = 0.0;
  double residual_z = 0.0;
};

// Consensus ADMM: identity initialization, then Theta / Z / V updates,
// consensus projection, dual ascent, until the squared relative Frobenius
// change of Theta falls to tau or max_iter is hit (reported, not fatal).
SolveReport solve(const LossModel& loss, const PenaltyParams& params,
                  const SolveOptions& options = {});

// loss(Theta) + hub penalty at the given split. The decomposition must
// satisfy Theta = Z + V + V^T within feas_tol (max-abs); otherwise
// InvalidInput.
double objective_value(const LossModel& loss, const HubDecomposition& decomposition,
                       const PenaltyParams& params, double feas_tol = 1e-2);

}  // namespace hubnet
