#pragma once

#include <memory>

#include "hubnet/admm.hpp"

namespace hubnet {

// Inputs of the Gaussian log-determinant loss -log det Theta + tr(S Theta).
struct GaussianLossData {
  SymmetricMatrix s;  // empirical covariance
  int n = 0;          // sample count, used by the BIC
  int p = 0;

  GaussianLossData(SymmetricMatrix s_, int n_) : s(std::move(s_)), n(n_), p(s.dim()) {}
};

class GaussianLogDetLoss : public LossModel {
 public:
  explicit GaussianLogDetLoss(GaussianLossData data) : data_(std::move(data)) {}

  int dim() const override { return data_.p; }
  Eigen::MatrixXd theta_update(const Eigen::MatrixXd& target, double rho) const override;
  // +infinity outside the positive-definite cone.
  double loss_value(const Eigen::MatrixXd& theta) const override;
  FeasibleSet feasible_set() const override { return FeasibleSet::kPositiveDefinite; }

  const GaussianLossData& data() const { return data_; }

 private:
  GaussianLossData data_;
};

// Closed-form Theta step: eigendecompose (target - S/rho) = U diag(d) U^T and
// return U diag((d + sqrt(d^2 + 4/rho)) / 2) U^T, always positive definite.
Eigen::MatrixXd hgl_theta_update(const Eigen::MatrixXd& s, const Eigen::MatrixXd& target,
                                 double rho);

struct HglOptions {
  SolveOptions solve;
  bool screening = false;
};

// Hub graphical lasso. With screening on, the sufficient block condition
// partitions the variables first and each block is solved independently;
// off-block entries of the assembled Theta, V, Z are exact zeros.
SolveReport hgl_solve(const GaussianLossData& data, const PenaltyParams& params,
                      const HglOptions& options = {});

// Connected components of the graph with an edge wherever
// |S_jj'| >= min(lambda1, lambda2/2). The HGL solution is block diagonal
// with respect to the result.
Partition sufficient_block_condition(const SymmetricMatrix& s, const PenaltyParams& params);

// True iff min(lambda1, (lambda2+lambda3)/2) > |S_jj'| for every cross-block
// pair; false means the solution cannot be block diagonal for this partition.
bool necessary_block_condition(const SymmetricMatrix& s, const PenaltyParams& params,
                               const Partition& partition);

// Graphical lasso baseline: the q=1 arrangement lambda1 = lambda2 + lambda3
// = 2*lambda, whose effective l1 tuning parameter is exactly lambda.
SolveReport glasso_mode_solve(const GaussianLossData& data, double lambda,
                              const SolveOptions& options = {});

// Stationarity certificate from the residual R = -Theta^{-1} + S and the dual
// feasibility constraints: the implied multiplier -R/lambda1 must vanish on
// the diagonal, equal sign(Z_ij) where Z is active, and respect the box and
// pair bounds where Theta is zero. Returns the largest violation over the
// tested coordinates.
double hgl_optimality_residual(const GaussianLossData& data,
                               const HubDecomposition& decomposition,
                               const PenaltyParams& params);

}  // namespace hubnet
