#pragma once

#include "hubnet/admm.hpp"

namespace hubnet {

// Inputs of the Frobenius covariance loss (1/2) ||Sigma - S||_F^2 over the
// cone {Sigma >= epsilon I}.
struct CovarianceLossData {
  SymmetricMatrix s;
  double epsilon = 1e-4;
  int n = 0;
  int p = 0;

  CovarianceLossData(SymmetricMatrix s_, int n_, double epsilon_ = 1e-4)
      : s(std::move(s_)), epsilon(epsilon_), n(n_), p(s.dim()) {
    if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  }
};

// Eigenvalue clamp: a = sum d_j u_j u_j^T maps to sum max(d_j, epsilon) u_j u_j^T.
SymmetricMatrix psd_floor_projection(const SymmetricMatrix& a, double epsilon);

// Theta step: project (S + rho * target) / (1 + rho) onto the floor cone,
// where target = sigma_tilde - w1.
Eigen::MatrixXd hcg_theta_update(const CovarianceLossData& data,
                                 const Eigen::MatrixXd& target, double rho);

class CovarianceFrobeniusLoss : public LossModel {
 public:
  explicit CovarianceFrobeniusLoss(CovarianceLossData data) : data_(std::move(data)) {}

  int dim() const override { return data_.p; }
  Eigen::MatrixXd theta_update(const Eigen::MatrixXd& target, double rho) const override {
    return hcg_theta_update(data_, target, rho);
  }
  double loss_value(const Eigen::MatrixXd& theta) const override {
    return 0.5 * (theta - data_.s.mat()).squaredNorm();
  }
  FeasibleSet feasible_set() const override { return FeasibleSet::kPsdFloor; }

  const CovarianceLossData& data() const { return data_; }

 private:
  CovarianceLossData data_;
};

// Hub covariance graph: estimates Sigma (marginal independence graph).
SolveReport hcg_solve(const CovarianceLossData& data, const PenaltyParams& params,
                      const SolveOptions& options = {});

}  // namespace hubnet
