#pragma once

#include "hubnet/admm.hpp"

namespace hubnet {

// Binary observations for the Ising pseudo-likelihood. Entries must be
// exactly 0 or 1; the Gram matrix X^T X is cached on construction.
struct BinaryData {
  Eigen::MatrixXd x;     // n x p
  Eigen::MatrixXd gram;  // p x p

  explicit BinaryData(Eigen::MatrixXd x_);

  int n() const { return static_cast<int>(x.rows()); }
  int p() const { return static_cast<int>(x.cols()); }
};

// Log-pseudo-likelihood
//   sum_{j,j'} theta_jj' (X^T X)_jj'
//     - sum_i sum_j log(1 + exp(theta_jj + sum_{j'!=j} theta_jj' x_ij')),
// with the double sum over (j,j') covering both orders and the diagonal.
// The log term is evaluated in softplus form, stable for any logit.
double pseudo_log_likelihood(const BinaryData& data, const Eigen::MatrixXd& theta);

struct ValueGradient {
  double value = 0.0;
  Eigen::MatrixXd gradient;
};

// h(Theta) = -pseudo_log_likelihood + (rho/2) ||Theta - target||_F^2 and its
// gradient under the symmetry constraint theta_jj' = theta_j'j:
//   (grad h)_jj  = -(X^T X)_jj  + sum_i sigmoid(eta_ij) + rho (Theta - target)_jj
//   (grad h)_jj' = -2 (X^T X)_jj' + sum_i [ x_ij' sigmoid(eta_ij) + x_ij sigmoid(eta_ij') ]
//                  + 2 rho (Theta - target)_jj'
// with eta_ij = theta_jj + sum_{j'!=j} theta_jj' x_ij'. The output is
// symmetric entry-for-entry.
ValueGradient hbn_inner_objective_gradient(const BinaryData& data,
                                           const Eigen::MatrixXd& theta,
                                           const Eigen::MatrixXd& target, double rho);

struct BbResult {
  Eigen::MatrixXd theta;
  int iterations = 0;
  bool converged = false;
};

// Barzilai-Borwein descent on h: Theta_1 = I, Theta_0 = 2I, spectral step
//   alpha_t = tr[dTheta^T dTheta] / tr[dTheta^T dGrad],
// stopping when the squared relative Frobenius change reaches tau_inner.
// A vanishing secant denominator falls back to a fixed 1e-3 step for that
// iteration; if max_inner is reached the best-objective iterate is returned
// with converged = false.
BbResult bb_minimize(const BinaryData& data, const Eigen::MatrixXd& target, double rho,
                     double tau_inner = 1e-8, int max_inner = 5000);

class IsingPseudoLikelihoodLoss : public LossModel {
 public:
  IsingPseudoLikelihoodLoss(BinaryData data, double tau_inner = 1e-8, int max_inner = 5000)
      : data_(std::move(data)), tau_inner_(tau_inner), max_inner_(max_inner) {}

  int dim() const override { return data_.p(); }
  Eigen::MatrixXd theta_update(const Eigen::MatrixXd& target, double rho) const override {
    return bb_minimize(data_, target, rho, tau_inner_, max_inner_).theta;
  }
  double loss_value(const Eigen::MatrixXd& theta) const override {
    return -pseudo_log_likelihood(data_, theta);
  }
  FeasibleSet feasible_set() const override { return FeasibleSet::kSymmetricOnly; }

  const BinaryData& data() const { return data_; }

 private:
  BinaryData data_;
  double tau_inner_;
  int max_inner_;
};

struct HbnOptions {
  SolveOptions solve;
  double tau_inner = 1e-8;
  int max_inner = 5000;
};

// Hub binary network: ADMM with the Barzilai-Borwein inner Theta step.
SolveReport hbn_solve(const BinaryData& data, const PenaltyParams& params,
                      const HbnOptions& options = {});

}  // namespace hubnet
