#pragma once

#include <Eigen/Dense>

#include "hubnet/matrix.hpp"

namespace hubnet {

// Tuning parameters of the hub penalty
//   lambda1 * ||Z - diag Z||_1 + lambda2 * ||V - diag V||_1
//     + lambda3 * sum_j ||(V - diag V)_j||_q.
// q = 2 is the supported configuration; q = 1 collapses the column norm into
// the elementwise one and is kept for the graphical-lasso reduction.
struct PenaltyParams {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  int q = 2;

  void validate() const;
};

// Theta = Z + V + V^T once the consensus constraint has been driven to zero.
// V's nonzero columns mark hub nodes; Z's off-diagonals are non-hub edges.
struct HubDecomposition {
  SymmetricMatrix theta;
  Eigen::MatrixXd v;
  SymmetricMatrix z;
};

// Full variable set of the consensus ADMM iteration.
struct AdmmState {
  Eigen::MatrixXd theta, v, z;
  Eigen::MatrixXd theta_tilde, v_tilde, z_tilde;
  Eigen::MatrixXd w1, w2, w3;
  double rho = 2.5;
  double tau = 1e-7;
  int iteration = 0;
  double last_relative_change = std::numeric_limits<double>::infinity();

  // Primal and consensus copies at the identity, duals at zero.
  static AdmmState initial(int p, double rho, double tau);
};

// Elementwise sign(a) * max(|a| - b, 0).
Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& a, double b);

// Z step: soft-threshold the off-diagonals of (z_tilde - w3) at lambda1/rho,
// copy the diagonal through.
Eigen::MatrixXd update_z(const Eigen::MatrixXd& z_tilde, const Eigen::MatrixXd& w3,
                         double lambda1, double rho);

// V step for q=2: with C = offdiag(v_tilde - w2), each column becomes
//   max(1 - lambda3 / (rho * ||S(C_j, lambda2/rho)||_2), 0) * S(C_j, lambda2/rho),
// a zero column when the thresholded norm vanishes; the diagonal is copied
// from (v_tilde - w2).
Eigen::MatrixXd update_v(const Eigen::MatrixXd& v_tilde, const Eigen::MatrixXd& w2,
                         double lambda2, double lambda3, double rho);

// q-aware V step: q=2 as above, q=1 soft-thresholds at (lambda2+lambda3)/rho.
Eigen::MatrixXd update_v(const Eigen::MatrixXd& v_tilde, const Eigen::MatrixXd& w2,
                         const PenaltyParams& params, double rho);

struct ConsensusTriple {
  Eigen::MatrixXd theta_tilde, v_tilde, z_tilde;
};

// Consensus step: Gamma = (rho/6) [ (Theta+W1) - (V+W2) - (V+W2)^T - (Z+W3) ],
// then Theta~ = Theta+W1 - Gamma/rho, V~ = (Gamma+Gamma^T)/rho + V+W2,
// Z~ = Gamma/rho + Z+W3. Output satisfies Theta~ = Z~ + V~ + V~^T.
ConsensusTriple update_consensus(const AdmmState& state);

struct DualTriple {
  Eigen::MatrixXd w1, w2, w3;
};

// Each dual incremented by its primal-minus-consensus residual.
DualTriple update_duals(const AdmmState& state);

// Value of the hub penalty at a given (V, Z) split.
double hub_penalty_value(const Eigen::MatrixXd& v, const Eigen::MatrixXd& z,
                         const PenaltyParams& params);

}  // namespace hubnet
