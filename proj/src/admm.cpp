#include "hubnet/admm.hpp"

#include <chrono>

namespace hubnet {

SolveReport solve(const LossModel& loss, const PenaltyParams& params,
                  const SolveOptions& options) {
  params.validate();
  const int p = loss.dim();
  if (!(options.rho > 0.0)) throw InvalidInput("solve: rho must be positive");
  if (!(options.tau > 0.0)) throw InvalidInput("solve: tau must be positive");
  if (options.max_iter < 0) throw InvalidInput("solve: max_iter must be >= 0");

  const auto t0 = std::chrono::steady_clock::now();
  AdmmState state = AdmmState::initial(p, options.rho, options.tau);

  bool converged = false;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    const Eigen::MatrixXd theta_prev = state.theta;

    state.theta = loss.theta_update(state.theta_tilde - state.w1, state.rho);
    state.z = update_z(state.z_tilde, state.w3, params.lambda1, state.rho);
    state.v = update_v(state.v_tilde, state.w2, params, state.rho);

    ConsensusTriple cons = update_consensus(state);
    state.theta_tilde = std::move(cons.theta_tilde);
    state.v_tilde = std::move(cons.v_tilde);
    state.z_tilde = std::move(cons.z_tilde);

    DualTriple duals = update_duals(state);
    state.w1 = std::move(duals.w1);
    state.w2 = std::move(duals.w2);
    state.w3 = std::move(duals.w3);

    const double denom = theta_prev.squaredNorm();
    state.last_relative_change =
        denom > 0.0 ? (state.theta - theta_prev).squaredNorm() / denom : state.theta.norm();
    state.iteration = iter;
    if (state.last_relative_change <= state.tau) {
      converged = true;
      break;
    }
  }

  SolveReport report{
      HubDecomposition{SymmetricMatrix(state.theta), state.v, SymmetricMatrix(state.z)}};
  report.iterations = state.iteration;
  report.converged = converged;
  report.final_relative_change = state.last_relative_change;
  report.objective_value =
      loss.loss_value(state.theta) + hub_penalty_value(state.v, state.z, params);
  report.residual_theta = (state.theta - state.theta_tilde).norm();
  report.residual_v = (state.v - state.v_tilde).norm();
  report.residual_z = (state.z - state.z_tilde).norm();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

double objective_value(const LossModel& loss, const HubDecomposition& decomposition,
                       const PenaltyParams& params, double feas_tol) {
  params.validate();
  const Eigen::MatrixXd& theta = decomposition.theta.mat();
  const Eigen::MatrixXd& v = decomposition.v;
  const Eigen::MatrixXd& z = decomposition.z.mat();
  if (theta.rows() != loss.dim() || v.rows() != theta.rows() || z.rows() != theta.rows()) {
    throw InvalidInput("objective_value: dimension mismatch");
  }
  const double gap = (theta - z - v - v.transpose()).cwiseAbs().maxCoeff();
  if (gap > feas_tol) {
    throw InvalidInput("objective_value: decomposition violates Theta = Z + V + V^T (gap " +
                       std::to_string(gap) + ")");
  }
  return loss.loss_value(theta) + hub_penalty_value(v, z, params);
}

}  // namespace hubnet
