#include "hubnet/prox.hpp"

#include <cmath>

namespace hubnet {

void PenaltyParams::validate() const {
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) || !(lambda3 >= 0.0)) {
    throw InvalidInput("PenaltyParams: lambdas must be nonnegative and finite");
  }
  if (q != 1 && q != 2) throw InvalidInput("PenaltyParams: q must be 1 or 2");
}

AdmmState AdmmState::initial(int p, double rho, double tau) {
  if (p < 1) throw InvalidInput("AdmmState: dimension must be >= 1");
  if (!(rho > 0.0)) throw InvalidInput("AdmmState: rho must be positive");
  if (!(tau > 0.0)) throw InvalidInput("AdmmState: tau must be positive");
  AdmmState s;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(p, p);
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(p, p);
  s.theta = s.v = s.z = eye;
  s.theta_tilde = s.v_tilde = s.z_tilde = eye;
  s.w1 = s.w2 = s.w3 = zero;
  s.rho = rho;
  s.tau = tau;
  return s;
}

Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& a, double b) {
  if (!(b >= 0.0)) throw InvalidInput("soft_threshold: threshold must be nonnegative");
  return a.unaryExpr([b](double x) {
    const double shrunk = std::abs(x) - b;
    return shrunk > 0.0 ? (x > 0.0 ? shrunk : -shrunk) : 0.0;
  });
}

Eigen::MatrixXd update_z(const Eigen::MatrixXd& z_tilde, const Eigen::MatrixXd& w3,
                         double lambda1, double rho) {
  if (!(rho > 0.0)) throw InvalidInput("update_z: rho must be positive");
  if (lambda1 < 0.0) throw InvalidInput("update_z: lambda1 must be nonnegative");
  const Eigen::MatrixXd base = z_tilde - w3;
  Eigen::MatrixXd z = soft_threshold(base, lambda1 / rho);
  z.diagonal() = base.diagonal();
  return z;
}

Eigen::MatrixXd update_v(const Eigen::MatrixXd& v_tilde, const Eigen::MatrixXd& w2,
                         double lambda2, double lambda3, double rho) {
  if (!(rho > 0.0)) throw InvalidInput("update_v: rho must be positive");
  if (lambda2 < 0.0 || lambda3 < 0.0) throw InvalidInput("update_v: lambdas must be nonnegative");
  const Eigen::MatrixXd base = v_tilde - w2;
  Eigen::MatrixXd c = base;
  c.diagonal().setZero();
  Eigen::MatrixXd v = soft_threshold(c, lambda2 / rho);
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    const double norm = v.col(j).norm();
    const double factor =
        norm > 0.0 ? std::max(1.0 - lambda3 / (rho * norm), 0.0) : 0.0;
    v.col(j) *= factor;
  }
  v.diagonal() = base.diagonal();
  return v;
}

Eigen::MatrixXd update_v(const Eigen::MatrixXd& v_tilde, const Eigen::MatrixXd& w2,
                         const PenaltyParams& params, double rho) {
  if (params.q == 2) return update_v(v_tilde, w2, params.lambda2, params.lambda3, rho);
  // q = 1: the column norm is itself elementwise, so the prox is one soft
  // threshold at (lambda2 + lambda3)/rho.
  if (!(rho > 0.0)) throw InvalidInput("update_v: rho must be positive");
  const Eigen::MatrixXd base = v_tilde - w2;
  Eigen::MatrixXd c = base;
  c.diagonal().setZero();
  Eigen::MatrixXd v = soft_threshold(c, (params.lambda2 + params.lambda3) / rho);
  v.diagonal() = base.diagonal();
  return v;
}

ConsensusTriple update_consensus(const AdmmState& state) {
  const double rho = state.rho;
  const Eigen::MatrixXd tw1 = state.theta + state.w1;
  const Eigen::MatrixXd vw2 = state.v + state.w2;
  const Eigen::MatrixXd zw3 = state.z + state.w3;
  const Eigen::MatrixXd gamma = (rho / 6.0) * (tw1 - vw2 - vw2.transpose() - zw3);
  ConsensusTriple out;
  out.theta_tilde = tw1 - gamma / rho;
  out.v_tilde = (gamma + gamma.transpose()) / rho + vw2;
  out.z_tilde = gamma / rho + zw3;
  return out;
}

DualTriple update_duals(const AdmmState& state) {
  DualTriple out;
  out.w1 = state.w1 + state.theta - state.theta_tilde;
  out.w2 = state.w2 + state.v - state.v_tilde;
  out.w3 = state.w3 + state.z - state.z_tilde;
  return out;
}

double hub_penalty_value(const Eigen::MatrixXd& v, const Eigen::MatrixXd& z,
                         const PenaltyParams& params) {
  if (v.rows() != z.rows() || v.cols() != z.cols() || v.rows() != v.cols()) {
    throw InvalidInput("hub_penalty_value: dimension mismatch");
  }
  params.validate();
  Eigen::MatrixXd voff = v;
  voff.diagonal().setZero();
  Eigen::MatrixXd zoff = z;
  zoff.diagonal().setZero();
  double value = params.lambda1 * zoff.cwiseAbs().sum() + params.lambda2 * voff.cwiseAbs().sum();
  for (Eigen::Index j = 0; j < voff.cols(); ++j) {
    value += params.lambda3 *
             (params.q == 2 ? voff.col(j).norm() : voff.col(j).cwiseAbs().sum());
  }
  return value;
}

}  // namespace hubnet
