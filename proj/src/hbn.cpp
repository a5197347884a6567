#include "hubnet/hbn.hpp"

#include <cmath>

namespace hubnet {

namespace {

// log(1 + exp(u)) without overflow.
inline double softplus(double u) {
  return u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
}

inline double sigmoid(double u) {
  return u >= 0.0 ? 1.0 / (1.0 + std::exp(-u)) : std::exp(u) / (1.0 + std::exp(u));
}

// eta_ij = theta_jj + sum_{j'!=j} theta_jj' x_ij' for every observation.
Eigen::MatrixXd logits(const BinaryData& data, const Eigen::MatrixXd& theta) {
  Eigen::MatrixXd eta = data.x * theta;  // row i gives sum_j' theta_j'j x_ij'
  for (Eigen::Index i = 0; i < eta.rows(); ++i) {
    for (Eigen::Index j = 0; j < eta.cols(); ++j) {
      eta(i, j) += theta(j, j) * (1.0 - data.x(i, j));
    }
  }
  return eta;
}

}  // namespace

BinaryData::BinaryData(Eigen::MatrixXd x_) : x(std::move(x_)) {
  if (x.cols() < 1) throw InvalidInput("BinaryData: need at least one column");
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (x(i, j) != 0.0 && x(i, j) != 1.0) {
        throw InvalidInput("BinaryData: entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") is not 0 or 1");
      }
    }
  }
  gram = x.transpose() * x;
}

double pseudo_log_likelihood(const BinaryData& data, const Eigen::MatrixXd& theta) {
  if (theta.rows() != data.p() || theta.cols() != data.p()) {
    throw InvalidInput("pseudo_log_likelihood: dimension mismatch");
  }
  double value = data.gram.cwiseProduct(theta).sum();
  if (data.n() > 0) {
    const Eigen::MatrixXd eta = logits(data, theta);
    for (Eigen::Index i = 0; i < eta.rows(); ++i) {
      for (Eigen::Index j = 0; j < eta.cols(); ++j) value -= softplus(eta(i, j));
    }
  }
  return value;
}

ValueGradient hbn_inner_objective_gradient(const BinaryData& data,
                                           const Eigen::MatrixXd& theta,
                                           const Eigen::MatrixXd& target, double rho) {
  if (!(rho > 0.0)) throw InvalidInput("hbn_inner_objective_gradient: rho must be positive");
  const int p = data.p();
  if (theta.rows() != p || theta.cols() != p || target.rows() != p || target.cols() != p) {
    throw InvalidInput("hbn_inner_objective_gradient: dimension mismatch");
  }
  const Eigen::MatrixXd diff = theta - target;

  ValueGradient out;
  out.value = 0.5 * rho * diff.squaredNorm() - data.gram.cwiseProduct(theta).sum();
  out.gradient = 2.0 * rho * diff - 2.0 * data.gram;
  Eigen::VectorXd prob_colsum = Eigen::VectorXd::Zero(p);

  if (data.n() > 0) {
    const Eigen::MatrixXd eta = logits(data, theta);
    Eigen::MatrixXd prob(eta.rows(), eta.cols());
    for (Eigen::Index i = 0; i < eta.rows(); ++i) {
      for (Eigen::Index j = 0; j < eta.cols(); ++j) {
        out.value += softplus(eta(i, j));
        prob(i, j) = sigmoid(eta(i, j));
      }
    }
    // (X^T P)_{j'j} = sum_i x_ij' sigmoid(eta_ij); adding the transpose gives
    // the symmetric pair sum for every off-diagonal.
    const Eigen::MatrixXd xtp = data.x.transpose() * prob;
    out.gradient += xtp + xtp.transpose();
    prob_colsum = prob.colwise().sum();
  }

  // The diagonal follows the single-variable formula, not the doubled one.
  for (int j = 0; j < p; ++j) {
    out.gradient(j, j) = -data.gram(j, j) + prob_colsum(j) + rho * diff(j, j);
  }
  return out;
}

BbResult bb_minimize(const BinaryData& data, const Eigen::MatrixXd& target, double rho,
                     double tau_inner, int max_inner) {
  if (!(rho > 0.0)) throw InvalidInput("bb_minimize: rho must be positive");
  if (!(tau_inner > 0.0)) throw InvalidInput("bb_minimize: tau_inner must be positive");
  const int p = data.p();
  const Eigen::MatrixXd target_sym = 0.5 * (target + target.transpose());

  Eigen::MatrixXd theta_prev = 2.0 * Eigen::MatrixXd::Identity(p, p);
  Eigen::MatrixXd theta = Eigen::MatrixXd::Identity(p, p);
  ValueGradient prev = hbn_inner_objective_gradient(data, theta_prev, target_sym, rho);
  ValueGradient curr = hbn_inner_objective_gradient(data, theta, target_sym, rho);

  Eigen::MatrixXd best_theta = theta;
  double best_value = curr.value;

  BbResult result;
  for (int t = 1; t <= max_inner; ++t) {
    const Eigen::MatrixXd dtheta = theta - theta_prev;
    const Eigen::MatrixXd dgrad = curr.gradient - prev.gradient;
    const double denom = dtheta.cwiseProduct(dgrad).sum();
    const double alpha = std::abs(denom) > 1e-30 ? dtheta.squaredNorm() / denom : 1e-3;

    theta_prev = theta;
    prev = curr;
    theta -= alpha * curr.gradient;
    curr = hbn_inner_objective_gradient(data, theta, target_sym, rho);

    if (curr.value < best_value) {
      best_value = curr.value;
      best_theta = theta;
    }

    const double denom_norm = theta_prev.squaredNorm();
    const double rel = denom_norm > 0.0 ? (theta - theta_prev).squaredNorm() / denom_norm
                                        : theta.norm();
    result.iterations = t;
    if (rel <= tau_inner) {
      result.converged = true;
      break;
    }
  }

  result.theta = result.converged ? theta : best_theta;
  result.theta = (0.5 * (result.theta + result.theta.transpose())).eval();
  return result;
}

SolveReport hbn_solve(const BinaryData& data, const PenaltyParams& params,
                      const HbnOptions& options) {
  IsingPseudoLikelihoodLoss loss(data, options.tau_inner, options.max_inner);
  return solve(loss, params, options.solve);
}

}  // namespace hubnet
