#include "hubnet/hgl.hpp"

#include <Eigen/Cholesky>
#include <chrono>
#include <cmath>

namespace hubnet {

namespace {

// log det of a positive definite matrix, -infinity outside the cone.
double log_det_or_inf(const Eigen::MatrixXd& theta) {
  Eigen::LLT<Eigen::MatrixXd> llt(theta);
  if (llt.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace

Eigen::MatrixXd hgl_theta_update(const Eigen::MatrixXd& s, const Eigen::MatrixXd& target,
                                 double rho) {
  if (!(rho > 0.0)) throw InvalidInput("hgl_theta_update: rho must be positive");
  if (s.rows() != target.rows() || s.cols() != target.cols()) {
    throw InvalidInput("hgl_theta_update: dimension mismatch");
  }
  const SymmetricMatrix base(target - s / rho);
  const EigenDecomposition eig = symmetric_eigen(base);
  const Eigen::ArrayXd d = eig.eigenvalues.array();
  const Eigen::VectorXd mapped = (0.5 * (d + (d.square() + 4.0 / rho).sqrt())).matrix();
  Eigen::MatrixXd theta =
      eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.transpose();
  return 0.5 * (theta + theta.transpose());
}

Eigen::MatrixXd GaussianLogDetLoss::theta_update(const Eigen::MatrixXd& target,
                                                 double rho) const {
  return hgl_theta_update(data_.s.mat(), target, rho);
}

double GaussianLogDetLoss::loss_value(const Eigen::MatrixXd& theta) const {
  const double logdet = log_det_or_inf(0.5 * (theta + theta.transpose()));
  if (!std::isfinite(logdet)) return std::numeric_limits<double>::infinity();
  return -logdet + data_.s.mat().cwiseProduct(theta).sum();
}

Partition sufficient_block_condition(const SymmetricMatrix& s, const PenaltyParams& params) {
  params.validate();
  const int p = s.dim();
  const double cut = std::min(params.lambda1, params.lambda2 / 2.0);
  Eigen::MatrixXd indicator = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (std::abs(s(i, j)) >= cut) indicator(i, j) = indicator(j, i) = 1.0;
    }
  }
  return connected_components(SymmetricMatrix(indicator), 0.5);
}

bool necessary_block_condition(const SymmetricMatrix& s, const PenaltyParams& params,
                               const Partition& partition) {
  params.validate();
  const int p = s.dim();
  if (partition.total_size() != p) {
    throw InvalidInput("necessary_block_condition: partition does not cover all indices");
  }
  std::vector<int> block_of(p, -1);
  for (std::size_t k = 0; k < partition.blocks.size(); ++k) {
    for (int idx : partition.blocks[k]) {
      if (idx < 0 || idx >= p || block_of[idx] != -1) {
        throw InvalidInput("necessary_block_condition: invalid partition");
      }
      block_of[idx] = static_cast<int>(k);
    }
  }
  const double cut = std::min(params.lambda1, (params.lambda2 + params.lambda3) / 2.0);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (block_of[i] != block_of[j] && !(cut > std::abs(s(i, j)))) return false;
    }
  }
  return true;
}

namespace {

SolveReport solve_blockwise(const GaussianLossData& data, const PenaltyParams& params,
                            const SolveOptions& options, const Partition& partition) {
  const auto t0 = std::chrono::steady_clock::now();
  const int p = data.p;
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(p, p);

  SolveReport agg;
  agg.converged = true;
  agg.final_relative_change = 0.0;
  for (const auto& block : partition.blocks) {
    const int pb = static_cast<int>(block.size());
    Eigen::MatrixXd sb(pb, pb);
    for (int a = 0; a < pb; ++a) {
      for (int b = 0; b < pb; ++b) sb(a, b) = data.s(block[a], block[b]);
    }
    GaussianLogDetLoss loss(GaussianLossData(SymmetricMatrix(sb), data.n));
    SolveReport rep = solve(loss, params, options);
    for (int a = 0; a < pb; ++a) {
      for (int b = 0; b < pb; ++b) {
        theta(block[a], block[b]) = rep.decomposition.theta(a, b);
        v(block[a], block[b]) = rep.decomposition.v(a, b);
        z(block[a], block[b]) = rep.decomposition.z(a, b);
      }
    }
    agg.iterations = std::max(agg.iterations, rep.iterations);
    agg.converged = agg.converged && rep.converged;
    agg.final_relative_change = std::max(agg.final_relative_change, rep.final_relative_change);
    agg.residual_theta = std::max(agg.residual_theta, rep.residual_theta);
    agg.residual_v = std::max(agg.residual_v, rep.residual_v);
    agg.residual_z = std::max(agg.residual_z, rep.residual_z);
  }
  agg.decomposition = HubDecomposition{SymmetricMatrix(theta), v, SymmetricMatrix(z)};
  GaussianLogDetLoss full_loss(data);
  agg.objective_value = full_loss.loss_value(theta) + hub_penalty_value(v, z, params);
  agg.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return agg;
}

}  // namespace

SolveReport hgl_solve(const GaussianLossData& data, const PenaltyParams& params,
                      const HglOptions& options) {
  params.validate();
  if (options.screening) {
    const Partition partition = sufficient_block_condition(data.s, params);
    if (!partition.is_trivial()) return solve_blockwise(data, params, options.solve, partition);
  }
  GaussianLogDetLoss loss(data);
  return solve(loss, params, options.solve);
}

SolveReport glasso_mode_solve(const GaussianLossData& data, double lambda,
                              const SolveOptions& options) {
  if (!(lambda >= 0.0)) throw InvalidInput("glasso_mode_solve: lambda must be nonnegative");
  PenaltyParams params{2.0 * lambda, 2.0 * lambda, 0.0, 1};
  GaussianLogDetLoss loss(data);
  return solve(loss, params, options);
}

double hgl_optimality_residual(const GaussianLossData& data,
                               const HubDecomposition& decomposition,
                               const PenaltyParams& params) {
  params.validate();
  if (!(params.lambda1 > 0.0)) {
    throw InvalidInput("hgl_optimality_residual: needs lambda1 > 0");
  }
  const Eigen::MatrixXd& theta = decomposition.theta.mat();
  Eigen::LLT<Eigen::MatrixXd> llt(theta);
  if (llt.info() != Eigen::Success) {
    throw NumericalFailure("hgl_optimality_residual: Theta is not positive definite");
  }
  const int p = data.p;
  const Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(p, p));
  // Stationarity reads 0 = -Theta^{-1} + S + lambda1 * Lambda, so the implied
  // multiplier is (Theta^{-1} - S) / lambda1.
  const Eigen::MatrixXd lam = (inv - data.s.mat()) / params.lambda1;
  const double pair_bound = (params.lambda2 + params.lambda3) / params.lambda1;

  double score = 0.0;
  for (int i = 0; i < p; ++i) score = std::max(score, std::abs(lam(i, i)));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      if (std::abs(decomposition.z(i, j)) > kZeroTol) {
        const double sign = decomposition.z(i, j) > 0.0 ? 1.0 : -1.0;
        score = std::max(score, std::abs(lam(i, j) - sign));
      } else if (std::abs(decomposition.theta(i, j)) <= kZeroTol) {
        score = std::max(score, std::abs(lam(i, j)) - 1.0);
        score = std::max(score, std::abs(lam(i, j) + lam(j, i)) - pair_bound);
      }
    }
  }
  return score;
}

}  // namespace hubnet
