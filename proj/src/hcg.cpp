#include "hubnet/hcg.hpp"

namespace hubnet {

SymmetricMatrix psd_floor_projection(const SymmetricMatrix& a, double epsilon) {
  const EigenDecomposition eig = symmetric_eigen(a);
  const Eigen::VectorXd clamped = eig.eigenvalues.cwiseMax(epsilon);
  Eigen::MatrixXd out = eig.eigenvectors * clamped.asDiagonal() * eig.eigenvectors.transpose();
  return SymmetricMatrix(0.5 * (out + out.transpose()));
}

Eigen::MatrixXd hcg_theta_update(const CovarianceLossData& data,
                                 const Eigen::MatrixXd& target, double rho) {
  if (!(rho > 0.0)) throw InvalidInput("hcg_theta_update: rho must be positive");
  if (target.rows() != data.p || target.cols() != data.p) {
    throw InvalidInput("hcg_theta_update: dimension mismatch");
  }
  const Eigen::MatrixXd blend = (data.s.mat() + rho * target) / (1.0 + rho);
  return psd_floor_projection(SymmetricMatrix(blend), data.epsilon).mat();
}

SolveReport hcg_solve(const CovarianceLossData& data, const PenaltyParams& params,
                      const SolveOptions& options) {
  CovarianceFrobeniusLoss loss(data);
  return solve(loss, params, options);
}

}  // namespace hubnet
