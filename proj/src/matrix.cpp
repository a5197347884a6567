#include "hubnet/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <iostream>

namespace hubnet {

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd m, double asymmetry_warn_tol) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw InvalidInput("SymmetricMatrix: need a square matrix with dim >= 1, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw InvalidInput("SymmetricMatrix: non-finite entries");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > asymmetry_warn_tol) {
    std::cerr << "warning: symmetrizing input with max asymmetry " << asym << "\n";
  }
  m_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(int p) {
  return SymmetricMatrix(Eigen::MatrixXd::Identity(p, p));
}

SymmetricMatrix SymmetricMatrix::zero(int p) {
  return SymmetricMatrix(Eigen::MatrixXd::Zero(p, p));
}

int Partition::total_size() const {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

EigenDecomposition symmetric_eigen(const SymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.mat());
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("symmetric_eigen: eigensolver did not converge within its " +
                           std::string("internal iteration limit (30 sweeps per eigenvalue)"));
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Partition connected_components(const SymmetricMatrix& adjacency, double threshold) {
  if (threshold < 0.0) throw InvalidInput("connected_components: threshold must be >= 0");
  const int p = adjacency.dim();
  const Eigen::MatrixXd& a = adjacency.mat();

  std::vector<int> component(p, -1);
  Partition partition;
  std::vector<int> stack;
  for (int start = 0; start < p; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(partition.blocks.size());
    partition.blocks.emplace_back();
    stack.push_back(start);
    component[start] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      partition.blocks[id].push_back(u);
      for (int v = 0; v < p; ++v) {
        if (v == u || component[v] >= 0) continue;
        if (std::abs(a(u, v)) > threshold) {
          component[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(partition.blocks[id].begin(), partition.blocks[id].end());
  }
  return partition;
}

double frobenius_distance(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("frobenius_distance: dimension mismatch " + std::to_string(a.dim()) +
                       " vs " + std::to_string(b.dim()));
  }
  return (a.mat() - b.mat()).norm();
}

}  // namespace hubnet
