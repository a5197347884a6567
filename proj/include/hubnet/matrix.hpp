#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hubnet/common.hpp"

namespace hubnet {

// Dense symmetric p x p matrix. Symmetry is enforced on construction by
// averaging with the transpose; a warning is emitted (once per construction)
// if the input's asymmetry exceeds `asymmetry_warn_tol`. Entries must be
// finite and p >= 1.
class SymmetricMatrix {
 public:
  SymmetricMatrix() : m_(Eigen::MatrixXd::Zero(1, 1)) {}
  explicit SymmetricMatrix(Eigen::MatrixXd m, double asymmetry_warn_tol = 1e-10);

  static SymmetricMatrix identity(int p);
  static SymmetricMatrix zero(int p);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& mat() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns match eigenvalues
};

// Disjoint index blocks covering {0,...,p-1}, ordered by smallest contained
// index; indices within a block ascend.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int total_size() const;
  bool is_trivial() const { return blocks.size() <= 1; }
};

EigenDecomposition symmetric_eigen(const SymmetricMatrix& m);

// Blocks are the connected components of the graph with an edge wherever
// |entry| > threshold (strict).
Partition connected_components(const SymmetricMatrix& adjacency, double threshold);

double frobenius_distance(const SymmetricMatrix& a, const SymmetricMatrix& b);

}  // namespace hubnet
