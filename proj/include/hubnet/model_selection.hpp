#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hubnet/admm.hpp"
#include "hubnet/hgl.hpp"

namespace hubnet {

struct BicConfig {
  double c = 0.2;               // hub degrees-of-freedom discount, in [0, 1]
  double nonzero_tol = 1e-5;    // magnitude above which an entry is counted

  void validate() const;
};

// BIC-type score
//   -n log det(Theta) + n tr(S Theta) + log(n) |Z| + log(n) (nu + c (|V| - nu))
// where |Z| counts unordered off-diagonal nonzero pairs of Z, |V| counts
// off-diagonal nonzero positions of V, and nu counts columns of offdiag(V)
// with at least one entry above the threshold (thresholded first).
double bic_score(const HubDecomposition& decomposition, const GaussianLossData& data,
                 const BicConfig& config = {});

// Same cardinality terms with an arbitrary loss substituted for the Gaussian
// one: n * loss(Theta) + log(n) penalties. Reported as "BIC-type,
// extrapolated" for non-Gaussian losses.
double bic_score_with_loss(const LossModel& loss, int n,
                           const HubDecomposition& decomposition,
                           const BicConfig& config = {});

struct GridSpec {
  std::vector<double> lambda1, lambda2, lambda3;

  void validate() const;
  std::size_t size() const { return lambda1.size() * lambda2.size() * lambda3.size(); }
  // Lexicographic enumeration: lambda1 outermost, lambda3 innermost.
  PenaltyParams at(std::size_t flat_index) const;
};

struct GridPointResult {
  PenaltyParams params;
  double bic = 0.0;
  bool failed = false;
  std::string error;
  SolveReport report;
};

struct GridSearchResult {
  PenaltyParams best;
  double best_bic = 0.0;
  std::size_t best_index = 0;
  std::vector<GridPointResult> table;  // grid order
  std::vector<std::string> warnings;
};

using GridSolver = std::function<SolveReport(const PenaltyParams&)>;

// Solves every grid point and returns the BIC argmin; ties broken toward the
// lexicographically smallest (lambda1, lambda2, lambda3). Failed points are
// excluded with a warning; if all points fail, NumericalFailure.
GridSearchResult grid_search(const LossModel& bic_loss, int n, const GridSpec& grid,
                             const BicConfig& config, const GridSolver& solver,
                             int threads = 1);

GridSearchResult grid_search(const GaussianLossData& data, const GridSpec& grid,
                             const BicConfig& config, const GridSolver& solver,
                             int threads = 1);

}  // namespace hubnet
