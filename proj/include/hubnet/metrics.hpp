#pragma once

#include <optional>
#include <vector>

#include "hubnet/matrix.hpp"
#include "hubnet/simgen.hpp"

namespace hubnet {

struct MetricReport {
  long correct_edges = 0;
  std::optional<double> hub_edge_proportion;  // empty when the truth has no hubs
  std::optional<double> hub_node_proportion;
  double sum_squared_error = 0.0;
  long estimated_edges = 0;
  std::vector<int> estimated_hubs;
};

// The true_hub_count most-connected nodes of theta_hat (edges are
// off-diagonals above 1e-5 in magnitude; boundary ties go to the smaller
// index), minus any whose degree falls below degree_floor.
std::vector<int> estimated_hub_set(const SymmetricMatrix& theta_hat, int true_hub_count,
                                   int degree_floor);

// The four performance measures against a ground truth, plus the estimated
// edge count and hub set. Hub proportions are undefined when the truth has
// no hubs.
MetricReport compute_metrics(const SymmetricMatrix& theta_hat, const GroundTruth& truth,
                             int degree_floor);

}  // namespace hubnet
