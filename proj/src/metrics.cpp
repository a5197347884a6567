#include "hubnet/metrics.hpp"

#include <algorithm>

namespace hubnet {

namespace {

std::vector<int> degrees_above_tol(const SymmetricMatrix& theta) {
  const int p = theta.dim();
  std::vector<int> deg(p, 0);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j && std::abs(theta(i, j)) > kZeroTol) ++deg[i];
    }
  }
  return deg;
}

}  // namespace

std::vector<int> estimated_hub_set(const SymmetricMatrix& theta_hat, int true_hub_count,
                                   int degree_floor) {
  if (true_hub_count < 0) throw InvalidInput("estimated_hub_set: hub count must be >= 0");
  if (degree_floor < 0) throw InvalidInput("estimated_hub_set: degree floor must be >= 0");
  const std::vector<int> deg = degrees_above_tol(theta_hat);
  const int p = theta_hat.dim();

  std::vector<int> order(p);
  for (int i = 0; i < p; ++i) order[i] = i;
  // Highest degree first; boundary ties resolved toward the smaller index.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });

  std::vector<int> hubs;
  for (int k = 0; k < std::min(true_hub_count, p); ++k) {
    const int node = order[k];
    if (deg[node] >= degree_floor && deg[node] > 0) hubs.push_back(node);
  }
  std::sort(hubs.begin(), hubs.end());
  return hubs;
}

MetricReport compute_metrics(const SymmetricMatrix& theta_hat, const GroundTruth& truth,
                             int degree_floor) {
  const int p = theta_hat.dim();
  if (truth.theta_true.dim() != p) throw InvalidInput("compute_metrics: dimension mismatch");
  const SymmetricMatrix& theta_true = truth.theta_true;

  MetricReport report;
  for (int j = 0; j < p; ++j) {
    for (int k = j + 1; k < p; ++k) {
      const bool est = std::abs(theta_hat(j, k)) > kZeroTol;
      const bool real = theta_true(j, k) != 0.0;
      if (est) ++report.estimated_edges;
      if (est && real) ++report.correct_edges;
      const double err = theta_hat(j, k) - theta_true(j, k);
      report.sum_squared_error += err * err;
    }
  }

  if (!truth.hub_set.empty()) {
    // Ordered pairs (j in H, j' != j), exactly as printed; hub-hub edges are
    // counted from both endpoints in numerator and denominator alike.
    long found = 0, present = 0;
    for (int j : truth.hub_set) {
      for (int k = 0; k < p; ++k) {
        if (k == j) continue;
        if (theta_true(j, k) != 0.0) {
          ++present;
          if (std::abs(theta_hat(j, k)) > kZeroTol) ++found;
        }
      }
    }
    if (present > 0) {
      report.hub_edge_proportion = static_cast<double>(found) / static_cast<double>(present);
    }

    report.estimated_hubs =
        estimated_hub_set(theta_hat, static_cast<int>(truth.hub_set.size()), degree_floor);
    long hits = 0;
    for (int h : report.estimated_hubs) {
      if (std::binary_search(truth.hub_set.begin(), truth.hub_set.end(), h)) ++hits;
    }
    report.hub_node_proportion =
        static_cast<double>(hits) / static_cast<double>(truth.hub_set.size());
  }
  return report;
}

}  // namespace hubnet
