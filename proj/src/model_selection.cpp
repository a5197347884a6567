#include "hubnet/model_selection.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <iostream>

#include "hubnet/parallel.hpp"

namespace hubnet {

void BicConfig::validate() const {
  if (!(c >= 0.0 && c <= 1.0)) throw InvalidInput("BicConfig: c must lie in [0, 1]");
  if (!(nonzero_tol >= 0.0)) throw InvalidInput("BicConfig: nonzero_tol must be >= 0");
}

void GridSpec::validate() const {
  for (const auto* values : {&lambda1, &lambda2, &lambda3}) {
    if (values->empty()) throw InvalidInput("GridSpec: every lambda list must be nonempty");
    for (std::size_t i = 0; i < values->size(); ++i) {
      if (!((*values)[i] >= 0.0) || !std::isfinite((*values)[i])) {
        throw InvalidInput("GridSpec: lambdas must be finite and nonnegative");
      }
      if (i > 0 && (*values)[i] < (*values)[i - 1]) {
        throw InvalidInput("GridSpec: lambda lists must be ascending");
      }
    }
  }
}

PenaltyParams GridSpec::at(std::size_t flat_index) const {
  const std::size_t n2 = lambda2.size(), n3 = lambda3.size();
  const std::size_t i1 = flat_index / (n2 * n3);
  const std::size_t i2 = (flat_index / n3) % n2;
  const std::size_t i3 = flat_index % n3;
  return PenaltyParams{lambda1[i1], lambda2[i2], lambda3[i3], 2};
}

namespace {

struct Cardinalities {
  long z_pairs = 0;   // unordered off-diagonal nonzero pairs of Z
  long v_entries = 0; // off-diagonal nonzero positions of V
  long hub_cols = 0;  // columns of offdiag(V) with any nonzero
};

Cardinalities count_nonzeros(const HubDecomposition& d, double tol) {
  Cardinalities c;
  const int p = d.theta.dim();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (std::abs(d.z(i, j)) > tol) ++c.z_pairs;
    }
  }
  for (int j = 0; j < p; ++j) {
    bool any = false;
    for (int i = 0; i < p; ++i) {
      if (i == j) continue;
      if (std::abs(d.v(i, j)) > tol) {
        ++c.v_entries;
        any = true;
      }
    }
    if (any) ++c.hub_cols;
  }
  return c;
}

}  // namespace

double bic_score_with_loss(const LossModel& loss, int n, const HubDecomposition& decomposition,
                           const BicConfig& config) {
  config.validate();
  if (n < 1) throw InvalidInput("bic_score: n must be >= 1");
  const double fit = loss.loss_value(decomposition.theta.mat());
  if (!std::isfinite(fit)) {
    throw NumericalFailure("bic_score: loss is not finite at the given Theta");
  }
  const Cardinalities card = count_nonzeros(decomposition, config.nonzero_tol);
  const double logn = std::log(static_cast<double>(n));
  const double nu = static_cast<double>(card.hub_cols);
  return n * fit + logn * static_cast<double>(card.z_pairs) +
         logn * (nu + config.c * (static_cast<double>(card.v_entries) - nu));
}

double bic_score(const HubDecomposition& decomposition, const GaussianLossData& data,
                 const BicConfig& config) {
  GaussianLogDetLoss loss(data);
  return bic_score_with_loss(loss, data.n, decomposition, config);
}

GridSearchResult grid_search(const LossModel& bic_loss, int n, const GridSpec& grid,
                             const BicConfig& config, const GridSolver& solver,
                             int threads) {
  grid.validate();
  config.validate();
  const std::size_t total = grid.size();
  GridSearchResult result;
  result.table.resize(total);

  parallel_for(total, threads, [&](std::size_t i) {
    GridPointResult& point = result.table[i];
    point.params = grid.at(i);
    try {
      point.report = solver(point.params);
      point.bic = bic_score_with_loss(bic_loss, n, point.report.decomposition, config);
    } catch (const std::exception& e) {
      point.failed = true;
      point.error = e.what();
    }
  });

  bool found = false;
  for (std::size_t i = 0; i < total; ++i) {
    const GridPointResult& point = result.table[i];
    if (point.failed) {
      const std::string warning = "grid point (" + std::to_string(point.params.lambda1) + ", " +
                                  std::to_string(point.params.lambda2) + ", " +
                                  std::to_string(point.params.lambda3) +
                                  ") excluded: " + point.error;
      result.warnings.push_back(warning);
      std::cerr << "warning: " << warning << "\n";
      continue;
    }
    if (!found || point.bic < result.best_bic) {
      found = true;
      result.best = point.params;
      result.best_bic = point.bic;
      result.best_index = i;
    }
  }
  if (!found) throw NumericalFailure("grid_search: every grid point failed");
  return result;
}

GridSearchResult grid_search(const GaussianLossData& data, const GridSpec& grid,
                             const BicConfig& config, const GridSolver& solver,
                             int threads) {
  GaussianLogDetLoss loss(data);
  return grid_search(loss, data.n, grid, config, solver, threads);
}

}  // namespace hubnet
