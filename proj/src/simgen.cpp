#include "hubnet/simgen.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>

namespace hubnet {

void NetworkSpec::validate() const {
  if (p < 2) throw InvalidInput("NetworkSpec: p must be >= 2");
  if (edge_prob < 0.0 || edge_prob > 1.0 || hub_prob < 0.0 || hub_prob > 1.0) {
    throw InvalidInput("NetworkSpec: probabilities must lie in [0, 1]");
  }
  if (setup != NetworkSetup::kIII) {
    if (hub_count < 0 || hub_count >= p) throw InvalidInput("NetworkSpec: need 0 <= hubs < p");
    if (setup == NetworkSetup::kII && hub_count % 2 != 0) {
      throw InvalidInput("NetworkSpec: Set-up II splits hubs across two components, so the "
                         "hub count must be even");
    }
  }
  if (!(alpha > 1.0)) throw InvalidInput("NetworkSpec: alpha must exceed 1");
  if (max_redraws < 0) throw InvalidInput("NetworkSpec: max_redraws must be >= 0");
}

namespace {

// Set-up I core: Bernoulli(edge_prob) upper triangle, then hub rows/columns
// redrawn Bernoulli(hub_prob), hubs processed in ascending index.
void fill_setup1(Eigen::MatrixXd& a, int lo, int hi, int hubs, double edge_prob,
                 double hub_prob, Rng& rng, std::vector<int>& hub_out) {
  for (int i = lo; i < hi; ++i) {
    for (int j = i + 1; j < hi; ++j) {
      a(i, j) = a(j, i) = rng.bernoulli(edge_prob) ? 1.0 : 0.0;
    }
  }
  std::vector<int> picked = rng.sample_without_replacement(hi - lo, hubs);
  for (int& h : picked) h += lo;
  for (int h : picked) {
    for (int j = lo; j < hi; ++j) {
      if (j == h) continue;
      a(h, j) = a(j, h) = rng.bernoulli(hub_prob) ? 1.0 : 0.0;
    }
  }
  hub_out.insert(hub_out.end(), picked.begin(), picked.end());
}

std::vector<int> sample_power_law_degrees(int p, double alpha, Rng& rng) {
  std::vector<double> cumulative(p - 1);
  double total = 0.0;
  for (int k = 1; k <= p - 1; ++k) {
    total += std::pow(static_cast<double>(k), -alpha);
    cumulative[k - 1] = total;
  }
  std::vector<int> degrees(p);
  for (int i = 0; i < p; ++i) {
    const double u = rng.uniform() * total;
    const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    degrees[i] = static_cast<int>(it - cumulative.begin()) + 1;
  }
  return degrees;
}

bool try_configuration_match(const std::vector<int>& degrees, Eigen::MatrixXd& a, Rng& rng) {
  std::vector<int> stubs;
  for (int i = 0; i < static_cast<int>(degrees.size()); ++i) {
    for (int k = 0; k < degrees[i]; ++k) stubs.push_back(i);
  }
  rng.shuffle(stubs);
  a.setZero();
  for (std::size_t s = 0; s + 1 < stubs.size(); s += 2) {
    const int u = stubs[s], v = stubs[s + 1];
    if (u == v || a(u, v) != 0.0) return false;
    a(u, v) = a(v, u) = 1.0;
  }
  return true;
}

void fill_setup3_configuration(Eigen::MatrixXd& a, const NetworkSpec& spec, Rng& rng) {
  for (int attempt = 0; attempt < spec.max_redraws; ++attempt) {
    std::vector<int> degrees = sample_power_law_degrees(spec.p, spec.alpha, rng);
    int total = 0;
    for (int d : degrees) total += d;
    if (total % 2 != 0) continue;
    if (try_configuration_match(degrees, a, rng)) return;
  }
  throw GenerationFailure("scale-free generation: no simple graph realized the degree "
                          "sequence within " + std::to_string(spec.max_redraws) + " attempts");
}

// Barabasi-Albert style alternative: each new node attaches one edge,
// endpoint chosen proportionally to current degree.
void fill_setup3_preferential(Eigen::MatrixXd& a, const NetworkSpec& spec, Rng& rng) {
  a.setZero();
  a(0, 1) = a(1, 0) = 1.0;
  std::vector<int> endpoints = {0, 1};
  for (int v = 2; v < spec.p; ++v) {
    const int pick = endpoints[rng.uniform_int(0, static_cast<int>(endpoints.size()) - 1)];
    a(v, pick) = a(pick, v) = 1.0;
    endpoints.push_back(v);
    endpoints.push_back(pick);
  }
}

std::vector<int> degree_hubs(const Eigen::MatrixXd& a, double cutoff) {
  std::vector<int> hubs;
  for (int j = 0; j < a.rows(); ++j) {
    if (a.row(j).sum() > cutoff) hubs.push_back(j);
  }
  return hubs;
}

Eigen::MatrixXd sampled_effect_matrix(const SymmetricMatrix& adjacency, Rng& rng) {
  const int p = adjacency.dim();
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j || adjacency(i, j) == 0.0) continue;
      const double magnitude = rng.uniform(0.25, 0.75);
      e(i, j) = rng.bernoulli(0.5) ? magnitude : -magnitude;
    }
  }
  return 0.5 * (e + e.transpose());
}

}  // namespace

GroundTruth generate_adjacency(const NetworkSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(spec.p, spec.p);
  std::vector<int> hubs;

  switch (spec.setup) {
    case NetworkSetup::kI:
      fill_setup1(a, 0, spec.p, spec.hub_count, spec.edge_prob, spec.hub_prob, rng, hubs);
      break;
    case NetworkSetup::kII: {
      const int half = spec.p / 2;
      fill_setup1(a, 0, half, spec.hub_count / 2, spec.edge_prob, spec.hub_prob, rng, hubs);
      fill_setup1(a, half, spec.p, spec.hub_count / 2, spec.edge_prob, spec.hub_prob, rng, hubs);
      break;
    }
    case NetworkSetup::kIII:
      if (spec.preferential_attachment) {
        fill_setup3_preferential(a, spec, rng);
      } else {
        fill_setup3_configuration(a, spec, rng);
      }
      hubs = degree_hubs(a, 0.05 * spec.p);
      break;
  }
  std::sort(hubs.begin(), hubs.end());
  return GroundTruth{SymmetricMatrix(a), SymmetricMatrix::zero(spec.p), hubs,
                     TruthKind::kAdjacencyOnly};
}

namespace {

GroundTruth build_shifted_truth(const GroundTruth& adjacency, std::uint64_t seed,
                                TruthKind kind) {
  Rng rng(seed);
  const Eigen::MatrixXd ebar = sampled_effect_matrix(adjacency.adjacency, rng);
  const SymmetricMatrix ebar_sym(ebar);
  const double lambda_min = symmetric_eigen(ebar_sym).eigenvalues(0);
  Eigen::MatrixXd truth = ebar;
  truth.diagonal().array() += 0.1 - lambda_min;
  return GroundTruth{adjacency.adjacency, SymmetricMatrix(truth), adjacency.hub_set, kind};
}

}  // namespace

GroundTruth build_gaussian_truth(const GroundTruth& adjacency, std::uint64_t seed) {
  return build_shifted_truth(adjacency, seed, TruthKind::kPrecision);
}

GroundTruth build_covariance_truth(const GroundTruth& adjacency, std::uint64_t seed) {
  return build_shifted_truth(adjacency, seed, TruthKind::kCovariance);
}

GroundTruth build_ising_truth(const GroundTruth& adjacency, std::uint64_t seed) {
  Rng rng(seed);
  const Eigen::MatrixXd ebar = sampled_effect_matrix(adjacency.adjacency, rng);
  return GroundTruth{adjacency.adjacency, SymmetricMatrix(ebar), adjacency.hub_set,
                     TruthKind::kIsing};
}

Eigen::MatrixXd sample_gaussian(const GroundTruth& truth, int n, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("sample_gaussian: need n >= 2 to standardize");
  if (truth.kind != TruthKind::kPrecision && truth.kind != TruthKind::kCovariance) {
    throw InvalidInput("sample_gaussian: truth must carry a precision or covariance matrix");
  }
  const int p = truth.theta_true.dim();
  Eigen::LLT<Eigen::MatrixXd> llt(truth.theta_true.mat());
  if (llt.info() != Eigen::Success) {
    throw NumericalFailure("sample_gaussian: truth matrix is not positive definite");
  }
  const Eigen::MatrixXd l = llt.matrixL();

  Rng rng(seed);
  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd z(p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) z(j) = rng.normal();
    if (truth.kind == TruthKind::kPrecision) {
      // Theta = L L^T, so solving L^T x = z gives Cov(x) = Theta^{-1}.
      x.row(i) = l.transpose().triangularView<Eigen::Upper>().solve(z).transpose();
    } else {
      x.row(i) = (l * z).transpose();
    }
  }

  for (int j = 0; j < p; ++j) {
    const double mean = x.col(j).mean();
    const double sd = std::sqrt((x.col(j).array() - mean).square().sum() / (n - 1));
    if (sd > 0.0) x.col(j) /= sd;
  }
  return x;
}

BinaryData gibbs_sample_ising(const SymmetricMatrix& theta_true, int n,
                              const GibbsOptions& options, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("gibbs_sample_ising: need n >= 1");
  if (options.burn_in < 0 || options.thin < 1) {
    throw InvalidInput("gibbs_sample_ising: need burn_in >= 0 and thin >= 1");
  }
  const int p = theta_true.dim();
  const Eigen::MatrixXd& theta = theta_true.mat();

  Rng rng(seed);
  Eigen::VectorXd state(p);
  for (int j = 0; j < p; ++j) state(j) = rng.bernoulli(0.5) ? 1.0 : 0.0;

  auto sweep = [&] {
    for (int j = 0; j < p; ++j) {
      double logit = theta(j, j);
      for (int k = 0; k < p; ++k) {
        if (k != j) logit += theta(j, k) * state(k);
      }
      const double prob = logit >= 0.0 ? 1.0 / (1.0 + std::exp(-logit))
                                       : std::exp(logit) / (1.0 + std::exp(logit));
      state(j) = rng.bernoulli(prob) ? 1.0 : 0.0;
    }
  };

  for (long t = 0; t < options.burn_in; ++t) sweep();
  Eigen::MatrixXd x(n, p);
  for (int row = 0; row < n; ++row) {
    for (long t = 0; t < options.thin; ++t) sweep();
    x.row(row) = state.transpose();
  }
  return BinaryData(x);
}

}  // namespace hubnet
