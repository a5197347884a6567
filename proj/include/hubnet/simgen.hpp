#pragma once

#include <cstdint>
#include <vector>

#include "hubnet/hbn.hpp"
#include "hubnet/matrix.hpp"
#include "hubnet/rng.hpp"

namespace hubnet {

enum class NetworkSetup { kI, kII, kIII };

// What the truth matrix of a GroundTruth means.
enum class TruthKind { kAdjacencyOnly, kPrecision, kCovariance, kIsing };

struct NetworkSpec {
  int p = 0;
  NetworkSetup setup = NetworkSetup::kI;
  int hub_count = 0;          // Set-ups I and II; even for II
  double edge_prob = 0.02;
  double hub_prob = 0.7;
  double alpha = 2.5;         // power-law exponent, Set-up III
  std::uint64_t seed = 0;
  bool preferential_attachment = false;  // alternative Set-up III realization
  int max_redraws = 100;                 // configuration-model attempts

  void validate() const;
};

struct GroundTruth {
  SymmetricMatrix adjacency;   // {0,1} entries
  SymmetricMatrix theta_true;  // zero until a build_* step fills it
  std::vector<int> hub_set;    // ascending node indices
  TruthKind kind = TruthKind::kAdjacencyOnly;
};

// Set-up I: Bernoulli(edge_prob) upper triangle symmetrized, then hub rows and
// columns redrawn Bernoulli(hub_prob). Set-up II: two independent Set-up I
// blocks with hub_count/2 hubs each. Set-up III: degrees sampled from
// P(k) ~ k^-alpha on [1, p-1] and realized by configuration-model matching,
// rejecting self-loops and multi-edges; hubs are nodes with degree > 0.05 p.
GroundTruth generate_adjacency(const NetworkSpec& spec);

// E_ij = 0 where A_ij = 0 and Unif(+-[0.25, 0.75]) elsewhere, Ebar =
// (E + E^T)/2, truth = Ebar + (0.1 - lambda_min(Ebar)) I. The same matrix is
// the precision for conditional-independence truths and the covariance for
// marginal ones.
GroundTruth build_gaussian_truth(const GroundTruth& adjacency, std::uint64_t seed);
GroundTruth build_covariance_truth(const GroundTruth& adjacency, std::uint64_t seed);

// Ising interaction matrix: Theta = Ebar itself, no eigenvalue shift.
GroundTruth build_ising_truth(const GroundTruth& adjacency, std::uint64_t seed);

// Draws n rows of N(0, Sigma). For kPrecision truths the precision Theta =
// L L^T is factored and L^T x = z solved per observation; for kCovariance
// truths x = L z with Sigma = L L^T. Columns are then scaled to unit sample
// standard deviation (divisor n-1).
Eigen::MatrixXd sample_gaussian(const GroundTruth& truth, int n, std::uint64_t seed);

struct GibbsOptions {
  long burn_in = 100000;  // sweeps discarded
  long thin = 10000;      // sweeps between kept rows
};

// Full-sweep Gibbs sampler for the Ising model: coordinates updated in
// ascending order, x_j ~ Bernoulli(sigmoid(theta_jj + sum_{j'!=j} theta_jj'
// x_j')); the state starts from Bernoulli(1/2) draws.
BinaryData gibbs_sample_ising(const SymmetricMatrix& theta_true, int n,
                              const GibbsOptions& options, std::uint64_t seed);

}  // namespace hubnet
