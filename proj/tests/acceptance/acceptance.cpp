// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// the measured quantities; the process exits nonzero if any criterion fails.
#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>
#include <vector>

#include "hubnet/hbn.hpp"
#include "hubnet/hcg.hpp"
#include "hubnet/hgl.hpp"
#include "hubnet/io.hpp"
#include "hubnet/metrics.hpp"
#include "hubnet/model_selection.hpp"
#include "hubnet/parallel.hpp"
#include "hubnet/rng.hpp"
#include "hubnet/simgen.hpp"
#include "oracle.hpp"

using namespace hubnet;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s  (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

struct GaussianFixture {
  GroundTruth truth;
  SymmetricMatrix s;
  long true_edges = 0;
};

GaussianFixture gaussian_fixture(int p, int hubs, int n, std::uint64_t seed, bool covariance) {
  NetworkSpec spec;
  spec.p = p;
  spec.hub_count = hubs;
  spec.seed = derive_seed(seed, 0);
  const GroundTruth adjacency = generate_adjacency(spec);
  const GroundTruth truth = covariance ? build_covariance_truth(adjacency, derive_seed(seed, 1))
                                       : build_gaussian_truth(adjacency, derive_seed(seed, 1));
  const Eigen::MatrixXd x = sample_gaussian(truth, n, derive_seed(seed, 2));
  GaussianFixture fx{truth, covariance_matrix(standardize_columns(x)), 0};
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (truth.theta_true(i, j) != 0.0) ++fx.true_edges;
    }
  }
  return fx;
}

Eigen::MatrixXd offdiag(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out = m;
  out.diagonal().setZero();
  return out;
}

// --- criterion 1 ------------------------------------------------------------
void criterion_1() {
  const int p = 15, n = 50, fixtures = 20;
  const SolveOptions options{2.5, 1e-12, 30000};
  const PenaltyParams z_regime{0.5, 0.3, 0.3, 2};           // lambda1 > (l2+l3)/2
  const PenaltyParams v_regime{0.1, 0.25, 0.3, 2};          // lambda1 < l2/2 + l3/(2 sqrt(p-1))
  const double bound2 = v_regime.lambda2 / 2 + v_regime.lambda3 / (2 * std::sqrt(p - 1.0));
  double worst_z = 0.0, worst_v = 0.0;
  std::mutex mu;
  parallel_for(fixtures, 8, [&](std::size_t i) {
    const GaussianFixture fx = gaussian_fixture(p, 2, n, 1000 + i, false);
    GaussianLossData data(fx.s, n);
    const SolveReport rz = hgl_solve(data, z_regime, {options, false});
    const SolveReport rv = hgl_solve(data, v_regime, {options, false});
    const double z_off = offdiag(rz.decomposition.z.mat()).cwiseAbs().maxCoeff();
    const double v_off = offdiag(rv.decomposition.v).cwiseAbs().maxCoeff();
    std::lock_guard<std::mutex> lock(mu);
    worst_z = std::max(worst_z, z_off);
    worst_v = std::max(worst_v, v_off);
  });
  const bool pass = worst_z <= 1e-6 && worst_v <= 1e-6 && v_regime.lambda1 < bound2;
  report(1, "penalty regimes force diagonal Z / diagonal V on 20 fixtures", pass,
         "max offdiag Z " + fmt(worst_z) + ", max offdiag V " + fmt(worst_v) + ", tol 1e-6");
}

// --- criterion 2 ------------------------------------------------------------
void criterion_2() {
  const int p = 20, n = 80;
  const SolveOptions options{2.5, 1e-14, 60000};
  double worst_limit = 0.0, worst_q1 = 0.0;
  for (std::uint64_t seed : {2001, 2002, 2003}) {
    const GaussianFixture fx = gaussian_fixture(p, 2, n, seed, false);
    GaussianLossData data(fx.s, n);

    const SolveReport base = glasso_mode_solve(data, 0.3, options);
    const SolveReport limit = hgl_solve(data, PenaltyParams{0.3, 1e8, 1.0, 2}, {options, false});
    worst_limit = std::max(
        worst_limit, frobenius_distance(limit.decomposition.theta, base.decomposition.theta));

    // q=1 with min(lambda1, (lambda2+lambda3)/2) = 0.4
    const SolveReport via_q1 =
        solve(GaussianLogDetLoss(data), PenaltyParams{0.5, 0.4, 0.4, 1}, options);
    const SolveReport direct = glasso_mode_solve(data, 0.4, options);
    worst_q1 = std::max(
        worst_q1, frobenius_distance(via_q1.decomposition.theta, direct.decomposition.theta));
  }
  report(2, "graphical-lasso reductions (lambda2=1e8 limit and q=1)", worst_limit <= 1e-4 && worst_q1 <= 1e-4,
         "limit diff " + fmt(worst_limit) + ", q=1 diff " + fmt(worst_q1) + ", tol 1e-4");
}

// --- criterion 3 ------------------------------------------------------------
void criterion_3() {
  const int blocks = 4, bp = 50, p = blocks * bp, n = 100;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
  for (int b = 0; b < blocks; ++b) {
    const GaussianFixture fx = gaussian_fixture(bp, 2, n, 3000 + b, false);
    s.block(b * bp, b * bp, bp, bp) = fx.s.mat();
  }
  const PenaltyParams params{0.15, 0.3, 0.8, 2};
  const double cut = std::min(params.lambda1, params.lambda2 / 2.0);
  Rng rng(3100);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (s(i, j) == 0.0 && i / bp != j / bp) {
        const double noise = rng.uniform(-0.9 * cut, 0.9 * cut);
        s(i, j) = s(j, i) = noise;
      }
    }
  }
  GaussianLossData data(SymmetricMatrix(s), n);
  const Partition partition = sufficient_block_condition(data.s, params);
  const SolveOptions options{2.5, 1e-20, 120000};

  const SolveReport full = hgl_solve(data, params, {options, false});
  const SolveReport screened = hgl_solve(data, params, {options, true});
  const double diff = frobenius_distance(full.decomposition.theta, screened.decomposition.theta);
  const bool pass = partition.blocks.size() >= 3 && diff <= 1e-6 &&
                    screened.wall_seconds < full.wall_seconds;
  report(3, "screening equivalence and speedup at p=200", pass,
         std::to_string(partition.blocks.size()) + " blocks, Frobenius diff " + fmt(diff) +
             ", full " + fmt(full.wall_seconds) + "s vs screened " +
             fmt(screened.wall_seconds) + "s (speedup " +
             fmt(full.wall_seconds / std::max(screened.wall_seconds, 1e-9)) + "x)");
}

// --- criterion 4 ------------------------------------------------------------
void criterion_4() {
  const int p = 4, n = 20;
  bool pass = true;
  std::string detail;

  {
    const GaussianFixture fx = gaussian_fixture(p, 1, n, 4001, false);
    GaussianLossData data(fx.s, n);
    const PenaltyParams params{0.2, 0.25, 0.4, 2};
    const SolveReport run =
        solve(GaussianLogDetLoss(data), params, SolveOptions{2.5, 1e-13, 40000});
    const oracle::Loss loss = oracle::gaussian_loss(fx.s.mat());
    const oracle::Penalty pen{params.lambda1, params.lambda2, params.lambda3, 2};
    const oracle::Result ref = oracle::proximal_gradient_minimize(loss, pen, p, 200000);
    const double gap = std::abs(
        oracle::objective(loss, pen, run.decomposition.v, run.decomposition.z.mat()) -
        ref.objective);
    pass = pass && gap <= 1e-4;
    detail += "HGL gap " + fmt(gap);
  }
  {
    const GaussianFixture fx = gaussian_fixture(p, 1, n, 4002, true);
    CovarianceLossData data(fx.s, n);
    const PenaltyParams params{0.15, 0.2, 0.3, 2};
    const SolveReport run = hcg_solve(data, params, SolveOptions{2.5, 1e-13, 40000});
    const oracle::Loss loss = oracle::covariance_loss(fx.s.mat());
    const oracle::Penalty pen{params.lambda1, params.lambda2, params.lambda3, 2};
    const oracle::Result ref = oracle::proximal_gradient_minimize(loss, pen, p, 200000);
    const double gap = std::abs(
        oracle::objective(loss, pen, run.decomposition.v, run.decomposition.z.mat()) -
        ref.objective);
    pass = pass && gap <= 1e-4;
    detail += ", HCG gap " + fmt(gap);
  }
  {
    Rng rng(4003);
    Eigen::MatrixXd x(n, p);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < p; ++j) x(i, j) = rng.bernoulli(0.4 + 0.05 * j) ? 1.0 : 0.0;
    }
    const BinaryData data(x);
    const PenaltyParams params{1.0, 1.5, 2.0, 2};
    HbnOptions options;
    options.solve = SolveOptions{2.5, 1e-13, 8000};
    options.tau_inner = 1e-12;
    const SolveReport run = hbn_solve(data, params, options);
    const oracle::Loss loss = oracle::ising_loss(x);
    const oracle::Penalty pen{params.lambda1, params.lambda2, params.lambda3, 2};
    const oracle::Result ref = oracle::proximal_gradient_minimize(loss, pen, p, 200000);
    const double gap = std::abs(
        oracle::objective(loss, pen, run.decomposition.v, run.decomposition.z.mat()) -
        ref.objective);
    pass = pass && gap <= 1e-3;
    detail += ", HBN gap " + fmt(gap);
  }
  report(4, "ADMM objectives match the independent descent oracle (p=4, n=20)", pass,
         detail + "; tol 1e-4 / 1e-4 / 1e-3");
}

// --- criterion 5 ------------------------------------------------------------
void criterion_5() {
  Rng rng(5000);
  double worst = 0.0;
  for (int fixture = 0; fixture < 20; ++fixture) {
    const int p = 4 + fixture % 3, n = 10;
    Eigen::MatrixXd x(n, p);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < p; ++j) x(i, j) = rng.bernoulli(0.5) ? 1.0 : 0.0;
    }
    const BinaryData data(x);
    Eigen::MatrixXd theta(p, p), target(p, p);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        theta(i, j) = 0.4 * rng.uniform(-1.0, 1.0);
        target(i, j) = 0.4 * rng.uniform(-1.0, 1.0);
      }
    }
    theta = (0.5 * (theta + theta.transpose())).eval();
    target = (0.5 * (target + target.transpose())).eval();
    const double rho = rng.uniform(0.5, 3.0);

    const Eigen::MatrixXd grad = hbn_inner_objective_gradient(data, theta, target, rho).gradient;
    const double h = 1e-5;
    Eigen::MatrixXd fd = Eigen::MatrixXd::Zero(p, p);
    for (int a = 0; a < p; ++a) {
      for (int b = a; b < p; ++b) {
        Eigen::MatrixXd up = theta, down = theta;
        up(a, b) += h;
        down(a, b) -= h;
        if (b != a) {
          up(b, a) += h;
          down(b, a) -= h;
        }
        const double fu = hbn_inner_objective_gradient(data, up, target, rho).value;
        const double fl = hbn_inner_objective_gradient(data, down, target, rho).value;
        fd(a, b) = fd(b, a) = (fu - fl) / (2.0 * h);
      }
    }
    worst = std::max(worst, (grad - fd).norm() / std::max(1.0, fd.norm()));
  }
  report(5, "HBN gradient matches central finite differences on 20 fixtures", worst <= 1e-4,
         "worst relative error " + fmt(worst) + ", tol 1e-4");
}

// --- criteria 6 and 7 -------------------------------------------------------
struct SweepPoint {
  PenaltyParams params;
  long estimated_edges = 0;
  long correct_edges = 0;
  double hub_prop = 0.0;
  double bic = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> hgl, baseline;
  long true_edges = 0;
};

const SweepPoint& closest_to(const std::vector<SweepPoint>& points, long target) {
  const SweepPoint* best = &points.front();
  for (const SweepPoint& pt : points) {
    if (std::labs(pt.estimated_edges - target) < std::labs(best->estimated_edges - target)) {
      best = &pt;
    }
  }
  return *best;
}

void criteria_6_and_7() {
  const int p = 100, n = 300, hubs = 5, r = 20, replicates = 20;
  const SolveOptions options{2.5, 1e-11, 20000};
  const std::vector<double> l1{0.14, 0.16, 0.18, 0.2};
  const std::vector<double> l2{0.2, 0.25, 0.3};
  const std::vector<double> l3{0.7, 0.85, 1.0};
  const std::vector<double> baseline_l1{0.1, 0.12, 0.14, 0.16, 0.18, 0.2, 0.24, 0.3};

  std::vector<SweepResult> sweeps(replicates);
  parallel_for(replicates, 8, [&](std::size_t rep) {
    const GaussianFixture fx = gaussian_fixture(p, hubs, n, 60000 + rep, false);
    GaussianLossData data(fx.s, n);
    SweepResult& sweep = sweeps[rep];
    sweep.true_edges = fx.true_edges;
    auto evaluate = [&](const PenaltyParams& params) {
      const SolveReport run = hgl_solve(data, params, {options, false});
      const MetricReport metrics = compute_metrics(run.decomposition.theta, fx.truth, r);
      SweepPoint pt{params, metrics.estimated_edges, metrics.correct_edges,
                    metrics.hub_node_proportion.value_or(0.0),
                    bic_score(run.decomposition, data)};
      return pt;
    };
    for (double a : l1) {
      for (double b : l2) {
        for (double c : l3) sweep.hgl.push_back(evaluate(PenaltyParams{a, b, c, 2}));
      }
    }
    for (double a : baseline_l1) {
      sweep.baseline.push_back(evaluate(PenaltyParams{a, 1e8, 0.0, 2}));
    }
  });

  double hgl_prop = 0.0, base_prop = 0.0, hgl_correct = 0.0, base_correct = 0.0;
  for (const SweepResult& sweep : sweeps) {
    const SweepPoint& h = closest_to(sweep.hgl, sweep.true_edges);
    const SweepPoint& g = closest_to(sweep.baseline, sweep.true_edges);
    hgl_prop += h.hub_prop / replicates;
    base_prop += g.hub_prop / replicates;
    hgl_correct += static_cast<double>(h.correct_edges) / replicates;
    base_correct += static_cast<double>(g.correct_edges) / replicates;
  }
  const bool hub_gap_ok = hgl_prop - base_prop >= 0.2;
  const bool edges_ok = hgl_correct >= base_correct;
  report(6, "hub recovery vs l1 baseline at n=300, p=100 (hub-prop gap >= 0.2, correct edges >=)",
         hub_gap_ok && edges_ok,
         "HGL hub prop " + fmt(hgl_prop) + " vs baseline " + fmt(base_prop) + " (gap " +
             fmt(hgl_prop - base_prop) + "); correct edges " + fmt(hgl_correct) + " vs " +
             fmt(base_correct));
  if (!hub_gap_ok) {
    std::printf("        note: at n=3p the l1 baseline already ranks hubs correctly "
                "(prop %s), so a +0.2 separation has no room; the separation needs the "
                "high-dimensional regime, where per-edge signal drops below single-entry "
                "detectability and only column aggregation identifies hubs.\n",
                fmt(base_prop).c_str());
  }

  int wins = 0;
  for (const SweepResult& sweep : sweeps) {
    double best_h = std::numeric_limits<double>::infinity();
    double best_g = best_h;
    for (const SweepPoint& pt : sweep.hgl) best_h = std::min(best_h, pt.bic);
    for (const SweepPoint& pt : sweep.baseline) best_g = std::min(best_g, pt.bic);
    if (best_h < best_g) ++wins;
  }
  report(7, "BIC sanity: best HGL grid point beats the glasso-limit point in >= 18/20", wins >= 18,
         std::to_string(wins) + "/20 replicates");
}

// --- criterion 8 ------------------------------------------------------------
void criterion_8() {
  const int p = 100, n = 150, hubs = 4, r = 20, replicates = 20;
  const SolveOptions options{2.5, 1e-11, 20000};
  const std::vector<double> l1{0.18, 0.22};
  const std::vector<double> l2{0.1, 0.12};
  const std::vector<double> l3{1.1};
  const std::vector<double> baseline_l1{0.08, 0.1, 0.12, 0.15, 0.18, 0.22, 0.26};

  std::vector<SweepResult> sweeps(replicates);
  parallel_for(replicates, 8, [&](std::size_t rep) {
    const GaussianFixture fx = gaussian_fixture(p, hubs, n, 80000 + rep, true);
    CovarianceLossData data(fx.s, n);
    SweepResult& sweep = sweeps[rep];
    sweep.true_edges = fx.true_edges;
    auto evaluate = [&](const PenaltyParams& params) {
      const SolveReport run = hcg_solve(data, params, options);
      const MetricReport metrics = compute_metrics(run.decomposition.theta, fx.truth, r);
      return SweepPoint{params, metrics.estimated_edges, metrics.correct_edges,
                        metrics.hub_node_proportion.value_or(0.0), 0.0};
    };
    for (double a : l1) {
      for (double b : l2) {
        for (double c : l3) sweep.hgl.push_back(evaluate(PenaltyParams{a, b, c, 2}));
      }
    }
    for (double a : baseline_l1) {
      sweep.baseline.push_back(evaluate(PenaltyParams{a, 1e8, 0.0, 2}));
    }
  });

  double hcg_prop = 0.0, base_prop = 0.0;
  for (const SweepResult& sweep : sweeps) {
    hcg_prop += closest_to(sweep.hgl, sweep.true_edges).hub_prop / replicates;
    base_prop += closest_to(sweep.baseline, sweep.true_edges).hub_prop / replicates;
  }
  report(8, "covariance-graph hub recovery: HCG beats the single-penalty baseline by >= 0.2",
         hcg_prop - base_prop >= 0.2,
         "HCG " + fmt(hcg_prop) + " vs baseline " + fmt(base_prop) + " (gap " +
             fmt(hcg_prop - base_prop) + ")");
}

// --- criterion 9 ------------------------------------------------------------
void criterion_9() {
  const GibbsOptions options{1000, 100};  // documented reduction of 1e5 / 1e4
  bool pass = true;
  std::string detail;

  const int p = 10, n = 2000;
  const BinaryData flat = gibbs_sample_ising(SymmetricMatrix::zero(p), n, options, 9001);
  double worst_mean = 0.0;
  for (int j = 0; j < p; ++j) {
    worst_mean = std::max(worst_mean, std::abs(flat.x.col(j).mean() - 0.5));
  }
  const double band = 4.0 / std::sqrt(static_cast<double>(n));
  pass = pass && worst_mean <= band;
  detail += "max |mean-0.5| " + fmt(worst_mean) + " (band " + fmt(band) + ")";

  Eigen::MatrixXd coupled(2, 2);
  coupled << 0.2, 0.8, 0.8, -0.1;
  const BinaryData pair = gibbs_sample_ising(SymmetricMatrix(coupled), n, options, 9002);
  // Exact distribution of (x1, x2) by enumerating the four states.
  double weights[4], total = 0.0;
  for (int s = 0; s < 4; ++s) {
    const double x1 = s & 1, x2 = (s >> 1) & 1;
    weights[s] = std::exp(coupled(0, 0) * x1 + coupled(1, 1) * x2 + coupled(0, 1) * x1 * x2);
    total += weights[s];
  }
  double worst_state = 0.0;
  for (int s = 0; s < 4; ++s) {
    const double x1 = s & 1, x2 = (s >> 1) & 1;
    long count = 0;
    for (int i = 0; i < n; ++i) {
      if (pair.x(i, 0) == x1 && pair.x(i, 1) == x2) ++count;
    }
    worst_state =
        std::max(worst_state, std::abs(static_cast<double>(count) / n - weights[s] / total));
  }
  pass = pass && worst_state <= 0.02;
  detail += "; max state-frequency error " + fmt(worst_state) + " (tol 0.02)";
  report(9, "Gibbs sampler: fair-coin means and exact 4-state frequencies", pass, detail);
}

// --- criterion 10 -----------------------------------------------------------
void criterion_10() {
  bool pass = true;
  std::string detail;

  Eigen::MatrixXd a(1, 2);
  a << 3.0, -0.5;
  const Eigen::MatrixXd st = soft_threshold(a, 1.0);
  pass = pass && st(0, 0) == 2.0 && st(0, 1) == 0.0;

  Eigen::MatrixXd v_tilde = Eigen::MatrixXd::Zero(3, 3);
  v_tilde(1, 0) = 0.6;
  v_tilde(2, 0) = 0.8;
  const Eigen::MatrixXd v = update_v(v_tilde, Eigen::MatrixXd::Zero(3, 3), 0.0, 0.5, 1.0);
  pass = pass && std::abs(v(1, 0) - 0.3) <= 1e-12 && std::abs(v(2, 0) - 0.4) <= 1e-12;

  const Eigen::MatrixXd z =
      update_z(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Zero(3, 3), 5.0, 1.0);
  pass = pass && (z - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0;

  Rng rng(10000);
  double worst_identity = 0.0;
  for (int repetition = 0; repetition < 1000; ++repetition) {
    const int p = 2 + repetition % 5;
    AdmmState s = AdmmState::initial(p, rng.uniform(0.5, 4.0), 1e-7);
    auto fill_sym = [&](Eigen::MatrixXd& m) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) m(i, j) = rng.uniform(-2.0, 2.0);
      }
      m = (0.5 * (m + m.transpose())).eval();
    };
    auto fill = [&](Eigen::MatrixXd& m) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) m(i, j) = rng.uniform(-2.0, 2.0);
      }
    };
    fill_sym(s.theta);
    fill_sym(s.z);
    fill_sym(s.w1);
    fill_sym(s.w3);
    fill(s.v);
    fill(s.w2);
    const ConsensusTriple out = update_consensus(s);
    const double gap = (out.theta_tilde - out.z_tilde - out.v_tilde - out.v_tilde.transpose())
                           .cwiseAbs()
                           .maxCoeff();
    worst_identity = std::max(worst_identity, gap);
  }
  pass = pass && worst_identity <= 1e-12;
  detail = "prox examples exact; consensus identity worst gap " + fmt(worst_identity) +
           " over 1000 random states (tol 1e-12)";
  report(10, "proximal-operator unit suite and consensus identity", pass, detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criteria_6_and_7();
  criterion_8();
  criterion_9();
  criterion_10();
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 10 criteria passed in %.1f s\n", 10 - g_failures, elapsed);
  return g_failures == 0 ? 0 : 1;
}
