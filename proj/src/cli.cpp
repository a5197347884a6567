#include "hubnet/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hubnet/hbn.hpp"
#include "hubnet/hcg.hpp"
#include "hubnet/hgl.hpp"
#include "hubnet/io.hpp"
#include "hubnet/metrics.hpp"
#include "hubnet/model_selection.hpp"
#include "hubnet/parallel.hpp"
#include "hubnet/simgen.hpp"

namespace hubnet {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct EstimateConfig {
  std::string input;
  std::string out_dir;
  double lambda1 = 0.2, lambda2 = 0.5, lambda3 = 1.0;
  double lambda = 0.2;  // glasso
  double rho = 2.5, tau = 1e-7;
  int max_iter = 10000;
  bool screening = false;
  bool standardize = true;
  double epsilon = 1e-4;      // hcg
  double tau_inner = 1e-8;    // hbn
  int max_inner = 5000;       // hbn
};

struct SimulateConfig {
  std::string out_dir;
  std::string setup = "I";
  std::string model = "gaussian";
  int p = 100, hubs = 5, n = 100;
  double edge_prob = 0.02, hub_prob = 0.7, alpha = 2.5;
  bool preferential = false;
  long burn_in = 100000, thin = 10000;
  std::uint64_t seed = 0;
};

struct BenchmarkConfig {
  std::string out_path = "metrics.csv";
  std::string setup = "I";
  std::string model = "hgl";
  int p = 100, hubs = 5, n = 100, replicates = 10, degree_floor = 20;
  double edge_prob = 0.02, hub_prob = 0.7, alpha = 2.5;
  std::vector<double> grid1{0.3}, grid2{0.3}, grid3{1.0};
  double rho = 2.5, tau = 1e-7;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct GridConfig {
  std::string input;
  std::string out_dir;
  std::vector<double> grid1, grid2, grid3;
  double rho = 2.5, tau = 1e-7;
  int max_iter = 10000;
  bool standardize = true;
  bool screening = false;
  double bic_c = 0.2;
  int threads = 1;
};

struct TimingConfig {
  std::string out_path = "timing.csv";
  int p = 100;
  int n = 0;  // 0 means p/2
  int hubs = 0;  // 0 means p/50
  std::vector<double> grid1{0.1, 0.2, 0.3, 0.4, 0.5};
  double lambda2 = 0.5, lambda3 = 2.0;
  double rho = 2.5, tau = 1e-7;
  int max_iter = 10000;
  std::uint64_t seed = 0;
};

NetworkSetup parse_setup(const std::string& s) {
  if (s == "I" || s == "1") return NetworkSetup::kI;
  if (s == "II" || s == "2") return NetworkSetup::kII;
  if (s == "III" || s == "3") return NetworkSetup::kIII;
  throw CLI::ValidationError("--setup", "must be one of I, II, III");
}

// Hub nodes read off the estimate: columns of offdiag(V) with any entry
// above the zero threshold.
std::vector<int> hub_columns(const Eigen::MatrixXd& v) {
  std::vector<int> hubs;
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      if (i != j && std::abs(v(i, j)) > kZeroTol) {
        hubs.push_back(static_cast<int>(j));
        break;
      }
    }
  }
  return hubs;
}

void write_solution_files(const fs::path& dir, const SolveReport& report, json& summary) {
  write_matrix_tsv((dir / "theta.tsv").string(), report.decomposition.theta.mat());
  write_matrix_tsv((dir / "v.tsv").string(), report.decomposition.v);
  write_matrix_tsv((dir / "z.tsv").string(), report.decomposition.z.mat());
  write_edges_tsv((dir / "edges.tsv").string(), report.decomposition.theta);
  write_hubs_txt((dir / "hubs.txt").string(), hub_columns(report.decomposition.v));
  summary["files"] = {"theta.tsv", "v.tsv", "z.tsv", "edges.tsv", "hubs.txt", "report.json"};
}

void fill_report_summary(const SolveReport& report, json& summary) {
  summary["iterations"] = report.iterations;
  summary["converged"] = report.converged;
  summary["final_relative_change"] = report.final_relative_change;
  summary["objective"] = report.objective_value;
  summary["wall_seconds"] = report.wall_seconds;
  summary["residuals"] = {{"theta", report.residual_theta},
                          {"v", report.residual_v},
                          {"z", report.residual_z}};
}

void write_report_json(const fs::path& dir, const json& summary) {
  std::ofstream out(dir / "report.json");
  out << summary.dump(2) << "\n";
}

void warn_if_not_converged(const SolveReport& report) {
  if (!report.converged) {
    std::cerr << "warning: solver stopped at " << report.iterations
              << " iterations without meeting the tolerance (relative change "
              << report.final_relative_change << ")\n";
  }
}

int cmd_estimate(const std::string& command, const EstimateConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  const SolveOptions options{cfg.rho, cfg.tau, cfg.max_iter};

  json summary;
  summary["command"] = command;
  SolveReport report;

  if (command == "hbn") {
    BinaryData data(read_binary_data(cfg.input));
    summary["n"] = data.n();
    summary["p"] = data.p();
    PenaltyParams params{cfg.lambda1, cfg.lambda2, cfg.lambda3, 2};
    summary["lambda1"] = params.lambda1;
    summary["lambda2"] = params.lambda2;
    summary["lambda3"] = params.lambda3;
    report = hbn_solve(data, params, HbnOptions{options, cfg.tau_inner, cfg.max_inner});
    IsingPseudoLikelihoodLoss loss(std::move(data), cfg.tau_inner, cfg.max_inner);
    summary["bic_type_extrapolated"] =
        bic_score_with_loss(loss, loss.data().n(), report.decomposition);
  } else {
    Eigen::MatrixXd x = read_data(cfg.input);
    const int n = static_cast<int>(x.rows());
    if (cfg.standardize) x = standardize_columns(x);
    SymmetricMatrix s = covariance_matrix(x);
    summary["n"] = n;
    summary["p"] = s.dim();

    if (command == "hgl") {
      GaussianLossData data(s, n);
      PenaltyParams params{cfg.lambda1, cfg.lambda2, cfg.lambda3, 2};
      summary["lambda1"] = params.lambda1;
      summary["lambda2"] = params.lambda2;
      summary["lambda3"] = params.lambda3;
      report = hgl_solve(data, params, HglOptions{options, cfg.screening});
      summary["bic"] = bic_score(report.decomposition, data);
    } else if (command == "glasso") {
      GaussianLossData data(s, n);
      summary["lambda"] = cfg.lambda;
      report = glasso_mode_solve(data, cfg.lambda, options);
      summary["bic"] = bic_score(report.decomposition, data);
    } else {  // hcg
      CovarianceLossData data(s, n, cfg.epsilon);
      PenaltyParams params{cfg.lambda1, cfg.lambda2, cfg.lambda3, 2};
      summary["lambda1"] = params.lambda1;
      summary["lambda2"] = params.lambda2;
      summary["lambda3"] = params.lambda3;
      summary["epsilon"] = cfg.epsilon;
      report = hcg_solve(data, params, options);
      CovarianceFrobeniusLoss loss(data);
      summary["bic_type_extrapolated"] = bic_score_with_loss(loss, n, report.decomposition);
    }
  }

  fill_report_summary(report, summary);
  write_solution_files(dir, report, summary);
  write_report_json(dir, summary);
  warn_if_not_converged(report);
  return kExitOk;
}

int cmd_simulate(const SimulateConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  NetworkSpec spec;
  spec.p = cfg.p;
  spec.setup = parse_setup(cfg.setup);
  spec.hub_count = cfg.hubs;
  spec.edge_prob = cfg.edge_prob;
  spec.hub_prob = cfg.hub_prob;
  spec.alpha = cfg.alpha;
  spec.seed = derive_seed(cfg.seed, 0);
  spec.preferential_attachment = cfg.preferential;

  const GroundTruth adjacency = generate_adjacency(spec);
  const std::uint64_t truth_seed = derive_seed(cfg.seed, 1);
  const std::uint64_t data_seed = derive_seed(cfg.seed, 2);

  GroundTruth truth(adjacency);
  Eigen::MatrixXd data;
  if (cfg.model == "gaussian") {
    truth = build_gaussian_truth(adjacency, truth_seed);
    data = sample_gaussian(truth, cfg.n, data_seed);
  } else if (cfg.model == "covariance") {
    truth = build_covariance_truth(adjacency, truth_seed);
    data = sample_gaussian(truth, cfg.n, data_seed);
  } else if (cfg.model == "ising") {
    truth = build_ising_truth(adjacency, truth_seed);
    data = gibbs_sample_ising(truth.theta_true, cfg.n, GibbsOptions{cfg.burn_in, cfg.thin},
                              data_seed)
               .x;
  } else {
    throw CLI::ValidationError("--model", "must be gaussian, covariance, or ising");
  }

  write_matrix_tsv((dir / "data.tsv").string(), data);
  write_matrix_tsv((dir / "theta_true.tsv").string(), truth.theta_true.mat());
  write_matrix_tsv((dir / "adjacency.tsv").string(), truth.adjacency.mat());
  write_hubs_txt((dir / "hubs_true.txt").string(), truth.hub_set);

  json summary;
  summary["command"] = "simulate";
  summary["setup"] = cfg.setup;
  summary["model"] = cfg.model;
  summary["p"] = cfg.p;
  summary["n"] = cfg.n;
  summary["hubs"] = static_cast<int>(truth.hub_set.size());
  summary["seed"] = cfg.seed;
  summary["files"] = {"data.tsv", "theta_true.tsv", "adjacency.tsv", "hubs_true.txt",
                      "report.json"};
  write_report_json(dir, summary);
  return kExitOk;
}

std::string metric_or_nan(const std::optional<double>& v) {
  return v ? format_double(*v) : "nan";
}

int cmd_benchmark(const BenchmarkConfig& cfg) {
  if (cfg.replicates < 1) throw CLI::ValidationError("--replicates", "must be >= 1");
  if (cfg.model != "hgl" && cfg.model != "hcg") {
    throw CLI::ValidationError("--model", "must be hgl or hcg");
  }
  GridSpec grid{cfg.grid1, cfg.grid2, cfg.grid3};
  grid.validate();
  const SolveOptions options{cfg.rho, cfg.tau, cfg.max_iter};

  struct Row {
    int replicate;
    PenaltyParams params;
    MetricReport metrics;
    double bic;
  };
  std::vector<std::vector<Row>> per_replicate(cfg.replicates);

  parallel_for(static_cast<std::size_t>(cfg.replicates), cfg.threads, [&](std::size_t rep) {
    NetworkSpec spec;
    spec.p = cfg.p;
    spec.setup = parse_setup(cfg.setup);
    spec.hub_count = cfg.hubs;
    spec.edge_prob = cfg.edge_prob;
    spec.hub_prob = cfg.hub_prob;
    spec.alpha = cfg.alpha;
    spec.seed = derive_seed(cfg.seed, 3 * rep);

    const GroundTruth adjacency = generate_adjacency(spec);
    const GroundTruth truth = cfg.model == "hcg"
                                  ? build_covariance_truth(adjacency, derive_seed(cfg.seed, 3 * rep + 1))
                                  : build_gaussian_truth(adjacency, derive_seed(cfg.seed, 3 * rep + 1));
    const Eigen::MatrixXd raw = sample_gaussian(truth, cfg.n, derive_seed(cfg.seed, 3 * rep + 2));
    const SymmetricMatrix s = covariance_matrix(standardize_columns(raw));

    std::vector<Row>& rows = per_replicate[rep];
    rows.reserve(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const PenaltyParams params = grid.at(g);
      SolveReport report;
      double bic;
      if (cfg.model == "hcg") {
        CovarianceLossData data(s, cfg.n);
        report = hcg_solve(data, params, options);
        bic = bic_score_with_loss(CovarianceFrobeniusLoss(data), cfg.n, report.decomposition);
      } else {
        GaussianLossData data(s, cfg.n);
        report = hgl_solve(data, params, HglOptions{options, false});
        bic = bic_score(report.decomposition, data);
      }
      const MetricReport metrics =
          compute_metrics(report.decomposition.theta, truth, cfg.degree_floor);
      rows.push_back(Row{static_cast<int>(rep) + 1, params, metrics, bic});
    }
  });

  std::ofstream out(cfg.out_path);
  if (!out) throw InvalidInput("cannot open '" + cfg.out_path + "' for writing");
  out << "replicate,lambda1,lambda2,lambda3,estimated_edges,correct_edges,"
         "hub_edge_prop,hub_node_prop,sse,bic\n";
  for (const auto& rows : per_replicate) {
    for (const Row& row : rows) {
      out << row.replicate << ',' << format_double(row.params.lambda1) << ','
          << format_double(row.params.lambda2) << ',' << format_double(row.params.lambda3)
          << ',' << row.metrics.estimated_edges << ',' << row.metrics.correct_edges << ','
          << metric_or_nan(row.metrics.hub_edge_proportion) << ','
          << metric_or_nan(row.metrics.hub_node_proportion) << ','
          << format_double(row.metrics.sum_squared_error) << ',' << format_double(row.bic)
          << '\n';
    }
  }
  return kExitOk;
}

int cmd_bicgrid(const GridConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  Eigen::MatrixXd x = read_data(cfg.input);
  const int n = static_cast<int>(x.rows());
  if (cfg.standardize) x = standardize_columns(x);
  GaussianLossData data(covariance_matrix(x), n);

  GridSpec grid{cfg.grid1, cfg.grid2, cfg.grid3};
  BicConfig bic_config;
  bic_config.c = cfg.bic_c;
  const SolveOptions options{cfg.rho, cfg.tau, cfg.max_iter};
  const GridSearchResult result = grid_search(
      data, grid, bic_config,
      [&](const PenaltyParams& params) {
        return hgl_solve(data, params, HglOptions{options, cfg.screening});
      },
      cfg.threads);

  std::ofstream scores(dir / "scores.tsv");
  scores << "lambda1\tlambda2\tlambda3\tbic\titerations\tconverged\n";
  for (const GridPointResult& point : result.table) {
    scores << format_double(point.params.lambda1) << '\t' << format_double(point.params.lambda2)
           << '\t' << format_double(point.params.lambda3) << '\t';
    if (point.failed) {
      scores << "failed\t0\tfalse\n";
    } else {
      scores << format_double(point.bic) << '\t' << point.report.iterations << '\t'
             << (point.report.converged ? "true" : "false") << '\n';
    }
  }
  scores.close();

  const SolveReport& best = result.table[result.best_index].report;
  json summary;
  summary["command"] = "bicgrid";
  summary["n"] = n;
  summary["p"] = data.p;
  summary["lambda1"] = result.best.lambda1;
  summary["lambda2"] = result.best.lambda2;
  summary["lambda3"] = result.best.lambda3;
  summary["bic"] = result.best_bic;
  summary["grid_points"] = grid.size();
  fill_report_summary(best, summary);
  write_solution_files(dir, best, summary);
  summary["files"].push_back("scores.tsv");
  write_report_json(dir, summary);
  warn_if_not_converged(best);
  return kExitOk;
}

int cmd_timing(const TimingConfig& cfg) {
  const int n = cfg.n > 0 ? cfg.n : std::max(2, cfg.p / 2);
  const int hubs = cfg.hubs > 0 ? cfg.hubs : std::max(1, cfg.p / 50);

  NetworkSpec spec;
  spec.p = cfg.p;
  spec.setup = NetworkSetup::kI;
  spec.hub_count = hubs;
  spec.seed = derive_seed(cfg.seed, 0);
  const GroundTruth truth = build_gaussian_truth(generate_adjacency(spec), derive_seed(cfg.seed, 1));
  const Eigen::MatrixXd raw = sample_gaussian(truth, n, derive_seed(cfg.seed, 2));
  GaussianLossData data(covariance_matrix(standardize_columns(raw)), n);

  std::ofstream out(cfg.out_path);
  if (!out) throw InvalidInput("cannot open '" + cfg.out_path + "' for writing");
  out << "p,n,lambda1,lambda2,lambda3,seconds,iterations,converged\n";
  for (double lambda1 : cfg.grid1) {
    PenaltyParams params{lambda1, cfg.lambda2, cfg.lambda3, 2};
    const SolveReport report =
        hgl_solve(data, params, HglOptions{SolveOptions{cfg.rho, cfg.tau, cfg.max_iter}, false});
    out << cfg.p << ',' << n << ',' << format_double(lambda1) << ','
        << format_double(cfg.lambda2) << ',' << format_double(cfg.lambda3) << ','
        << format_double(report.wall_seconds) << ',' << report.iterations << ','
        << (report.converged ? "true" : "false") << '\n';
  }
  return kExitOk;
}

void add_solver_flags(CLI::App* cmd, EstimateConfig& cfg) {
  cmd->add_option("--rho", cfg.rho, "ADMM penalty parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--tau", cfg.tau, "stopping tolerance on the squared relative Theta change")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", cfg.max_iter, "iteration cap")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--standardize,!--no-standardize", cfg.standardize,
                "scale columns to unit sample sd before the covariance (default on)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Estimation of graphical models with hub nodes"};
  app.require_subcommand(1);

  EstimateConfig est;
  SimulateConfig sim;
  BenchmarkConfig bench;
  GridConfig gridcfg;
  TimingConfig timing;

  CLI::App* hgl = app.add_subcommand("hgl", "hub graphical lasso on a data matrix");
  hgl->add_option("--input", est.input, "delimited numeric data file")->required();
  hgl->add_option("--out", est.out_dir, "output directory")->required();
  hgl->add_option("--lambda1", est.lambda1)->check(CLI::NonNegativeNumber);
  hgl->add_option("--lambda2", est.lambda2)->check(CLI::NonNegativeNumber);
  hgl->add_option("--lambda3", est.lambda3)->check(CLI::NonNegativeNumber);
  hgl->add_flag("--screening", est.screening, "solve per block via the sufficient condition");
  add_solver_flags(hgl, est);

  CLI::App* glasso = app.add_subcommand("glasso", "graphical lasso baseline");
  glasso->add_option("--input", est.input)->required();
  glasso->add_option("--out", est.out_dir)->required();
  glasso->add_option("--lambda", est.lambda)->check(CLI::NonNegativeNumber);
  add_solver_flags(glasso, est);

  CLI::App* hcg = app.add_subcommand("hcg", "hub covariance graph on a data matrix");
  hcg->add_option("--input", est.input)->required();
  hcg->add_option("--out", est.out_dir)->required();
  hcg->add_option("--lambda1", est.lambda1)->check(CLI::NonNegativeNumber);
  hcg->add_option("--lambda2", est.lambda2)->check(CLI::NonNegativeNumber);
  hcg->add_option("--lambda3", est.lambda3)->check(CLI::NonNegativeNumber);
  hcg->add_option("--epsilon", est.epsilon, "eigenvalue floor")->check(CLI::PositiveNumber);
  add_solver_flags(hcg, est);

  CLI::App* hbn = app.add_subcommand("hbn", "hub binary network on a 0/1 data matrix");
  hbn->add_option("--input", est.input)->required();
  hbn->add_option("--out", est.out_dir)->required();
  hbn->add_option("--lambda1", est.lambda1)->check(CLI::NonNegativeNumber);
  hbn->add_option("--lambda2", est.lambda2)->check(CLI::NonNegativeNumber);
  hbn->add_option("--lambda3", est.lambda3)->check(CLI::NonNegativeNumber);
  hbn->add_option("--tau-inner", est.tau_inner, "inner Barzilai-Borwein tolerance")
      ->check(CLI::PositiveNumber);
  hbn->add_option("--max-inner", est.max_inner)->check(CLI::PositiveNumber);
  add_solver_flags(hbn, est);

  CLI::App* simulate = app.add_subcommand("simulate", "write a synthetic data set + truth");
  simulate->add_option("--out", sim.out_dir)->required();
  simulate->add_option("--setup", sim.setup, "I, II, or III");
  simulate->add_option("--model", sim.model, "gaussian, covariance, or ising");
  simulate->add_option("--p", sim.p)->check(CLI::Range(2, 100000));
  simulate->add_option("--hubs", sim.hubs)->check(CLI::NonNegativeNumber);
  simulate->add_option("--n", sim.n)->check(CLI::PositiveNumber);
  simulate->add_option("--edge-prob", sim.edge_prob)->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--hub-prob", sim.hub_prob)->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--alpha", sim.alpha, "power-law exponent for Set-up III");
  simulate->add_flag("--preferential", sim.preferential,
                     "realize Set-up III by preferential attachment");
  simulate->add_option("--burn-in", sim.burn_in)->check(CLI::NonNegativeNumber);
  simulate->add_option("--thin", sim.thin)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed);

  CLI::App* benchmark = app.add_subcommand(
      "benchmark", "replicated simulation + estimation sweep, metrics to CSV");
  benchmark->add_option("--out", bench.out_path, "metrics CSV path");
  benchmark->add_option("--setup", bench.setup);
  benchmark->add_option("--model", bench.model, "hgl or hcg");
  benchmark->add_option("--p", bench.p)->check(CLI::Range(2, 100000));
  benchmark->add_option("--hubs", bench.hubs)->check(CLI::NonNegativeNumber);
  benchmark->add_option("--n", bench.n)->check(CLI::Range(2, 100000000));
  benchmark->add_option("--replicates", bench.replicates)->check(CLI::PositiveNumber);
  benchmark->add_option("--r", bench.degree_floor, "degree floor for estimated hubs")
      ->required()
      ->check(CLI::NonNegativeNumber);
  benchmark->add_option("--edge-prob", bench.edge_prob)->check(CLI::Range(0.0, 1.0));
  benchmark->add_option("--hub-prob", bench.hub_prob)->check(CLI::Range(0.0, 1.0));
  benchmark->add_option("--lambda1-grid", bench.grid1)->delimiter(',');
  benchmark->add_option("--lambda2-grid", bench.grid2)->delimiter(',');
  benchmark->add_option("--lambda3-grid", bench.grid3)->delimiter(',');
  benchmark->add_option("--rho", bench.rho)->check(CLI::PositiveNumber);
  benchmark->add_option("--tau", bench.tau)->check(CLI::PositiveNumber);
  benchmark->add_option("--max-iter", bench.max_iter)->check(CLI::NonNegativeNumber);
  benchmark->add_option("--seed", bench.seed);
  benchmark->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);

  CLI::App* bicgrid = app.add_subcommand("bicgrid", "BIC grid search for HGL on a data file");
  bicgrid->add_option("--input", gridcfg.input)->required();
  bicgrid->add_option("--out", gridcfg.out_dir)->required();
  bicgrid->add_option("--lambda1-grid", gridcfg.grid1)->delimiter(',')->required();
  bicgrid->add_option("--lambda2-grid", gridcfg.grid2)->delimiter(',')->required();
  bicgrid->add_option("--lambda3-grid", gridcfg.grid3)->delimiter(',')->required();
  bicgrid->add_option("--rho", gridcfg.rho)->check(CLI::PositiveNumber);
  bicgrid->add_option("--tau", gridcfg.tau)->check(CLI::PositiveNumber);
  bicgrid->add_option("--max-iter", gridcfg.max_iter)->check(CLI::NonNegativeNumber);
  bicgrid->add_option("--bic-c", gridcfg.bic_c)->check(CLI::Range(0.0, 1.0));
  bicgrid->add_flag("--screening", gridcfg.screening);
  bicgrid->add_flag("--standardize,!--no-standardize", gridcfg.standardize);
  bicgrid->add_option("--threads", gridcfg.threads)->check(CLI::PositiveNumber);

  CLI::App* timing_cmd = app.add_subcommand("timing", "run-time sweep over lambda1");
  timing_cmd->add_option("--out", timing.out_path);
  timing_cmd->add_option("--p", timing.p)->check(CLI::Range(2, 100000));
  timing_cmd->add_option("--n", timing.n, "default p/2")->check(CLI::NonNegativeNumber);
  timing_cmd->add_option("--hubs", timing.hubs, "default p/50")->check(CLI::NonNegativeNumber);
  timing_cmd->add_option("--lambda1-grid", timing.grid1)->delimiter(',');
  timing_cmd->add_option("--lambda2", timing.lambda2)->check(CLI::NonNegativeNumber);
  timing_cmd->add_option("--lambda3", timing.lambda3)->check(CLI::NonNegativeNumber);
  timing_cmd->add_option("--rho", timing.rho)->check(CLI::PositiveNumber);
  timing_cmd->add_option("--tau", timing.tau)->check(CLI::PositiveNumber);
  timing_cmd->add_option("--max-iter", timing.max_iter)->check(CLI::NonNegativeNumber);
  timing_cmd->add_option("--seed", timing.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (hgl->parsed()) return cmd_estimate("hgl", est);
    if (glasso->parsed()) return cmd_estimate("glasso", est);
    if (hcg->parsed()) return cmd_estimate("hcg", est);
    if (hbn->parsed()) return cmd_estimate("hbn", est);
    if (simulate->parsed()) return cmd_simulate(sim);
    if (benchmark->parsed()) return cmd_benchmark(bench);
    if (bicgrid->parsed()) return cmd_bicgrid(gridcfg);
    if (timing_cmd->parsed()) return cmd_timing(timing);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const GenerationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const NumericalFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace hubnet
