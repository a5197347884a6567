#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "hubnet/prox.hpp"
#include "hubnet/rng.hpp"

using namespace hubnet;

namespace {

Eigen::MatrixXd random_matrix(int p, Rng& rng, double scale = 1.0) {
  Eigen::MatrixXd m(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) m(i, j) = scale * rng.uniform(-1.0, 1.0);
  }
  return m;
}

Eigen::MatrixXd random_symmetric(int p, Rng& rng, double scale = 1.0) {
  const Eigen::MatrixXd m = random_matrix(p, rng, scale);
  return 0.5 * (m + m.transpose());
}

AdmmState random_state(int p, Rng& rng) {
  AdmmState s = AdmmState::initial(p, 2.5, 1e-7);
  s.theta = random_symmetric(p, rng);
  s.z = random_symmetric(p, rng);
  s.w1 = random_symmetric(p, rng);
  s.w3 = random_symmetric(p, rng);
  s.v = random_matrix(p, rng);
  s.w2 = random_matrix(p, rng);
  return s;
}

// Objective of the column prox: (rho/2)||x - c||^2 + lambda2 ||x||_1 + lambda3 ||x||_2.
double column_objective(const Eigen::VectorXd& x, const Eigen::VectorXd& c, double rho,
                        double lambda2, double lambda3) {
  return 0.5 * rho * (x - c).squaredNorm() + lambda2 * x.cwiseAbs().sum() +
         lambda3 * x.norm();
}

}  // namespace

TEST_CASE("soft threshold definition and edge cases") {
  Eigen::MatrixXd a(1, 3);
  a << 3.0, -0.5, 0.2;
  const Eigen::MatrixXd out = soft_threshold(a, 1.0);
  CHECK(out(0, 0) == doctest::Approx(2.0));
  CHECK(out(0, 1) == 0.0);
  CHECK(out(0, 2) == 0.0);

  Rng rng(1);
  const Eigen::MatrixXd r = random_matrix(4, rng);
  CHECK((soft_threshold(r, 0.0) - r).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(soft_threshold(r, -0.1), InvalidInput);
}

TEST_CASE("soft threshold is a sign-preserving contraction") {
  Rng rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::MatrixXd a = random_matrix(5, rng, 2.0);
    const double b = rng.uniform(0.0, 1.5);
    const Eigen::MatrixXd out = soft_threshold(a, b);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        CHECK(std::abs(out(i, j)) <= std::abs(a(i, j)));
        CHECK((out(i, j) == 0.0 || out(i, j) * a(i, j) > 0.0));
      }
    }
  }
}

TEST_CASE("update_z thresholds off-diagonals and copies the diagonal") {
  const int p = 3;
  // z_tilde - w3 = I: diagonal preserved, off-diagonals zero for any lambda1.
  Eigen::MatrixXd z_tilde = Eigen::MatrixXd::Identity(p, p);
  Eigen::MatrixXd w3 = Eigen::MatrixXd::Zero(p, p);
  const Eigen::MatrixXd z = update_z(z_tilde, w3, 5.0, 1.0);
  CHECK((z - Eigen::MatrixXd::Identity(p, p)).cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXd base = Eigen::MatrixXd::Zero(2, 2);
  base(0, 1) = base(1, 0) = 0.4;
  const Eigen::MatrixXd z2 = update_z(base, Eigen::MatrixXd::Zero(2, 2), 0.1, 1.0);
  CHECK(z2(0, 1) == doctest::Approx(0.3));

  Rng rng(3);
  const Eigen::MatrixXd zt = random_matrix(4, rng);
  const Eigen::MatrixXd w = random_matrix(4, rng);
  const double lambda1 = 0.35, rho = 2.0;
  const Eigen::MatrixXd got = update_z(zt, w, lambda1, rho);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double raw = zt(i, j) - w(i, j);
      double want = raw;
      if (i != j) {
        const double shrunk = std::abs(raw) - lambda1 / rho;
        want = shrunk > 0.0 ? (raw > 0.0 ? shrunk : -shrunk) : 0.0;
      }
      CHECK(got(i, j) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("update_v trivial regimes") {
  Rng rng(4);
  const int p = 4;
  const Eigen::MatrixXd v_tilde = random_matrix(p, rng);
  const Eigen::MatrixXd w2 = random_matrix(p, rng);
  const double rho = 2.0;

  // lambda3 = 0: off-diagonal equals plain soft thresholding of C.
  const Eigen::MatrixXd no_group = update_v(v_tilde, w2, 0.6, 0.0, rho);
  Eigen::MatrixXd c = v_tilde - w2;
  c.diagonal().setZero();
  const Eigen::MatrixXd expected = soft_threshold(c, 0.6 / rho);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j) CHECK(no_group(i, j) == doctest::Approx(expected(i, j)));
    }
  }
  CHECK((no_group.diagonal() - (v_tilde - w2).diagonal()).cwiseAbs().maxCoeff() == 0.0);

  // lambda2 = lambda3 = 0: identity prox plus restored diagonal.
  const Eigen::MatrixXd ident = update_v(v_tilde, w2, 0.0, 0.0, rho);
  CHECK((ident - (v_tilde - w2)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("update_v clamps weak columns to zero") {
  const int p = 3;
  Eigen::MatrixXd v_tilde = Eigen::MatrixXd::Zero(p, p);
  v_tilde(1, 0) = 0.2;
  v_tilde(2, 0) = -0.1;
  // ||S(C_0, 0)||_2 = sqrt(0.05) < lambda3/rho = 0.5 -> whole column zero.
  const Eigen::MatrixXd v = update_v(v_tilde, Eigen::MatrixXd::Zero(p, p), 0.0, 0.5, 1.0);
  CHECK(v(1, 0) == 0.0);
  CHECK(v(2, 0) == 0.0);

  // Fully-thresholded column hits the 0/0 convention: scale factor is zero.
  const Eigen::MatrixXd v2 = update_v(v_tilde, Eigen::MatrixXd::Zero(p, p), 1.0, 0.5, 1.0);
  CHECK(v2.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("update_v matches the scalar group-shrink example") {
  // C_0 = (0.6, 0.8) off-diagonal, lambda2 = 0, lambda3/rho = 0.5:
  // norm 1.0, factor 0.5, column (0.3, 0.4).
  Eigen::MatrixXd v_tilde = Eigen::MatrixXd::Zero(3, 3);
  v_tilde(1, 0) = 0.6;
  v_tilde(2, 0) = 0.8;
  const Eigen::MatrixXd v = update_v(v_tilde, Eigen::MatrixXd::Zero(3, 3), 0.0, 0.5, 1.0);
  CHECK(v(1, 0) == doctest::Approx(0.3));
  CHECK(v(2, 0) == doctest::Approx(0.4));
}

TEST_CASE("column prox solves its own minimization problem") {
  // Certify against a numerical minimizer: dense random probing around the
  // returned point plus independent restarts, on length-3 columns.
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const double rho = rng.uniform(0.5, 3.0);
    const double lambda2 = rng.uniform(0.0, 1.0);
    const double lambda3 = rng.uniform(0.0, 1.5);

    const int p = 4;  // column j=1, off-diagonal entries are 3
    Eigen::MatrixXd v_tilde = random_matrix(p, rng);
    const Eigen::MatrixXd v = update_v(v_tilde, Eigen::MatrixXd::Zero(p, p), lambda2, lambda3, rho);

    const int j = 1;
    Eigen::VectorXd c(p - 1), x(p - 1);
    int k = 0;
    for (int i = 0; i < p; ++i) {
      if (i == j) continue;
      c(k) = v_tilde(i, j);
      x(k) = v(i, j);
      ++k;
    }
    const double claimed = column_objective(x, c, rho, lambda2, lambda3);

    double best = claimed;
    Eigen::VectorXd probe(p - 1);
    for (int trial = 0; trial < 200000; ++trial) {
      const double radius = trial < 100000 ? 1.5 : 0.01;
      for (int i = 0; i < p - 1; ++i) {
        const double center = trial < 100000 ? c(i) : x(i);
        probe(i) = center + radius * rng.uniform(-1.0, 1.0);
      }
      best = std::min(best, column_objective(probe, c, rho, lambda2, lambda3));
    }
    CHECK(claimed <= best + 1e-6);
  }
}

TEST_CASE("update_consensus passes a satisfied constraint through") {
  Rng rng(6);
  const int p = 4;
  AdmmState s = AdmmState::initial(p, 2.0, 1e-7);
  s.v = random_matrix(p, rng);
  s.z = random_symmetric(p, rng);
  s.theta = s.z + s.v + s.v.transpose();
  s.w1.setZero();
  s.w2.setZero();
  s.w3.setZero();
  const ConsensusTriple out = update_consensus(s);
  CHECK((out.theta_tilde - s.theta).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((out.v_tilde - s.v).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((out.z_tilde - s.z).cwiseAbs().maxCoeff() <= 1e-14);

  AdmmState zero = AdmmState::initial(p, 2.0, 1e-7);
  zero.theta.setZero();
  zero.v.setZero();
  zero.z.setZero();
  const ConsensusTriple zout = update_consensus(zero);
  CHECK(zout.theta_tilde.cwiseAbs().maxCoeff() == 0.0);
  CHECK(zout.v_tilde.cwiseAbs().maxCoeff() == 0.0);
  CHECK(zout.z_tilde.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("update_consensus output satisfies the consensus identity") {
  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const AdmmState s = random_state(3 + rep % 4, rng);
    const ConsensusTriple out = update_consensus(s);
    const Eigen::MatrixXd gap =
        out.theta_tilde - out.z_tilde - out.v_tilde - out.v_tilde.transpose();
    CHECK(gap.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("update_duals accumulates residuals") {
  Rng rng(8);
  const int p = 3;
  AdmmState s = AdmmState::initial(p, 2.0, 1e-7);

  // Zero residuals: duals unchanged.
  DualTriple same = update_duals(s);
  CHECK((same.w1 - s.w1).cwiseAbs().maxCoeff() == 0.0);
  CHECK((same.w2 - s.w2).cwiseAbs().maxCoeff() == 0.0);
  CHECK((same.w3 - s.w3).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::MatrixXd r = random_symmetric(p, rng);
  s.theta = s.theta_tilde + r;
  DualTriple once = update_duals(s);
  CHECK((once.w1 - r).cwiseAbs().maxCoeff() <= 1e-15);

  s.w1 = once.w1;
  DualTriple twice = update_duals(s);
  CHECK((twice.w1 - 2.0 * r).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("hub penalty value") {
  const int p = 4;
  PenaltyParams params{2.0, 0.7, 1.3, 2};

  // Diagonal V and Z carry no penalty.
  Eigen::MatrixXd diag = Eigen::MatrixXd::Identity(p, p) * 3.0;
  CHECK(hub_penalty_value(diag, diag, params) == 0.0);

  // Symmetric pair +-0.5 in Z, lambda1 = 2: both entries counted.
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(p, p);
  z(0, 1) = z(1, 0) = 0.5;
  CHECK(hub_penalty_value(Eigen::MatrixXd::Zero(p, p), z, PenaltyParams{2.0, 0.0, 0.0, 2}) ==
        doctest::Approx(2.0));

  Rng rng(9);
  const Eigen::MatrixXd v = random_matrix(p, rng);
  const Eigen::MatrixXd zr = random_symmetric(p, rng);
  double direct = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j) {
        direct += params.lambda1 * std::abs(zr(i, j)) + params.lambda2 * std::abs(v(i, j));
      }
    }
  }
  for (int j = 0; j < p; ++j) {
    double sq = 0.0;
    for (int i = 0; i < p; ++i) {
      if (i != j) sq += v(i, j) * v(i, j);
    }
    direct += params.lambda3 * std::sqrt(sq);
  }
  CHECK(hub_penalty_value(v, zr, params) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("penalty params validation") {
  CHECK_THROWS_AS(PenaltyParams({-0.1, 0.0, 0.0, 2}).validate(), InvalidInput);
  CHECK_THROWS_AS(PenaltyParams({0.1, 0.0, 0.0, 3}).validate(), InvalidInput);
  CHECK_NOTHROW(PenaltyParams({0.1, 0.2, 0.3, 1}).validate());
}
