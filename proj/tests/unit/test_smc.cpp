// Copyright 2026 The hamlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hamlearn/errors.hpp"
#include "hamlearn/single_param_model.hpp"
#include "hamlearn/smc.hpp"

using namespace hamlearn;

namespace {

ParticleCloudd random_cloud(Eigen::Index d, Eigen::Index n, RandomStream& rng) {
  Eigen::MatrixXd pos(d, n);
  Eigen::VectorXd w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) pos(k, j) = rng.normal();
    w(j) = rng.uniform() + 0.01;
  }
  return ParticleCloudd(pos, w);
}

Eigen::VectorXd random_likelihoods(Eigen::Index n, RandomStream& rng) {
  Eigen::VectorXd l(n);
  for (Eigen::Index j = 0; j < n; ++j) l(j) = rng.uniform() + 1e-3;
  return l;
}

}  // namespace

TEST_SUITE("particle cloud") {
  TEST_CASE("weight normalization") {
    Eigen::Vector2d w(2, 2);
    CHECK(normalize_weights(w).isApprox(Eigen::Vector2d(0.5, 0.5)));
    Eigen::Vector3d one(1, 0, 0);
    CHECK(normalize_weights(one) == one);
    CHECK_THROWS_AS(normalize_weights(Eigen::Vector2d(0, 0)), ZeroTotalWeight);
  }

  TEST_CASE("construction validates shapes and weights") {
    CHECK_THROWS_AS(ParticleCloudd(Eigen::MatrixXd::Zero(2, 3), Eigen::VectorXd::Ones(2)), DimensionMismatch);
    Eigen::VectorXd negative(2);
    negative << 1.0, -0.5;
    CHECK_THROWS(ParticleCloudd(Eigen::MatrixXd::Zero(1, 2), negative));
    RandomStream rng(3);
    const auto cloud = random_cloud(3, 50, rng);
    CHECK(std::abs(cloud.weights().sum() - 1.0) < 1e-12);
  }
}

TEST_SUITE("bayes update") {
  TEST_CASE("constant likelihood leaves weights unchanged") {
    RandomStream rng(1);
    const auto cloud = random_cloud(2, 200, rng);
    const auto up = bayes_update(cloud, Eigen::VectorXd::Constant(200, 0.37));
    CHECK((up.cloud.weights() - cloud.weights()).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("two particle example") {
    Eigen::MatrixXd pos(1, 2);
    pos << 0.0, 1.0;
    const auto cloud = ParticleCloudd::uniform(pos);
    const auto up = bayes_update(cloud, Eigen::Vector2d(0.8, 0.2));
    CHECK(up.cloud.weight(0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(up.cloud.weight(1) == doctest::Approx(0.2).epsilon(1e-15));
  }

  TEST_CASE("three particles on the single-parameter model match hand-computed weights") {
    // Prior weights (0.2, 0.3, 0.5) at x = (0.1, 0.4, 0.7); x_inv = 0.2, t = 2, d = 1.
    // L = sin²((x - 0.2)·2) = sin²(-0.2), sin²(0.4), sin²(1.0).
    Eigen::MatrixXd pos(1, 3);
    pos << 0.1, 0.4, 0.7;
    const ParticleCloudd cloud(pos, Eigen::Vector3d(0.2, 0.3, 0.5));
    SingleParamModel model(0.0, 1.0);
    ExperimentSpec exp{ExperimentKind::IQLE, 2.0, ParameterVector::Constant(1, 0.2), Measurement::TwoOutcome};
    const auto up = bayes_update(cloud, Datum{1}, exp, model);
    const double l0 = 0.5 * (1 - std::cos(2 * (0.1 - 0.2) * 2));
    const double l1 = 0.5 * (1 - std::cos(2 * (0.4 - 0.2) * 2));
    const double l2 = 0.5 * (1 - std::cos(2 * (0.7 - 0.2) * 2));
    const double z = 0.2 * l0 + 0.3 * l1 + 0.5 * l2;
    CHECK(up.cloud.weight(0) == doctest::Approx(0.2 * l0 / z).epsilon(1e-12));
    CHECK(up.cloud.weight(1) == doctest::Approx(0.3 * l1 / z).epsilon(1e-12));
    CHECK(up.cloud.weight(2) == doctest::Approx(0.5 * l2 / z).epsilon(1e-12));
  }

  TEST_CASE("zero total weight is rejected and the input survives") {
    RandomStream rng(2);
    const auto cloud = random_cloud(1, 10, rng);
    const Eigen::VectorXd before = cloud.weights();
    CHECK_THROWS_AS(bayes_update(cloud, Eigen::VectorXd::Zero(10)), ZeroTotalWeight);
    CHECK(cloud.weights() == before);
    CHECK_THROWS_AS(bayes_update(cloud, Eigen::VectorXd::Ones(9)), DimensionMismatch);
  }

  TEST_CASE("permuting particles permutes the updated weights") {
    RandomStream rng(4);
    const auto cloud = random_cloud(2, 64, rng);
    const Eigen::VectorXd like = random_likelihoods(64, rng);
    std::vector<int> perm(64);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    Eigen::MatrixXd pos(2, 64);
    Eigen::VectorXd w(64), l(64);
    for (int j = 0; j < 64; ++j) {
      pos.col(j) = cloud.position(perm[j]);
      w(j) = cloud.weight(perm[j]);
      l(j) = like(perm[j]);
    }
    const auto a = bayes_update(cloud, like);
    const auto b = bayes_update(ParticleCloudd(pos, w), l);
    for (int j = 0; j < 64; ++j) CHECK(b.cloud.weight(j) == doctest::Approx(a.cloud.weight(perm[j])).epsilon(1e-13));
    CHECK(a.ess == doctest::Approx(b.ess).epsilon(1e-12));
  }

  TEST_CASE("update order does not matter") {
    RandomStream rng(5);
    for (int rep = 0; rep < 20; ++rep) {
      const auto cloud = random_cloud(3, 100, rng);
      const Eigen::VectorXd l1 = random_likelihoods(100, rng);
      const Eigen::VectorXd l2 = random_likelihoods(100, rng);
      const auto ab = bayes_update(bayes_update(cloud, l1).cloud, l2).cloud;
      const auto ba = bayes_update(bayes_update(cloud, l2).cloud, l1).cloud;
      CHECK((ab.weights() - ba.weights()).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(std::abs(ab.weights().sum() - 1.0) < 1e-12);
    }
  }

  TEST_CASE("resample flag follows the threshold") {
    Eigen::MatrixXd pos(1, 4);
    pos << 0, 1, 2, 3;
    const auto cloud = ParticleCloudd::uniform(pos);
    CHECK_FALSE(bayes_update(cloud, Eigen::Vector4d(1, 1, 1, 1)).resample_due);
    CHECK(bayes_update(cloud, Eigen::Vector4d(1, 1e-3, 1e-3, 1e-3)).resample_due);
  }
}

TEST_SUITE("posterior summaries") {
  TEST_CASE("effective sample size") {
    Eigen::MatrixXd pos = Eigen::MatrixXd::Zero(1, 3);
    CHECK(effective_sample_size(ParticleCloudd::uniform(Eigen::MatrixXd::Zero(1, 7))) == doctest::Approx(7));
    CHECK(effective_sample_size(ParticleCloudd(pos, Eigen::Vector3d(1, 0, 0))) == doctest::Approx(1));
    CHECK(effective_sample_size(ParticleCloudd(pos, Eigen::Vector3d(0.5, 0.25, 0.25))) ==
          doctest::Approx(1.0 / 0.375).epsilon(1e-14));
  }

  TEST_CASE("effective sample size bounds") {
    RandomStream rng(6);
    for (int rep = 0; rep < 50; ++rep) {
      const auto cloud = random_cloud(1, 30, rng);
      const double ess = effective_sample_size(cloud);
      CHECK(ess >= 1.0 - 1e-12);
      CHECK(ess <= 30.0 + 1e-12);
    }
  }

  TEST_CASE("posterior mean") {
    Eigen::MatrixXd sym(2, 2);
    sym << 0.3, -0.3, -1.2, 1.2;
    CHECK(posterior_mean(ParticleCloudd::uniform(sym)).norm() < 1e-15);
    Eigen::MatrixXd single(2, 1);
    single << 0.4, -2.0;
    CHECK(posterior_mean(ParticleCloudd::uniform(single)) == single.col(0));
    Eigen::MatrixXd pos(1, 2);
    pos << 0, 1;
    CHECK(posterior_mean(ParticleCloudd(pos, Eigen::Vector2d(0.25, 0.75)))(0) == doctest::Approx(0.75));
  }

  TEST_CASE("posterior covariance") {
    Eigen::MatrixXd single(3, 1);
    single << 1, 2, 3;
    CHECK(posterior_covariance(ParticleCloudd::uniform(single)).isZero());
    Eigen::MatrixXd pos(1, 2);
    pos << 0, 1;
    CHECK(posterior_covariance(ParticleCloudd::uniform(pos))(0, 0) == doctest::Approx(0.25));
    RandomStream rng(7);
    const auto cov = posterior_covariance(random_cloud(4, 100, rng));
    CHECK((cov - cov.transpose()).norm() == 0.0);
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(cov).eigenvalues().minCoeff() >= -1e-14);
  }

  TEST_CASE("trace of covariance equals expected loss about the mean") {
    RandomStream rng(8);
    const auto cloud = random_cloud(5, 300, rng);
    const auto mean = posterior_mean(cloud);
    double expected = 0.0;
    for (Eigen::Index j = 0; j < cloud.size(); ++j)
      expected += cloud.weight(j) * quadratic_loss(cloud.position(j), mean);
    CHECK(posterior_covariance(cloud).trace() == doctest::Approx(expected).epsilon(1e-12));
  }

  TEST_CASE("quadratic loss") {
    const Eigen::Vector2d a(0, 0), b(3, 4);
    CHECK(quadratic_loss(a, a) == 0.0);
    CHECK(quadratic_loss(a, b) == 25.0);
    RandomStream rng(9);
    Eigen::VectorXd x(6), y(6);
    double manual = 0.0;
    for (int k = 0; k < 6; ++k) {
      x(k) = rng.normal();
      y(k) = rng.normal();
      manual += (x(k) - y(k)) * (x(k) - y(k));
    }
    CHECK(quadratic_loss(x, y) == doctest::Approx(manual).epsilon(1e-14));
    CHECK_THROWS_AS(quadratic_loss(Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(3)), DimensionMismatch);
  }
}

TEST_SUITE("liu-west resampler") {
  TEST_CASE("a = 1 copies parents exactly") {
    RandomStream rng(10);
    const auto cloud = random_cloud(2, 40, rng);
    const auto out = liu_west_resample(cloud, 1.0, rng);
    CHECK(out.size() == 40);
    CHECK(effective_sample_size(out) == doctest::Approx(40.0));
    for (Eigen::Index j = 0; j < out.size(); ++j) {
      bool found = false;
      for (Eigen::Index p = 0; p < cloud.size() && !found; ++p) found = out.position(j) == cloud.position(p);
      CHECK(found);
    }
  }

  TEST_CASE("invalid a is rejected") {
    RandomStream rng(11);
    const auto cloud = random_cloud(1, 5, rng);
    CHECK_THROWS_AS(liu_west_resample(cloud, 1.5, rng), InvalidArgument);
    CHECK_THROWS_AS(liu_west_resample(cloud, -0.1, rng), InvalidArgument);
  }

  TEST_CASE("collapsed cloud resamples without failure") {
    RandomStream rng(12);
    const auto cloud = ParticleCloudd::uniform(Eigen::MatrixXd::Constant(3, 20, 0.25));
    const auto out = liu_west_resample(cloud, 0.9, rng);
    CHECK((out.positions().array() - 0.25).abs().maxCoeff() < 1e-5);
  }

  TEST_CASE("mean and covariance preserved within five standard errors") {
    RandomStream rng(13);
    constexpr Eigen::Index n = 100000;
    Eigen::MatrixXd pos(2, n);
    Eigen::VectorXd w(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double u = rng.normal(), v = rng.normal();
      pos(0, j) = 1.0 + 0.5 * u;
      pos(1, j) = -2.0 + 0.3 * u + 0.2 * v;
      w(j) = 0.2 + rng.uniform();
    }
    const ParticleCloudd cloud(pos, w);
    const Eigen::Vector2d mean = posterior_mean(cloud);
    const Eigen::Matrix2d cov = posterior_covariance(cloud);
    const auto out = liu_west_resample(cloud, 0.9, rng);
    const Eigen::Vector2d out_mean = posterior_mean(out);
    const Eigen::Matrix2d out_cov = posterior_covariance(out);
    for (int k = 0; k < 2; ++k) CHECK(std::abs(out_mean(k) - mean(k)) < 5.0 * std::sqrt(cov(k, k) / n));
    // Standard error of a sample (co)variance entry: sqrt((Σ_ii Σ_jj + Σ_ij²)/n).
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(std::abs(out_cov(i, j) - cov(i, j)) < 5.0 * std::sqrt((cov(i, i) * cov(j, j) + cov(i, j) * cov(i, j)) / n));
  }
}

TEST_SUITE("credible region") {
  TEST_CASE("unit interval in one dimension") {
    Eigen::MatrixXd pos(1, 2);
    pos << -1.0, 1.0;
    const auto cloud = ParticleCloudd::uniform(pos);
    // Variance 1; pick the coverage level whose χ²₁ quantile is 1.
    const double level = boost::math::cdf(boost::math::chi_squared_distribution<double>(1.0), 1.0);
    const auto region = credible_region(cloud, 1.0 - level);
    CHECK(region.radius2 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(region_contains(region, Eigen::VectorXd::Constant(1, 0.999)));
    CHECK_FALSE(region_contains(region, Eigen::VectorXd::Constant(1, 1.001)));
    const auto literal = credible_region(cloud, level, RegionConvention::LiteralQuantile);
    CHECK(literal.radius2 == doctest::Approx(1.0).epsilon(1e-10));
  }

  TEST_CASE("isotropic gaussian cloud gives a circle") {
    RandomStream rng(14);
    Eigen::MatrixXd pos(2, 100000);
    for (Eigen::Index j = 0; j < pos.cols(); ++j) pos.col(j) << rng.normal(), rng.normal();
    const auto region = credible_region(ParticleCloudd::uniform(pos), 0.05);
    const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(region.precision).eigenvalues();
    CHECK(std::sqrt(ev.maxCoeff() / ev.minCoeff()) < 1.02);
    CHECK(region.radius2 == doctest::Approx(chi_squared_quantile<double>(2, 0.95)));
  }

  TEST_CASE("containment") {
    CredibleEllipse<double> e{Eigen::VectorXd::Zero(1), Eigen::MatrixXd::Identity(1, 1), 1.0};
    CHECK(region_contains(e, Eigen::VectorXd::Zero(1)));
    CHECK(region_contains(e, Eigen::VectorXd::Constant(1, 1.0)));
    CHECK_FALSE(region_contains(e, Eigen::VectorXd::Constant(1, 2.0)));
    CHECK_THROWS(credible_region(ParticleCloudd::uniform(Eigen::MatrixXd::Zero(1, 2)), 1.5));
  }
}

TEST_CASE("uniform prior stays inside the box") {
  RandomStream rng(15);
  const Eigen::Vector3d lo(-1, 0, 2), hi(1, 0.5, 3);
  const auto cloud = uniform_prior(lo, hi, 1000, rng);
  CHECK(cloud.size() == 1000);
  for (Eigen::Index j = 0; j < cloud.size(); ++j) {
    CHECK((cloud.position(j).array() >= lo.array()).all());
    CHECK((cloud.position(j).array() <= hi.array()).all());
  }
  CHECK(effective_sample_size(cloud) == doctest::Approx(1000));
}
