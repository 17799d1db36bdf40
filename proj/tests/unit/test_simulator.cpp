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

#include <cmath>
#include <numbers>

#include "hamlearn/errors.hpp"
#include "hamlearn/ising_model.hpp"
#include "hamlearn/simulator.hpp"
#include "hamlearn/single_param_model.hpp"

using namespace hamlearn;

namespace {

ExperimentSpec iqle(double t, ParameterVector inversion, Measurement m = Measurement::FullBasis) {
  return {ExperimentKind::IQLE, t, std::move(inversion), m};
}

ParameterVector one(double v) { return ParameterVector::Constant(1, v); }

}  // namespace

TEST_SUITE("outcome sampling") {
  TEST_CASE("echo always returns the probe outcome") {
    RandomStream rng(1);
    IsingModel model(InteractionGraph::complete(4));
    ParameterVector x(6);
    x << 0.1, -0.2, 0.3, 0.05, -0.4, 0.25;
    for (int k = 0; k < 1000; ++k) CHECK(sample_outcome(model, x, iqle(1e3, x), rng).outcome == 0);
    const auto near_zero = iqle(1e-14, ParameterVector::Zero(6));
    for (int k = 0; k < 1000; ++k) CHECK(sample_outcome(model, x, near_zero, rng).outcome == 0);
  }

  TEST_CASE("frequencies match the outcome distribution") {
    RandomStream rng(2);
    IsingModel model(InteractionGraph::complete(3));
    ParameterVector x(3), xm(3);
    x << 0.3, -0.1, 0.45;
    xm << -0.2, 0.2, 0.1;
    const auto exp = iqle(2.3, xm);
    const Eigen::VectorXd p = model.outcome_distribution(x, exp);
    constexpr int n = 100000;
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(p.size());
    for (int k = 0; k < n; ++k) {
      const auto d = sample_outcome(model, x, exp, rng);
      REQUIRE(d.outcome < static_cast<std::uint64_t>(p.size()));
      counts(static_cast<Eigen::Index>(d.outcome)) += 1;
    }
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      const double sd = std::sqrt(n * p(k) * (1 - p(k)));
      CHECK(std::abs(counts(k) - n * p(k)) <= 5.0 * sd + 1e-9);
    }
  }

  TEST_CASE("bit-flip noise flips two-outcome results") {
    RandomStream rng(3);
    SingleParamModel model;
    const auto exp = iqle(1.0, one(0.2), Measurement::TwoOutcome);
    constexpr int n = 100000;
    int flipped = 0;
    for (int k = 0; k < n; ++k) flipped += static_cast<int>(sample_outcome(model, one(0.2), exp, rng, 0.1).outcome);
    CHECK(std::abs(flipped - 0.1 * n) < 5.0 * std::sqrt(n * 0.09));
    IsingModel full(InteractionGraph::complete(3));
    CHECK_THROWS_AS(sample_outcome(full, ParameterVector::Zero(3), iqle(1.0, ParameterVector::Zero(3)), rng, 0.1),
                    InvalidArgument);
  }
}

TEST_SUITE("sampled likelihoods") {
  TEST_CASE("deterministic cases") {
    RandomStream rng(4);
    SingleParamModel model;
    const auto exp = iqle(1.0, one(0.1), Measurement::TwoOutcome);
    CHECK(estimate_likelihood_sampled(model, one(0.1), exp, {0}, 7, rng) == 1.0);
    CHECK(estimate_likelihood_sampled(model, one(0.1), exp, {1}, 7, rng) == kLikelihoodFloor);
    CHECK_THROWS_AS(estimate_likelihood_sampled(model, one(0.1), exp, {0}, 0, rng), InvalidArgument);
  }

  TEST_CASE("half probability with ten thousand samples") {
    RandomStream rng(5);
    SingleParamModel model(-2.0, 2.0);
    const auto exp = iqle(1.0, one(0.0), Measurement::TwoOutcome);
    const ParameterVector x = one(std::numbers::pi / 4);
    for (int rep = 0; rep < 20; ++rep)
      CHECK(std::abs(estimate_likelihood_sampled(model, x, exp, {0}, 10000, rng) - 0.5) < 0.025);
  }

  TEST_CASE("error shrinks as the inverse square root of the sample count") {
    RandomStream rng(6);
    SingleParamModel model(-2.0, 2.0);
    const auto exp = iqle(1.0, one(0.0), Measurement::TwoOutcome);
    const ParameterVector x = one(0.4);
    const double p = single_param_likelihood({0}, 0.4, 0.0, 1.0);
    auto mae = [&](std::uint64_t n) {
      double sum = 0.0;
      for (int rep = 0; rep < 100; ++rep) sum += std::abs(estimate_likelihood_sampled(model, x, exp, {0}, n, rng) - p);
      return sum / 100.0;
    };
    const double ratio = mae(100) / mae(10000);
    CHECK(ratio > 10.0 / 2.0);
    CHECK(ratio < 10.0 * 2.0);
  }
}

TEST_SUITE("sample budgets") {
  TEST_CASE("required samples") {
    CHECK(required_samples(0.0, 0.3, 0.1) == 0);
    CHECK(required_samples(1.0, 0.3, 0.1) == 0);
    CHECK(required_samples(0.5, 0.5, 0.1) == 100);
    CHECK_THROWS_AS(required_samples(0.5, 0.5, 0.0), InvalidArgument);
  }

  TEST_CASE("required samples is nonincreasing in epsilon and expected likelihood") {
    std::uint64_t prev = required_samples(0.4, 0.2, 0.01);
    for (double eps = 0.02; eps < 1.0; eps += 0.01) {
      const auto now = required_samples(0.4, 0.2, eps);
      CHECK(now <= prev);
      prev = now;
    }
    prev = required_samples(0.4, 0.01, 0.05);
    for (double e = 0.02; e <= 1.0; e += 0.01) {
      const auto now = required_samples(0.4, e, 0.05);
      CHECK(now <= prev);
      prev = now;
    }
  }

  TEST_CASE("budget for one update") {
    const Eigen::Vector4d like(0.5, 0.5, 0.5, 0.5);
    const Eigen::Vector4d w = Eigen::Vector4d::Constant(0.25);
    const auto b = sample_budget(like, w, 0.1);
    CHECK(b.n_samp_per_particle == 100);
    CHECK(b.n_sim_total == 400);
    CHECK_THROWS_AS(sample_budget(like, Eigen::Vector3d::Ones(), 0.1), DimensionMismatch);
    CHECK(stability_simulation_count(2.0, 1000, 0.1, 0.5, 0.5) == doctest::Approx(16.0 * 1000 * 0.25 / 0.0025));
  }
}

TEST_SUITE("likelihood evaluator") {
  TEST_CASE("modes") {
    for (auto m : {EvaluatorMode::Exact, EvaluatorMode::Sampled, EvaluatorMode::NoisyExact})
      CHECK(parse_evaluator_mode(to_string(m)) == m);
    CHECK_THROWS_AS(parse_evaluator_mode("magic"), InvalidArgument);
    LikelihoodEvaluator sampled{EvaluatorMode::Sampled, 250, 0.0};
    CHECK(sampled.simulations_per_particle() == 250);
    CHECK(LikelihoodEvaluator{}.simulations_per_particle() == 1);
    CHECK_THROWS_AS((LikelihoodEvaluator{EvaluatorMode::NoisyExact, 1, -1.0}.validate()), InvalidArgument);
  }

  TEST_CASE("exact mode returns model likelihoods; stochastic modes stay in range") {
    RandomStream rng(7);
    IsingModel model(InteractionGraph::line(4));
    Eigen::MatrixXd pos = Eigen::MatrixXd::Random(3, 100) * 0.5;
    const auto exp = iqle(2.0, ParameterVector::Zero(3));
    const Eigen::VectorXd exact = model.likelihoods({0}, pos, exp);
    CHECK(LikelihoodEvaluator{}.likelihoods(model, {0}, pos, exp, rng) == exact);
    for (auto m : {EvaluatorMode::Sampled, EvaluatorMode::NoisyExact}) {
      const auto v = LikelihoodEvaluator{m, 50, 0.1}.likelihoods(model, {0}, pos, exp, rng);
      CHECK(v.minCoeff() >= kLikelihoodFloor);
      CHECK(v.maxCoeff() <= 1.0);
    }
  }
}
