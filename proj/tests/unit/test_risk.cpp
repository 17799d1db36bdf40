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

#include "hamlearn/errors.hpp"
#include "hamlearn/ising_model.hpp"
#include "hamlearn/risk.hpp"
#include "hamlearn/single_param_model.hpp"
#include "hamlearn/smc.hpp"

using namespace hamlearn;

namespace {

// Independent closed forms for the Gaussian prior: with
// f(μ) = 1 + s·e^{−2σ²t²}·cos 2(μ − x₋)t we have Pr(d) = f/2,
// E[x|d] = μ + σ² f'/f and Var(x|d) = σ² + σ⁴ (f''/f − (f'/f)²).
struct Analytic {
  double evidence, mean, variance;
};

Analytic analytic(int d, double mu, double sigma, double x_inv, double t) {
  const double s = d == 0 ? 1.0 : -1.0;
  const double v = sigma * sigma;
  const double e = std::exp(-2.0 * v * t * t);
  const double th = 2.0 * (mu - x_inv) * t;
  const double f = 1.0 + s * e * std::cos(th);
  const double f1 = -2.0 * t * s * e * std::sin(th);
  const double f2 = -4.0 * t * t * s * e * std::cos(th);
  return {0.5 * f, mu + v * f1 / f, v + v * v * (f2 / f - (f1 / f) * (f1 / f))};
}

double analytic_risk(double mu, double sigma, double x_inv, double t, double alpha) {
  double r = 0.0;
  for (int d : {0, 1}) {
    const auto a = analytic(d, mu, sigma, x_inv, t);
    r += (alpha + (1.0 - 2.0 * alpha) * a.evidence) * a.variance;
  }
  return r;
}

}  // namespace

TEST_SUITE("single-parameter posterior") {
  TEST_CASE("no evolution keeps the prior mean") {
    const GaussianPrior1D prior{0.3, 0.2};
    CHECK(posterior_mean_1d({0}, prior, 0.9, 0.0) == 0.3);
    CHECK(posterior_mean_1d({1}, prior, 0.9, 0.0) == 0.3);
  }

  TEST_CASE("closed form matches quadrature") {
    const GaussianPrior1D prior{0.5, 0.1};
    const auto q = posterior_moments_1d({0}, prior, 0.6, 5.0);
    CHECK(std::abs(posterior_mean_1d({0}, prior, 0.6, 5.0) - q.mean) < 1e-6);
  }

  TEST_CASE("closed form and quadrature match the analytic moments") {
    RandomStream rng(1);
    for (int rep = 0; rep < 200; ++rep) {
      const GaussianPrior1D prior{2.0 * rng.uniform() - 1.0, 0.01 + rng.uniform()};
      const double x_inv = prior.mu + prior.sigma * rng.normal();
      const double t = 3.0 * rng.uniform() / prior.sigma;
      for (int d : {0, 1}) {
        const auto a = analytic(d, prior.mu, prior.sigma, x_inv, t);
        if (a.evidence < 1e-6) continue;
        const auto q = posterior_moments_1d({static_cast<std::uint64_t>(d)}, prior, x_inv, t);
        const double var = prior.sigma * prior.sigma;
        CHECK(q.evidence == doctest::Approx(a.evidence).epsilon(1e-8));
        CHECK(std::abs(q.mean - a.mean) < 1e-7 * prior.sigma);
        CHECK(std::abs(q.variance - a.variance) < 1e-6 * var);
        CHECK(std::abs(posterior_mean_1d({static_cast<std::uint64_t>(d)}, prior, x_inv, t) - a.mean) <
              1e-9 * prior.sigma);
      }
    }
  }

  TEST_CASE("posterior mean is a martingale") {
    RandomStream rng(2);
    for (int rep = 0; rep < 50; ++rep) {
      const GaussianPrior1D prior{rng.normal(), 0.05 + rng.uniform()};
      const double x_inv = prior.mu + prior.sigma * rng.normal();
      const double t = 2.0 * rng.uniform() / prior.sigma;
      double avg = 0.0;
      for (std::uint64_t d : {0, 1}) {
        const auto q = posterior_moments_1d({d}, prior, x_inv, t);
        avg += q.evidence * posterior_mean_1d({d}, prior, x_inv, t);
      }
      CHECK(avg == doctest::Approx(prior.mu).epsilon(1e-8));
    }
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(posterior_mean_1d({2}, GaussianPrior1D{0, 1}, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(posterior_mean_1d({0}, GaussianPrior1D{0, 0}, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(bayes_risk_1d(GaussianPrior1D{0, 1}, 0, 1, 0.7), InvalidArgument);
  }
}

TEST_SUITE("single-parameter risk") {
  TEST_CASE("matches the analytic risk for every noise level") {
    RandomStream rng(3);
    for (int rep = 0; rep < 100; ++rep) {
      const GaussianPrior1D prior{rng.normal(), 0.01 + rng.uniform()};
      const double x_inv = prior.mu + 2.0 * prior.sigma * rng.normal();
      const double t = 4.0 * rng.uniform() / prior.sigma;
      const double alpha = 0.5 * rng.uniform();
      CHECK(bayes_risk_1d(prior, x_inv, t, alpha) ==
            doctest::Approx(analytic_risk(prior.mu, prior.sigma, x_inv, t, alpha)).epsilon(1e-6));
    }
  }

  TEST_CASE("short evolution leaves the prior variance") {
    const GaussianPrior1D prior{0.5, 0.1};
    CHECK(bayes_risk_1d(prior, 0.6, 1e-9, 0.0) == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(bayes_risk_1d(prior, 0.6, 0.0, 0.2) == doctest::Approx(0.01).epsilon(1e-12));
  }

  TEST_CASE("agrees with direct Monte Carlo") {
    const GaussianPrior1D prior{0.5, 0.1};
    const double t = optimal_time(0.1);
    RandomStream rng(4);
    constexpr int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int k = 0; k < n; ++k) {
      const double x = prior.mu + prior.sigma * rng.normal();
      const std::uint64_t d = rng.uniform() < single_param_likelihood({0}, x, 0.6, t) ? 0 : 1;
      const double err = std::pow(x - posterior_mean_1d({d}, prior, 0.6, t), 2);
      sum += err;
      sum2 += err * err;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / (n - 1));
    CHECK(std::abs(mean - bayes_risk_1d(prior, 0.6, t, 0.0)) < 3.0 * se);
  }

  TEST_CASE("envelope examples") {
    const auto at0 = risk_envelope(0.0, 0.3);
    CHECK(at0.lower == doctest::Approx(0.09));
    CHECK(at0.upper == doctest::Approx(0.09));
    CHECK(risk_envelope(optimal_time(0.3), 0.3).lower == doctest::Approx(0.09 * (1 - std::exp(-1.0))));
    CHECK(risk_envelope(1e4, 0.3).lower == doctest::Approx(0.09));
    CHECK(optimal_time(0.5) == 1.0);
    CHECK(optimal_time(0.01) == doctest::Approx(50.0));
    CHECK_THROWS_AS(optimal_time(0.0), InvalidArgument);
  }

  TEST_CASE("risk stays inside the envelope without noise") {
    const GaussianPrior1D prior{0.2, 0.05};
    const double v = prior.sigma * prior.sigma;
    for (int i = 0; i < 15; ++i) {
      const double x_inv = prior.mu - 3 * prior.sigma + 6 * prior.sigma * i / 14.0;
      for (int j = 1; j <= 15; ++j) {
        const double t = 4.0 / prior.sigma * j / 15.0;
        const double r = bayes_risk_1d(prior, x_inv, t, 0.0);
        const auto env = risk_envelope(t, prior.sigma);
        CHECK(r >= env.lower - 1e-4 * v);
        CHECK(r <= env.upper + 1e-4 * v);
      }
    }
  }
}

TEST_SUITE("risk scans") {
  const GaussianPrior1D prior{0.5, 0.1};
  const double t_opt = optimal_time(0.1);

  std::vector<double> window(double lo, double hi, int n) {
    std::vector<double> g;
    for (int k = 0; k < n; ++k) g.push_back(t_opt * (lo + (hi - lo) * k / (n - 1)));
    return g;
  }

  TEST_CASE("inversion at one standard deviation is insensitive to bit flips near the optimum") {
    RandomStream rng(5);
    const InversionRule rule{InversionStrategy::MuPlusSigma};
    const auto clean = risk_scan(prior, rule, window(0.8, 1.2, 21), 0.0, rng);
    const auto noisy = risk_scan(prior, rule, window(0.8, 1.2, 21), 0.1, rng);
    for (std::size_t k = 0; k < clean.size(); ++k) {
      CHECK(clean[k].x_inv == doctest::Approx(0.6));
      CHECK(std::abs(noisy[k].risk - clean[k].risk) / clean[k].risk < 0.2);
    }
  }

  TEST_CASE("without inversion bit flips can raise the risk above the prior") {
    RandomStream rng(6);
    const auto noisy = risk_scan(prior, InversionRule{InversionStrategy::None}, window(0.5, 1.5, 41), 0.1, rng);
    CHECK(std::any_of(noisy.begin(), noisy.end(), [](const RiskPoint& p) { return p.risk > 0.01; }));
  }

  TEST_CASE("every strategy respects the envelope without noise") {
    RandomStream rng(7);
    for (auto strategy : {InversionStrategy::None, InversionStrategy::Fixed, InversionStrategy::MuPlusSigma,
                          InversionStrategy::MuMinusSigma, InversionStrategy::PghSampled}) {
      const InversionRule rule{strategy, 0.47, 20};
      for (const auto& p : risk_scan(prior, rule, window(0.1, 6.0, 12), 0.0, rng)) {
        const auto env = risk_envelope(p.t, prior.sigma);
        CHECK(p.risk >= env.lower - 1e-4 * 0.01);
        CHECK(p.risk <= env.upper + 1e-4 * 0.01);
        CHECK(p.alpha == 0.0);
      }
    }
  }

  TEST_CASE("sampled inversion reports a standard error") {
    RandomStream rng(8);
    const auto pts = risk_scan(prior, InversionRule{InversionStrategy::PghSampled, 0.0, 50}, {t_opt}, 0.0, rng);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].stderr_ > 0.0);
    CHECK(pts[0].risk < 0.01);
    CHECK_THROWS_AS(risk_scan(prior, InversionRule{}, {}, 0.0, rng), InvalidArgument);
  }
}

TEST_SUITE("multi-parameter risk") {
  TEST_CASE("vanishing evolution time leaves the prior trace") {
    RandomStream rng(9);
    IsingModel model(InteractionGraph::line(3));
    const auto prior = uniform_prior(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1), 500, rng);
    const ExperimentSpec exp{ExperimentKind::IQLE, 1e-9, ParameterVector(Eigen::Vector2d(0.5, 0.5)),
                             Measurement::TwoOutcome};
    const auto r = bayes_risk_nd(model, prior, exp, 0.0, 200, rng);
    CHECK(r.samples == 200);
    CHECK(r.rejected == 0);
    CHECK(r.mean == doctest::Approx(posterior_covariance(prior).trace()).epsilon(1e-6));
  }

  TEST_CASE("two-parameter model learns under the spread inversion design") {
    RandomStream rng(10);
    IsingModel model(InteractionGraph::line(3));
    Eigen::MatrixXd pos(2, 2000);
    for (int j = 0; j < 2000; ++j) pos.col(j) << 0.5 + 0.1 * rng.normal(), 0.3 + 0.1 * rng.normal();
    const auto prior = ParticleCloudd::uniform(pos);
    const double trace = posterior_covariance(prior).trace();
    const auto r = bayes_risk_nd(model, prior, spread_inversion_design(prior, Measurement::TwoOutcome), 0.0, 2000, rng);
    CHECK(r.mean + 3.0 * r.stderr_ < trace);
  }

  TEST_CASE("one edge agrees with the quadrature risk") {
    RandomStream rng(11);
    const GaussianPrior1D prior{0.5, 0.1};
    const auto cloud = gaussian_grid_cloud(prior, 4001);
    IsingModel model(InteractionGraph::complete(2));
    for (double alpha : {0.0, 0.1}) {
      const ExperimentSpec exp{ExperimentKind::IQLE, optimal_time(0.1), ParameterVector::Constant(1, 0.6),
                               Measurement::TwoOutcome};
      const auto mc = bayes_risk_nd(model, cloud, exp, alpha, 4000, rng);
      const double exact = bayes_risk_1d(prior, 0.6, optimal_time(0.1), alpha);
      CHECK(std::abs(mc.mean - exact) < 3.0 * mc.stderr_ + 1e-6 * exact);
    }
  }

  TEST_CASE("argument checks") {
    RandomStream rng(12);
    IsingModel model(InteractionGraph::line(3));
    const auto prior = gaussian_grid_cloud({0, 1}, 10);
    const ExperimentSpec exp{ExperimentKind::IQLE, 1.0, ParameterVector::Zero(2), Measurement::TwoOutcome};
    CHECK_THROWS_AS(bayes_risk_nd(model, prior, exp, 0.0, 10, rng), DimensionMismatch);
    CHECK_THROWS_AS(bayes_risk_nd(model, prior, exp, 0.0, 0, rng), InvalidArgument);
  }
}
