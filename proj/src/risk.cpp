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

#include "hamlearn/risk.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hamlearn/errors.hpp"
#include "hamlearn/noise.hpp"
#include "hamlearn/simulator.hpp"
#include "hamlearn/smc.hpp"

namespace hamlearn {

namespace {

constexpr double kHalfWidth = 10.0;  // integrate over μ ± 10σ
constexpr double kQuadTolerance = 1e-10;
constexpr double kQuadAccept = 1e-8;
constexpr unsigned kQuadDepth = 20;

double sign_of(Datum d) {
  if (d.outcome > 1) throw InvalidArgument("single-parameter outcomes are 0 and 1");
  return d.outcome == 0 ? 1.0 : -1.0;
}

// ½(1 ± cos 2y) written as cos²y / sin²y to avoid cancellation near zero.
double likelihood(Datum d, double x, double x_inv, double t) {
  const double y = (x - x_inv) * t;
  return d.outcome == 0 ? std::pow(std::cos(y), 2) : std::pow(std::sin(y), 2);
}

template <typename F>
double integrate(F&& f) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, -kHalfWidth, kHalfWidth, kQuadDepth, kQuadTolerance, &error, &l1);
  if (error > kQuadAccept * std::max(l1, std::numeric_limits<double>::min()))
    throw QuadratureFailure(fmt::format("quadrature error {:.3g} exceeds tolerance (L1 {:.3g})", error, l1));
  return value;
}

}  // namespace

void GaussianPrior1D::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("Gaussian prior needs sigma > 0");
  if (!std::isfinite(mu)) throw InvalidArgument("Gaussian prior mean must be finite");
}

double posterior_mean_1d(Datum d, const GaussianPrior1D& prior, double x_inv, double t) {
  prior.validate();
  const double s = sign_of(d);
  if (t == 0.0) return prior.mu;
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const double mu = prior.mu;
  const double var = prior.sigma * prior.sigma;
  const C a = std::exp(4.0 * i * mu * t);
  const C b = std::exp(4.0 * i * x_inv * t);
  const C num = 2.0 * i * s * var * t * (a - b);
  const C den = 2.0 * std::exp(2.0 * t * (i * (mu + x_inv) + var * t)) + s * (a + b);
  const C shift = num / den;
  if (!std::isfinite(shift.real())) return mu;
  if (std::abs(shift.imag()) > 1e-10 * std::max(1.0, std::abs(shift.real())))
    throw Error(fmt::format("posterior mean has imaginary residue {:.3g}", shift.imag()));
  return mu + shift.real();
}

PosteriorMoments1D posterior_moments_1d(Datum d, const GaussianPrior1D& prior, double x_inv, double t) {
  prior.validate();
  sign_of(d);
  const double mu = prior.mu;
  const double sigma = prior.sigma;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  // u = (x − μ)/σ; weight φ(u) L_d(μ + σu).
  auto weight = [&](double u) { return norm * std::exp(-0.5 * u * u) * likelihood(d, mu + sigma * u, x_inv, t); };
  const double z = integrate(weight);
  PosteriorMoments1D out;
  out.evidence = z;
  if (!(z > 0.0)) {
    out.mean = mu;
    out.variance = sigma * sigma;
    return out;
  }
  const double m1 = integrate([&](double u) { return u * weight(u); }) / z;
  const double m2 = integrate([&](double u) { return u * u * weight(u); }) / z;
  out.mean = mu + sigma * m1;
  out.variance = sigma * sigma * std::max(0.0, m2 - m1 * m1);
  return out;
}

double bayes_risk_1d(const GaussianPrior1D& prior, double x_inv, double t, double alpha) {
  prior.validate();
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw InvalidArgument("bit-flip rate must lie in [0, 0.5]");
  double risk = 0.0;
  for (std::uint64_t outcome : {0, 1}) {
    const auto moments = posterior_moments_1d({outcome}, prior, x_inv, t);
    const double evidence = std::clamp(moments.evidence, 0.0, 1.0);
    risk += bitflip_wrap(alpha, evidence) * moments.variance;
  }
  return risk;
}

RiskEnvelope risk_envelope(double t, double sigma) {
  if (!(t >= 0.0)) throw InvalidArgument("risk_envelope: t must be non-negative");
  if (!(sigma > 0.0)) throw InvalidArgument("risk_envelope: sigma must be positive");
  const double var = sigma * sigma;
  const double u = 4.0 * var * t * t;
  return {var * (1.0 - u * std::exp(-u)), var};
}

double optimal_time(double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("optimal_time: sigma must be positive");
  return 1.0 / (2.0 * sigma);
}

std::vector<RiskPoint> risk_scan(const GaussianPrior1D& prior, const InversionRule& rule,
                                 const std::vector<double>& t_grid, double alpha, RandomStream& rng) {
  if (t_grid.empty()) throw InvalidArgument("risk_scan: empty time grid");
  std::vector<RiskPoint> out;
  for (double t : t_grid) {
    RiskPoint p{0.0, t, alpha, 0.0, 0.0};
    switch (rule.strategy) {
      case InversionStrategy::None: p.x_inv = 0.0; break;
      case InversionStrategy::Fixed: p.x_inv = rule.fixed_value; break;
      case InversionStrategy::MuPlusSigma: p.x_inv = prior.mu + prior.sigma; break;
      case InversionStrategy::MuMinusSigma: p.x_inv = prior.mu - prior.sigma; break;
      case InversionStrategy::PghSampled: {
        if (rule.draws < 2) throw InvalidArgument("risk_scan: PGH averaging needs at least two draws");
        double sum = 0.0, sum2 = 0.0, xs = 0.0;
        for (int k = 0; k < rule.draws; ++k) {
          const double x_inv = prior.mu + prior.sigma * rng.normal();
          const double r = bayes_risk_1d(prior, x_inv, t, alpha);
          sum += r;
          sum2 += r * r;
          xs += x_inv;
        }
        const double n = rule.draws;
        p.x_inv = xs / n;
        p.risk = sum / n;
        p.stderr_ = std::sqrt(std::max(0.0, sum2 / n - p.risk * p.risk) / (n - 1.0));
        out.push_back(p);
        continue;
      }
    }
    p.risk = bayes_risk_1d(prior, p.x_inv, t, alpha);
    out.push_back(p);
  }
  return out;
}

MonteCarloRisk bayes_risk_nd(const LikelihoodModel& model, const ParticleCloudd& prior, const ExperimentDesign& design,
                             double alpha, int n_mc, RandomStream& rng) {
  if (n_mc < 1) throw InvalidArgument("bayes_risk_nd: n_mc must be at least 1");
  if (prior.dimension() != model.dimension()) throw DimensionMismatch("bayes_risk_nd: prior dimension mismatch");
  MonteCarloRisk out;
  double sum = 0.0, sum2 = 0.0;
  for (int k = 0; k < n_mc; ++k) {
    const ExperimentSpec experiment = design(rng);
    const ParameterVector truth = prior.position(sample_particle(prior, rng));
    const Datum datum = sample_outcome(model, truth, experiment, rng, alpha);
    try {
      const auto update = bayes_update(prior, model.likelihoods(datum, prior.positions(), experiment));
      const double trace = posterior_covariance(update.cloud).trace();
      sum += trace;
      sum2 += trace * trace;
      ++out.samples;
    } catch (const ZeroTotalWeight&) {
      ++out.rejected;
    }
  }
  if (out.samples > 0) {
    const double n = out.samples;
    out.mean = sum / n;
    out.stderr_ = out.samples > 1 ? std::sqrt(std::max(0.0, sum2 / n - out.mean * out.mean) / (n - 1.0)) : 0.0;
  }
  return out;
}

MonteCarloRisk bayes_risk_nd(const LikelihoodModel& model, const ParticleCloudd& prior,
                             const ExperimentSpec& experiment, double alpha, int n_mc, RandomStream& rng) {
  return bayes_risk_nd(model, prior, [&](RandomStream&) { return experiment; }, alpha, n_mc, rng);
}

ExperimentDesign spread_inversion_design(const ParticleCloudd& prior, Measurement measurement) {
  const ParameterVector mean = posterior_mean(prior);
  const double spread = std::sqrt(posterior_covariance(prior).trace());
  if (!(spread > 0.0)) throw DegenerateCloud("spread_inversion_design: prior has zero spread");
  return [mean, spread, measurement](RandomStream& rng) {
    ParameterVector direction(mean.size());
    do {
      for (Eigen::Index k = 0; k < direction.size(); ++k) direction(k) = rng.normal();
    } while (direction.norm() == 0.0);
    ExperimentSpec exp;
    exp.kind = ExperimentKind::IQLE;
    exp.measurement = measurement;
    exp.time = 1.0 / (2.0 * spread);
    exp.inversion = ParameterVector(mean + spread * direction.normalized());
    return exp;
  };
}

ParticleCloudd gaussian_grid_cloud(const GaussianPrior1D& prior, int particles, double width) {
  prior.validate();
  if (particles < 2) throw InvalidArgument("gaussian_grid_cloud: need at least two particles");
  Eigen::MatrixXd pos(1, particles);
  Eigen::VectorXd w(particles);
  for (int j = 0; j < particles; ++j) {
    const double u = -width + 2.0 * width * j / (particles - 1);
    pos(0, j) = prior.mu + prior.sigma * u;
    w(j) = std::exp(-0.5 * u * u);
  }
  return ParticleCloudd(std::move(pos), w);
}

}  // namespace hamlearn
