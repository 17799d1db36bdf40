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

#ifndef HAMLEARN_SMC_HPP
#define HAMLEARN_SMC_HPP

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hamlearn/errors.hpp"
#include "hamlearn/particle_cloud.hpp"
#include "hamlearn/random.hpp"

namespace hamlearn {

/// Resampling controls: Liu-West mixing parameter `a` and the ESS trigger as
/// a fraction of the particle count.
struct ResampleConfig {
  double a = 0.9;
  double threshold = 0.5;

  friend bool operator==(const ResampleConfig&, const ResampleConfig&) = default;
};

/// 1 / Σ w_j². Lies in [1, N] for a normalized cloud.
template <typename Scalar>
Scalar effective_sample_size(const ParticleCloud<Scalar>& cloud) {
  return Scalar(1) / cloud.weights().squaredNorm();
}

template <typename Scalar>
typename ParticleCloud<Scalar>::Vector posterior_mean(const ParticleCloud<Scalar>& cloud) {
  return cloud.positions() * cloud.weights();
}

/// Weighted covariance Σ_j w_j (x_j − μ)(x_j − μ)ᵀ.
template <typename Scalar>
typename ParticleCloud<Scalar>::Matrix posterior_covariance(const ParticleCloud<Scalar>& cloud) {
  using Matrix = typename ParticleCloud<Scalar>::Matrix;
  const auto mean = posterior_mean(cloud);
  const Matrix centered = cloud.positions().colwise() - mean;
  Matrix cov = centered * cloud.weights().asDiagonal() * centered.transpose();
  return (cov + cov.transpose()) / Scalar(2);
}

/// Covariance plus εI, ε = 1e-12·max(1, trace/d). Always positive definite.
template <typename Scalar>
typename ParticleCloud<Scalar>::Matrix regularized_covariance(const ParticleCloud<Scalar>& cloud) {
  auto cov = posterior_covariance(cloud);
  const Scalar d = Scalar(cloud.dimension());
  const Scalar eps = Scalar(1e-12) * std::max(Scalar(1), cov.trace() / d);
  cov.diagonal().array() += eps;
  return cov;
}

/// Squared Euclidean distance between an estimate and the true parameters.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar quadratic_loss(const Eigen::MatrixBase<DerivedA>& estimate,
                                         const Eigen::MatrixBase<DerivedB>& truth) {
  if (estimate.size() != truth.size())
    throw DimensionMismatch("quadratic_loss: estimate has " + std::to_string(estimate.size()) +
                            " coordinates, truth has " + std::to_string(truth.size()));
  return (estimate - truth).squaredNorm();
}

template <typename Scalar>
struct BayesUpdate {
  ParticleCloud<Scalar> cloud;
  Scalar ess;
  bool resample_due;
};

/// Multiply weights by per-particle likelihoods and renormalize.
///
/// Throws ZeroTotalWeight when every product vanishes; the input cloud is
/// untouched in that case. `resample_due` is set when ESS drops below
/// `threshold`·N.
template <typename Scalar, typename Derived>
BayesUpdate<Scalar> bayes_update(const ParticleCloud<Scalar>& cloud,
                                 const Eigen::MatrixBase<Derived>& likelihoods,
                                 double threshold = ResampleConfig{}.threshold) {
  if (likelihoods.size() != cloud.size())
    throw DimensionMismatch("bayes_update: expected " + std::to_string(cloud.size()) +
                            " likelihoods, got " + std::to_string(likelihoods.size()));
  typename ParticleCloud<Scalar>::Vector w = cloud.weights().cwiseProduct(likelihoods);
  ParticleCloud<Scalar> updated(cloud.positions(), w);
  const Scalar ess = effective_sample_size(updated);
  return {std::move(updated), ess, ess < Scalar(threshold) * Scalar(cloud.size())};
}

/// Same as above with likelihoods pulled from a model exposing
/// `likelihoods(datum, positions, experiment)`.
template <typename Scalar, typename Model, typename Datum, typename Experiment>
BayesUpdate<Scalar> bayes_update(const ParticleCloud<Scalar>& cloud, const Datum& datum,
                                 const Experiment& experiment, const Model& model,
                                 double threshold = ResampleConfig{}.threshold) {
  return bayes_update(cloud, model.likelihoods(datum, cloud.positions(), experiment), threshold);
}

namespace detail {

template <typename Scalar>
std::vector<Scalar> cumulative_weights(const ParticleCloud<Scalar>& cloud) {
  std::vector<Scalar> cdf(static_cast<std::size_t>(cloud.size()));
  Scalar acc = 0;
  for (Eigen::Index j = 0; j < cloud.size(); ++j) cdf[static_cast<std::size_t>(j)] = acc += cloud.weight(j);
  return cdf;
}

template <typename Scalar>
Eigen::Index draw_index(const std::vector<Scalar>& cdf, RandomStream& rng) {
  const Scalar u = Scalar(rng.uniform()) * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  while (it != cdf.begin() && *it == *(it - 1)) --it;  // zero-weight tail
  return static_cast<Eigen::Index>(it - cdf.begin());
}

}  // namespace detail

/// Draw one particle index with probability proportional to its weight.
template <typename Scalar>
Eigen::Index sample_particle(const ParticleCloud<Scalar>& cloud, RandomStream& rng) {
  return detail::draw_index(detail::cumulative_weights(cloud), rng);
}

/// Liu-West resampler: multinomial parents, each moved to a Gaussian draw
/// with mean a·x + (1−a)·μ and covariance (1−a²)·Cov. Output weights are uniform.
template <typename Scalar>
ParticleCloud<Scalar> liu_west_resample(const ParticleCloud<Scalar>& cloud, double a,
                                        RandomStream& rng) {
  using Matrix = typename ParticleCloud<Scalar>::Matrix;
  using Vector = typename ParticleCloud<Scalar>::Vector;
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("liu_west_resample: a must lie in [0, 1]");

  const Eigen::Index n = cloud.size();
  const Eigen::Index d = cloud.dimension();
  const Vector mean = posterior_mean(cloud);
  const Scalar sa = Scalar(a);
  const Scalar spread = std::sqrt(std::max(Scalar(0), Scalar(1) - sa * sa));

  Matrix chol = Matrix::Zero(d, d);
  if (spread > Scalar(0)) {
    Eigen::LLT<Matrix> llt(regularized_covariance(cloud));
    if (llt.info() == Eigen::Success) {
      chol = llt.matrixL();
    } else {
      // Eigenvalue clipping for covariances the Cholesky rejects.
      Eigen::SelfAdjointEigenSolver<Matrix> eig(regularized_covariance(cloud));
      const Vector ev = eig.eigenvalues().cwiseMax(Scalar(0));
      chol = eig.eigenvectors() * ev.cwiseSqrt().asDiagonal();
    }
    chol *= spread;
  }

  const auto cdf = detail::cumulative_weights(cloud);
  Matrix out(d, n);
  Vector z(d);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto parent = cloud.position(detail::draw_index(cdf, rng));
    if (spread > Scalar(0)) {
      for (Eigen::Index k = 0; k < d; ++k) z(k) = Scalar(rng.normal());
      out.col(j) = sa * parent + (Scalar(1) - sa) * mean + chol * z;
    } else {
      out.col(j) = parent;
    }
  }
  return ParticleCloud<Scalar>::uniform(std::move(out));
}

/// Particles drawn i.i.d. uniform over the box [lower, upper], equal weights.
template <typename Derived>
ParticleCloud<typename Derived::Scalar> uniform_prior(const Eigen::MatrixBase<Derived>& lower,
                                                      const Eigen::MatrixBase<Derived>& upper,
                                                      Eigen::Index count, RandomStream& rng) {
  using Scalar = typename Derived::Scalar;
  if (lower.size() != upper.size()) throw DimensionMismatch("uniform_prior: box bounds differ in size");
  if (count < 1) throw InvalidArgument("uniform_prior: need at least one particle");
  typename ParticleCloud<Scalar>::Matrix pos(lower.size(), count);
  for (Eigen::Index j = 0; j < count; ++j)
    for (Eigen::Index k = 0; k < lower.size(); ++k)
      pos(k, j) = lower(k) + (upper(k) - lower(k)) * Scalar(rng.uniform());
  return ParticleCloud<Scalar>::uniform(std::move(pos));
}

/// How the α argument of credible_region maps onto a χ²_d quantile level.
///
/// CoverageAtLeast reads α as the excluded mass, so the ellipse holds at
/// least 1−α under the Gaussian approximation (quantile level 1−α).
/// LiteralQuantile uses the α-quantile directly.
enum class RegionConvention { CoverageAtLeast, LiteralQuantile };

/// Ellipse {x : (x − center)ᵀ precision (x − center) ≤ radius2}.
template <typename Scalar>
struct CredibleEllipse {
  typename ParticleCloud<Scalar>::Vector center;
  typename ParticleCloud<Scalar>::Matrix precision;
  Scalar radius2;
};

template <typename Scalar>
Scalar chi_squared_quantile(Eigen::Index dof, Scalar level) {
  boost::math::chi_squared_distribution<Scalar> dist(static_cast<Scalar>(dof));
  return boost::math::quantile(dist, level);
}

template <typename Scalar>
CredibleEllipse<Scalar> credible_region(const ParticleCloud<Scalar>& cloud, double alpha,
                                        RegionConvention convention = RegionConvention::CoverageAtLeast) {
  using Matrix = typename ParticleCloud<Scalar>::Matrix;
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("credible_region: alpha must lie in (0, 1)");
  const Scalar level = convention == RegionConvention::CoverageAtLeast ? Scalar(1 - alpha) : Scalar(alpha);
  const Eigen::Index d = cloud.dimension();
  Matrix precision = regularized_covariance(cloud).llt().solve(Matrix::Identity(d, d));
  precision = (precision + precision.transpose()) / Scalar(2);
  return {posterior_mean(cloud), std::move(precision), chi_squared_quantile<Scalar>(d, level)};
}

/// Membership test; the boundary is inside.
template <typename Scalar, typename Derived>
bool region_contains(const CredibleEllipse<Scalar>& ellipse, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != ellipse.center.size())
    throw DimensionMismatch("region_contains: point has " + std::to_string(x.size()) +
                            " coordinates, ellipse has " + std::to_string(ellipse.center.size()));
  const auto delta = (x - ellipse.center).eval();
  return delta.dot(ellipse.precision * delta) <= ellipse.radius2;
}

}  // namespace hamlearn

#endif  // HAMLEARN_SMC_HPP
