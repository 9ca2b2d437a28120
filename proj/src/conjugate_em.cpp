#include "gqpe/conjugate_em.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gqpe/rng.hpp"

namespace gqpe {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;

// Sufficient statistics of (model, y); every EM iteration is O(1) given
// these.
struct Stats {
  std::size_t m = 0;
  double gg = 0.0;  // g'g
  double gy = 0.0;  // g'y
  double yy = 0.0;  // y'y
};

Stats compute_stats(const LinearGaussianModel& model,
                    std::span<const double> y) {
  Stats s;
  s.m = y.size();
  for (std::size_t i = 0; i < y.size(); ++i) {
    s.gg += model.gain[i] * model.gain[i];
    s.gy += model.gain[i] * y[i];
    s.yy += y[i] * y[i];
  }
  return s;
}

void validate_model(const LinearGaussianModel& model,
                    std::span<const double> y) {
  if (model.gain.empty())
    throw std::invalid_argument("model gain vector is empty");
  if (model.gain.size() != y.size())
    throw std::invalid_argument("data length does not match model gain length");
  if (!(model.noise_variance > 0.0) || !std::isfinite(model.noise_variance))
    throw std::invalid_argument("model noise variance must be positive");
  bool any_nonzero = false;
  for (double g : model.gain) {
    if (!std::isfinite(g))
      throw std::invalid_argument("model gain must be finite");
    any_nonzero = any_nonzero || g != 0.0;
  }
  if (!any_nonzero)
    throw std::invalid_argument("model gain vector must not be all zero");
}

void validate_prior(const GaussianParams& prior) {
  if (!std::isfinite(prior.mean) || !std::isfinite(prior.variance) ||
      !(prior.variance > 0.0))
    throw std::invalid_argument(
        "prior must have finite mean and positive variance");
}

GaussianParams posterior_from_stats(const GaussianParams& prior,
                                    const Stats& s, double noise_variance) {
  const double precision = 1.0 / prior.variance + s.gg / noise_variance;
  GaussianParams post;
  post.variance = 1.0 / precision;
  post.mean =
      post.variance * (s.gy / noise_variance + prior.mean / prior.variance);
  return post;
}

double q_from_stats(const GaussianParams& candidate,
                    const GaussianParams& posterior, const Stats& s,
                    double noise_variance) {
  const double mp = posterior.mean;
  const double sp = posterior.variance;
  const double data_term =
      (s.yy - 2.0 * mp * s.gy + (mp * mp + sp) * s.gg) / noise_variance;
  const double d = candidate.mean - mp;
  const double prior_term = (d * d + sp) / candidate.variance;
  return -0.5 * (static_cast<double>(s.m) *
                     (kLog2Pi + std::log(noise_variance)) +
                 data_term + kLog2Pi + std::log(candidate.variance) +
                 prior_term);
}

}  // namespace

LinearGaussianModel uniform_gain_model(double gain_value, std::size_t m,
                                       double noise_variance) {
  LinearGaussianModel model;
  model.gain.assign(m, gain_value);
  model.noise_variance = noise_variance;
  return model;
}

GaussianParams gaussian_posterior(const GaussianParams& prior,
                                  const LinearGaussianModel& model,
                                  std::span<const double> y) {
  validate_model(model, y);
  validate_prior(prior);
  return posterior_from_stats(prior, compute_stats(model, y),
                              model.noise_variance);
}

double marginal_log_likelihood(const GaussianParams& prior,
                               const LinearGaussianModel& model,
                               std::span<const double> y) {
  validate_model(model, y);
  validate_prior(prior);
  const Stats s = compute_stats(model, y);
  const double sn = model.noise_variance;
  const double s0 = prior.variance;
  // d = y - m0 g; the quadratic form uses the Sherman-Morrison inverse of
  // sn I + s0 g g'.
  const double dd = s.yy - 2.0 * prior.mean * s.gy +
                    prior.mean * prior.mean * s.gg;
  const double gd = s.gy - prior.mean * s.gg;
  const double quad = dd / sn - s0 * gd * gd / (sn * (sn + s0 * s.gg));
  const double logdet = static_cast<double>(s.m) * std::log(sn) +
                        std::log1p(s0 * s.gg / sn);
  return -0.5 * (static_cast<double>(s.m) * kLog2Pi + logdet + quad);
}

double q_function(const GaussianParams& candidate,
                  const GaussianParams& current_posterior,
                  const LinearGaussianModel& model, std::span<const double> y) {
  validate_model(model, y);
  validate_prior(candidate);
  if (!std::isfinite(current_posterior.mean) ||
      !(current_posterior.variance >= 0.0))
    throw std::invalid_argument(
        "posterior must have finite mean and nonnegative variance");
  return q_from_stats(candidate, current_posterior, compute_stats(model, y),
                      model.noise_variance);
}

EmResult em_fit(const LinearGaussianModel& model, std::span<const double> y,
                const EmOptions& opts, const EmIterationObserver& observer) {
  if (y.empty()) throw std::invalid_argument("em_fit: data vector is empty");
  validate_model(model, y);
  if (!(opts.epsilon_q > 0.0) || !(opts.epsilon_param > 0.0) ||
      !(opts.variance_floor > 0.0) || opts.max_iter < 1)
    throw std::invalid_argument("em_fit: options must be positive");

  const Stats stats = compute_stats(model, y);
  const double sn = model.noise_variance;

  RngStream init_rng(opts.init_seed, 0);
  GaussianParams prior;
  prior.variance = std::max(init_rng.u01(), opts.variance_floor);
  prior.mean = init_rng.normal();

  EmResult result;
  result.q_trace.reserve(64);
  if (observer) observer(0, prior);

  GaussianParams posterior = posterior_from_stats(prior, stats, sn);
  double q_prev = q_from_stats(prior, posterior, stats, sn);
  result.q_trace.push_back(q_prev);

  for (int t = 1; t <= opts.max_iter; ++t) {
    GaussianParams next;
    next.mean = posterior.mean;
    next.variance = std::max(posterior.variance, opts.variance_floor);

    posterior = posterior_from_stats(next, stats, sn);
    const double q_next = q_from_stats(next, posterior, stats, sn);
    result.q_trace.push_back(q_next);
    result.iterations = t;

    const double dq = std::abs(q_next - q_prev);
    const double dmean = std::abs(next.mean - prior.mean);
    const double dvar = std::abs(next.variance - prior.variance);
    prior = next;
    q_prev = q_next;
    if (observer) observer(t, prior);

    if (dq < opts.epsilon_q ||
        (dmean < opts.epsilon_param && dvar < opts.epsilon_param)) {
      result.converged = true;
      break;
    }
  }

  result.prior_estimate = prior;
  result.posterior = posterior_from_stats(prior, stats, sn);
  return result;
}

}  // namespace gqpe
