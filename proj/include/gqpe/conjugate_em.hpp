#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gqpe {

// Mean/variance pair used both as prior and as posterior of a scalar
// Gaussian parameter.
struct GaussianParams {
  double mean = 0.0;
  double variance = 1.0;
};

// Observation model y = u * gain + noise, noise ~ N(0, noise_variance I),
// for a scalar latent u.
struct LinearGaussianModel {
  std::vector<double> gain;
  double noise_variance = 1.0;
};

// Convenience constructor for the constant-gain models used by every
// measurement scheme in this library.
LinearGaussianModel uniform_gain_model(double gain_value, std::size_t m,
                                       double noise_variance);

struct EmOptions {
  double epsilon_q = 1e-3;      // stop when |Q_t - Q_{t-1}| falls below
  double epsilon_param = 1e-9;  // ... or both parameter deltas do
  int max_iter = 10000;
  double variance_floor = 1e-12;  // lower clamp on the prior variance
  std::uint64_t init_seed = 0;    // stream for the random initialization
};

struct EmResult {
  GaussianParams prior_estimate;
  GaussianParams posterior;  // posterior under the fitted prior
  int iterations = 0;
  std::vector<double> q_trace;  // Q(theta_t, theta_t), t = 0..iterations
  bool converged = false;
};

// Conjugate posterior of the latent u:
//   variance = (1/s0 + g'g/sn)^-1,  mean = variance (g'y/sn + m0/s0).
GaussianParams gaussian_posterior(const GaussianParams& prior,
                                  const LinearGaussianModel& model,
                                  std::span<const double> y);

// Log density of y under the marginal N(m0 g, sn I + s0 g g'), evaluated
// with the rank-one determinant and inverse identities, so it is exact for
// this covariance structure at any dimension.
double marginal_log_likelihood(const GaussianParams& prior,
                               const LinearGaussianModel& model,
                               std::span<const double> y);

// EM surrogate: expectation of the complete-data log likelihood
// log p(y, u | candidate) under u ~ current_posterior, using
// E[u] = mu_p and E[u^2] = mu_p^2 + sigma_p^2.
double q_function(const GaussianParams& candidate,
                  const GaussianParams& current_posterior,
                  const LinearGaussianModel& model, std::span<const double> y);

// Called after every EM update with the new prior iterate; iteration 0
// reports the random initialization.
using EmIterationObserver =
    std::function<void(int iteration, const GaussianParams& prior)>;

// Fits the prior hyperparameters by EM:
//   s_{t+1} = sn s_t / (sn + g'g s_t),  m_{t+1} = s_{t+1} (g'y/sn + m_t/s_t),
// initialized with s ~ U[0,1], m ~ N(0,1) drawn from init_seed. Stops on
// the Q-difference test, the parameter-delta safeguard, or max_iter; the
// posterior field is computed from the fitted prior. Non-convergence is
// reported through converged = false, not an exception.
EmResult em_fit(const LinearGaussianModel& model, std::span<const double> y,
                const EmOptions& opts = {},
                const EmIterationObserver& observer = {});

}  // namespace gqpe
