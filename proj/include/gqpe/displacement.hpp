#pragma once

#include <optional>

#include "gqpe/conjugate_em.hpp"
#include "gqpe/measurement.hpp"

namespace gqpe {

// Result of a displacement estimation run. The imaginary-part fields are
// absent for homodyne batches, which inform only the real quadrature.
struct DisplacementEstimate {
  double alpha_re_hat = 0.0;
  std::optional<double> alpha_im_hat;
  GaussianParams fitted_prior_re;
  std::optional<GaussianParams> fitted_prior_im;
  GaussianParams posterior_re;
  std::optional<GaussianParams> posterior_im;
  bool converged_re = true;
  std::optional<bool> converged_im;
};

// Learned estimate from a heterodyne batch: fits the prior of each
// quadrature by EM (gain 1, noise variances from heterodyne_variances(r))
// and returns the posterior means. r is the known probe squeezing.
DisplacementEstimate estimate_heterodyne(const MeasurementBatch& batch,
                                         double r, const EmOptions& opts = {});

// Learned estimate of the real part from a homodyne batch: EM with gain
// sqrt(2) and noise variance homodyne_variance(r).
DisplacementEstimate estimate_homodyne(const MeasurementBatch& batch, double r,
                                       const EmOptions& opts = {});

// Genie-aided baseline: applies the conjugate posterior with the true
// prior per quadrature, no fitting. true_prior_im is required for
// heterodyne batches.
DisplacementEstimate genie_estimate(
    const MeasurementBatch& batch, double r,
    const GaussianParams& true_prior_re,
    const std::optional<GaussianParams>& true_prior_im = std::nullopt);

}  // namespace gqpe
