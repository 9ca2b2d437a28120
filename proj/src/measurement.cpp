#include "gqpe/measurement.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace gqpe {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_count(std::size_t m) {
  if (m < 1)
    throw std::invalid_argument("measurement count m must be at least 1");
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value))
    throw std::domain_error(std::string(what) + " must be finite");
}

std::uint64_t hash_accumulate(std::uint64_t h, double value) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(value));
  std::memcpy(&bits, &value, sizeof(bits));
  return mix64(h ^ bits);
}

}  // namespace

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::HeterodyneDisplacement: return "heterodyne_displacement";
    case Scheme::HomodyneDisplacement: return "homodyne_displacement";
    case Scheme::PovmSqueezing: return "povm_squeezing";
    case Scheme::HomodyneSqueezing: return "homodyne_squeezing";
    case Scheme::HeterodynePhase: return "heterodyne_phase";
  }
  return "unknown";
}

void validate_probe(const ProbeConfig& probe) {
  require_finite(probe.alpha_re, "probe.alpha_re");
  require_finite(probe.alpha_im, "probe.alpha_im");
  require_finite(probe.squeeze_r, "probe.squeeze_r");
  require_finite(probe.phase_theta, "probe.phase_theta");
}

std::uint64_t MeasurementBatch::content_hash() const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(scheme) + 1);
  h = mix64(h ^ samples_re.size());
  for (double v : samples_re) h = hash_accumulate(h, v);
  for (double v : samples_im) h = hash_accumulate(h, v);
  return h;
}

void validate_batch(const MeasurementBatch& batch) {
  if (batch.samples_re.empty())
    throw std::invalid_argument("measurement batch is empty");
  const std::size_t expected_im =
      scheme_is_complex(batch.scheme) ? batch.samples_re.size() : 0;
  if (batch.samples_im.size() != expected_im)
    throw std::invalid_argument(
        "measurement batch quadrature lengths are inconsistent with scheme");
  for (double v : batch.samples_re)
    if (!std::isfinite(v))
      throw std::invalid_argument("measurement batch has non-finite sample");
  for (double v : batch.samples_im)
    if (!std::isfinite(v))
      throw std::invalid_argument("measurement batch has non-finite sample");
}

double wrap_angle(double theta) {
  double t = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
  if (t == kPi) t = -kPi;
  return t;
}

std::pair<double, double> heterodyne_variances(double r) {
  require_finite(r, "squeezing parameter r");
  return {(1.0 + std::exp(-2.0 * r)) / 4.0, (1.0 + std::exp(2.0 * r)) / 4.0};
}

double homodyne_variance(double r) {
  require_finite(r, "squeezing parameter r");
  return std::exp(-2.0 * r) / 2.0;
}

double povm_variance(double alpha_abs) {
  if (!std::isfinite(alpha_abs) || alpha_abs <= 0.0)
    throw std::domain_error(
        "povm_variance: probe displacement |alpha| must be positive");
  return 1.0 / (4.0 * alpha_abs * alpha_abs);
}

MeasurementBatch simulate_displacement_heterodyne(const ProbeConfig& probe,
                                                  std::size_t m,
                                                  RngStream& rng) {
  validate_probe(probe);
  require_count(m);
  const auto [var_re, var_im] = heterodyne_variances(probe.squeeze_r);
  const double sd_re = std::sqrt(var_re);
  const double sd_im = std::sqrt(var_im);
  MeasurementBatch batch;
  batch.scheme = Scheme::HeterodyneDisplacement;
  batch.samples_re.reserve(m);
  batch.samples_im.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    batch.samples_re.push_back(rng.normal(probe.alpha_re, sd_re));
    batch.samples_im.push_back(rng.normal(probe.alpha_im, sd_im));
  }
  return batch;
}

MeasurementBatch simulate_displacement_homodyne(const ProbeConfig& probe,
                                                std::size_t m, RngStream& rng) {
  validate_probe(probe);
  require_count(m);
  const double mean = std::sqrt(2.0) * probe.alpha_re;
  const double sd = std::sqrt(homodyne_variance(probe.squeeze_r));
  MeasurementBatch batch;
  batch.scheme = Scheme::HomodyneDisplacement;
  batch.samples_re.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    batch.samples_re.push_back(rng.normal(mean, sd));
  return batch;
}

MeasurementBatch simulate_squeezing_povm(double alpha_abs, double r_true,
                                         std::size_t m, RngStream& rng) {
  require_finite(r_true, "squeezing parameter r");
  require_count(m);
  const double sd = std::sqrt(povm_variance(alpha_abs));
  MeasurementBatch batch;
  batch.scheme = Scheme::PovmSqueezing;
  batch.samples_re.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    batch.samples_re.push_back(rng.normal(r_true, sd));
  return batch;
}

MeasurementBatch simulate_squeezing_homodyne(double alpha_re, double r_true,
                                             std::size_t m, RngStream& rng) {
  require_finite(alpha_re, "probe displacement alpha_re");
  require_finite(r_true, "squeezing parameter r");
  require_count(m);
  const double mean = std::sqrt(2.0) * alpha_re * std::exp(-r_true);
  const double sd = std::sqrt(std::exp(-2.0 * r_true) / 2.0);
  MeasurementBatch batch;
  batch.scheme = Scheme::HomodyneSqueezing;
  batch.samples_re.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    batch.samples_re.push_back(rng.normal(mean, sd));
  return batch;
}

MeasurementBatch simulate_phase_heterodyne(double alpha_abs, double theta_true,
                                           std::size_t m, RngStream& rng) {
  if (!std::isfinite(alpha_abs) || alpha_abs <= 0.0)
    throw std::domain_error(
        "simulate_phase_heterodyne: |alpha| must be positive");
  require_finite(theta_true, "phase parameter theta");
  require_count(m);
  const double theta = wrap_angle(theta_true);
  // Encoded state mean e^{-i theta} alpha; circularly symmetric complex
  // noise of total variance 1, i.e. variance 1/2 per quadrature.
  const double mean_re = alpha_abs * std::cos(theta);
  const double mean_im = -alpha_abs * std::sin(theta);
  const double sd = std::sqrt(0.5);
  MeasurementBatch batch;
  batch.scheme = Scheme::HeterodynePhase;
  batch.samples_re.reserve(m);
  batch.samples_im.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    batch.samples_re.push_back(rng.normal(mean_re, sd));
    batch.samples_im.push_back(rng.normal(mean_im, sd));
  }
  return batch;
}

double sample_von_mises(std::complex<double> kappa, RngStream& rng) {
  if (!std::isfinite(kappa.real()) || !std::isfinite(kappa.imag()))
    throw std::domain_error("sample_von_mises: kappa must be finite");
  const double k = std::abs(kappa);
  if (k < 1e-8) return -kPi + 2.0 * kPi * rng.u01();
  const double mu = std::arg(kappa);

  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * k * k);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * k);
  const double r = (1.0 + rho * rho) / (2.0 * rho);
  for (;;) {
    const double z = std::cos(kPi * rng.u01());
    const double f = (1.0 + r * z) / (r + z);
    const double c = k * (r - f);
    const double u2 = rng.u01();
    if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
      const double sign = rng.u01() < 0.5 ? -1.0 : 1.0;
      return wrap_angle(mu + sign * std::acos(f));
    }
  }
}

}  // namespace gqpe
