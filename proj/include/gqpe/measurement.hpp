#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gqpe/rng.hpp"

namespace gqpe {

// Measurement schemes whose outcome laws this library simulates.
enum class Scheme {
  HeterodyneDisplacement,
  HomodyneDisplacement,
  PovmSqueezing,
  HomodyneSqueezing,
  HeterodynePhase,
};

const char* scheme_name(Scheme scheme);

// Schemes with complex-valued outcomes carry both quadratures.
inline bool scheme_is_complex(Scheme scheme) {
  return scheme == Scheme::HeterodyneDisplacement ||
         scheme == Scheme::HeterodynePhase;
}

// True physical parameters of a simulated probe state: complex
// displacement alpha, squeezing r, and rotation angle theta in [-pi, pi).
struct ProbeConfig {
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double squeeze_r = 0.0;
  double phase_theta = 0.0;
};

// Throws std::domain_error if any field is non-finite. phase_theta is
// expected pre-wrapped; simulators wrap defensively via wrap_angle.
void validate_probe(const ProbeConfig& probe);

// A batch of M i.i.d. measurement outcomes from one scheme. samples_im is
// empty for real-valued schemes and has the same length as samples_re for
// complex ones.
struct MeasurementBatch {
  Scheme scheme = Scheme::HeterodyneDisplacement;
  std::vector<double> samples_re;
  std::vector<double> samples_im;

  std::size_t count() const { return samples_re.size(); }

  // Order-sensitive hash of the sample content; used by the experiment
  // harness to assert that paired estimators saw identical data.
  std::uint64_t content_hash() const;
};

// Throws std::invalid_argument if the batch violates its invariants
// (component lengths, finiteness).
void validate_batch(const MeasurementBatch& batch);

// Wraps an angle into [-pi, pi).
double wrap_angle(double theta);

// Heterodyne outcome variances for the two quadratures of a probe with
// squeezing r: ((1 + e^{-2r})/4, (1 + e^{2r})/4).
std::pair<double, double> heterodyne_variances(double r);

// Homodyne q-quadrature outcome variance e^{-2r}/2.
double homodyne_variance(double r);

// Outcome variance 1/(4 |alpha|^2) of the covariant squeezing measurement;
// diverges for a vacuum probe, so alpha_abs must be positive.
double povm_variance(double alpha_abs);

// Outcome simulators. Each consumes the stream sequentially and returns a
// batch of exactly m samples; all are deterministic given the stream state.
MeasurementBatch simulate_displacement_heterodyne(const ProbeConfig& probe,
                                                  std::size_t m,
                                                  RngStream& rng);
MeasurementBatch simulate_displacement_homodyne(const ProbeConfig& probe,
                                                std::size_t m, RngStream& rng);
MeasurementBatch simulate_squeezing_povm(double alpha_abs, double r_true,
                                         std::size_t m, RngStream& rng);
MeasurementBatch simulate_squeezing_homodyne(double alpha_re, double r_true,
                                             std::size_t m, RngStream& rng);
MeasurementBatch simulate_phase_heterodyne(double alpha_abs, double theta_true,
                                           std::size_t m, RngStream& rng);

// Draws one angle in [-pi, pi) from the von Mises density with
// concentration |kappa| and mean direction arg(kappa), by Best-Fisher
// (1979) rejection from a wrapped Cauchy envelope.
double sample_von_mises(std::complex<double> kappa, RngStream& rng);

}  // namespace gqpe
