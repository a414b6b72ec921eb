#pragma once

// Small spectral toolkit for uniformly sampled real traces.

#include <span>
#include <vector>

namespace pdq {

/// Hann-windowed DTFT amplitude at angular frequency w, scaled so that a
/// pure tone A sin(w t) reports ~A.
double tone_amplitude(std::span<const double> samples, double dt, double w);

/// Angular frequency of the strongest tone in [w_lo, w_hi]: coarse scan on
/// `coarse` points then golden-section refinement.
double dominant_frequency(std::span<const double> samples, double dt, double w_lo, double w_hi,
                          int coarse = 2048);

/// |x + i H[x]| via FFT (discrete Hilbert transform).
std::vector<double> analytic_envelope(std::span<const double> samples);

}  // namespace pdq
