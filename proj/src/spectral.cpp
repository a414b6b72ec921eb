#include "pdq/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <numbers>

#include "pdq/errors.hpp"

namespace pdq {

double tone_amplitude(std::span<const double> samples, double dt, double w) {
  const std::size_t n = samples.size();
  if (n < 2) throw InvalidArgument("tone_amplitude needs at least 2 samples");
  std::complex<double> acc = 0.0;
  double wsum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double win = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * double(i) / double(n - 1));
    acc += win * samples[i] * std::polar(1.0, -w * dt * double(i));
    wsum += win;
  }
  return 2.0 * std::abs(acc) / wsum;
}

double dominant_frequency(std::span<const double> samples, double dt, double w_lo, double w_hi,
                          int coarse) {
  if (!(w_hi > w_lo) || coarse < 3) throw InvalidArgument("bad frequency search interval");
  const double step = (w_hi - w_lo) / double(coarse - 1);
  int best = 0;
  double best_amp = -1.0;
  for (int i = 0; i < coarse; ++i) {
    const double amp = tone_amplitude(samples, dt, w_lo + step * i);
    if (amp > best_amp) {
      best_amp = amp;
      best = i;
    }
  }
  double a = w_lo + step * std::max(0, best - 1);
  double b = w_lo + step * std::min(coarse - 1, best + 1);
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
  double f1 = tone_amplitude(samples, dt, x1), f2 = tone_amplitude(samples, dt, x2);
  for (int it = 0; it < 80 && (b - a) > 1e-12 * std::max(1.0, std::abs(b)); ++it) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = tone_amplitude(samples, dt, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = tone_amplitude(samples, dt, x2);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> analytic_envelope(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 4) throw InvalidArgument("analytic_envelope needs at least 4 samples");
  Eigen::FFT<double> fft;
  std::vector<double> in(samples.begin(), samples.end());
  std::vector<std::complex<double>> spec;
  fft.fwd(spec, in);
  // Keep DC and Nyquist, double positive frequencies, drop negative ones.
  for (std::size_t k = 1; k < n; ++k) {
    if (2 * k < n) spec[k] *= 2.0;
    else if (2 * k > n) spec[k] = 0.0;
  }
  std::vector<std::complex<double>> analytic;
  fft.inv(analytic, spec);
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(analytic[i]);
  return env;
}

}  // namespace pdq
