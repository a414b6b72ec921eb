#include "pdq/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pdq/parallel.hpp"
#include "pdq/spectral.hpp"

namespace pdq {

std::string to_string(CurrentSource s) {
  switch (s) {
    case CurrentSource::analytic: return "analytic";
    case CurrentSource::numeric_full_model: return "numeric_full_model";
    case CurrentSource::uncoupled: return "uncoupled";
  }
  return "unknown";
}

double charge_occupation(const JointState& s, double theta) {
  const CVector proj = std::sin(0.5 * theta) * s.branch(0) + std::cos(0.5 * theta) * s.branch(1);
  return proj.squaredNorm();
}

double charge_occupation_branches(const ModelParams& m, cplx alpha, double t, cplx c0, cplx c1) {
  const double sh = std::sin(0.5 * m.theta), ch = std::cos(0.5 * m.theta);
  const cplx cross = c0 * std::conj(c1) * branch_overlap_gaussian(m, alpha, t);
  return sh * sh * std::norm(c0) + ch * ch * std::norm(c1) + 2.0 * sh * ch * cross.real();
}

double current_analytic(const ModelParams& m, cplx alpha, double t, EnvelopeForm form) {
  const double base = m.delta * m.delta * m.Omega * m.Omega;
  const double g2 = m.g * m.g;
  const double kappa = 8.0 * g2 * g2 * std::norm(alpha) / base;
  const double d = form == EnvelopeForm::approx ? decoherence_approx(m, alpha, t)
                                                : decoherence_exact(m, alpha, t);
  return std::sin(m.theta) * d *
         (m.omega_a * std::sin(m.omega_a * t) +
          m.omega * kappa * std::sin(2.0 * m.Omega * t) * std::cos(m.omega_a * t));
}

double current_uncoupled(const ModelParams& m, double t) {
  return std::sin(m.theta) * m.omega_a * std::sin(m.omega_a * t);
}

CurrentTrace sample_current_analytic(const ModelParams& m, cplx alpha,
                                     const std::vector<double>& times, EnvelopeForm form) {
  CurrentTrace tr;
  tr.times = times;
  tr.source = CurrentSource::analytic;
  tr.current.reserve(times.size());
  for (double t : times) tr.current.push_back(current_analytic(m, alpha, t, form));
  return tr;
}

double max_current_step(const ModelParams& m) {
  return 2.0 * std::numbers::pi / (20.0 * std::max(m.omega_a, m.Omega));
}

namespace {

double uniform_step(const std::vector<double>& times) {
  if (times.size() < 3) throw InvalidArgument("current trace needs at least 3 samples");
  const double dt = (times.back() - times.front()) / double(times.size() - 1);
  if (!(dt > 0.0)) throw InvalidArgument("time grid must be increasing");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (std::abs(times[i] - times[i - 1] - dt) > 1e-9 * dt) {
      throw InvalidArgument("time grid must be uniform");
    }
  }
  return dt;
}

}  // namespace

std::vector<double> grid_derivative(const std::vector<double>& v, double dt) {
  const std::size_t n = v.size();
  if (n < 3) throw InvalidArgument("derivative needs at least 3 samples");
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * dt);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dt);
  return d;
}

CurrentTrace current_numeric(const ModelParams& m, cplx alpha, const std::vector<double>& times,
                             const OscillatorSpace& space, int threads) {
  const double dt = uniform_step(times);
  if (dt > max_current_step(m) * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "sampling criterion violated: dt = " << dt << " > 2 pi / (20 max(omega_a, Omega)) = "
       << max_current_step(m);
    throw NumericError(os.str());
  }
  const FullModel model(m, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, alpha, space);
  std::vector<double> pc(times.size());
  parallel_for(times.size(), threads,
               [&](std::size_t i) { pc[i] = charge_occupation(model.state(times[i]), m.theta); });
  CurrentTrace tr;
  tr.times = times;
  tr.source = CurrentSource::numeric_full_model;
  tr.current = grid_derivative(pc, dt);
  for (double& x : tr.current) x *= -2.0;
  return tr;
}

EnvelopeMetrics envelope_metrics(const CurrentTrace& trace, const ModelParams& m) {
  const double dt = uniform_step(trace.times);
  const double span = trace.times.back() - trace.times.front();
  const double nominal_mod = std::numbers::pi / m.Omega;
  if (span < 2.0 * nominal_mod * (1.0 - 1e-9)) {
    throw NumericError("trace too short: needs at least two modulation periods");
  }
  const std::size_t n = trace.current.size();
  const double nyquist = std::numbers::pi / dt;
  const double resolution = 2.0 * std::numbers::pi / span;
  const int coarse = std::max(2048, int(4.0 * nyquist / resolution));

  EnvelopeMetrics em;
  em.edge_trim = kEnvelopeEdgeTrim;
  const double carrier = dominant_frequency(trace.current, dt, 2.0 * resolution, nyquist, coarse);
  em.carrier_period = 2.0 * std::numbers::pi / carrier;

  const std::vector<double> env = analytic_envelope(trace.current);
  const std::size_t skip = std::size_t(std::floor(kEnvelopeEdgeTrim * double(n)));
  std::vector<double> core(env.begin() + std::ptrdiff_t(skip), env.end() - std::ptrdiff_t(skip));
  em.samples_used = int(core.size());
  const auto [lo, hi] = std::minmax_element(core.begin(), core.end());
  const double emin = *lo, emax = *hi;
  em.modulation_depth = emax + emin > 0.0 ? (emax - emin) / (emax + emin) : 0.0;

  if (em.modulation_depth < 1e-3) {
    em.modulation_period = nominal_mod;
    em.envelope_width_ratio = 1.0;
    return em;
  }
  double mean = 0.0;
  for (double x : core) mean += x;
  mean /= double(core.size());
  std::vector<double> centered(core.size());
  for (std::size_t i = 0; i < core.size(); ++i) centered[i] = core[i] - mean;
  const double core_span = dt * double(core.size() - 1);
  const double core_res = 2.0 * std::numbers::pi / core_span;
  const int coarse_env = std::max(2048, int(4.0 * carrier / core_res));
  const double mod = dominant_frequency(centered, dt, std::min(1.5 * core_res, 0.5 * carrier),
                                        carrier, coarse_env);
  em.modulation_period = 2.0 * std::numbers::pi / mod;

  const double half = 0.5 * (emax + emin);
  const auto above = std::count_if(core.begin(), core.end(), [&](double x) { return x >= half; });
  em.envelope_width_ratio = double(above) / double(core.size());
  return em;
}

}  // namespace pdq
