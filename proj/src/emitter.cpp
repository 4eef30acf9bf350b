#include "emberry/emitter.hpp"

#include <cmath>

#include "emberry/constants.hpp"
#include "emberry/errors.hpp"

namespace emberry {

double farfield_connection(const FarFieldModel& model, double phi, double k0) {
  if (model.dg_dphi) return -model.dg_dphi(phi) / k0;
  const double h = 1e-6;
  return -(model.g_phi(phi + h) - model.g_phi(phi - h)) / (2.0 * h) / k0;
}

complexd rotated_voltage(complexd v0, double a_phi, double k0, double dphi) {
  if (std::abs(dphi) > 0.1)
    throw PerturbationTooLarge("rotated_voltage: |dphi| must be <= 0.1 rad");
  return v0 * (complexd(1.0, 0.0) + complexd(0.0, 1.0) * a_phi * k0 * dphi);
}

VoltageTrace synthesize_vibration_trace(const FarFieldModel& model, double v0,
                                        double omega, double big_omega,
                                        double dphi0, double duration,
                                        int samples_per_omega_period) {
  if (!(big_omega < omega / 10.0))
    throw ResolutionInsufficient("vibration trace: requires Omega < omega/10");
  const double t_omega = 2.0 * pi / big_omega;
  if (duration < 32.0 * t_omega)
    throw ResolutionInsufficient("vibration trace: duration below 32 vibration periods");

  // integer number of vibration periods keeps the periodogram leakage-free
  const int periods = int(std::floor(duration / t_omega));
  const double t_total = periods * t_omega;
  const double a_phi = farfield_connection(model, 0.0, omega / c0);
  const double slope = a_phi * (omega / c0);  // A_phi k0

  const std::size_t n = std::size_t(
      std::ceil(t_total * omega / (2.0 * pi) * samples_per_omega_period));
  VoltageTrace tr;
  tr.omega = omega;
  tr.big_omega = big_omega;
  tr.dphi0 = dphi0;
  tr.t.resize(n);
  tr.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_total * double(i) / double(n);
    const double dgamma = -slope * dphi0 * std::cos(big_omega * t);
    tr.t[i] = t;
    tr.v[i] = v0 * std::cos(omega * t) - v0 * std::sin(omega * t) * dgamma;
  }
  return tr;
}

Spectrum vibration_spectrum(const VoltageTrace& trace) {
  const std::size_t n = trace.v.size();
  if (n < 16) throw ResolutionInsufficient("vibration_spectrum: trace too short");
  const double t_total = trace.t.back() + (trace.t[1] - trace.t[0]);
  Spectrum spec;
  spec.df = 2.0 * pi / t_total;

  // one-sided DFT up to a few times the carrier
  const std::size_t carrier_bin = std::size_t(std::llround(trace.omega / spec.df));
  const std::size_t n_bins = std::min(n / 2, 4 * carrier_bin + 8);
  spec.amplitude.resize(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    // Goertzel recurrence for bin b
    const double w = 2.0 * pi * double(b) / double(n);
    const double coeff = 2.0 * std::cos(w);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double s0 = trace.v[i] + coeff * s1 - s2;
      s2 = s1;
      s1 = s0;
    }
    const double re = s1 - s2 * std::cos(w);
    const double im = s2 * std::sin(w);
    spec.amplitude[b] = 2.0 * std::hypot(re, im) / double(n);
  }
  spec.carrier_bin = int(carrier_bin);
  spec.carrier_amplitude = spec.amplitude[carrier_bin];
  return spec;
}

std::vector<SpectralLine> spectral_lines(const Spectrum& spec, double big_omega,
                                         double floor_db) {
  std::vector<SpectralLine> lines;
  const double carrier = spec.carrier_amplitude;
  for (std::size_t b = 1; b + 1 < spec.amplitude.size(); ++b) {
    const double a = spec.amplitude[b];
    if (a < spec.amplitude[b - 1] || a < spec.amplitude[b + 1]) continue;
    const double rel_db = 20.0 * std::log10(a / carrier);
    if (rel_db < floor_db) continue;
    SpectralLine line;
    line.f_offset_over_big_omega = (double(b) - spec.carrier_bin) * spec.df / big_omega;
    line.amplitude = a;
    line.rel_carrier_db = rel_db;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace emberry
