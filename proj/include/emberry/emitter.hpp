#ifndef EMBERRY_EMITTER_HPP
#define EMBERRY_EMITTER_HPP

#include <functional>
#include <vector>

#include "emberry/types.hpp"

namespace emberry {

// Isotropic far-field E = h(theta) exp(i g(phi)) theta^. The radiated
// intensity |h|^2 is phi-independent by construction.
struct FarFieldModel {
  std::function<double(double)> h_theta = [](double) { return 1.0; };
  std::function<double(double)> g_phi = [](double) { return 0.0; };
  std::function<double(double)> dg_dphi;  // optional analytic derivative
};

// A_phi = -(dg/dphi)/k0; numeric derivative step 1e-6 rad when no analytic form.
double farfield_connection(const FarFieldModel& model, double phi, double k0);

// First-order rotated receiver voltage V = V0 (1 + i A_phi k0 dphi).
// Guard |dphi| <= 0.1 rad (PerturbationTooLarge).
complexd rotated_voltage(complexd v0, double a_phi, double k0, double dphi);

struct VoltageTrace {
  std::vector<double> t;  // s
  std::vector<double> v;  // volts
  double omega = 0.0;     // carrier, rad/s
  double big_omega = 0.0; // vibration, rad/s
  double dphi0 = 0.0;     // rad
};

// V(t) = V0 cos(wt) + dV(t), dV = -V0 sin(wt) dgamma(t),
// dgamma(t) = -A_phi k0 dphi0 cos(Omega t).
VoltageTrace synthesize_vibration_trace(const FarFieldModel& model, double v0,
                                        double omega, double big_omega,
                                        double dphi0, double duration,
                                        int samples_per_omega_period = 16);

struct Spectrum {
  double df = 0.0;                 // bin spacing, rad/s
  std::vector<double> amplitude;   // one-sided, volts
  double carrier_amplitude = 0.0;
  int carrier_bin = 0;
};

struct SpectralLine {
  double f_offset_over_big_omega = 0.0;
  double amplitude = 0.0;
  double rel_carrier_db = 0.0;
};

// Rectangular-window periodogram over an integer number of Omega periods.
Spectrum vibration_spectrum(const VoltageTrace& trace);

// Peaks above the floor, as offsets from the carrier in units of Omega.
std::vector<SpectralLine> spectral_lines(const Spectrum& spec, double big_omega,
                                         double floor_db = -100.0);

}  // namespace emberry

#endif
