#ifndef EMBERRY_SPP_HPP
#define EMBERRY_SPP_HPP

#include <optional>
#include <vector>

#include "emberry/media.hpp"
#include "emberry/types.hpp"

namespace emberry {

// Surface wave at the y = 0 interface between a simple medium (y > 0, eps_s)
// and the biased plasma (y < 0), propagating along x.
struct SppSolution {
  double omega = 0.0;    // rad/s
  double k_spp = 0.0;    // rad/m, signed
  double alpha_s = 0.0;  // rad/m, decay into the simple medium
  double alpha_p = 0.0;  // rad/m, decay into the plasma
  double eps_s = 0.0;
  PlasmaParams plasma;
  // eps_s > 0 modes radiate into the upper half-space at any discontinuity
  bool radiative_at_discontinuity = false;
};

// LHS - RHS of the dispersion equation
//   alpha_s/eps_s + alpha_p/eps_eff = eps12 k_spp / (eps11 eps_eff)
// in k0-normalized units. Throws ImproperSheet when a decay constant is not
// real positive (point off the proper Riemann sheet).
double spp_residual(double k_spp, double omega, double eps_s, const PlasmaParams& p);

// Signed-direction root search: scans k_spp/k0 on the requested side over
// (0, 40], bisections to 1e-12 relative, then checks sheet conditions and
// residual. Empty result = no surface mode in that direction.
std::optional<SppSolution> solve_spp(double omega, double eps_s,
                                     const PlasmaParams& p, int direction);

// Closed-form perfect-conductor limit: k_spp = sign(eps12) k0 sqrt(eps11),
// alpha_p = k0 |eps12| / sqrt(eps11). Throws BelowPlasmaFrequency if eps11 <= 0.
SppSolution pec_limit_spp(double omega, const PlasmaParams& p);

struct SppBandPoint {
  double omega = 0.0;
  double k_spp = 0.0;
  double alpha_s = 0.0;
  double alpha_p = 0.0;
  double group_velocity = 0.0;  // d omega / d k, centered difference
  bool in_gap = false;          // inside the bulk TM gap
  bool has_solution = false;
};

// SPP dispersion curve sampled over [omega_lo, omega_hi]; the scan side
// follows the bias sign (modes sit at k_spp > 0 for eps12 > 0).
std::vector<SppBandPoint> spp_band(double omega_lo, double omega_hi, int n_omega,
                                   double eps_s, const PlasmaParams& p);

struct FieldProfile {
  std::vector<double> y;  // m
  std::vector<complexd> e_x, e_y, h_z;
};

// Three-component TM profile with H_0z = 1 A/m; tangential H_z continuous,
// exponential decay on both sides.
FieldProfile spp_field_profile(const SppSolution& sol, const std::vector<double>& ys);

}  // namespace emberry

#endif
