#ifndef EMBERRY_BULK_MODES_HPP
#define EMBERRY_BULK_MODES_HPP

#include <optional>

#include "emberry/media.hpp"
#include "emberry/types.hpp"

namespace emberry {

enum class Polarization { TE, TM, CPplus, CPminus };
enum class TmBand { Lower, Upper };

struct DispersionSample {
  double k_mag = 0.0;  // rad/m
  double omega = 0.0;  // rad/s
  int band = 0;        // 0 = lower, 1 = upper
  Polarization pol = Polarization::TM;
};

// eps_eff = (e11^2 - e12^2)/e11, the TM bulk dispersion permittivity.
double tm_effective_eps(const PlasmaParams& p, double omega);

// In-plane permittivity elements at (omega, |k|), spatial cutoff applied for
// the nonlocal model.
struct InPlaneEps {
  double e11, e12, e33;
};
InPlaneEps in_plane_eps(const MaterialModel& model, double omega, double k_mag);

// Band edges for perpendicular TM propagation (omega > 0):
//   lower_cutoff = (-|wc| + sqrt(wc^2 + 4wp^2))/2     (k = 0 of the lower band)
//   gap_low      = sqrt(wp^2 + wc^2)                  (lower band asymptote)
//   upper_cutoff = (+|wc| + sqrt(wc^2 + 4wp^2))/2     (k = 0 of the upper band)
struct TmBandEdges {
  double lower_cutoff, gap_low, upper_cutoff;
};
TmBandEdges tm_band_edges(const PlasmaParams& p);

// omega(k) by bracketed bisection of the pole-free dispersion polynomial.
// Supports TE and TM for plasma and nonlocal-plasma models (vacuum and
// dielectric reduce to the light line). Throws NoRootInBracket if the band
// has no solution at this k.
DispersionSample solve_bulk_band(const MaterialModel& model, double k_mag,
                                 TmBand band, Polarization pol);

// TM envelope with H_z = 1 A/m: E = eps^-1 . (z^ x k) / (eps0 w).
// The (e11, e12) overload serves regularized tensors.
SixVector tm_envelope(const PlasmaParams& p, const Vec2& k, double omega);
SixVector tm_envelope_elements(double e11, double e12, const Vec2& k, double omega);

// TE envelope with E_z = 1 V/m: H = (k/mu0 w) x z^.
SixVector te_envelope(const Vec2& k, double omega);

// Circular-polarization propagation along the bias:
// k_pm = k0 sqrt(e11 -+ e12), k_z = (k_+ + k_-)/2, Y_pm = sqrt(e11 -+ e12)/eta0.
struct FaradayModes {
  double k_plus, k_minus, k_z, y_plus, y_minus;
  // polarization rotation angle per unit length, (k_- - k_+)/2
  double rotation_rate() const { return 0.5 * (k_minus - k_plus); }
};
FaradayModes faraday_wavenumbers(const PlasmaParams& p, double omega);

// CP eigen-envelope for propagation along z: f = (e_pm; -+ i Y_pm e_pm),
// e_pm = E0 (x^ pm i y^).
SixVector faraday_envelope(const PlasmaParams& p, double omega, int helicity);

// Rotating-field state of a TM bulk wave in polar form
// E = E_phi (phi^ + r^ (-i e12/e11)).
struct PolarState {
  complexd e_phi;    // V/m
  complexd ratio_r;  // -i e12/e11
  double k = 0.0;    // rad/m
  double omega = 0.0;
};
PolarState tm_polar_state(const PlasmaParams& p, double k_mag, double omega,
                          double h_z = 1.0);

// Real instantaneous field in the local (r^, phi^) basis:
// returns (E_r, E_phi, 0) of E = |E_phi| [cos(wt - kr) phi^ + (e12/e11) sin(wt - kr) r^].
Vec3 instantaneous_field(const PolarState& state, double t, double r);

}  // namespace emberry

#endif
