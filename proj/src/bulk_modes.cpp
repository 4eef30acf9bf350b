#include "emberry/bulk_modes.hpp"

#include <algorithm>
#include <cmath>

#include "emberry/constants.hpp"
#include "emberry/errors.hpp"
#include "emberry/rootfind.hpp"

namespace emberry {

namespace {

const PlasmaParams* plasma_of(const MaterialModel& model) {
  if (const auto* p = std::get_if<PlasmaParams>(&model)) return p;
  if (const auto* np = std::get_if<NonlocalParams>(&model)) return &np->base;
  return nullptr;
}

// Pole-free TM dispersion function: (e11^2 - e12^2)(w/c)^2 - k^2 e11.
// Same roots as k^2 = eps_eff (w/c)^2 but regular across eps11 = 0.
double tm_dispersion_poly(const MaterialModel& model, double omega, double k_mag) {
  const InPlaneEps e = in_plane_eps(model, omega, k_mag);
  const double w_c = omega / c0;
  return (e.e11 * e.e11 - e.e12 * e.e12) * w_c * w_c - k_mag * k_mag * e.e11;
}

double solve_tm_root(const MaterialModel& model, double k_mag, double lo, double hi) {
  auto f = [&](double w) { return tm_dispersion_poly(model, w, k_mag); };
  const auto grid = logspace(lo, hi, 2000);
  const auto brackets = scan_sign_changes(f, grid);
  if (brackets.empty())
    throw NoRootInBracket("solve_bulk_band: no TM root in band interval");
  // one genuine root per band interval for this family of models
  const auto [a, b] = brackets.front();
  return bisect(f, a, b, 1e-14);
}

}  // namespace

InPlaneEps in_plane_eps(const MaterialModel& model, double omega, double k_mag) {
  if (std::holds_alternative<Vacuum>(model)) return {1.0, 0.0, 1.0};
  if (const auto* d = std::get_if<Dielectric>(&model)) return {d->eps_s, 0.0, d->eps_s};
  const PlasmaParams* p = std::get_if<PlasmaParams>(&model);
  double g = 1.0;
  if (const auto* np = std::get_if<NonlocalParams>(&model)) {
    p = &np->base;
    g = 1.0 / (1.0 + k_mag * k_mag / (np->k_max * np->k_max));
  }
  const PlasmaEps el = plasma_eps_elements(*p, omega);
  return {1.0 + g * (el.e11 - 1.0), g * el.e12, 1.0 + g * (el.e33 - 1.0)};
}

double tm_effective_eps(const PlasmaParams& p, double omega) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  if (el.e11 == 0.0) throw DivisionByZero("tm_effective_eps: eps11 = 0");
  return (el.e11 * el.e11 - el.e12 * el.e12) / el.e11;
}

TmBandEdges tm_band_edges(const PlasmaParams& p) {
  const double wc = std::abs(p.omega_c);
  const double wp = p.omega_p;
  const double s = std::sqrt(wc * wc + 4.0 * wp * wp);
  return {0.5 * (-wc + s), std::hypot(wp, wc), 0.5 * (wc + s)};
}

DispersionSample solve_bulk_band(const MaterialModel& model, double k_mag,
                                 TmBand band, Polarization pol) {
  if (k_mag < 0.0) throw NoRootInBracket("solve_bulk_band: k_mag must be >= 0");
  if (pol == Polarization::CPplus || pol == Polarization::CPminus)
    throw BandNotFound("solve_bulk_band: use faraday_wavenumbers for on-axis CP modes");

  DispersionSample s;
  s.k_mag = k_mag;
  s.pol = pol;
  s.band = band == TmBand::Lower ? 0 : 1;

  const PlasmaParams* p = plasma_of(model);
  if (!p) {
    // vacuum / dielectric light line, both band labels coincide
    const double eps_s = std::holds_alternative<Vacuum>(model)
                             ? 1.0
                             : std::get<Dielectric>(model).eps_s;
    if (eps_s <= 0.0) throw NoRootInBracket("solve_bulk_band: eps_s <= 0");
    s.omega = c0 * k_mag / std::sqrt(eps_s);
    return s;
  }

  if (pol == Polarization::TE) {
    // k^2 c^2 = w^2 - g(k) wp^2 solves in closed form
    double g = 1.0;
    if (const auto* np = std::get_if<NonlocalParams>(&model))
      g = 1.0 / (1.0 + k_mag * k_mag / (np->k_max * np->k_max));
    s.omega = std::sqrt(c0 * c0 * k_mag * k_mag + g * p->omega_p * p->omega_p);
    return s;
  }

  const TmBandEdges edges = tm_band_edges(*p);
  const double wc = std::abs(p->omega_c);
  if (wc == 0.0) {
    // degenerate bias-free case: single TM family w^2 = wp^2 + c^2 k^2
    s.omega = std::sqrt(p->omega_p * p->omega_p + c0 * c0 * k_mag * k_mag);
    return s;
  }
  if (k_mag == 0.0) {
    s.omega = band == TmBand::Lower ? edges.lower_cutoff : edges.upper_cutoff;
    return s;
  }
  double lo, hi;
  if (band == TmBand::Lower) {
    lo = wc * (1.0 + 1e-9);
    hi = edges.gap_low * (1.0 - 1e-13);
  } else {
    lo = edges.gap_low * (1.0 + 1e-13);
    hi = 10.0 * edges.gap_low + 2.0 * c0 * k_mag;
  }
  s.omega = solve_tm_root(model, k_mag, lo, hi);
  return s;
}

SixVector tm_envelope_elements(double e11, double e12, const Vec2& k, double omega) {
  const double den = e11 * e11 - e12 * e12;
  const double scale = std::max(e11 * e11, e12 * e12);
  if (std::abs(den) <= 1e-14 * std::max(scale, 1e-300))
    throw DegenerateDenominator("tm_envelope: eps11^2 = eps12^2");
  const complexd a11(e11 / den, 0.0);
  const complexd a12(0.0, -e12 / den);
  SixVector f;
  f.e(0) = (-a11 * k(1) + a12 * k(0)) / (eps0 * omega);
  f.e(1) = (a12 * k(1) + a11 * k(0)) / (eps0 * omega);
  f.h(2) = 1.0;  // A/m reference amplitude
  return f;
}

SixVector tm_envelope(const PlasmaParams& p, const Vec2& k, double omega) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  return tm_envelope_elements(el.e11, el.e12, k, omega);
}

SixVector te_envelope(const Vec2& k, double omega) {
  if (!(omega > 0.0)) throw ResonanceSingularity("te_envelope: omega must be > 0");
  SixVector f;
  f.e(2) = 1.0;  // V/m reference amplitude
  // H = (k x z^) E_z / (mu0 w); k x z^ = (k_y, -k_x, 0)... with our convention
  // k x E = w mu0 H and E = z^: H = (k x z^)/(mu0 w)
  f.h(0) = k(1) / (mu0 * omega);
  f.h(1) = -k(0) / (mu0 * omega);
  return f;
}

FaradayModes faraday_wavenumbers(const PlasmaParams& p, double omega) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  const double rp = el.e11 - el.e12;  // branch +
  const double rm = el.e11 + el.e12;  // branch -
  if (rp < 0.0 || rm < 0.0)
    throw EvanescentBranch("faraday_wavenumbers: negative radicand");
  const double k0 = omega / c0;
  FaradayModes fm;
  fm.k_plus = k0 * std::sqrt(rp);
  fm.k_minus = k0 * std::sqrt(rm);
  fm.k_z = 0.5 * (fm.k_plus + fm.k_minus);
  fm.y_plus = std::sqrt(rp) / eta0();
  fm.y_minus = std::sqrt(rm) / eta0();
  return fm;
}

SixVector faraday_envelope(const PlasmaParams& p, double omega, int helicity) {
  const FaradayModes fm = faraday_wavenumbers(p, omega);
  const complexd i1(0.0, 1.0);
  const double y = helicity > 0 ? fm.y_plus : fm.y_minus;
  const complexd hs = helicity > 0 ? -i1 : i1;  // -+ i Y
  SixVector f;
  f.e(0) = 1.0;
  f.e(1) = helicity > 0 ? i1 : -i1;
  f.h = hs * y * f.e;
  return f;
}

PolarState tm_polar_state(const PlasmaParams& p, double k_mag, double omega, double h_z) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  if (el.e11 == 0.0) throw DivisionByZero("tm_polar_state: eps11 = 0");
  const double ee = tm_effective_eps(p, omega);
  if (ee == 0.0) throw DegenerateDenominator("tm_polar_state: eps_eff = 0");
  PolarState st;
  st.e_phi = k_mag * h_z / (eps0 * ee * omega);
  st.ratio_r = complexd(0.0, -1.0) * (el.e12 / el.e11);
  st.k = k_mag;
  st.omega = omega;
  return st;
}

Vec3 instantaneous_field(const PolarState& state, double t, double r) {
  const double rho = std::real(complexd(0.0, 1.0) * state.ratio_r);  // e12/e11
  const double chi = state.omega * t - state.k * r - std::arg(state.e_phi);
  const double a = std::abs(state.e_phi);
  return Vec3(a * rho * std::sin(chi), a * std::cos(chi), 0.0);  // (E_r, E_phi, 0)
}

}  // namespace emberry
