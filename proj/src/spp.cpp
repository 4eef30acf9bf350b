#include "emberry/spp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "emberry/bulk_modes.hpp"
#include "emberry/constants.hpp"
#include "emberry/errors.hpp"
#include "emberry/rootfind.hpp"

namespace emberry {

namespace {

struct SppTerms {
  double alpha_s_bar, alpha_p_bar, eps_eff, e11, e12;
};

// normalized decay constants; throws off the proper sheet
SppTerms spp_terms(double kbar, double omega, double eps_s, const PlasmaParams& p) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  const double eff = (el.e11 * el.e11 - el.e12 * el.e12) / el.e11;
  const double rs = kbar * kbar - eps_s;
  const double rp = kbar * kbar - eff;
  if (rs <= 0.0 || rp <= 0.0)
    throw ImproperSheet("spp: decay constant not on the proper Riemann sheet");
  return {std::sqrt(rs), std::sqrt(rp), eff, el.e11, el.e12};
}

double residual_normalized(double kbar, double omega, double eps_s, const PlasmaParams& p) {
  const SppTerms t = spp_terms(kbar, omega, eps_s, p);
  return t.alpha_s_bar / eps_s + t.alpha_p_bar / t.eps_eff -
         t.e12 * kbar / (t.e11 * t.eps_eff);
}

double residual_scale(double kbar, double omega, double eps_s, const PlasmaParams& p) {
  const SppTerms t = spp_terms(kbar, omega, eps_s, p);
  return std::abs(t.alpha_s_bar / eps_s) + std::abs(t.alpha_p_bar / t.eps_eff) +
         std::abs(t.e12 * kbar / (t.e11 * t.eps_eff));
}

}  // namespace

double spp_residual(double k_spp, double omega, double eps_s, const PlasmaParams& p) {
  const double k0 = omega / c0;
  return residual_normalized(k_spp / k0, omega, eps_s, p);
}

std::optional<SppSolution> solve_spp(double omega, double eps_s,
                                     const PlasmaParams& p, int direction) {
  const double k0 = omega / c0;
  const double sgn = direction >= 0 ? 1.0 : -1.0;
  const int n_scan = 20000;
  const double kbar_max = 40.0;

  auto f = [&](double kbar) -> double {
    try {
      return residual_normalized(kbar, omega, eps_s, p);
    } catch (const ImproperSheet&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  std::vector<double> grid;
  grid.reserve(n_scan + 128);
  for (int i = 0; i < n_scan; ++i)
    grid.push_back(sgn * kbar_max * (i + 1) / double(n_scan));
  // roots can hug the branch points where a decay constant vanishes; refine
  // just above them so the uniform scan cannot step over such roots
  const PlasmaEps el = plasma_eps_elements(p, omega);
  const double eff = (el.e11 * el.e11 - el.e12 * el.e12) / el.e11;
  for (double branch : {eff, eps_s}) {
    if (branch <= 0.0) continue;
    const double kb = std::sqrt(branch);
    for (int i = 0; i <= 48; ++i)
      grid.push_back(sgn * kb * (1.0 + std::pow(10.0, -14.0 + 0.25 * i)));
  }
  std::sort(grid.begin(), grid.end(),
            [sgn](double a, double b) { return sgn > 0 ? a < b : a > b; });

  for (const auto& [a, b] : scan_sign_changes(f, grid)) {
    const double kbar = bisect(f, a, b, 1e-12);
    double res, scale;
    try {
      res = residual_normalized(kbar, omega, eps_s, p);
      scale = residual_scale(kbar, omega, eps_s, p);
    } catch (const ImproperSheet&) {
      continue;
    }
    if (std::abs(res) > 1e-10 * scale) continue;  // pole, not a root
    const SppTerms t = spp_terms(kbar, omega, eps_s, p);
    SppSolution sol;
    sol.omega = omega;
    sol.k_spp = kbar * k0;
    sol.alpha_s = t.alpha_s_bar * k0;
    sol.alpha_p = t.alpha_p_bar * k0;
    sol.eps_s = eps_s;
    sol.plasma = p;
    sol.radiative_at_discontinuity = eps_s > 0.0;
    return sol;
  }
  return std::nullopt;
}

SppSolution pec_limit_spp(double omega, const PlasmaParams& p) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  if (!(el.e11 > 0.0))
    throw BelowPlasmaFrequency("pec_limit_spp: requires eps11 > 0");
  const double k0 = omega / c0;
  SppSolution sol;
  sol.omega = omega;
  sol.k_spp = (el.e12 >= 0.0 ? 1.0 : -1.0) * k0 * std::sqrt(el.e11);
  sol.alpha_p = k0 * std::abs(el.e12) / std::sqrt(el.e11);
  sol.alpha_s = std::numeric_limits<double>::infinity();  // no penetration
  sol.eps_s = -std::numeric_limits<double>::infinity();
  sol.plasma = p;
  return sol;
}

std::vector<SppBandPoint> spp_band(double omega_lo, double omega_hi, int n_omega,
                                   double eps_s, const PlasmaParams& p) {
  const TmBandEdges edges = tm_band_edges(p);
  std::vector<SppBandPoint> pts(n_omega);
  for (int i = 0; i < n_omega; ++i) {
    const double w = omega_lo + (omega_hi - omega_lo) * i / double(n_omega - 1);
    SppBandPoint& pt = pts[i];
    pt.omega = w;
    pt.in_gap = w > edges.gap_low && w < edges.upper_cutoff;
    const PlasmaEps el = plasma_eps_elements(p, w);
    const int dir = el.e12 >= 0.0 ? +1 : -1;
    if (auto sol = solve_spp(w, eps_s, p, dir)) {
      pt.k_spp = sol->k_spp;
      pt.alpha_s = sol->alpha_s;
      pt.alpha_p = sol->alpha_p;
      pt.has_solution = true;
    }
  }
  // centered-difference group velocity on the sampled curve
  for (int i = 0; i < n_omega; ++i) {
    if (!pts[i].has_solution) continue;
    int lo = i, hi = i;
    if (i > 0 && pts[i - 1].has_solution) lo = i - 1;
    if (i + 1 < n_omega && pts[i + 1].has_solution) hi = i + 1;
    if (hi == lo) continue;
    const double dk = pts[hi].k_spp - pts[lo].k_spp;
    if (dk != 0.0) pts[i].group_velocity = (pts[hi].omega - pts[lo].omega) / dk;
  }
  return pts;
}

FieldProfile spp_field_profile(const SppSolution& sol, const std::vector<double>& ys) {
  const PlasmaEps el = plasma_eps_elements(sol.plasma, sol.omega);
  const complexd i1(0.0, 1.0);
  const double h0z = 1.0;
  const bool pec = std::isinf(sol.eps_s);

  // y > 0 (simple medium) amplitudes
  const complexd e0x = pec ? complexd(0.0, 0.0)
                           : i1 * sol.alpha_s / (sol.omega * eps0 * sol.eps_s) * h0z;
  const complexd e0y_s = pec ? complexd(0.0, 0.0)
                             : complexd(-sol.k_spp / (sol.omega * eps0 * sol.eps_s) * h0z, 0.0);
  // y < 0 (plasma) amplitudes
  const double den = el.e11 * el.e11 - el.e12 * el.e12;
  const complexd e0y_p =
      complexd((el.e12 * sol.alpha_p - sol.k_spp * el.e11) / (sol.omega * eps0 * den) * h0z, 0.0);

  FieldProfile prof;
  prof.y = ys;
  prof.e_x.resize(ys.size());
  prof.e_y.resize(ys.size());
  prof.h_z.resize(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double y = ys[i];
    if (y >= 0.0) {
      const double env = pec ? (y == 0.0 ? 1.0 : 0.0) : std::exp(-sol.alpha_s * y);
      prof.e_x[i] = e0x * env;
      prof.e_y[i] = e0y_s * env;
      prof.h_z[i] = h0z * env;
    } else {
      const double env = std::exp(sol.alpha_p * y);
      // E_x is continuous across the interface
      prof.e_x[i] = e0x * env;
      prof.e_y[i] = e0y_p * env;
      prof.h_z[i] = h0z * env;
    }
  }
  return prof;
}

}  // namespace emberry
