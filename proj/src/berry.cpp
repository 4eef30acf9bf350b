#include "emberry/berry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "emberry/constants.hpp"
#include "emberry/em_core.hpp"
#include "emberry/errors.hpp"
#include "emberry/rootfind.hpp"

namespace emberry {

namespace {

double principal(double phase) { return std::remainder(phase, 2.0 * pi); }

// link phase for the step k -> k': Im ln <w(k')|w(k)> = arg(w'^dag . w)
double link_phase(const Vec6c& w_next, const Vec6c& w_prev) {
  const complexd u = w_next.dot(w_prev);  // Eigen dot conjugates the left argument
  if (std::abs(u) < 0.1)
    throw DegeneratePoint("link phase through a near-orthogonal pair");
  return std::arg(u);
}

}  // namespace

Vec2 connection_tm_analytic(const PlasmaParams& p, const Vec2& k, double omega) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  const double den = el.e11 * el.e11 - el.e12 * el.e12;
  if (std::abs(den) <= 1e-14 * std::max(el.e11 * el.e11, el.e12 * el.e12))
    throw DegenerateDenominator("connection_tm_analytic: eps11^2 = eps12^2");
  const complexd i1(0.0, 1.0);
  const complexd a11(el.e11 / den, 0.0);
  const complexd a12 = -i1 * el.e12 / den;
  const complexd b11(eps0 * el.b11, 0.0);
  const complexd b12 = i1 * eps0 * el.b12;
  const double s2 = std::norm(a11) + std::norm(a12);
  const double iw2 = 1.0 / ((eps0 * omega) * (eps0 * omega));
  const double kx = k(0), ky = k(1);

  const complexd nx = i1 * iw2 *
                      (-2.0 * a11 * a12 * (kx * b12 + ky * b11) +
                       s2 * (kx * b11 - ky * b12));
  const complexd ny = i1 * iw2 *
                      (2.0 * a11 * a12 * (kx * b11 - ky * b12) +
                       s2 * (kx * b12 + ky * b11));
  const complexd dval = k.squaredNorm() * iw2 * (s2 * b11 - 2.0 * a11 * a12 * b12) + mu0;
  const double d = std::real(dval);
  if (std::abs(d) <= 0.0) throw DegenerateDenominator("connection_tm_analytic: D = 0");
  return Vec2(std::real(nx) / d, std::real(ny) / d);
}

double curvature_tm_analytic(const PlasmaParams& p, const Vec2& k, double omega) {
  const PlasmaEps el = plasma_eps_elements(p, omega);
  const double den = el.e11 * el.e11 - el.e12 * el.e12;
  if (std::abs(den) <= 1e-14 * std::max(el.e11 * el.e11, el.e12 * el.e12))
    throw DegenerateDenominator("curvature_tm_analytic: eps11^2 = eps12^2");
  const double kk = k.norm();
  const double w = omega;

  const double b11 = eps0 * el.b11, b12 = eps0 * el.b12;
  const double db11 = eps0 * el.db11, db12 = eps0 * el.db12;
  const double dden = 2.0 * (el.e11 * el.de11 - el.e12 * el.de12);
  const double a = el.e11 * el.e12 / (den * den);
  const double da = (el.de11 * el.e12 + el.e11 * el.de12) / (den * den) -
                    2.0 * el.e11 * el.e12 * dden / (den * den * den);
  const double s = (el.e11 * el.e11 + el.e12 * el.e12) / (den * den);
  const double ds = 2.0 * (el.e11 * el.de11 + el.e12 * el.de12) / (den * den) -
                    2.0 * (el.e11 * el.e11 + el.e12 * el.e12) * dden / (den * den * den);

  const double n0 = 2.0 * a * b11 - s * b12;
  const double dn0 = 2.0 * da * b11 + 2.0 * a * db11 - ds * b12 - s * db12;

  const double iw2 = 1.0 / ((eps0 * w) * (eps0 * w));
  const double dk2 = (s * b11 - 2.0 * a * b12) * iw2;       // coefficient of k^2 in D
  const double ddk2 = (ds * b11 + s * db11 - 2.0 * da * b12 - 2.0 * a * db12) * iw2 -
                      2.0 * (s * b11 - 2.0 * a * b12) / (eps0 * eps0 * w * w * w);
  const double d = kk * kk * dk2 + mu0;
  const double d_w = kk * kk * ddk2;

  // group velocity from k^2 = eps_eff(w) (w/c)^2
  const double eff = den / el.e11;
  const double deff = dden / el.e11 - den * el.de11 / (el.e11 * el.e11);
  const double slope = deff * w * w + 2.0 * w * eff;  // d/dw [eps_eff w^2]
  if (slope == 0.0) throw DegenerateDenominator("curvature_tm_analytic: flat dispersion");
  const double dw_dk = 2.0 * kk * c0 * c0 / slope;

  const double g = n0 * iw2 / d;
  const double g_w = dn0 * iw2 / d - 2.0 * n0 * iw2 / (w * d) - n0 * iw2 * d_w / (d * d);
  return 2.0 * mu0 * g / d + kk * g_w * dw_dk;
}

Vec6c normalized_band_vector(const MaterialModel& model, const BandRef& band, const Vec2& k) {
  const double k_mag = k.norm();
  DispersionSample ds;
  try {
    ds = solve_bulk_band(model, k_mag, band.tm, band.pol);
  } catch (const NoRootInBracket& e) {
    throw BandNotFound(e.what());
  }
  SixVector f;
  if (band.pol == Polarization::TE) {
    f = te_envelope(k, ds.omega);
  } else {
    const InPlaneEps e = in_plane_eps(model, ds.omega, k_mag);
    f = tm_envelope_elements(e.e11, e.e12, k, ds.omega);
  }
  const Vec3 k3(k(0), k(1), 0.0);
  const Mat6c wsqrt = hermitian_sqrt(material_energy_weight(model, ds.omega, k3));
  Vec6c w = wsqrt * f.packed();
  return w / w.norm();
}

Vec2 connection_numeric(const MaterialModel& model, const BandRef& band,
                        const Vec2& k, double delta) {
  const Vec6c w0 = normalized_band_vector(model, band, k);
  const Vec6c wx = normalized_band_vector(model, band, k + Vec2(delta, 0.0));
  const Vec6c wy = normalized_band_vector(model, band, k + Vec2(0.0, delta));
  return Vec2(link_phase(wx, w0) / delta, link_phase(wy, w0) / delta);
}

double berry_phase_loop(const std::vector<Vec6c>& loop_vectors) {
  if (loop_vectors.size() < 2) throw DegeneratePath("berry_phase_loop: empty loop");
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < loop_vectors.size(); ++j)
    sum += link_phase(loop_vectors[j + 1], loop_vectors[j]);
  return principal(sum);
}

double berry_phase_loop(const MaterialModel& model, const BandRef& band, const KLoop& loop) {
  if (!loop.closed || loop.points.size() < 3 ||
      (loop.points.front() - loop.points.back()).norm() != 0.0)
    throw DegeneratePath("berry_phase_loop: loop must be closed (first == last)");
  std::vector<Vec6c> ws;
  ws.reserve(loop.points.size());
  for (const Vec2& k : loop.points) ws.push_back(normalized_band_vector(model, band, k));
  return berry_phase_loop(ws);
}

double plaquette_phase(const Vec6c& w00, const Vec6c& w10, const Vec6c& w11,
                       const Vec6c& w01) {
  const complexd u = w10.dot(w00) * w11.dot(w10) * w01.dot(w11) * w00.dot(w01);
  if (std::abs(u) < 1e-6)
    throw DegeneratePoint("plaquette through a near-orthogonal link");
  return std::arg(u);
}

ChernResult chern_number(const NonlocalParams& np, TmBand band, int n_radial,
                         int n_angular, int threads) {
  const MaterialModel model = np;
  const double wp = np.base.omega_p;
  const double k_scale = wp / c0;            // tan-substitution scale
  const double k_outer = 50.0 * np.k_max;    // truncation radius
  const double k_inner = 1e-6 * wp / c0;     // envelope gauge vortex sits at k = 0

  const int nr = n_radial, na = n_angular;
  const double u_lo = std::atan(k_inner / k_scale);
  const double u_hi = std::atan(k_outer / k_scale);

  std::vector<double> ks(nr + 1);
  for (int i = 0; i <= nr; ++i)
    ks[i] = k_scale * std::tan(u_lo + (u_hi - u_lo) * i / double(nr));

  // ring data: omega and weighted envelopes are phi-covariant, but we evaluate
  // the closed form per point; dispersion and weight depend on |k| only.
  std::vector<std::vector<Vec6c>> rings(nr + 1);
  auto build_ring = [&](int i) {
    const double k_mag = ks[i];
    const DispersionSample dsamp = solve_bulk_band(model, k_mag, band, Polarization::TM);
    const InPlaneEps e = in_plane_eps(model, dsamp.omega, k_mag);
    const Vec3 k3(k_mag, 0.0, 0.0);
    const Mat6c wsqrt = hermitian_sqrt(material_energy_weight(model, dsamp.omega, k3));
    std::vector<Vec6c>& ring = rings[i];
    ring.resize(na);
    for (int j = 0; j < na; ++j) {
      const double phi = 2.0 * pi * j / double(na);
      const Vec2 kv(k_mag * std::cos(phi), k_mag * std::sin(phi));
      Vec6c w = wsqrt * tm_envelope_elements(e.e11, e.e12, kv, dsamp.omega).packed();
      ring[j] = w / w.norm();
    }
  };

  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    for (int i = 0; i <= nr; ++i) build_ring(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        for (int i = next.fetch_add(1); i <= nr; i = next.fetch_add(1)) build_ring(i);
      });
    for (auto& th : pool) th.join();
  }

  // plaquette fluxes, ring by ring; deterministic reduction order
  std::vector<double> ring_sums(nr, 0.0);
  for (int i = 0; i < nr; ++i) {
    const auto& inner = rings[i];
    const auto& outer = rings[i + 1];
    std::vector<double> cell(na);
    for (int j = 0; j < na; ++j) {
      const int jn = (j + 1) % na;
      cell[j] = plaquette_phase(inner[j], outer[j], outer[jn], inner[jn]);
    }
    ring_sums[i] = compensated_sum(cell);
  }
  const double disk_flux = compensated_sum(ring_sums);

  // outer cap: flux = -(principal value of the boundary loop phase); the raw
  // link sum may contain an integer 2 pi winding from the gauge vortex at
  // k = infinity, which the principal value discards.
  std::vector<double> outer_links(na);
  for (int j = 0; j < na; ++j)
    outer_links[j] = link_phase(rings[nr][(j + 1) % na], rings[nr][j]);
  const double cap_flux = -principal(compensated_sum(outer_links));

  ChernResult res;
  res.band = band == TmBand::Lower ? "lower" : "upper";
  res.value = (disk_flux + cap_flux) / (2.0 * pi);
  res.nearest_integer = int(std::llround(res.value));
  res.deviation = std::abs(res.value - res.nearest_integer);
  res.grid = {k_outer, nr, na};
  if (res.deviation > 0.05) {
    if (n_radial >= 1024)
      throw NonConvergent("chern_number: deviation > 0.05 after resolution ladder");
    return chern_number(np, band, 2 * n_radial, 2 * n_angular, threads);
  }
  return res;
}

Vec3 cp_connection(const Vec3& khat, double k_mag, int helicity) {
  const Vec3 u = khat.normalized();
  const double sin_th = std::hypot(u(0), u(1));
  if (sin_th < 1e-12)
    throw PolarSingularity("cp_connection: undefined on the polar axis");
  const double cos_th = u(2);
  const Vec3 phi_hat(-u(1) / sin_th, u(0) / sin_th, 0.0);
  const double sign = helicity >= 0 ? 1.0 : -1.0;
  return sign * cos_th / (k_mag * sin_th) * phi_hat;
}

Vec3 cp_curvature(const Vec3& khat, double k_mag, int helicity) {
  const double sign = helicity >= 0 ? -1.0 : 1.0;  // F^pm = -+ k^ / k^2
  return sign * khat.normalized() / (k_mag * k_mag);
}

double geodesic_polygon_solid_angle(const std::vector<Vec3>& vertices) {
  std::vector<Vec3> v;
  for (const Vec3& x : vertices) v.push_back(x.normalized());
  if (v.size() >= 2 && (v.front() - v.back()).norm() < 1e-14) v.pop_back();
  const int n = int(v.size());
  if (n < 2) throw DegeneratePath("solid angle: need at least two distinct vertices");

  auto tangent_toward = [](const Vec3& at, const Vec3& to) {
    const Vec3 t = to - to.dot(at) * at;
    const double norm = t.norm();
    if (norm < 1e-14)
      throw DegeneratePath("solid angle: duplicate or antipodal vertices");
    return Vec3(t / norm);
  };

  double turning = 0.0;
  for (int j = 0; j < n; ++j) {
    const Vec3& prev = v[(j + n - 1) % n];
    const Vec3& here = v[j];
    const Vec3& next = v[(j + 1) % n];
    const Vec3 t_in = -tangent_toward(here, prev);  // direction of travel on arrival
    const Vec3 t_out = tangent_toward(here, next);
    const double cross = here.dot(t_in.cross(t_out));
    const double dot = t_in.dot(t_out);
    turning += std::atan2(cross, dot);
  }
  double omega = 2.0 * pi - turning;
  if (omega > 2.0 * pi) omega -= 4.0 * pi;
  if (omega <= -2.0 * pi) omega += 4.0 * pi;
  return omega;
}

double spherical_path_phase(const std::vector<Vec3>& vertices, int helicity) {
  const double omega = geodesic_polygon_solid_angle(vertices);
  const double sign = helicity >= 0 ? -1.0 : 1.0;  // gamma^pm = -+ Omega
  return sign * omega;
}

double q_similarity(const PlasmaParams& p, double omega, double delta_phi,
                    double t, double r) {
  const double eff = tm_effective_eps(p, omega);
  if (eff <= 0.0)
    throw EvanescentBranch("q_similarity: no TM bulk propagation (eps_eff <= 0)");
  const double k = std::sqrt(eff) * omega / c0;
  const PolarState st = tm_polar_state(p, k, omega);

  auto cart = [&](double phi_dir, double time) {
    const Vec3 loc = instantaneous_field(st, time, r);  // (E_r, E_phi, 0)
    const Vec2 rhat(std::cos(phi_dir), std::sin(phi_dir));
    const Vec2 phat(-std::sin(phi_dir), std::cos(phi_dir));
    return Vec2(loc(0) * rhat + loc(1) * phat);
  };
  const Vec2 e1 = cart(0.0, 0.0);
  const Vec2 e2 = cart(delta_phi, t);
  const double nn = e1.norm() * e2.norm();
  if (nn < 1e-300) throw DivisionByZero("q_similarity: field magnitude vanishes");
  return e1.dot(e2) / nn;
}

double q_peak_omega_t(const PlasmaParams& p, double omega, double delta_phi, double r) {
  auto q_of = [&](double wt) { return q_similarity(p, omega, delta_phi, wt / omega, r); };
  const int n = 2001;
  double best = 0.0, best_q = -2.0;
  for (int i = 0; i < n; ++i) {
    const double wt = 0.2 * i / double(n - 1);
    const double q = q_of(wt);
    if (q > best_q) {
      best_q = q;
      best = wt;
    }
  }
  const double half = 0.2 / double(n - 1);
  const double lo = std::max(0.0, best - half);
  const double hi = std::min(0.2, best + half);
  return golden_max(q_of, lo, hi, 1e-5);
}

BerryField berry_field(const MaterialModel& model, const BandRef& band, const KGrid& grid) {
  BerryField out;
  out.grid = grid;
  const int n = grid.n;
  const bool local_plasma = std::holds_alternative<PlasmaParams>(model);
  // large enough that omega(k) stays resolvably off the k = 0 cutoff in double
  const double nudge = 1e-6 * grid.k_max;

  std::vector<Vec6c> ws;
  ws.resize(std::size_t(n) * n);
  out.a.resize(std::size_t(n) * n, Vec2::Zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec2 k = grid.point(i, j);
      if (k.norm() < nudge) k = Vec2(nudge, 0.0);
      ws[std::size_t(i) * n + j] = normalized_band_vector(model, band, k);
      if (local_plasma && band.pol == Polarization::TM) {
        const auto& p = std::get<PlasmaParams>(model);
        const double w = solve_bulk_band(model, k.norm(), band.tm, band.pol).omega;
        out.a[std::size_t(i) * n + j] = connection_tm_analytic(p, k, w);
      } else {
        const double delta = 1e-5 * grid.k_max;
        out.a[std::size_t(i) * n + j] = connection_numeric(model, band, k, delta);
      }
    }
  }
  out.f_z.resize(std::size_t(n - 1) * (n - 1));
  const double step = 2.0 * grid.k_max / (n - 1);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      double fz;
      try {
        fz = plaquette_phase(ws[std::size_t(i) * n + j],
                             ws[std::size_t(i + 1) * n + j],
                             ws[std::size_t(i + 1) * n + j + 1],
                             ws[std::size_t(i) * n + j + 1]) /
             (step * step);
      } catch (const DegeneratePoint&) {
        // cells touching a band degeneracy (k = 0 at zero bias) have no
        // well-defined single-band curvature
        fz = std::numeric_limits<double>::quiet_NaN();
      }
      out.f_z[std::size_t(i) * (n - 1) + j] = fz;
    }
  out.gauge_tag = "closed-form envelope, reference amplitude real positive";
  return out;
}

}  // namespace emberry
