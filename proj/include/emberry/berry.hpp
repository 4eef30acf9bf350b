#ifndef EMBERRY_BERRY_HPP
#define EMBERRY_BERRY_HPP

#include <string>
#include <vector>

#include "emberry/bulk_modes.hpp"
#include "emberry/media.hpp"
#include "emberry/types.hpp"

namespace emberry {

// Ordered momentum-space loop; closed loops carry first == last exactly.
struct KLoop {
  std::vector<Vec2> points;
  bool closed = false;
};

// Square sampling grid in the (kx, ky) plane.
struct KGrid {
  double k_max = 0.0;  // rad/m, grid spans [-k_max, k_max]^2
  int n = 0;           // points per axis
  Vec2 point(int i, int j) const {
    const double step = 2.0 * k_max / (n - 1);
    return Vec2(-k_max + i * step, -k_max + j * step);
  }
};

// Sampled connection/curvature field with the gauge convention recorded.
// Cells touching a band degeneracy carry NaN curvature (no single-band value).
struct BerryField {
  KGrid grid;
  std::vector<Vec2> a;      // row-major over (i, j)
  std::vector<double> f_z;  // plaquette curvature, (n-1)^2 cells
  std::string gauge_tag;
};

struct ChernResult {
  std::string band;
  double value = 0.0;
  int nearest_integer = 0;
  double deviation = 0.0;
  struct Grid {
    double k_outer = 0.0;  // rad/m
    int n_radial = 0;
    int n_angular = 0;
  } grid;
};

// Which band a numeric Berry quantity is evaluated on.
struct BandRef {
  Polarization pol = Polarization::TM;
  TmBand tm = TmBand::Upper;
};

// Closed-form TM connection for the local magnetized plasma, evaluated at a
// band point (k, omega). Purely azimuthal; returned in Cartesian components.
Vec2 connection_tm_analytic(const PlasmaParams& p, const Vec2& k, double omega);

// Exact curl of the analytic connection along the band, including the
// dispersion chain rule d omega/dk. F_z has dimension 1/k^2.
double curvature_tm_analytic(const PlasmaParams& p, const Vec2& k, double omega);

// Normalized weighted envelope w(k) of a bulk band, in the reference gauge of
// the closed-form envelopes (H_z or E_z real positive before weighting).
Vec6c normalized_band_vector(const MaterialModel& model, const BandRef& band, const Vec2& k);

// Link-variable connection A_i = Im ln <w(k + d e_i)|w(k)> / d.
Vec2 connection_numeric(const MaterialModel& model, const BandRef& band,
                        const Vec2& k, double delta);

// Discrete loop phase: sum of link phases Im ln <w_{j+1}|w_j>, reduced to (-pi, pi].
double berry_phase_loop(const MaterialModel& model, const BandRef& band, const KLoop& loop);
double berry_phase_loop(const std::vector<Vec6c>& loop_vectors);

// Gauge-invariant flux through one cell with corners w00 -> w10 -> w11 -> w01.
double plaquette_phase(const Vec6c& w00, const Vec6c& w10, const Vec6c& w11,
                       const Vec6c& w01);

// Plaquette-sum Chern number on a compactified polar grid with the outer cap
// accounted through the boundary loop phase. Model must be nonlocal-regularized.
ChernResult chern_number(const NonlocalParams& np, TmBand band,
                         int n_radial = 256, int n_angular = 256,
                         int threads = 1);

// Free-space circularly polarized states on the isofrequency sphere.
// A^pm = pm cot(theta)/k phi^ (PolarSingularity at the poles), F^pm = -+ k^/k^2.
Vec3 cp_connection(const Vec3& khat, double k_mag, int helicity);
Vec3 cp_curvature(const Vec3& khat, double k_mag, int helicity);

// Parallel-transport phase of a CP state around a closed geodesic polygon on
// the momentum sphere: -+ (enclosed solid angle), from the spherical excess.
double spherical_path_phase(const std::vector<Vec3>& vertices, int helicity);

// Signed solid angle of a geodesic polygon, in (-2 pi, 2 pi].
double geodesic_polygon_solid_angle(const std::vector<Vec3>& vertices);

// Normalized overlap of the instantaneous TM fields at momentum angles 0 and
// delta_phi, sampled at distance r; Q = 1 at perfect match.
double q_similarity(const PlasmaParams& p, double omega, double delta_phi,
                    double t, double r);

// omega*t in [0, 0.2] maximizing Q, dense scan + golden-section refinement.
double q_peak_omega_t(const PlasmaParams& p, double omega, double delta_phi, double r);

// Sampled connection/curvature over a square grid (analytic for the local
// plasma, link/plaquette otherwise).
BerryField berry_field(const MaterialModel& model, const BandRef& band, const KGrid& grid);

}  // namespace emberry

#endif
