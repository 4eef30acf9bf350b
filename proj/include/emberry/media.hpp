#ifndef EMBERRY_MEDIA_HPP
#define EMBERRY_MEDIA_HPP

#include <functional>
#include <variant>
#include <vector>

#include "emberry/types.hpp"

namespace emberry {

// Magnetized free-charge plasma, bias axis fixed to z.
// omega_c is signed: omega_c = (q_e/m_e) B_z, negative for electrons with
// B_z > 0. The permittivity elements are
//   eps11 = 1 - wp^2/(w^2 - wc^2)
//   eps12 = -wc wp^2 / (w (w^2 - wc^2))
//   eps33 = 1 - wp^2/w^2
struct PlasmaParams {
  double omega_p = 0.0;  // rad/s, > 0
  double omega_c = 0.0;  // rad/s, signed
};

// Plasma with a high-wavenumber spatial cutoff:
// M_reg(w,k) = M_inf + (M(w) - M_inf) / (1 + k^2/k_max^2),  M_inf = diag(eps0 I, mu0 I).
struct NonlocalParams {
  PlasmaParams base;
  double k_max = 0.0;  // rad/m, > 0
};

struct Vacuum {};

struct Dielectric {
  double eps_s = 1.0;
};

using MaterialModel = std::variant<Vacuum, Dielectric, PlasmaParams, NonlocalParams>;

// Scalar permittivity elements and their frequency derivatives. bij are the
// dimensionless energy-weight elements d/dw (w*epsij); primes are d/dw.
struct PlasmaEps {
  double e11, e12, e33;
  double de11, de12, de33;     // d(epsij)/dw
  double b11, b12, b33;        // d(w epsij)/dw
  double db11, db12, db33;     // d(bij)/dw
};
PlasmaEps plasma_eps_elements(const PlasmaParams& p, double omega);

// Dimensionless 3x3 tensor [[e11, i e12, 0], [-i e12, e11, 0], [0, 0, e33]].
// Throws ResonanceSingularity within 1e-9*omega of |omega_c| or 0.
Mat3c plasma_permittivity(const PlasmaParams& p, double omega);

// Constitutive matrix M(omega, k) in SI scaling for any model.
MaterialMatrix evaluate_material(const MaterialModel& model, double omega,
                                 const Vec3& k = Vec3::Zero());

MaterialMatrix regularize_nonlocal(const NonlocalParams& np, double omega, const Vec3& k);

// d/dw (w M(w,k)), analytic for the built-in models.
Mat6c material_energy_weight(const MaterialModel& model, double omega,
                             const Vec3& k = Vec3::Zero());

// T6 . M*(w,-k) . T6 on a sampled value (k metadata is negated).
MaterialMatrix time_reverse_material(const MaterialMatrix& m);

// Space inversion: eps/mu blocks kept, xi/sigma blocks negated, k reversed.
MaterialMatrix invert_material(const MaterialMatrix& m);

struct SymmetryReport {
  bool lossless = false;
  bool tr_invariant = false;
  bool inversion_invariant = false;
  bool reciprocal = false;
  double lossless_residual = 0.0;
  double tr_residual = 0.0;
  double inversion_residual = 0.0;
  double reciprocity_residual = 0.0;
};

// Evaluator signature for symmetry checks: must be callable at (omega, +-k).
using MaterialEvaluator = std::function<Mat6c(double omega, const Vec3& k)>;

SymmetryReport classify_symmetry(const MaterialEvaluator& eval, double omega,
                                 const std::vector<Vec3>& sample_ks,
                                 double tol = 1e-10);
SymmetryReport classify_symmetry(const MaterialModel& model, double omega,
                                 const std::vector<Vec3>& sample_ks,
                                 double tol = 1e-10);

bool is_dispersive(const MaterialModel& model);
bool is_nonlocal(const MaterialModel& model);

}  // namespace emberry

#endif
