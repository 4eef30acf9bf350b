#include "emberry/media.hpp"

#include <cmath>

#include "emberry/constants.hpp"
#include "emberry/errors.hpp"

namespace emberry {

namespace {

void check_off_resonance(const PlasmaParams& p, double omega, double guard) {
  if (omega <= 0.0) throw ResonanceSingularity("plasma: omega must be > 0");
  if (std::abs(omega - std::abs(p.omega_c)) <= guard * omega)
    throw ResonanceSingularity("plasma: omega at cyclotron resonance |omega_c|");
}

double cutoff_factor(double k2, double k_max) {
  return 1.0 / (1.0 + k2 / (k_max * k_max));
}

Mat6c vacuum_matrix() {
  Mat6c m = Mat6c::Zero();
  for (int i = 0; i < 3; ++i) {
    m(i, i) = eps0;
    m(i + 3, i + 3) = mu0;
  }
  return m;
}

Mat6c plasma_matrix(const PlasmaEps& el) {
  Mat6c m = Mat6c::Zero();
  const complexd i1(0.0, 1.0);
  m(0, 0) = eps0 * el.e11;
  m(1, 1) = eps0 * el.e11;
  m(0, 1) = i1 * eps0 * el.e12;
  m(1, 0) = -i1 * eps0 * el.e12;
  m(2, 2) = eps0 * el.e33;
  for (int i = 0; i < 3; ++i) m(i + 3, i + 3) = mu0;
  return m;
}

Mat6c plasma_weight_matrix(const PlasmaEps& el) {
  Mat6c m = Mat6c::Zero();
  const complexd i1(0.0, 1.0);
  m(0, 0) = eps0 * el.b11;
  m(1, 1) = eps0 * el.b11;
  m(0, 1) = i1 * eps0 * el.b12;
  m(1, 0) = -i1 * eps0 * el.b12;
  m(2, 2) = eps0 * el.b33;
  for (int i = 0; i < 3; ++i) m(i + 3, i + 3) = mu0;
  return m;
}

}  // namespace

PlasmaEps plasma_eps_elements(const PlasmaParams& p, double omega) {
  const double w = omega;
  const double wc = p.omega_c;
  const double wp2 = p.omega_p * p.omega_p;
  const double d = w * w - wc * wc;  // resonance denominator
  PlasmaEps el;
  el.e11 = 1.0 - wp2 / d;
  el.e12 = -wc * wp2 / (w * d);
  el.e33 = 1.0 - wp2 / (w * w);
  el.de11 = 2.0 * w * wp2 / (d * d);
  el.de12 = wc * wp2 * (3.0 * w * w - wc * wc) / (w * w * d * d);
  el.de33 = 2.0 * wp2 / (w * w * w);
  el.b11 = 1.0 + wp2 * (w * w + wc * wc) / (d * d);
  el.b12 = 2.0 * w * wc * wp2 / (d * d);
  el.b33 = 1.0 + wp2 / (w * w);
  el.db11 = -2.0 * wp2 * w * (w * w + 3.0 * wc * wc) / (d * d * d);
  el.db12 = -2.0 * wc * wp2 * (3.0 * w * w + wc * wc) / (d * d * d);
  el.db33 = -2.0 * wp2 / (w * w * w);
  return el;
}

Mat3c plasma_permittivity(const PlasmaParams& p, double omega) {
  check_off_resonance(p, omega, 1e-9);
  const PlasmaEps el = plasma_eps_elements(p, omega);
  Mat3c eps = Mat3c::Zero();
  const complexd i1(0.0, 1.0);
  eps(0, 0) = el.e11;
  eps(1, 1) = el.e11;
  eps(0, 1) = i1 * el.e12;
  eps(1, 0) = -i1 * el.e12;
  eps(2, 2) = el.e33;
  return eps;
}

MaterialMatrix evaluate_material(const MaterialModel& model, double omega, const Vec3& k) {
  MaterialMatrix out;
  if (std::holds_alternative<Vacuum>(model)) {
    out.m = vacuum_matrix();
    return out;
  }
  if (const auto* d = std::get_if<Dielectric>(&model)) {
    out.m = vacuum_matrix();
    for (int i = 0; i < 3; ++i) out.m(i, i) = eps0 * d->eps_s;
    return out;
  }
  if (const auto* p = std::get_if<PlasmaParams>(&model)) {
    check_off_resonance(*p, omega, 1e-9);
    out.m = plasma_matrix(plasma_eps_elements(*p, omega));
    out.omega = omega;
    out.dispersive = true;
    return out;
  }
  return regularize_nonlocal(std::get<NonlocalParams>(model), omega, k);
}

MaterialMatrix regularize_nonlocal(const NonlocalParams& np, double omega, const Vec3& k) {
  check_off_resonance(np.base, omega, 1e-9);
  const double g = cutoff_factor(k.squaredNorm(), np.k_max);
  const Mat6c minf = vacuum_matrix();
  MaterialMatrix out;
  if (g == 1.0)
    out.m = plasma_matrix(plasma_eps_elements(np.base, omega));
  else
    out.m = minf + g * (plasma_matrix(plasma_eps_elements(np.base, omega)) - minf);
  out.omega = omega;
  out.k = k;
  out.dispersive = true;
  out.nonlocal = true;
  return out;
}

Mat6c material_energy_weight(const MaterialModel& model, double omega, const Vec3& k) {
  if (std::holds_alternative<Vacuum>(model) || std::holds_alternative<Dielectric>(model))
    return evaluate_material(model, omega, k).m;  // d/dw (w M) = M for constant M
  if (const auto* p = std::get_if<PlasmaParams>(&model)) {
    check_off_resonance(*p, omega, 1e-9);
    return plasma_weight_matrix(plasma_eps_elements(*p, omega));
  }
  const auto& np = std::get<NonlocalParams>(model);
  check_off_resonance(np.base, omega, 1e-9);
  const double g = cutoff_factor(k.squaredNorm(), np.k_max);
  if (g == 1.0) return plasma_weight_matrix(plasma_eps_elements(np.base, omega));
  const Mat6c minf = vacuum_matrix();
  return minf + g * (plasma_weight_matrix(plasma_eps_elements(np.base, omega)) - minf);
}

MaterialMatrix time_reverse_material(const MaterialMatrix& m) {
  const Mat6c t = t6();
  MaterialMatrix out = m;
  out.m = t * m.m.conjugate() * t;
  if (m.k) out.k = -(*m.k);
  return out;
}

MaterialMatrix invert_material(const MaterialMatrix& m) {
  MaterialMatrix out = m;
  out.m = m.m;
  out.m.block<3, 3>(0, 3) *= -1.0;
  out.m.block<3, 3>(3, 0) *= -1.0;
  if (m.k) out.k = -(*m.k);
  return out;
}

SymmetryReport classify_symmetry(const MaterialEvaluator& eval, double omega,
                                 const std::vector<Vec3>& sample_ks, double tol) {
  const Mat6c t = t6();
  SymmetryReport rep;
  double rl = 0.0, rt = 0.0, ri = 0.0, rr = 0.0;
  for (const Vec3& k : sample_ks) {
    const Mat6c m = eval(omega, k);
    const Mat6c mneg = eval(omega, -k);
    const double scale = std::max(m.norm(), 1e-300);
    rl = std::max(rl, (m - m.adjoint().eval()).norm() / scale);
    rt = std::max(rt, (m - (t * mneg.conjugate() * t).eval()).norm() / scale);
    Mat6c minv = mneg;
    minv.block<3, 3>(0, 3) *= -1.0;
    minv.block<3, 3>(3, 0) *= -1.0;
    ri = std::max(ri, (m - minv).norm() / scale);
    rr = std::max(rr, (m - (t * mneg.transpose() * t).eval()).norm() / scale);
  }
  rep.lossless_residual = rl;
  rep.tr_residual = rt;
  rep.inversion_residual = ri;
  rep.reciprocity_residual = rr;
  rep.lossless = rl <= tol;
  rep.tr_invariant = rt <= tol;
  rep.inversion_invariant = ri <= tol;
  rep.reciprocal = rr <= tol;
  return rep;
}

SymmetryReport classify_symmetry(const MaterialModel& model, double omega,
                                 const std::vector<Vec3>& sample_ks, double tol) {
  return classify_symmetry(
      [&model](double w, const Vec3& k) { return evaluate_material(model, w, k).m; },
      omega, sample_ks, tol);
}

bool is_dispersive(const MaterialModel& model) {
  return std::holds_alternative<PlasmaParams>(model) ||
         std::holds_alternative<NonlocalParams>(model);
}

bool is_nonlocal(const MaterialModel& model) {
  return std::holds_alternative<NonlocalParams>(model);
}

}  // namespace emberry
