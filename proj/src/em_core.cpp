#include "emberry/em_core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "emberry/constants.hpp"
#include "emberry/errors.hpp"

namespace emberry {

namespace {

Eigen::Matrix3cd cross_matrix(const Vec3& k) {
  Eigen::Matrix3cd kx = Eigen::Matrix3cd::Zero();
  kx(0, 1) = -k(2);
  kx(0, 2) = k(1);
  kx(1, 0) = k(2);
  kx(1, 2) = -k(0);
  kx(2, 0) = -k(1);
  kx(2, 1) = k(0);
  return kx;
}

}  // namespace

MaterialMatrix assemble_material(const Mat3c& eps, const Mat3c& xi,
                                 const Mat3c& sigma, const Mat3c& mu) {
  MaterialMatrix out;
  out.m.block<3, 3>(0, 0) = eps0 * eps;
  out.m.block<3, 3>(0, 3) = xi / c0;
  out.m.block<3, 3>(3, 0) = sigma / c0;
  out.m.block<3, 3>(3, 3) = mu0 * mu;
  return out;
}

CurlMatrix assemble_curl(const Vec3& k) {
  CurlMatrix out;
  const Eigen::Matrix3cd kx = cross_matrix(k);
  out.n.block<3, 3>(0, 3) = -kx;
  out.n.block<3, 3>(3, 0) = kx;
  return out;
}

Mat6c hermitian_sqrt(const Mat6c& m) {
  Eigen::SelfAdjointEigenSolver<Mat6c> es(0.5 * (m + m.adjoint()));
  const auto& vals = es.eigenvalues();
  for (int i = 0; i < 6; ++i)
    if (!(vals(i) > 0.0))
      throw NotPositiveDefinite("hermitian_sqrt: eigenvalue <= 0");
  Eigen::Matrix<double, 6, 1> sq = vals.cwiseSqrt();
  return es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<EigenMode> solve_eigenmodes(const MaterialMatrix& material, const Vec3& k) {
  const Mat6c msqrt = hermitian_sqrt(material.m);
  const Mat6c minv_sqrt = msqrt.inverse();
  const Mat6c n = assemble_curl(k).n;
  Mat6c h = minv_sqrt * n * minv_sqrt;
  h = 0.5 * (h + h.adjoint()).eval();  // symmetrized operator, real spectrum
  Eigen::SelfAdjointEigenSolver<Mat6c> es(h);

  std::vector<EigenMode> modes(6);
  for (int i = 0; i < 6; ++i) {
    EigenMode& mode = modes[i];
    mode.omega = es.eigenvalues()(i);
    mode.k = k;
    mode.band = i;
    Vec6c w = es.eigenvectors().col(i);
    mode.w = SixVector::from_packed(w);
    mode.f = SixVector::from_packed(minv_sqrt * w);
    mode.weight = material.m;
  }
  // multiplicity bookkeeping for degenerate eigenvalues
  const double scale = std::abs(modes[5].omega - modes[0].omega) + 1e-300;
  for (int i = 0; i < 6; ++i) {
    int mult = 1;
    for (int j = 0; j < 6; ++j)
      if (j != i && std::abs(modes[j].omega - modes[i].omega) <= 1e-9 * scale) ++mult;
    modes[i].degeneracy = mult;
  }
  return modes;
}

complexd inner_product(const SixVector& a, const SixVector& b, const Mat6c& weight) {
  return (b.packed().adjoint() * weight * a.packed())(0, 0);
}

Mat6c energy_weight(const MaterialModel& model, double omega, const Vec3& k) {
  const double h = 1e-6 * omega;
  if (const auto* p = std::get_if<PlasmaParams>(&model)) {
    if (std::abs(omega - std::abs(p->omega_c)) <= 10.0 * h || omega <= 10.0 * h)
      throw EvaluationOutsideDomain("energy_weight: omega within 10h of a model pole");
  } else if (const auto* np = std::get_if<NonlocalParams>(&model)) {
    if (std::abs(omega - std::abs(np->base.omega_c)) <= 10.0 * h || omega <= 10.0 * h)
      throw EvaluationOutsideDomain("energy_weight: omega within 10h of a model pole");
  }
  return material_energy_weight(model, omega, k);
}

Mat6c energy_weight_fd(const MaterialEvaluator& eval, double omega, const Vec3& k) {
  const double h = 1e-6 * omega;
  const Mat6c hi = (omega + h) * eval(omega + h, k);
  const Mat6c lo = (omega - h) * eval(omega - h, k);
  return (hi - lo) / (2.0 * h);
}

}  // namespace emberry
