#ifndef EMBERRY_EM_CORE_HPP
#define EMBERRY_EM_CORE_HPP

#include <vector>

#include "emberry/media.hpp"
#include "emberry/types.hpp"

namespace emberry {

// M with SI prefactors: [[eps0*eps, xi/c], [sigma/c, mu0*mu]].
MaterialMatrix assemble_material(const Mat3c& eps, const Mat3c& xi,
                                 const Mat3c& sigma, const Mat3c& mu);

// N(k) with the sign convention of exp(i(k.r - w t)):
// N f = w M f reproduces k x E = w mu0 mu H and k x H = -w eps0 eps E.
CurlMatrix assemble_curl(const Vec3& k);

// Principal square root of a Hermitian positive-definite matrix.
// Throws NotPositiveDefinite if any eigenvalue <= 0.
Mat6c hermitian_sqrt(const Mat6c& m);

// All six eigenmodes of N(k) f = w M f for a dispersionless Hermitian-PD M,
// sorted by omega ascending, orthonormal under <w|w>.
std::vector<EigenMode> solve_eigenmodes(const MaterialMatrix& material, const Vec3& k);

// <a|b> = b^dagger . weight . a; conjugate-symmetric for Hermitian weight.
complexd inner_product(const SixVector& a, const SixVector& b, const Mat6c& weight);

// d/dw (w M(w,k)): analytic for the built-in models.
// Throws EvaluationOutsideDomain within 10h (h = 1e-6 w) of a model pole.
Mat6c energy_weight(const MaterialModel& model, double omega, const Vec3& k = Vec3::Zero());

// Central-difference fallback for arbitrary evaluators, step h = 1e-6 w.
Mat6c energy_weight_fd(const MaterialEvaluator& eval, double omega, const Vec3& k);

}  // namespace emberry

#endif
