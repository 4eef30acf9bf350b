#ifndef EMBERRY_TYPES_HPP
#define EMBERRY_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>

namespace emberry {

using complexd = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Mat3c = Eigen::Matrix3cd;
using Vec6c = Eigen::Matrix<complexd, 6, 1>;
using Mat6c = Eigen::Matrix<complexd, 6, 6>;

// Complex field envelope (E; H). E in V/m, H in A/m.
struct SixVector {
  Vec3c e = Vec3c::Zero();
  Vec3c h = Vec3c::Zero();

  Vec6c packed() const {
    Vec6c v;
    v << e(0), e(1), e(2), h(0), h(1), h(2);
    return v;
  }
  static SixVector from_packed(const Vec6c& v) {
    SixVector s;
    s.e << v(0), v(1), v(2);
    s.h << v(3), v(4), v(5);
    return s;
  }
  bool finite() const { return packed().allFinite(); }
};

// 6x6 constitutive matrix with SI block scaling (eps0*eps, xi/c; sigma/c, mu0*mu).
// omega/k record the evaluation point for dispersive/nonlocal models.
struct MaterialMatrix {
  Mat6c m = Mat6c::Zero();
  std::optional<double> omega;  // rad/s, absent for dispersionless
  std::optional<Vec3> k;        // rad/m, absent for local media
  bool dispersive = false;
  bool nonlocal = false;
};

struct CurlMatrix {
  Mat6c n = Mat6c::Zero();
};

// One Maxwell eigensolution at (k, band).
struct EigenMode {
  double omega = 0.0;  // rad/s
  Vec3 k = Vec3::Zero();
  int band = 0;              // index in the omega-ascending spectrum
  int degeneracy = 1;        // multiplicity of this eigenvalue in the spectrum
  SixVector f;               // raw envelope
  SixVector w;               // weighted envelope, <w|w> = 1
  Mat6c weight = Mat6c::Zero();  // Hermitian inner-product weight
};

// Poynting-reversing operator diag(I, -I).
inline Mat6c t6() {
  Mat6c t = Mat6c::Zero();
  for (int i = 0; i < 3; ++i) {
    t(i, i) = 1.0;
    t(i + 3, i + 3) = -1.0;
  }
  return t;
}

}  // namespace emberry

#endif
