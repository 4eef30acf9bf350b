#include <doctest.h>

#include <random>

#include "emberry/constants.hpp"
#include "emberry/em_core.hpp"
#include "emberry/errors.hpp"

using namespace emberry;

namespace {

Mat3c random_hermitian3(std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat3c a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = complexd(g(rng), g(rng));
  return 0.5 * (a + a.adjoint()).eval();
}

Mat6c random_hermitian_pd6(std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat6c a;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = complexd(g(rng), g(rng));
  return (a * a.adjoint() + 0.1 * Mat6c::Identity()).eval();
}

}  // namespace

TEST_CASE("assemble_material applies SI block prefactors") {
  const Mat3c eye = Mat3c::Identity();
  const Mat3c zero = Mat3c::Zero();
  const MaterialMatrix vac = assemble_material(eye, zero, zero, eye);
  for (int i = 0; i < 3; ++i) {
    CHECK(vac.m(i, i) == complexd(eps0, 0.0));
    CHECK(vac.m(i + 3, i + 3) == complexd(mu0, 0.0));
  }
  CHECK(vac.m.block<3, 3>(0, 3).norm() == 0.0);

  // magnetoplasma evaluated at omega = omega_p with no bias: eps block vanishes
  const PlasmaParams p{thz_to_rad(10.0), 0.0};
  const Mat3c eps = plasma_permittivity(p, thz_to_rad(10.0));
  const MaterialMatrix m = assemble_material(eps, zero, zero, eye);
  CHECK(m.m.block<3, 3>(0, 0).norm() == doctest::Approx(0.0).epsilon(1e-14));

  // xi = sigma^dagger keeps M Hermitian
  std::mt19937 rng(7);
  const Mat3c he = random_hermitian3(rng);
  const Mat3c hm = random_hermitian3(rng) + 3.0 * Mat3c::Identity();
  Mat3c xi;
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) xi(i, j) = complexd(g(rng), g(rng));
  const MaterialMatrix bi = assemble_material(he, xi, xi.adjoint(), hm);
  CHECK((bi.m - bi.m.adjoint().eval()).norm() <= 1e-12 * bi.m.norm());
}

TEST_CASE("assemble_curl pattern and antisymmetry in k") {
  CHECK(assemble_curl(Vec3::Zero()).n.norm() == 0.0);

  const double kz = 7.5;
  const Mat6c n = assemble_curl(Vec3(0.0, 0.0, kz)).n;
  CHECK((n - n.adjoint().eval()).norm() == doctest::Approx(0.0));
  // one representative off-diagonal entry of the +-k x I blocks
  CHECK(std::abs(n(0, 4)) == doctest::Approx(kz));

  std::mt19937 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec3 k(g(rng), g(rng), g(rng));
    CHECK((assemble_curl(-k).n + assemble_curl(k).n).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("hermitian_sqrt") {
  Mat6c d = Mat6c::Zero();
  d.diagonal() << 4, 1, 1, 1, 1, 1;
  const Mat6c r = hermitian_sqrt(d);
  CHECK(std::real(r(0, 0)) == doctest::Approx(2.0));
  CHECK(std::real(r(1, 1)) == doctest::Approx(1.0));

  CHECK((hermitian_sqrt(Mat6c::Identity()) - Mat6c::Identity()).norm() ==
        doctest::Approx(0.0));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat6c m = random_hermitian_pd6(rng);
    const Mat6c s = hermitian_sqrt(m);
    CHECK((s * s - m).norm() <= 1e-10 * m.norm());          // oracle: re-multiplication
    CHECK((s - s.adjoint().eval()).norm() <= 1e-12 * s.norm());
    CHECK((s * m - m * s).norm() <= 1e-10 * m.norm() * s.norm());
  }

  Mat6c bad = Mat6c::Identity();
  bad(2, 2) = -1.0;
  CHECK_THROWS_AS(hermitian_sqrt(bad), NotPositiveDefinite);
}

TEST_CASE("solve_eigenmodes: vacuum light cone and static modes") {
  const MaterialModel vac = Vacuum{};
  const MaterialMatrix m = evaluate_material(vac, 0.0);
  const double k0 = 2.0 * pi / 1.55e-6;

  auto modes = solve_eigenmodes(m, Vec3(0.0, 0.0, k0));
  REQUIRE(modes.size() == 6);
  CHECK(modes[0].omega == doctest::Approx(-c0 * k0).epsilon(1e-12));
  CHECK(modes[1].omega == doctest::Approx(-c0 * k0).epsilon(1e-12));
  CHECK(modes[2].omega == doctest::Approx(0.0).scale(c0 * k0));
  CHECK(modes[3].omega == doctest::Approx(0.0).scale(c0 * k0));
  CHECK(modes[4].omega == doctest::Approx(c0 * k0).epsilon(1e-12));
  CHECK(modes[5].omega == doctest::Approx(c0 * k0).epsilon(1e-12));
  CHECK(modes[4].degeneracy == 2);

  for (auto& kzero : solve_eigenmodes(m, Vec3::Zero()))
    CHECK(kzero.omega == doctest::Approx(0.0).scale(c0 * k0));
}

TEST_CASE("solve_eigenmodes: isotropic dielectric halves the light line") {
  const MaterialMatrix m = evaluate_material(Dielectric{4.0}, 0.0);
  const double k0 = 1e5;
  auto modes = solve_eigenmodes(m, Vec3(k0, 0.0, 0.0));
  // oracle: scalar dispersion omega = c k / sqrt(eps_s)
  const double expect = c0 * k0 / 2.0;
  CHECK(modes[4].omega == doctest::Approx(expect).epsilon(1e-12));
  CHECK(modes[5].omega == doctest::Approx(expect).epsilon(1e-12));
  CHECK(modes[4].degeneracy == 2);
}

TEST_CASE("solve_eigenmodes: residual, orthonormality, +-k spectra") {
  std::mt19937 rng(23);
  std::normal_distribution<double> g(0.0, 1.0);
  const MaterialMatrix m = evaluate_material(Dielectric{2.25}, 0.0);
  const Vec3 k = Vec3(g(rng), g(rng), g(rng)) * 1e5;

  auto modes = solve_eigenmodes(m, k);
  const Mat6c n = assemble_curl(k).n;
  for (const auto& mode : modes) {
    const Vec6c f = mode.f.packed();
    const Vec6c lhs = n * f;
    const Vec6c rhs = mode.omega * (m.m * f);
    // static modes have ||N f|| ~ 0; scale by the operator norm instead
    const double scale = std::max(lhs.norm(), 1e-3 * n.norm() * f.norm());
    CHECK((lhs - rhs).norm() <= 1e-9 * scale);
    CHECK(std::abs(inner_product(mode.w, mode.w, Mat6c::Identity())) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const complexd ip = inner_product(modes[a].f, modes[b].f, m.m);
      if (a == b)
        CHECK(std::abs(ip) == doctest::Approx(1.0).epsilon(1e-9));
      else
        CHECK(std::abs(ip) <= 1e-9);
    }

  auto neg = solve_eigenmodes(m, -k);
  for (int i = 0; i < 6; ++i)
    CHECK(std::abs(neg[i].omega - modes[i].omega) <= 1e-9 * c0 * k.norm());
}

TEST_CASE("inner_product conventions") {
  std::mt19937 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  SixVector a, b;
  for (int i = 0; i < 3; ++i) {
    a.e(i) = complexd(g(rng), g(rng));
    a.h(i) = complexd(g(rng), g(rng));
    b.e(i) = complexd(g(rng), g(rng));
    b.h(i) = complexd(g(rng), g(rng));
  }
  const MaterialMatrix m = evaluate_material(Vacuum{}, 0.0);
  const complexd ab = inner_product(a, b, m.m);
  const complexd ba = inner_product(b, a, m.m);
  CHECK(std::abs(ab - std::conj(ba)) <= 1e-15 * std::abs(ab));

  // vacuum CP plane-wave pair is orthogonal under the material weight
  const Vec3c theta_hat(1.0, 0.0, 0.0);  // at k along z: theta^ = x^, phi^ = y^
  const Vec3c phi_hat(0.0, 1.0, 0.0);
  const complexd i1(0.0, 1.0);
  SixVector fp, fm;
  const double a0 = 1.0 / std::sqrt(2.0 * eps0);
  fp.e = a0 * (theta_hat + i1 * phi_hat) / std::sqrt(2.0);
  fp.h = -i1 / eta0() * fp.e;
  fm.e = a0 * (theta_hat - i1 * phi_hat) / std::sqrt(2.0);
  fm.h = i1 / eta0() * fm.e;
  CHECK(std::abs(inner_product(fp, fm, m.m)) <= 1e-12);
}

TEST_CASE("energy_weight: dispersionless, plasma symbols, FD cross-check") {
  const MaterialMatrix m = evaluate_material(Dielectric{4.0}, 0.0);
  const MaterialModel diel = Dielectric{4.0};
  CHECK((energy_weight(diel, 1e12) - m.m).norm() == doctest::Approx(0.0));

  const double w = thz_to_rad(10.0);
  const PlasmaParams p{thz_to_rad(9.0), thz_to_rad(1.73)};
  const Mat6c ew = energy_weight(p, w);
  // beta11 = d/dw (w eps0 eps11), beta12 = d/dw (w eps0 eps12) as defined in
  // the gyrotropic weight pattern
  const PlasmaEps el = plasma_eps_elements(p, w);
  CHECK(std::real(ew(0, 0)) == doctest::Approx(eps0 * el.b11).epsilon(1e-14));
  CHECK(std::imag(ew(0, 1)) == doctest::Approx(eps0 * el.b12).epsilon(1e-14));
  CHECK((ew - ew.adjoint().eval()).norm() <= 1e-9 * ew.norm());

  // analytic vs central finite difference
  const MaterialModel model = p;
  const Mat6c fd = energy_weight_fd(
      [&](double omega, const Vec3& k) { return evaluate_material(model, omega, k).m; },
      w, Vec3::Zero());
  CHECK((ew - fd).norm() <= 1e-6 * ew.norm());

  CHECK_THROWS_AS(energy_weight(p, std::abs(p.omega_c) * (1.0 + 1e-7)),
                  EvaluationOutsideDomain);
}

TEST_CASE("spectra of TR-invariant dispersionless media pair as +-omega") {
  // generic Hermitian-PD M has two static modes but no +-omega pairing;
  // the pairing follows from TR invariance M = T6 M* T6, which every
  // dispersionless model in this suite satisfies
  std::mt19937 rng(31);
  std::normal_distribution<double> g(0.0, 1.0);
  const Mat6c t = t6();
  for (int trial = 0; trial < 10; ++trial) {
    Mat6c a;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) a(i, j) = complexd(g(rng), g(rng));
    Mat6c m = a * a.adjoint() + 0.5 * Mat6c::Identity();
    m = 0.5 * (m + t * m.conjugate() * t).eval();   // impose TR invariance
    Eigen::SelfAdjointEigenSolver<Mat6c> es(m);
    if (es.eigenvalues()(0) <= 0.05)
      m += (0.05 - es.eigenvalues()(0)) * Mat6c::Identity();

    MaterialMatrix mat;
    mat.m = m;
    const Vec3 k(g(rng), g(rng), g(rng));
    auto modes = solve_eigenmodes(mat, k);
    const double scale = std::abs(modes[5].omega);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(modes[i].omega + modes[5 - i].omega) <= 1e-9 * scale);
    CHECK(std::abs(modes[2].omega) <= 1e-9 * scale);
    CHECK(std::abs(modes[3].omega) <= 1e-9 * scale);
  }
}
