#ifndef EMBERRY_CONSTANTS_HPP
#define EMBERRY_CONSTANTS_HPP

#include <cmath>

namespace emberry {

// CODATA 2018
inline constexpr double eps0 = 8.8541878128e-12;   // F/m
inline constexpr double mu0 = 1.25663706212e-6;    // H/m
inline constexpr double c0 = 299792458.0;          // m/s
inline constexpr double q_electron = -1.602176634e-19;  // C (signed)
inline constexpr double m_electron = 9.1093837015e-31;  // kg

inline constexpr double pi = 3.14159265358979323846;

inline double eta0() { return std::sqrt(mu0 / eps0); }

// Cyclic THz <-> angular frequency (rad/s). Plot axes use f = omega/2pi in THz.
inline double thz_to_rad(double f_thz) { return 2.0 * pi * f_thz * 1e12; }
inline double rad_to_thz(double omega) { return omega / (2.0 * pi * 1e12); }

// omega_c = (q_e/m_e) B_z, signed (negative for electrons with B_z > 0)
inline double cyclotron_from_bias(double b_tesla) {
  return (q_electron / m_electron) * b_tesla;
}

}  // namespace emberry

#endif
