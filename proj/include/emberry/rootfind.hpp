#ifndef EMBERRY_ROOTFIND_HPP
#define EMBERRY_ROOTFIND_HPP

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "emberry/errors.hpp"

namespace emberry {

// Bisect f on [a,b] (f(a)*f(b) <= 0) until the interval shrinks below
// rel_tol relative to |midpoint|.
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-12, int max_iter = 200) {
  if (a > b) std::swap(a, b);
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw NoRootInBracket("bisect: no sign change in bracket");
  for (int i = 0; i < max_iter; ++i) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
    if ((b - a) <= rel_tol * std::abs(m)) return 0.5 * (a + b);
  }
  return 0.5 * (a + b);
}

// Sign-change brackets of f over the sorted grid. Non-finite samples break
// continuity and are skipped.
inline std::vector<std::pair<double, double>> scan_sign_changes(
    const std::function<double(double)>& f, const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> brackets;
  bool have_prev = false;
  double xp = 0.0, fp = 0.0;
  for (double x : grid) {
    double fx = f(x);
    if (!std::isfinite(fx)) {
      have_prev = false;
      continue;
    }
    if (have_prev && fp * fx < 0.0) brackets.emplace_back(xp, x);
    xp = x;
    fp = fx;
    have_prev = true;
  }
  return brackets;
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / double(n - 1);
  return v;
}

inline std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v(n);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) v[i] = std::exp(la + (lb - la) * i / double(n - 1));
  return v;
}

// Golden-section maximization of f on [a,b].
inline double golden_max(const std::function<double(double)>& f, double a,
                         double b, double abs_tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while ((b - a) > abs_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Neumaier compensated sum; reduction order is the vector order, so results
// are run-to-run identical.
inline double compensated_sum(const std::vector<double>& xs) {
  double s = 0.0, comp = 0.0;
  for (double x : xs) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      comp += (s - t) + x;
    else
      comp += (x - t) + s;
    s = t;
  }
  return s + comp;
}

}  // namespace emberry

#endif
