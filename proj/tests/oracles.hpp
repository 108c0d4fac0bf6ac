#pragma once

// Independent reference computations for the tests. Nothing here shares code
// with the library's solvers: plain bisection, Richardson-free central
// differences and composite Simpson quadrature.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

/// Bisection to bracket width `xtol`. Works in long double so the oracle is
/// finer than the double-precision code under test.
inline long double bisect(const std::function<long double(long double)>& f, long double lo,
                          long double hi, long double xtol = 1e-18L) {
  long double flo = f(lo);
  long double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0)) throw std::invalid_argument("bisect: no sign change");
  for (int i = 0; i < 400 && hi - lo > xtol; ++i) {
    const long double mid = lo + (hi - lo) / 2;
    const long double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

inline double second_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}

/// Composite Simpson with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3;
}

/// Kottler horizon, kappa = -1, by bisection of x^3 - x - 2m on
/// [1/sqrt 3, 2 + |2m|^(1/3)].
inline long double hyperbolic_horizon(long double m) {
  const long double lo = 1.0L / std::sqrt(3.0L);
  const long double hi = 2.0L + std::cbrt(std::fabs(2 * m));
  auto cubic = [m](long double x) { return x * x * x - x - 2 * m; };
  // At the double root the cubic touches zero from above; round-off decides the sign.
  if (cubic(lo) >= 0) return lo;
  return bisect(cubic, lo, hi);
}

}  // namespace oracle
