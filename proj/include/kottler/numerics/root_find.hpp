#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace kottler::numerics {

template <class Real>
struct RootResult {
  Real root;
  int newton_steps = 0;
  int bisection_steps = 0;
  bool converged = false;
};

template <class Real>
struct RootOptions {
  Real f_tolerance = 0;  // absolute on |f|; 0 disables
  Real x_tolerance = 4 * std::numeric_limits<Real>::epsilon();  // relative step
  int max_newton = 64;
  int max_bisection = 200;
};

/// Newton iteration kept inside the bracket [lo, hi].
///
/// `eval(x)` returns {f(x), f'(x)}. The bracket must contain a sign change
/// (or an endpoint root). A Newton step that leaves the current bracket, or a
/// vanishing derivative, is replaced by a bisection step. The bracket is
/// tightened after every evaluation, so the iteration cannot diverge.
template <class Real, class Eval>
RootResult<Real> safeguarded_newton(Eval&& eval, Real lo, Real hi, Real x0,
                                    const RootOptions<Real>& opt = {}) {
  RootResult<Real> res{x0};
  auto [flo, dlo] = eval(lo);
  auto [fhi, dhi] = eval(hi);
  (void)dlo;
  (void)dhi;
  if (flo == 0) return {lo, 0, 0, true};
  if (fhi == 0) return {hi, 0, 0, true};
  const bool increasing = fhi > 0;

  Real x = (x0 > lo && x0 < hi) ? x0 : (lo + hi) / 2;
  while (res.newton_steps < opt.max_newton && res.bisection_steps < opt.max_bisection) {
    auto [f, df] = eval(x);
    if (f == 0 || std::abs(f) <= opt.f_tolerance) {
      res.root = x;
      res.converged = true;
      return res;
    }
    if ((f > 0) == increasing) {
      hi = x;
    } else {
      lo = x;
    }

    Real next = x;
    bool newton_ok = df != 0 && std::isfinite(df);
    if (newton_ok) {
      next = x - f / df;
      newton_ok = next > lo && next < hi;
    }
    if (newton_ok) {
      ++res.newton_steps;
    } else {
      next = lo + (hi - lo) / 2;
      ++res.bisection_steps;
    }

    const Real scale = std::max(std::abs(next), Real(1));
    if (std::abs(next - x) <= opt.x_tolerance * scale || hi - lo <= opt.x_tolerance * scale) {
      res.root = next;
      res.converged = true;
      return res;
    }
    x = next;
  }
  res.root = x;
  return res;
}

}  // namespace kottler::numerics
