#include "kottler/pseudoradial.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "kottler/errors.hpp"
#include "kottler/models.hpp"
#include "kottler/numerics/root_find.hpp"

namespace kottler {
namespace {

using Real = PseudoRadialMap::Real;

const Real kSqrt3 = std::sqrt(3.0L);

// psi - r_crit = c1 u + c2 u^2 + c3 u^3 + c4 u^4 + O(u^5) for m0 = m_crit,
// from matching F(u, r_crit + d) = u^2 - 3 d^2 + 2 sqrt3 d^3 - ... order by order.
const Real kC1 = 1.0L / kSqrt3;
const Real kC2 = kSqrt3 / 9.0L;
const Real kC3 = -kSqrt3 / 54.0L;
const Real kC4 = -kSqrt3 / 81.0L;

}  // namespace

PseudoRadialMap::PseudoRadialMap(double m0, Real solver_tolerance)
    : m0_(m0), tolerance_(solver_tolerance) {
  if (!(m0 >= critical_mass && m0 <= 0.0)) {
    throw DomainError("PseudoRadialMap: comparison mass must lie in [-1/(3 sqrt 3), 0]");
  }
  const HorizonData horizon = KottlerModel::hyperbolic(m0).horizon();
  r_m0_ = horizon.radius;
  degenerate_ = horizon.degenerate;
  if (degenerate_) {
    radius_ = 1.0L / kSqrt3;
    mass_ = -1.0L / (3.0L * kSqrt3);
    gravity_ = 0.0L;
    return;
  }
  mass_ = m0;
  // Two Newton polishes of x^3 - x - 2m in extended precision.
  Real r = r_m0_;
  for (int i = 0; i < 3; ++i) {
    const Real p = r * r * r - r - 2.0L * mass_;
    r -= p / (3.0L * r * r - 1.0L);
  }
  radius_ = r;
  gravity_ = (3.0L * r * r - 1.0L) / (2.0L * r);
}

Real PseudoRadialMap::series(Real u) const {
  return radius_ + u * (kC1 + u * (kC2 + u * (kC3 + u * kC4)));
}

Real PseudoRadialMap::series_slope(Real u) const {
  return kC1 + u * (2.0L * kC2 + u * (3.0L * kC3 + u * 4.0L * kC4));
}

Real PseudoRadialMap::evaluate(double u_in) const {
  if (!(u_in >= 0.0) || !std::isfinite(u_in)) {
    throw DomainError("PseudoRadialMap::evaluate: u must be finite and >= 0");
  }
  if (u_in == 0.0) return radius_;
  const Real u = u_in;
  if (degenerate_ && u_in < degenerate_series_cutoff) return series(u);

  const Real r = radius_;
  // F(u, psi) = u^2 - (psi - r)(psi^2 + psi r + r^2 - 1)/psi, using F(0, r) = 0.
  auto eval = [&](Real psi) -> std::pair<Real, Real> {
    const Real d = psi - r;
    const Real f = u * u - d * (psi * psi + psi * r + r * r - 1.0L) / psi;
    const Real gap = d * (psi * psi + psi * r + r * r) + r * r * gravity_;
    return {f, -2.0L * gap / (psi * psi)};
  };
  const Real hi = std::sqrt(u * u + 1.0L + 2.0L * std::abs(mass_)) + 1.0L;
  Real guess = std::sqrt(u * u + 1.0L);
  if (degenerate_ && u < 0.1L) guess = series(u);

  numerics::RootOptions<Real> opt;
  opt.f_tolerance = 0;
  opt.x_tolerance = 8 * std::numeric_limits<Real>::epsilon();
  const auto res = numerics::safeguarded_newton(eval, r, hi, guess, opt);
  if (!res.converged) {
    throw ConvergenceFailure("PseudoRadialMap::evaluate: iteration budget exhausted");
  }
  return res.root;
}

Real PseudoRadialMap::cubic_gap(double u) const {
  const Real psi = evaluate(u);
  const Real r = radius_;
  return (psi - r) * (psi * psi + psi * r + r * r) + r * r * gravity_;
}

Real PseudoRadialMap::derivative(double u) const {
  if (u == 0.0) {
    if (degenerate_) {
      throw DegenerateDerivative("dpsi/du is 0/0 at the degenerate horizon; limit is 1/sqrt 3");
    }
    return 0.0L;
  }
  if (degenerate_ && u < degenerate_series_cutoff) return series_slope(u);
  const Real psi = evaluate(u);
  return static_cast<Real>(u) * psi * psi / cubic_gap(u);
}

Real PseudoRadialMap::derivative_at_horizon() const { return degenerate_ ? kC1 : 0.0L; }

Real PseudoRadialMap::model_gradient(double u) const {
  const Real psi = evaluate(u);
  const Real g = cubic_gap(u) / (psi * psi);
  return g * g;
}

Real PseudoRadialMap::model_gradient_slope(double u) const {
  const Real psi = evaluate(u);
  return 2.0L * static_cast<Real>(u) * (1.0L - 2.0L * mass_ / (psi * psi * psi));
}

Real PseudoRadialMap::model_gradient_curvature(double u) const {
  const Real psi = evaluate(u);
  const Real psi3 = psi * psi * psi;
  const Real uu = u;
  const Real slope = u == 0.0 ? derivative_at_horizon() : derivative(u);
  return 2.0L - 4.0L * mass_ / psi3 + 12.0L * mass_ * uu * slope / (psi3 * psi);
}

Real PseudoRadialMap::identity_residual(Real u, Real psi) const {
  if (!(psi > 0.0L)) throw DomainError("identity_residual: psi must be positive");
  return u * u + 1.0L - psi * psi + 2.0L * mass_ / psi;
}

}  // namespace kottler
