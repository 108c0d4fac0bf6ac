#pragma once

namespace kottler {

/// The pseudo-radial function psi_{m0}(u): the radius at which the kappa = -1
/// Kottler model of mass m0 has potential u, i.e. the root psi >= r_{m0} of
///
///   F(u, psi) = u^2 + 1 - psi^2 + 2 m0 / psi = 0.
///
/// Values are carried in long double: at u ~ 1e3 no double psi brings |F|
/// below 1e-10, while the extended root keeps it near 1e-13.
class PseudoRadialMap {
 public:
  using Real = long double;

  /// Below this u the degenerate map uses its series instead of Newton.
  static constexpr double degenerate_series_cutoff = 1e-4;

  explicit PseudoRadialMap(double m0, Real solver_tolerance = 1e-13L);

  double m0() const { return m0_; }
  /// Horizon radius r_{m0} of the comparison model (double, from models).
  double horizon_radius() const { return r_m0_; }
  bool degenerate() const { return degenerate_; }
  Real solver_tolerance() const { return tolerance_; }

  /// psi(u). Throws DomainError for u < 0, ConvergenceFailure if the
  /// safeguarded iteration exhausts its budget.
  Real evaluate(double u) const;

  /// dpsi/du = u psi^2 / (psi^3 + m0). At u = 0 this is 0, except for the
  /// degenerate map where it throws DegenerateDerivative.
  Real derivative(double u) const;
  /// lim_{u->0} dpsi/du; 1/sqrt 3 for the degenerate map, 0 otherwise.
  Real derivative_at_horizon() const;

  /// psi^3 + m0, computed about r_{m0} so it stays accurate near the horizon.
  Real cubic_gap(double u) const;

  /// W0(u) = ((psi^3 + m0)/psi^2)^2.
  Real model_gradient(double u) const;
  /// dW0/du = 2u (1 - 2 m0 / psi^3).
  Real model_gradient_slope(double u) const;
  /// d^2 W0/du^2 = 2 - 4 m0/psi^3 + 12 m0 u psi' / psi^4.
  Real model_gradient_curvature(double u) const;

  /// u^2 + 1 - psi^2 + 2 m0/psi, as written.
  Real identity_residual(Real u, Real psi) const;

 private:
  Real series(Real u) const;
  Real series_slope(Real u) const;

  double m0_;
  double r_m0_;
  bool degenerate_;
  Real tolerance_;
  Real mass_;     // m0 in extended precision (exact critical value when degenerate)
  Real radius_;   // r_{m0} refined in extended precision
  Real gravity_;  // surface gravity of the comparison model
};

}  // namespace kottler
