#pragma once

#include <cstddef>
#include <vector>

#include "kottler/profile.hpp"
#include "kottler/report.hpp"

namespace kottler {

/// Annulus r_lo <= r <= r_hi of a profile and the comparison model used to
/// build Psi = psi_{m0}(u). Cross sections enter only through 4 pi (genus - 1).
struct AnnulusSpec {
  const RadialProfile& profile;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double comparison_mass = 0.0;
  std::size_t panels = 32;
  std::size_t nodes = 64;
};

/// Flux of grad u / (Psi^3 + m0) through the level {r = R}:
///   |grad u|(R) / (psi(u(R))^3 + m0) * 4 pi (genus - 1) rho(R)^2.
double flux_integral(const AnnulusSpec& spec, double radius);

/// Integral over the annulus of 3 u Psi^4 / (Psi^3 + m0)^3 (W0 - W).
///
/// Closed-form profiles are integrated in area radius with the graded
/// variable x = ln(r - r_h) (or t = sqrt(r - r_h) when the annulus touches
/// the horizon), which absorbs the horizon end point behaviour; ODE profiles
/// are integrated in arclength. Throws QuadratureFailure on non-finite values.
double bulk_integral(const AnnulusSpec& spec);

/// flux(r_hi) - flux(r_lo) against bulk_integral, tolerance 1e-7 (1 + |lhs|).
/// When the profile or the comparison model has a degenerate horizon, r_lo is
/// raised to r_h (1 + 1e-6).
VerificationReport divergence_identity_check(const AnnulusSpec& spec);

/// divergence_identity_check on [r_h (1 + offset), r_hi] for each offset,
/// probing the excision limit at a horizon.
std::vector<VerificationReport> degenerate_flux_probe(
    const RadialProfile& profile, double comparison_mass, double r_hi,
    const std::vector<double>& offsets = {1e-3, 1e-4, 1e-5});

/// Flux at R = 10, 20, 50 against 4 pi (genus - 1). Passes when the relative
/// deviation at R = 50 is below 1e-2 and does not grow with R.
/// Throws DomainError if the profile stops short of r = 50.
VerificationReport flux_limit_check(const RadialProfile& profile, double comparison_mass,
                                    int genus);

/// |S| >= 4 pi r_{m0}^2 (genus - 1), one-sided tolerance 1e-9.
VerificationReport area_bound_check(double area, int genus, double comparison_mass);

/// |boundary at infinity| >= 4 pi (genus - 1); flags rigidity_case when the
/// margin is below 1e-9.
VerificationReport mono_check(double area_at_infinity, int genus);

/// sup over samples of W - W0(u); passes when sup <= tolerance. Reports the
/// sample index and grid coordinate of the sup.
VerificationReport gradient_comparison(const RadialProfile& profile, double comparison_mass,
                                       double tolerance = 1e-8);

/// |W - W0| at r = 20, 35, 50 must decrease toward -kappa_hat - 1 = 0 and be
/// below 0.05 at r = 50. Only kappa_hat = -1 is accepted.
VerificationReport asymptotic_w_difference(const RadialProfile& profile,
                                           double comparison_mass, double kappa_hat);

struct ExpansionFit {
  double leading = 0.0;     // a in u ~ a rho + b / rho
  double subleading = 0.0;  // b
  double remainder_norm = 0.0;  // RMS of the fit residual
  std::size_t samples = 0;
};

/// Least squares on the tail rho >= 20 with basis {rho, 1/rho, 1/rho^2,
/// 1/rho^3}; the last two absorb the mass term so that (a, b) are not biased
/// by it. Needs >= 8 tail samples and max rho >= 50, else DomainError.
ExpansionFit expansion_fit(const RadialProfile& profile);

/// m0 whose model shares the profile's horizon surface gravity (clamped to
/// the branch, k in [0, 1]).
double comparison_mass_for(const RadialProfile& profile);

/// Surface gravity of the profile's inner boundary: |grad u| at the first
/// sample for horizon-starting profiles, otherwise taken from the source.
double profile_surface_gravity(const RadialProfile& profile);

/// Radius of the profile's horizon (first sample for closed-form and
/// nondegenerate shots; the seed radius for degenerate shots).
double profile_horizon_radius(const RadialProfile& profile);

}  // namespace kottler
