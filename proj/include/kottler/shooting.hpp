#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kottler/models.hpp"
#include "kottler/profile.hpp"

namespace kottler {

/// Horizon data for the reduced ODE: u = 0, u' = k, rho = radius, rho' = 0.
struct HorizonSeed {
  Curvature kappa = Curvature::negative;
  double radius = 1.0;
  double surface_gravity = 1.0;
  int genus = 2;
};

/// kappa = -1 seed whose radius is the Kottler horizon of surface gravity k,
/// r = (k + sqrt(k^2 + 3))/3. Throws DomainError for k outside [0, 1].
HorizonSeed seed_from_surface_gravity(double k, int genus = 2);

/// Rejects seeds whose horizon series is not real (3 r^2 + kappa < 0),
/// nonpositive radii, negative k and degenerate seeds away from the critical
/// radius. Throws DomainError.
void validate_seed(const HorizonSeed& seed);

/// Reduced static system for g = ds^2 + rho(s)^2 g_kappa in arclength, from
/// u Ric = Hess u - 3u g:
///
///   u''   = 3u - 2 u' rho' / rho        (trace, Delta u = 3u)
///   rho'' = u' rho' / u                 (radial minus trace)
///   C     = u (kappa - rho'^2 + 3 rho^2) - 2 u' rho' rho = 0,
///
/// with R + 6 = 2C / (u rho^2). The state also carries lambda' = u, the
/// affine parameter along the normal null direction (lambda = rho - r_h on
/// Kottler).
struct ReducedState {
  double u = 0.0;
  double du = 0.0;
  double rho = 0.0;
  double drho = 0.0;
  double lambda = 0.0;
};

std::array<double, 5> reduced_rhs(Curvature kappa, const std::array<double, 5>& y);

/// Constraint C at a state.
double reduced_constraint(Curvature kappa, const ReducedState& y);

/// Residuals of the reduced system on a profile that supplies second
/// derivatives, e.g. a closed-form Kottler arclength profile.
struct ReducedResiduals {
  double trace = 0.0;       // max |u'' - (3u - 2u'rho'/rho)|
  double radial = 0.0;      // max |rho'' u - u' rho'|
  double constraint = 0.0;  // max |C|
  double max() const;
};
ReducedResiduals reduced_system_residuals(const RadialProfile& profile);

/// Horizon expansion u = k s + u3 s^3 + u5 s^5 + u7 s^7,
/// rho = r + p2 s^2 + p4 s^4 + p6 s^6, obtained by matching powers of s.
struct HorizonSeries {
  double k, u3, u5, u7;
  double r, p2, p4, p6;
  ReducedState at(double s) const;
};
HorizonSeries horizon_series(const HorizonSeed& seed);

struct ShotDiagnostics {
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t rhs_evaluations = 0;
  double max_constraint = 0.0;  // max |R + 6| over samples
  double mass_drift = 0.0;      // max - min of inferred mass over the final half
  bool mass_consistent = false; // mass_drift < 1e-6
  bool degenerate = false;
  double start_offset = 0.0;    // s0 (series start) or rho - r_h (degenerate start)
};

struct ShotResult {
  HorizonSeed seed;
  RadialProfile profile;              // arclength grid, second derivatives from the system
  std::vector<double> null_parameter; // lambda at each sample
  std::vector<double> inferred_mass;  // (kappa rho + rho^3 - u^2 rho)/2 at each sample
  double mass = 0.0;                  // at the last sample
  ShotDiagnostics diagnostics;
};

struct ShotOptions {
  double ds_out = 0.01;
  double series_offset = 1e-4;      // s0 for nondegenerate seeds
  double degenerate_offset = 1e-5;  // rho - r_h at the start of degenerate runs
  double constraint_limit = 1e-3;   // ConstraintBlowup above this |R + 6|
};

/// Integrates the reduced system from the seed to s_max with Dormand-Prince
/// 5(4), absolute and relative tolerance `tol` (>= 1e-12), sampling every
/// ds_out. Nondegenerate seeds start from the horizon series at s0. A
/// degenerate seed (k = 0) starts from the critical Kottler state at
/// rho = r_h + degenerate_offset, which becomes s = 0: the degenerate horizon
/// lies at infinite distance.
///
/// Throws DomainError for invalid seeds or tol, StepSizeUnderflow when the
/// controller collapses, ConstraintBlowup when |R + 6| exceeds the limit.
ShotResult integrate(const HorizonSeed& seed, double s_max, double tol,
                     const ShotOptions& options = {});

struct ConformalInfinity {
  double scale = 0.0;       // c = lim rho / u
  double kappa_hat = 0.0;   // kappa / c^2
};

/// Extrapolates rho/u = c + a/u^2 + b/u^3 from three tail samples
/// (u_N, ~u_N/1.5, ~u_N/2.25). Throws TailTooShort when max u < 50.
ConformalInfinity conformal_infinity(const ShotResult& result);

struct SliceLimit {
  double epsilon = 0.0;
  double rho = 0.0;
  double area = 0.0;       // 4 pi (genus - 1) rho^2
  double curvature = 0.0;  // kappa / rho^2
};

/// Slices {lambda = epsilon} of the null parameter. Throws DomainError when
/// an epsilon lies outside the sampled lambda range.
std::vector<SliceLimit> degenerate_slice_limit(const ShotResult& result,
                                               const std::vector<double>& epsilons);

}  // namespace kottler
