#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kottler/profile.hpp"
#include "kottler/pseudoradial.hpp"

namespace kottler {

/// How second arclength derivatives are obtained.
enum class DerivativeMode {
  /// Use ddu/ddrho when the profile carries them, else finite differences.
  supplied_if_available,
  /// Always 5-point finite differences of the first-derivative samples.
  finite_difference,
};

/// Values on a subset of a profile's samples. Finite differences drop the
/// first and last two samples.
struct SampledField {
  std::vector<std::size_t> index;
  std::vector<double> value;
};

/// R = -4 rho''/rho - 2 (rho'^2 - kappa)/rho^2 at each usable sample.
SampledField scalar_curvature(const RadialProfile& profile,
                              DerivativeMode mode = DerivativeMode::supplied_if_available);

/// Pointwise residuals of u Ric = Hess u - 3 u g and Delta u = 3u.
struct StaticResidualSamples {
  std::vector<std::size_t> index;
  std::vector<double> radial;      // (u Ric - Hess u + 3u g)(n, n)
  std::vector<double> tangential;  // same, one unit tangent vector
  std::vector<double> trace;       // Delta u - 3u
};

StaticResidualSamples static_residual_samples(
    const RadialProfile& profile, DerivativeMode mode = DerivativeMode::supplied_if_available);

struct StaticResiduals {
  double tensor = 0.0;  // sup over samples and both frame components
  double trace = 0.0;
};

StaticResiduals static_residuals(const RadialProfile& profile,
                                 DerivativeMode mode = DerivativeMode::supplied_if_available);

/// Second fundamental form data of the level set through sample `index`,
/// with respect to the normal grad u / |grad u|.
struct LevelSetGeometry {
  double h_tangential = 0.0;
  double mean_curvature = 0.0;
  double traceless_norm_sq = 0.0;
};

/// Builds the tangential Hessian block, divides by |grad u| and takes the
/// mean curvature from H = (Delta u - Hess u(n, n))/|grad u| with Delta u = 3u,
/// so |h0|^2 is an honest test of the warped structure rather than zero by
/// construction. Throws CriticalPoint when |grad u| < 1e-14.
LevelSetGeometry level_set_geometry(const RadialProfile& profile, std::size_t index);

/// W = |grad u|^2 as a function of u with its first two u-derivatives.
struct WFunction {
  enum class Provenance { analytic, finite_difference };
  std::vector<double> u;
  std::vector<double> w;
  std::vector<double> dw;
  std::vector<double> ddw;
  Provenance provenance = Provenance::analytic;
};

/// W0 of the comparison model on `u_grid`; analytic derivatives follow the
/// chain rule through dpsi/du, finite-difference ones need a uniform grid.
WFunction model_w_function(const PseudoRadialMap& map, std::span<const double> u_grid,
                           WFunction::Provenance provenance);

/// W of a sampled profile re-parametrized by u (monotone cubic in u), on a
/// uniform u grid, derivatives by finite differences.
WFunction profile_w_function(const RadialProfile& profile, std::span<const double> u_grid);

/// Delta W - [ W'^2/2 + (3u - W'/2)^2 + W W'/u ] with Delta W = W W'' + 3u W',
/// i.e. the Bochner identity for a warped static solution (|h0| = 0).
/// Throws DomainError if any u <= 0.
std::vector<double> bochner_residual(const WFunction& w);

/// |h0|^2 as the function of (u, W, W', W'') implied by the Bochner identity:
///   W''/2 + 3u W'/(2W) - W'^2/(4W) - (3u - W'/2)^2/(2W) - W'/(2u).
double traceless_identity_rhs(double u, double w, double dw, double ddw);
/// Same, at sample i of a W function.
double traceless_identity_rhs(const WFunction& w, std::size_t i);

}  // namespace kottler
