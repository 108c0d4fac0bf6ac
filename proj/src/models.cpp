#include "kottler/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kottler/errors.hpp"
#include "kottler/numerics/root_find.hpp"

namespace kottler {
namespace {

constexpr double kDegeneracyThreshold = 1e-8;

bool admissible(Curvature kappa, double mass) {
  if (!std::isfinite(mass)) return false;
  if (kappa == Curvature::negative) return mass >= critical_mass;
  return mass > 0.0;
}

[[noreturn]] void out_of_range(Curvature kappa, double mass) {
  std::ostringstream os;
  os.precision(17);
  os << "mass " << mass << " admits no horizon for kappa = " << sign(kappa);
  if (kappa == Curvature::negative) {
    os << "; admissible range is m >= -1/(3 sqrt 3) = " << critical_mass;
  } else {
    os << "; admissible range is m > 0";
  }
  throw MassOutOfRange(os.str());
}

}  // namespace

double horizon_radius(Curvature kappa, double mass) {
  if (!admissible(kappa, mass)) out_of_range(kappa, mass);
  if (kappa == Curvature::flat) return std::cbrt(2.0 * mass);
  if (kappa == Curvature::negative && mass == critical_mass) return critical_radius;

  const double k = sign(kappa);
  // For kappa = -1 the cubic is written about the critical double root, which
  // keeps its sign reliable for masses a few ulps above m_crit.
  auto cubic = [&](double x) -> std::pair<double, double> {
    if (kappa == Curvature::negative) {
      const double d = x - critical_radius;
      return {d * d * (x + 2.0 * critical_radius) - 2.0 * (mass - critical_mass),
              3.0 * d * (x + critical_radius)};
    }
    return {x * x * x + k * x - 2.0 * mass, 3.0 * x * x + k};
  };

  const double eps = 1e-300;
  double lo = eps;
  if (kappa == Curvature::negative) {
    // dF/dpsi < 0 beyond cbrt(-m); for m >= 0 the local minimum 1/sqrt 3 is used.
    lo = mass < 0.0 ? std::max(std::cbrt(-mass) * (1.0 + 1e-9), eps) : critical_radius;
  }
  const double hi = 2.0 + std::cbrt(std::abs(2.0 * mass));
  numerics::RootOptions<double> opt;
  opt.x_tolerance = 2.0 * std::numeric_limits<double>::epsilon();
  const double guess = kappa == Curvature::negative ? std::max(1.0, lo) : hi / 2;
  const auto res = numerics::safeguarded_newton(cubic, lo, hi, guess, opt);
  if (!res.converged) throw ConvergenceFailure("horizon_radius: root iteration exhausted");

  const double r = res.root;
  if (kappa == Curvature::negative &&
      std::abs(3.0 * r * r + k) < kDegeneracyThreshold) {
    return critical_radius;
  }
  return r;
}

double surface_gravity(Curvature kappa, double mass) {
  const double r = horizon_radius(kappa, mass);
  if (kappa == Curvature::negative) {
    if (r == critical_radius) return 0.0;
    return 3.0 * (r - critical_radius) * (r + critical_radius) / (2.0 * r);
  }
  return (3.0 * r * r + sign(kappa)) / (2.0 * r);
}

double mass_from_surface_gravity(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("mass_from_surface_gravity: k must lie in [0, 1]");
  }
  if (k == 0.0) return critical_mass;
  if (k == 1.0) return 0.0;
  const double r = (k + std::sqrt(k * k + 3.0)) / 3.0;
  return r * (r - 1.0) * (r + 1.0) / 2.0;
}

double model_horizon_area(double mass, int genus) {
  if (genus < 2) throw DomainError("model_horizon_area: genus must be >= 2");
  const double r = horizon_radius(Curvature::negative, mass);
  return 4.0 * std::numbers::pi * r * r * static_cast<double>(genus - 1);
}

KottlerModel::KottlerModel(Curvature kappa, double mass, int genus)
    : kappa_(kappa), mass_(mass), genus_(genus) {
  const int expected_genus = kappa == Curvature::positive ? 0 : 1;
  if (kappa == Curvature::negative ? genus < 2 : genus != expected_genus) {
    throw DomainError("KottlerModel: genus " + std::to_string(genus) +
                      " incompatible with kappa = " + std::to_string(sign(kappa)));
  }
  horizon_.radius = horizon_radius(kappa, mass);
  horizon_.surface_gravity = surface_gravity(kappa, mass);
  horizon_.degenerate = horizon_.surface_gravity == 0.0;
  horizon_.area = slice_area(horizon_.radius);
}

void KottlerModel::require_exterior(double r) const {
  if (!(r >= horizon_.radius)) {
    std::ostringstream os;
    os.precision(17);
    os << "radius " << r << " lies inside the horizon r_m = " << horizon_.radius;
    throw DomainError(os.str());
  }
}

// With p(r) = r^3 + kappa r - 2m and p(r_m) = 0,
//   p(r) = (r - r_m) [ 2 r_m k + (r - r_m)(r + 2 r_m) ],
// where k is the surface gravity. f = p / r.
double KottlerModel::metric_coefficient(double r) const {
  require_exterior(r);
  const double rm = horizon_.radius;
  const double d = r - rm;
  return d * (2.0 * rm * horizon_.surface_gravity + d * (r + 2.0 * rm)) / r;
}

double KottlerModel::metric_slope(double r) const { return 2.0 * gradient_norm(r); }

double KottlerModel::potential(double r) const { return std::sqrt(metric_coefficient(r)); }

// r^3 + m = (r - r_m)(r^2 + r r_m + r_m^2) + r_m^2 k.
double KottlerModel::gradient_norm(double r) const {
  require_exterior(r);
  const double rm = horizon_.radius;
  const double d = r - rm;
  return (d * (r * r + r * rm + rm * rm) + rm * rm * horizon_.surface_gravity) / (r * r);
}

double KottlerModel::gradient_norm_sq(double r) const {
  const double g = gradient_norm(r);
  return g * g;
}

double KottlerModel::potential_curvature(double r) const {
  return potential(r) * (1.0 - 2.0 * mass_ / (r * r * r));
}

std::optional<double> KottlerModel::slice_area(double r) const {
  switch (kappa_) {
    case Curvature::negative:
      return 4.0 * std::numbers::pi * r * r * static_cast<double>(genus_ - 1);
    case Curvature::positive:
      return 4.0 * std::numbers::pi * r * r;
    case Curvature::flat:
      return std::nullopt;
  }
  return std::nullopt;
}

double metric_coefficient(const KottlerModel& model, double r) {
  return model.metric_coefficient(r);
}

double gradient_norm_sq(double mass, double r) {
  return KottlerModel::hyperbolic(mass).gradient_norm_sq(r);
}

}  // namespace kottler
