#pragma once

#include <optional>

namespace kottler {

/// Sectional curvature of the horizon cross-section.
enum class Curvature : int { negative = -1, flat = 0, positive = 1 };

constexpr int sign(Curvature kappa) { return static_cast<int>(kappa); }

/// Mass at which the kappa = -1 horizon cubic has a double root, -1/(3 sqrt 3).
inline constexpr double critical_mass = -0.19245008972987525484;
/// Radius of the degenerate horizon, 1/sqrt 3.
inline constexpr double critical_radius = 0.57735026918962576451;

struct HorizonData {
  double radius = 0.0;
  double surface_gravity = 0.0;
  bool degenerate = false;
  /// 4 pi r^2 (genus - 1) for kappa = -1; unset for flat cross-sections,
  /// whose torus volume is a free normalization.
  std::optional<double> area;
};

/// Largest positive root of kappa x + x^3 - 2m = 0.
/// Throws MassOutOfRange when no positive root exists.
double horizon_radius(Curvature kappa, double mass);

/// k = (r^3 + m)/r^2 at the horizon, evaluated as (3r^2 + kappa)/(2r).
double surface_gravity(Curvature kappa, double mass);

/// Inverse of surface_gravity(negative, .) on the branch m in [m_crit, 0].
double mass_from_surface_gravity(double k);

/// 4 pi r_m^2 (genus - 1), kappa = -1.
double model_horizon_area(double mass, int genus);

/// Closed-form Kottler solution with Lambda = -3:
///   g = dr^2 / f(r) + r^2 g_kappa,  u = sqrt(f),  f = kappa + r^2 - 2m/r.
class KottlerModel {
 public:
  KottlerModel(Curvature kappa, double mass, int genus);

  /// kappa = -1 convenience constructor.
  static KottlerModel hyperbolic(double mass, int genus = 2) {
    return {Curvature::negative, mass, genus};
  }

  Curvature kappa() const { return kappa_; }
  double mass() const { return mass_; }
  int genus() const { return genus_; }
  const HorizonData& horizon() const { return horizon_; }

  /// f(r), evaluated in horizon-factored form so it is accurate near r_m.
  double metric_coefficient(double r) const;
  /// df/dr.
  double metric_slope(double r) const;
  /// u(r) = sqrt f(r).
  double potential(double r) const;
  /// |grad u| = (r^3 + m)/r^2, again factored about r_m.
  double gradient_norm(double r) const;
  /// W(r) = |grad u|^2.
  double gradient_norm_sq(double r) const;
  /// Second arclength derivative of u, u (1 - 2m/r^3).
  double potential_curvature(double r) const;

  /// Cross-section area at radius r, when defined.
  std::optional<double> slice_area(double r) const;

 private:
  void require_exterior(double r) const;

  Curvature kappa_;
  double mass_;
  int genus_;
  HorizonData horizon_;
};

/// Free-function forms of the model evaluators.
double metric_coefficient(const KottlerModel& model, double r);
/// ((r^3 + m)/r^2)^2; the domain r >= r_m is taken from the kappa = -1 model.
double gradient_norm_sq(double mass, double r);

}  // namespace kottler
