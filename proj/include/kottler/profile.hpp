#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kottler/models.hpp"

namespace kottler {

/// What the profile's grid parametrizes.
enum class CoordinateKind { area_radius, arclength };

/// Where the profile's samples came from.
struct ProfileSource {
  enum class Kind { closed_form, ode };
  Kind kind = Kind::closed_form;
  double mass = 0.0;              // closed_form: the model mass
  double horizon_radius = 0.0;    // ode: seed radius
  double surface_gravity = 0.0;   // ode: seed surface gravity
};

/// Sampled warped-product static data g = ds^2 + rho(s)^2 g_kappa with lapse u.
///
/// `du` and `drho` are always arclength derivatives (normal derivatives of
/// the level sets), whatever the grid parametrizes: on an area-radius grid
/// rho = r and drho = |grad r| = sqrt(g^rr). `ddu`/`ddrho` are the second
/// arclength derivatives when the producer can supply them, empty otherwise.
struct RadialProfile {
  CoordinateKind coordinate = CoordinateKind::area_radius;
  std::vector<double> grid;
  std::vector<double> u;
  std::vector<double> rho;
  std::vector<double> du;
  std::vector<double> drho;
  std::vector<double> ddu;
  std::vector<double> ddrho;
  Curvature kappa = Curvature::negative;
  int genus = 2;
  ProfileSource source;

  std::size_t size() const { return grid.size(); }
  bool has_second_derivatives() const { return !ddu.empty() && !ddrho.empty(); }
  bool starts_at_horizon() const { return !u.empty() && u.front() == 0.0; }

  /// Throws DomainError/GridTooCoarse if the invariants do not hold.
  void validate() const;
};

/// Local state at one point of a profile.
struct RadialState {
  double rho = 0.0;
  double u = 0.0;
  double du = 0.0;
  double drho = 0.0;
};

/// Closed-form sample of a Kottler model on a uniform area-radius grid.
RadialProfile kottler_area_profile(const KottlerModel& model, double r_lo, double r_hi,
                                   std::size_t points);

/// Closed-form sample on a uniform arclength grid, s measured from the
/// horizon. Not available for degenerate models (the horizon is at infinite
/// distance).
RadialProfile kottler_arclength_profile(const KottlerModel& model, double s_lo, double s_hi,
                                        std::size_t points);

/// Proper distance from the horizon to radius r.
double kottler_arclength(const KottlerModel& model, double r);
/// Inverse of kottler_arclength.
double kottler_radius_at_arclength(const KottlerModel& model, double s);

/// Exact Kottler state at area radius r.
RadialState kottler_state(const KottlerModel& model, double r);

/// State at area radius r: exact for closed-form sources, cubic Hermite
/// interpolation in the grid coordinate otherwise.
RadialState sample_at_radius(const RadialProfile& profile, double r);

/// Arclength at which an arclength profile reaches area radius r.
double arclength_at_radius(const RadialProfile& profile, double r);

/// State at arclength s of an arclength profile, cubic Hermite in s.
RadialState sample_at_arclength(const RadialProfile& profile, double s);

/// Model reconstructed from a closed-form profile's source.
std::optional<KottlerModel> source_model(const RadialProfile& profile);

}  // namespace kottler
