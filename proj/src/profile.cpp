#include "kottler/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "kottler/errors.hpp"
#include "kottler/numerics/interpolation.hpp"
#include "kottler/numerics/quadrature.hpp"
#include "kottler/numerics/root_find.hpp"

namespace kottler {
namespace {

constexpr std::size_t kMinimumSamples = 16;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> x(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo + h * static_cast<double>(i);
  x.back() = hi;
  return x;
}

void fill_from_radii(const KottlerModel& model, RadialProfile& p, const std::vector<double>& r) {
  const std::size_t n = r.size();
  p.u.resize(n);
  p.rho.resize(n);
  p.du.resize(n);
  p.drho.resize(n);
  p.ddu.resize(n);
  p.ddrho.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ri = std::max(r[i], model.horizon().radius);
    const double u = model.potential(ri);
    p.rho[i] = ri;
    p.u[i] = u;
    p.drho[i] = u;  // |grad r| = sqrt f = u on Kottler
    p.du[i] = model.gradient_norm(ri);
    p.ddrho[i] = model.gradient_norm(ri);  // f'/2
    p.ddu[i] = model.potential_curvature(ri);
  }
  p.kappa = model.kappa();
  p.genus = model.genus();
  p.source = {ProfileSource::Kind::closed_form, model.mass(), model.horizon().radius,
              model.horizon().surface_gravity};
}

// With r = r_m + t^2 the arclength element is ds = 2 dt / sqrt(q(t)),
// q(t) = (2 r_m k + t^2 (r + 2 r_m)) / r, which is smooth and positive when k > 0.
double arclength_integrand(const KottlerModel& model, double t) {
  const double rm = model.horizon().radius;
  const double r = rm + t * t;
  const double q = (2.0 * rm * model.horizon().surface_gravity + t * t * (r + 2.0 * rm)) / r;
  return 2.0 / std::sqrt(q);
}

// s(t) from the horizon; beyond t = 1 the integral runs in x = ln t, where the
// integrand tends to the constant 2.
double arclength_of_t(const KottlerModel& model, double t) {
  auto in_t = [&](double x) { return arclength_integrand(model, x); };
  if (t <= 1.0) return numerics::adaptive_gauss_legendre(in_t, 0.0, t, 1e-15);
  const double inner = numerics::adaptive_gauss_legendre(in_t, 0.0, 1.0, 1e-15);
  auto in_log = [&](double x) {
    const double e = std::exp(x);
    return arclength_integrand(model, e) * e;
  };
  return inner + numerics::adaptive_gauss_legendre(in_log, 0.0, std::log(t), 1e-15);
}

void require_nondegenerate(const KottlerModel& model) {
  if (model.horizon().degenerate) {
    throw DomainError("arclength from a degenerate horizon is unbounded");
  }
}

}  // namespace

void RadialProfile::validate() const {
  const std::size_t n = grid.size();
  if (n < kMinimumSamples) {
    throw GridTooCoarse("RadialProfile: need at least 16 samples, have " + std::to_string(n));
  }
  if (u.size() != n || rho.size() != n || du.size() != n || drho.size() != n) {
    throw DomainError("RadialProfile: sample arrays differ in length");
  }
  if ((!ddu.empty() && ddu.size() != n) || (!ddrho.empty() && ddrho.size() != n)) {
    throw DomainError("RadialProfile: second-derivative arrays differ in length");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("RadialProfile: grid not increasing");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(u[i] >= 0.0)) throw DomainError("RadialProfile: negative potential");
    if (i > 0 && u[i] == 0.0) throw DomainError("RadialProfile: u vanishes off the first sample");
  }
  if (source.kind == ProfileSource::Kind::closed_form) {
    const double k = sign(kappa);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = rho[i];
      const double f = k + r * r - 2.0 * source.mass / r;
      if (std::abs(u[i] * u[i] - f) > 1e-12 * std::max(1.0, r * r)) {
        throw DomainError("RadialProfile: closed-form samples do not satisfy u^2 = f(r)");
      }
    }
  }
}

RadialProfile kottler_area_profile(const KottlerModel& model, double r_lo, double r_hi,
                                   std::size_t points) {
  if (points < kMinimumSamples) throw GridTooCoarse("kottler_area_profile: too few points");
  if (!(r_lo >= model.horizon().radius) || !(r_hi > r_lo)) {
    throw DomainError("kottler_area_profile: need r_m <= r_lo < r_hi");
  }
  RadialProfile p;
  p.coordinate = CoordinateKind::area_radius;
  p.grid = linspace(r_lo, r_hi, points);
  fill_from_radii(model, p, p.grid);
  return p;
}

RadialProfile kottler_arclength_profile(const KottlerModel& model, double s_lo, double s_hi,
                                        std::size_t points) {
  require_nondegenerate(model);
  if (points < kMinimumSamples) throw GridTooCoarse("kottler_arclength_profile: too few points");
  if (!(s_lo >= 0.0) || !(s_hi > s_lo)) {
    throw DomainError("kottler_arclength_profile: need 0 <= s_lo < s_hi");
  }
  RadialProfile p;
  p.coordinate = CoordinateKind::arclength;
  p.grid = linspace(s_lo, s_hi, points);
  std::vector<double> r(points);
  for (std::size_t i = 0; i < points; ++i) r[i] = kottler_radius_at_arclength(model, p.grid[i]);
  fill_from_radii(model, p, r);
  return p;
}

double kottler_arclength(const KottlerModel& model, double r) {
  require_nondegenerate(model);
  const double rm = model.horizon().radius;
  if (!(r >= rm)) throw DomainError("kottler_arclength: radius inside horizon");
  return arclength_of_t(model, std::sqrt(r - rm));
}

double kottler_radius_at_arclength(const KottlerModel& model, double s) {
  require_nondegenerate(model);
  if (!(s >= 0.0)) throw DomainError("kottler_radius_at_arclength: s must be >= 0");
  const double rm = model.horizon().radius;
  if (s == 0.0) return rm;
  auto arclength_t = [&](double t) { return arclength_of_t(model, t); };
  // Bracket in t = sqrt(r - r_m); s(t) is increasing.
  double t_hi = 1.0;
  while (arclength_t(t_hi) < s) t_hi *= 2.0;
  auto eval = [&](double t) -> std::pair<double, double> {
    return {arclength_t(t) - s, arclength_integrand(model, t)};
  };
  numerics::RootOptions<double> opt;
  opt.x_tolerance = 4e-16;
  const auto res = numerics::safeguarded_newton(eval, 0.0, t_hi, t_hi / 2, opt);
  if (!res.converged) throw ConvergenceFailure("kottler_radius_at_arclength: no convergence");
  return rm + res.root * res.root;
}

RadialState kottler_state(const KottlerModel& model, double r) {
  const double u = model.potential(r);
  return {r, u, model.gradient_norm(r), u};
}

std::optional<KottlerModel> source_model(const RadialProfile& profile) {
  if (profile.source.kind != ProfileSource::Kind::closed_form) return std::nullopt;
  return KottlerModel(profile.kappa, profile.source.mass, profile.genus);
}

RadialState sample_at_radius(const RadialProfile& profile, double r) {
  if (auto model = source_model(profile)) return kottler_state(*model, r);

  if (!(r >= profile.rho.front() && r <= profile.rho.back())) {
    std::ostringstream os;
    os << "sample_at_radius: r = " << r << " outside profile range [" << profile.rho.front()
       << ", " << profile.rho.back() << "]";
    throw DomainError(os.str());
  }
  if (profile.coordinate == CoordinateKind::area_radius) {
    const std::size_t i = numerics::bracket_index(profile.grid, r);
    const double x0 = profile.grid[i];
    const double x1 = profile.grid[i + 1];
    // d/dr = (1/drho) d/ds on an area-radius grid.
    auto slope = [&](const std::vector<double>& d, std::size_t j) { return d[j] / profile.drho[j]; };
    RadialState st;
    st.rho = r;
    st.u = numerics::hermite(r, x0, x1, profile.u[i], profile.u[i + 1], slope(profile.du, i),
                             slope(profile.du, i + 1));
    const double t = (r - x0) / (x1 - x0);
    st.du = (1 - t) * profile.du[i] + t * profile.du[i + 1];
    st.drho = (1 - t) * profile.drho[i] + t * profile.drho[i + 1];
    return st;
  }

  return sample_at_arclength(profile, arclength_at_radius(profile, r));
}

double arclength_at_radius(const RadialProfile& profile, double r) {
  if (profile.coordinate != CoordinateKind::arclength) {
    throw DomainError("arclength_at_radius: profile is not on an arclength grid");
  }
  const std::size_t n = profile.size();
  if (!(r >= profile.rho.front() && r <= profile.rho.back())) {
    throw DomainError("arclength_at_radius: r outside profile range");
  }
  // Invert the rho-Hermite interpolant on the bracketing interval.
  std::size_t i = static_cast<std::size_t>(
      std::upper_bound(profile.rho.begin(), profile.rho.end(), r) - profile.rho.begin());
  i = std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, n - 2);
  const double s0 = profile.grid[i];
  const double s1 = profile.grid[i + 1];
  if (r == profile.rho[i]) return s0;
  if (r == profile.rho[i + 1]) return s1;
  auto eval = [&](double s) -> std::pair<double, double> {
    return {numerics::hermite(s, s0, s1, profile.rho[i], profile.rho[i + 1], profile.drho[i],
                              profile.drho[i + 1]) -
                r,
            numerics::hermite_derivative(s, s0, s1, profile.rho[i], profile.rho[i + 1],
                                         profile.drho[i], profile.drho[i + 1])};
  };
  return numerics::safeguarded_newton(eval, s0, s1, 0.5 * (s0 + s1),
                                      numerics::RootOptions<double>{})
      .root;
}

RadialState sample_at_arclength(const RadialProfile& profile, double s) {
  if (profile.coordinate != CoordinateKind::arclength) {
    throw DomainError("sample_at_arclength: profile is not on an arclength grid");
  }
  if (!(s >= profile.grid.front() && s <= profile.grid.back())) {
    throw DomainError("sample_at_arclength: s outside profile range");
  }
  const std::size_t i = numerics::bracket_index(profile.grid, s);
  const double s0 = profile.grid[i];
  const double s1 = profile.grid[i + 1];
  auto cubic = [&](const std::vector<double>& y, const std::vector<double>& dy) {
    return numerics::hermite(s, s0, s1, y[i], y[i + 1], dy[i], dy[i + 1]);
  };
  RadialState st;
  st.rho = cubic(profile.rho, profile.drho);
  st.u = cubic(profile.u, profile.du);
  if (profile.has_second_derivatives()) {
    st.du = cubic(profile.du, profile.ddu);
    st.drho = cubic(profile.drho, profile.ddrho);
  } else {
    const double t = (s - s0) / (s1 - s0);
    st.du = (1 - t) * profile.du[i] + t * profile.du[i + 1];
    st.drho = (1 - t) * profile.drho[i] + t * profile.drho[i + 1];
  }
  return st;
}

}  // namespace kottler
