#include "kottler/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kottler/errors.hpp"
#include "kottler/numerics/dormand_prince.hpp"
#include "kottler/numerics/interpolation.hpp"

namespace kottler {
namespace {

using Vec = std::array<double, 5>;

Vec pack(const ReducedState& s) { return {s.u, s.du, s.rho, s.drho, s.lambda}; }
ReducedState unpack(const Vec& y) { return {y[0], y[1], y[2], y[3], y[4]}; }

double inferred_mass(Curvature kappa, const ReducedState& s) {
  const double k = sign(kappa);
  return 0.5 * (k * s.rho + s.rho * s.rho * s.rho - s.u * s.u * s.rho);
}

// R + 6 using rho'' from the system (or the supplied value at the horizon).
double curvature_defect(Curvature kappa, const ReducedState& s, double ddrho) {
  const double k = sign(kappa);
  return -4.0 * ddrho / s.rho - 2.0 * (s.drho * s.drho - k) / (s.rho * s.rho) + 6.0;
}

}  // namespace

HorizonSeed seed_from_surface_gravity(double k, int genus) {
  if (!(k >= 0.0 && k <= 1.0)) {
    std::ostringstream os;
    os << "surface gravity " << k << " outside [0, 1]";
    throw DomainError(os.str());
  }
  HorizonSeed seed;
  seed.kappa = Curvature::negative;
  seed.surface_gravity = k;
  seed.genus = genus;
  seed.radius = (k == 0.0) ? critical_radius : (k + std::sqrt(k * k + 3.0)) / 3.0;
  return seed;
}

void validate_seed(const HorizonSeed& seed) {
  if (!(seed.radius > 0.0) || !std::isfinite(seed.radius)) {
    throw DomainError("seed radius must be positive");
  }
  if (!(seed.surface_gravity >= 0.0) || !std::isfinite(seed.surface_gravity)) {
    throw DomainError("seed surface gravity must be nonnegative");
  }
  const double k = sign(seed.kappa);
  if (3.0 * seed.radius * seed.radius + k < -1e-12) {
    throw DomainError("seed has no real horizon series (3 r^2 + kappa < 0)");
  }
  if (seed.surface_gravity == 0.0) {
    if (seed.kappa != Curvature::negative ||
        std::abs(seed.radius - critical_radius) > 1e-12 * critical_radius) {
      throw DomainError("a degenerate seed needs kappa = -1 and radius 1/sqrt 3");
    }
  }
  if (seed.kappa == Curvature::negative && seed.genus < 2) {
    throw DomainError("kappa = -1 seeds need genus >= 2");
  }
}

Vec reduced_rhs(Curvature kappa, const Vec& y) {
  (void)kappa;
  const double u = y[0], du = y[1], rho = y[2], drho = y[3];
  return {du, 3.0 * u - 2.0 * du * drho / rho, drho, du * drho / u, u};
}

double reduced_constraint(Curvature kappa, const ReducedState& y) {
  const double k = sign(kappa);
  return y.u * (k - y.drho * y.drho + 3.0 * y.rho * y.rho) - 2.0 * y.du * y.drho * y.rho;
}

double ReducedResiduals::max() const { return std::max({trace, radial, constraint}); }

ReducedResiduals reduced_system_residuals(const RadialProfile& p) {
  if (!p.has_second_derivatives()) {
    throw DomainError("reduced_system_residuals: profile must supply second derivatives");
  }
  if (p.coordinate != CoordinateKind::arclength) {
    throw DomainError("reduced_system_residuals: profile must be on an arclength grid");
  }
  ReducedResiduals out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ReducedState s{p.u[i], p.du[i], p.rho[i], p.drho[i], 0.0};
    out.trace = std::max(out.trace, std::abs(p.ddu[i] - (3.0 * s.u - 2.0 * s.du * s.drho / s.rho)));
    out.radial = std::max(out.radial, std::abs(p.ddrho[i] * s.u - s.du * s.drho));
    out.constraint = std::max(out.constraint, std::abs(reduced_constraint(p.kappa, s)));
  }
  return out;
}

HorizonSeries horizon_series(const HorizonSeed& seed) {
  const double k = seed.surface_gravity;
  const double c = sign(seed.kappa);
  const double r = seed.radius;
  const double r2 = r * r;
  const double q = c + 3.0 * r2;
  const double quad = 11.0 * c * c + 36.0 * c * r2 + 27.0 * r2 * r2;
  HorizonSeries s;
  s.k = k;
  s.r = r;
  s.p2 = q / (4.0 * r);
  s.p4 = -c * q / (48.0 * r2 * r);
  s.p6 = q * quad / (2880.0 * r2 * r2 * r);
  s.u3 = -k * c / (6.0 * r2);
  s.u5 = k * quad / (240.0 * r2 * r2);
  s.u7 = -k * (73.0 * c * c * c + 423.0 * c * c * r2 + 756.0 * c * r2 * r2 + 405.0 * r2 * r2 * r2) /
         (5040.0 * r2 * r2 * r2);
  return s;
}

ReducedState HorizonSeries::at(double s) const {
  const double s2 = s * s;
  ReducedState st;
  st.u = s * (k + s2 * (u3 + s2 * (u5 + s2 * u7)));
  st.du = k + s2 * (3.0 * u3 + s2 * (5.0 * u5 + s2 * 7.0 * u7));
  st.rho = r + s2 * (p2 + s2 * (p4 + s2 * p6));
  st.drho = s * (2.0 * p2 + s2 * (4.0 * p4 + s2 * 6.0 * p6));
  // lambda = int u ds.
  st.lambda = s2 * (k / 2.0 + s2 * (u3 / 4.0 + s2 * (u5 / 6.0 + s2 * u7 / 8.0)));
  return st;
}

ShotResult integrate(const HorizonSeed& seed, double s_max, double tol, const ShotOptions& opt) {
  validate_seed(seed);
  if (!(tol >= 1e-12)) throw DomainError("integrate: tol must be >= 1e-12");
  if (!(opt.ds_out > 0.0) || !(s_max >= 15 * opt.ds_out)) {
    throw DomainError("integrate: s_max must cover at least 16 output samples");
  }
  if (s_max / opt.ds_out > 1e7) throw DomainError("integrate: more than 1e7 output samples requested");
  const bool degenerate = seed.surface_gravity == 0.0;
  const Curvature kappa = seed.kappa;

  ShotResult result;
  result.seed = seed;
  RadialProfile& p = result.profile;
  p.coordinate = CoordinateKind::arclength;
  p.kappa = kappa;
  p.genus = seed.genus;
  p.source.kind = ProfileSource::Kind::ode;
  p.source.horizon_radius = seed.radius;
  p.source.surface_gravity = seed.surface_gravity;

  auto record = [&](double s, const ReducedState& st, double ddu, double ddrho) {
    p.grid.push_back(s);
    p.u.push_back(st.u);
    p.du.push_back(st.du);
    p.rho.push_back(st.rho);
    p.drho.push_back(st.drho);
    p.ddu.push_back(ddu);
    p.ddrho.push_back(ddrho);
    result.null_parameter.push_back(st.lambda);
    result.inferred_mass.push_back(inferred_mass(kappa, st));
    const double defect = std::abs(curvature_defect(kappa, st, ddrho));
    result.diagnostics.max_constraint = std::max(result.diagnostics.max_constraint, defect);
    if (!(defect <= opt.constraint_limit)) {
      std::ostringstream os;
      os << "integrate: |R + 6| = " << defect << " at s = " << s;
      throw ConstraintBlowup(os.str());
    }
  };
  auto record_state = [&](double s, const Vec& y) {
    const Vec d = reduced_rhs(kappa, y);
    record(s, unpack(y), d[1], d[3]);
  };

  double s = 0.0;
  Vec y{};
  if (degenerate) {
    // Critical Kottler: f = (r - r0)^2 (r + 2 r0)/r, rho' = u = sqrt f, and
    // u' = (r^3 + m)/r^2 with r0^3 + m = 0 expanded about r0.
    const double r0 = seed.radius;
    const double d = opt.degenerate_offset;
    const double r = r0 + d;
    const double u = d * std::sqrt((r + 2.0 * r0) / r);
    const double du = d * (3.0 * r0 * r0 + 3.0 * r0 * d + d * d) / (r * r);
    y = {u, du, r, u, d};
    result.diagnostics.start_offset = d;
    record_state(0.0, y);
  } else {
    const HorizonSeries series = horizon_series(seed);
    record(0.0, series.at(0.0), 0.0, 2.0 * series.p2);
    s = opt.series_offset;
    y = pack(series.at(s));
    result.diagnostics.start_offset = s;
  }
  result.diagnostics.degenerate = degenerate;

  numerics::StepControl control;
  control.abs_tol = tol;
  control.rel_tol = tol;
  numerics::DormandPrince<5> solver(control);
  auto rhs = [kappa](double, const Vec& state) { return reduced_rhs(kappa, state); };

  const auto samples = static_cast<std::size_t>(std::llround(s_max / opt.ds_out));
  double h = 0.0;
  for (std::size_t i = 1; i <= samples; ++i) {
    const double target = (i == samples) ? s_max : static_cast<double>(i) * opt.ds_out;
    const auto status = solver.advance(rhs, s, y, target, h);
    if (status == numerics::AdvanceStatus::step_underflow) {
      std::ostringstream os;
      os << "integrate: step size underflow near s = " << s;
      throw StepSizeUnderflow(os.str());
    }
    if (status == numerics::AdvanceStatus::step_budget) {
      throw ConvergenceFailure("integrate: step budget exhausted");
    }
    if (!std::isfinite(y[0]) || !std::isfinite(y[2]) || !(y[0] > 0.0)) {
      std::ostringstream os;
      os << "integrate: state left the domain near s = " << s;
      throw StepSizeUnderflow(os.str());
    }
    record_state(target, y);
  }

  const auto& st = solver.statistics();
  result.diagnostics.accepted_steps = st.accepted;
  result.diagnostics.rejected_steps = st.rejected;
  result.diagnostics.rhs_evaluations = st.evaluations;
  const std::size_t half = p.size() / 2;
  const auto [lo, hi] =
      std::minmax_element(result.inferred_mass.begin() + static_cast<std::ptrdiff_t>(half),
                          result.inferred_mass.end());
  result.diagnostics.mass_drift = *hi - *lo;
  result.diagnostics.mass_consistent = result.diagnostics.mass_drift < 1e-6;
  result.mass = result.inferred_mass.back();
  return result;
}

ConformalInfinity conformal_infinity(const ShotResult& result) {
  const auto& p = result.profile;
  const double u_max = p.u.back();
  if (!(u_max >= 50.0)) {
    std::ostringstream os;
    os << "conformal_infinity: profile reaches u = " << u_max << ", need u >= 50";
    throw TailTooShort(os.str());
  }
  // Three samples with u roughly in geometric ratio 1.5.
  std::array<std::size_t, 3> idx{p.size() - 1, 0, 0};
  for (int j = 1; j < 3; ++j) {
    const double target = u_max / std::pow(1.5, j);
    const auto it = std::lower_bound(p.u.begin(), p.u.end(), target);
    idx[static_cast<std::size_t>(j)] = static_cast<std::size_t>(it - p.u.begin());
  }
  // Solve rho/u = c + a x^2 + b x^3 with x = 1/u (3x3 Vandermonde-type).
  double m[3][4];
  for (int j = 0; j < 3; ++j) {
    const std::size_t i = idx[static_cast<std::size_t>(j)];
    const double x = 1.0 / p.u[i];
    m[j][0] = 1.0;
    m[j][1] = x * x;
    m[j][2] = x * x * x;
    m[j][3] = p.rho[i] / p.u[i];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  ConformalInfinity out;
  out.scale = m[0][3] / m[0][0];
  out.kappa_hat = sign(p.kappa) / (out.scale * out.scale);
  return out;
}

std::vector<SliceLimit> degenerate_slice_limit(const ShotResult& result,
                                               const std::vector<double>& epsilons) {
  const auto& p = result.profile;
  const auto& lam = result.null_parameter;
  std::vector<SliceLimit> out;
  for (double eps : epsilons) {
    if (!(eps >= lam.front() && eps <= lam.back())) {
      std::ostringstream os;
      os << "degenerate_slice_limit: epsilon = " << eps << " outside sampled range ["
         << lam.front() << ", " << lam.back() << "]";
      throw DomainError(os.str());
    }
    // lambda' = u, so invert the lambda-Hermite interpolant in s, then read rho.
    const std::size_t i = numerics::bracket_index(lam, eps);
    const double s0 = p.grid[i];
    const double s1 = p.grid[i + 1];
    auto lam_at = [&](double s) {
      return numerics::hermite(s, s0, s1, lam[i], lam[i + 1], p.u[i], p.u[i + 1]);
    };
    double a = s0, b = s1;
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
      const double mid = 0.5 * (a + b);
      (lam_at(mid) < eps ? a : b) = mid;
    }
    const double s = 0.5 * (a + b);
    SliceLimit sl;
    sl.epsilon = eps;
    sl.rho = numerics::hermite(s, s0, s1, p.rho[i], p.rho[i + 1], p.drho[i], p.drho[i + 1]);
    sl.area = 4.0 * std::numbers::pi * static_cast<double>(p.genus - 1) * sl.rho * sl.rho;
    sl.curvature = sign(p.kappa) / (sl.rho * sl.rho);
    out.push_back(sl);
  }
  return out;
}

}  // namespace kottler
