#include "kottler/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kottler/errors.hpp"
#include "kottler/numerics/finite_difference.hpp"
#include "kottler/numerics/interpolation.hpp"

namespace kottler {
namespace {

struct SecondDerivatives {
  std::vector<std::size_t> index;
  std::vector<double> ddu;
  std::vector<double> ddrho;
};

double grid_spacing(const RadialProfile& p) {
  try {
    return numerics::uniform_spacing(p.grid);
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("finite differences need a uniform grid: ") + e.what());
  }
}

SecondDerivatives second_derivatives(const RadialProfile& p, DerivativeMode mode) {
  const std::size_t n = p.size();
  if (n < 5) throw GridTooCoarse("need at least 5 samples for curvature");
  if (p.u.size() != n || p.rho.size() != n || p.du.size() != n || p.drho.size() != n) {
    throw DomainError("profile arrays differ in length");
  }
  SecondDerivatives out;
  if (mode == DerivativeMode::supplied_if_available && p.has_second_derivatives()) {
    out.index.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.index[i] = i;
    out.ddu = p.ddu;
    out.ddrho = p.ddrho;
    return out;
  }
  const double h = grid_spacing(p);
  std::vector<double> ddu;
  std::vector<double> ddrho;
  if (p.coordinate == CoordinateKind::arclength) {
    ddu = numerics::first_derivative(p.du, h);
    ddrho = numerics::first_derivative(p.drho, h);
  } else {
    // On r-grids: rho'' = d(rho'^2/2)/dr and u'' = rho' d(u')/dr, since dr/ds = rho'.
    std::vector<double> half_sq(n);
    for (std::size_t i = 0; i < n; ++i) half_sq[i] = 0.5 * p.drho[i] * p.drho[i];
    ddrho = numerics::first_derivative(half_sq, h);
    ddu = numerics::first_derivative(p.du, h);
    for (std::size_t i = 0; i < n; ++i) ddu[i] *= p.drho[i];
  }
  for (std::size_t i = 2; i + 2 < n; ++i) {
    out.index.push_back(i);
    out.ddu.push_back(ddu[i]);
    out.ddrho.push_back(ddrho[i]);
  }
  return out;
}

}  // namespace

SampledField scalar_curvature(const RadialProfile& profile, DerivativeMode mode) {
  const auto d2 = second_derivatives(profile, mode);
  const double k = sign(profile.kappa);
  SampledField out;
  out.index = d2.index;
  out.value.reserve(d2.index.size());
  for (std::size_t j = 0; j < d2.index.size(); ++j) {
    const std::size_t i = d2.index[j];
    const double rho = profile.rho[i];
    const double rp = profile.drho[i];
    out.value.push_back(-4.0 * d2.ddrho[j] / rho - 2.0 * (rp * rp - k) / (rho * rho));
  }
  return out;
}

StaticResidualSamples static_residual_samples(const RadialProfile& profile, DerivativeMode mode) {
  const auto d2 = second_derivatives(profile, mode);
  const double k = sign(profile.kappa);
  StaticResidualSamples out;
  out.index = d2.index;
  for (std::size_t j = 0; j < d2.index.size(); ++j) {
    const std::size_t i = d2.index[j];
    const double rho = profile.rho[i];
    const double rp = profile.drho[i];
    const double rpp = d2.ddrho[j];
    const double u = profile.u[i];
    const double up = profile.du[i];
    const double upp = d2.ddu[j];
    const double ric_n = -2.0 * rpp / rho;
    const double ric_t = -rpp / rho + (k - rp * rp) / (rho * rho);
    const double hess_n = upp;
    const double hess_t = up * rp / rho;
    out.radial.push_back(u * ric_n - hess_n + 3.0 * u);
    out.tangential.push_back(u * ric_t - hess_t + 3.0 * u);
    out.trace.push_back(hess_n + 2.0 * hess_t - 3.0 * u);
  }
  return out;
}

StaticResiduals static_residuals(const RadialProfile& profile, DerivativeMode mode) {
  const auto s = static_residual_samples(profile, mode);
  StaticResiduals out;
  for (std::size_t j = 0; j < s.index.size(); ++j) {
    out.tensor = std::max({out.tensor, std::abs(s.radial[j]), std::abs(s.tangential[j])});
    out.trace = std::max(out.trace, std::abs(s.trace[j]));
  }
  return out;
}

LevelSetGeometry level_set_geometry(const RadialProfile& profile, std::size_t index) {
  if (index >= profile.size()) throw DomainError("level_set_geometry: index out of range");
  const double grad = std::abs(profile.du[index]);
  if (grad < 1e-14) {
    throw CriticalPoint("level_set_geometry: |grad u| < 1e-14 at sample " +
                        std::to_string(index));
  }
  const auto d2 = second_derivatives(profile, DerivativeMode::supplied_if_available);
  auto it = std::find(d2.index.begin(), d2.index.end(), index);
  if (it == d2.index.end()) {
    throw DomainError("level_set_geometry: sample lies inside the finite-difference margin");
  }
  const double upp = d2.ddu[static_cast<std::size_t>(it - d2.index.begin())];

  const double u = profile.u[index];
  const double tangential = profile.du[index] * profile.drho[index] / profile.rho[index];
  // Tangential Hessian block in an orthonormal frame of the level set.
  const double hess[2][2] = {{tangential, 0.0}, {0.0, tangential}};
  double h[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) h[a][b] = hess[a][b] / grad;

  const double mean = (3.0 * u - upp) / grad;
  double traceless = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double c = h[a][b] - (a == b ? 0.5 * mean : 0.0);
      traceless += c * c;
    }
  }
  return {h[0][0], mean, traceless};
}

WFunction model_w_function(const PseudoRadialMap& map, std::span<const double> u_grid,
                           WFunction::Provenance provenance) {
  WFunction w;
  w.provenance = provenance;
  w.u.assign(u_grid.begin(), u_grid.end());
  const std::size_t n = w.u.size();
  w.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.w[i] = static_cast<double>(map.model_gradient(w.u[i]));
  if (provenance == WFunction::Provenance::analytic) {
    w.dw.resize(n);
    w.ddw.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      w.dw[i] = static_cast<double>(map.model_gradient_slope(w.u[i]));
      w.ddw[i] = static_cast<double>(map.model_gradient_curvature(w.u[i]));
    }
    return w;
  }
  double h = 0.0;
  try {
    h = numerics::uniform_spacing(w.u);
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("model_w_function: ") + e.what());
  }
  w.dw = numerics::first_derivative(w.w, h);
  w.ddw = numerics::second_derivative(w.w, h);
  return w;
}

WFunction profile_w_function(const RadialProfile& profile, std::span<const double> u_grid) {
  const std::size_t n = profile.size();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = profile.du[i] * profile.du[i];
  const numerics::MonotoneCubic interp(profile.u, w);
  WFunction out;
  out.provenance = WFunction::Provenance::finite_difference;
  out.u.assign(u_grid.begin(), u_grid.end());
  for (double u : out.u) {
    if (u < interp.x_min() || u > interp.x_max()) {
      throw DomainError("profile_w_function: u grid leaves the profile range");
    }
    out.w.push_back(interp(u));
  }
  double h = 0.0;
  try {
    h = numerics::uniform_spacing(out.u);
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("profile_w_function: ") + e.what());
  }
  out.dw = numerics::first_derivative(out.w, h);
  out.ddw = numerics::second_derivative(out.w, h);
  return out;
}

std::vector<double> bochner_residual(const WFunction& w) {
  std::vector<double> out(w.u.size());
  for (std::size_t i = 0; i < w.u.size(); ++i) {
    const double u = w.u[i];
    if (!(u > 0.0)) throw DomainError("bochner_residual: u must be positive (horizon excluded)");
    const double W = w.w[i];
    const double dW = w.dw[i];
    const double laplacian = W * w.ddw[i] + 3.0 * u * dW;
    const double mixed = 3.0 * u - 0.5 * dW;
    out[i] = laplacian - (0.5 * dW * dW + mixed * mixed + W * dW / u);
  }
  return out;
}

double traceless_identity_rhs(double u, double w, double dw, double ddw) {
  if (!(u > 0.0)) throw DomainError("traceless_identity_rhs: u must be positive");
  if (!(w > 0.0)) throw DomainError("traceless_identity_rhs: W must be positive");
  const double mixed = 3.0 * u - 0.5 * dw;
  return 0.5 * ddw + 1.5 * u * dw / w - dw * dw / (4.0 * w) - mixed * mixed / (2.0 * w) -
         dw / (2.0 * u);
}

double traceless_identity_rhs(const WFunction& w, std::size_t i) {
  return traceless_identity_rhs(w.u.at(i), w.w.at(i), w.dw.at(i), w.ddw.at(i));
}

}  // namespace kottler
