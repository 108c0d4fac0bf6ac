#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "kottler/errors.hpp"
#include "kottler/geometry.hpp"
#include "kottler/models.hpp"
#include "kottler/numerics/interpolation.hpp"
#include "kottler/profile.hpp"
#include "kottler/pseudoradial.hpp"

using namespace kottler;

namespace {

const std::vector<double> sweep_masses{0.0, -0.05, -0.1, -0.15, critical_mass + 1e-4};

RadialProfile fd_profile(RadialProfile p) {
  p.ddu.clear();
  p.ddrho.clear();
  return p;
}

double sup_abs_plus6(const SampledField& r) {
  double e = 0.0;
  for (double v : r.value) e = std::max(e, std::abs(v + 6.0));
  return e;
}

std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace

TEST(Profile, ClosedFormInvariants) {
  const auto model = KottlerModel::hyperbolic(-0.1);
  const auto p = kottler_area_profile(model, model.horizon().radius, 10.0, 256);
  EXPECT_NO_THROW(p.validate());
  EXPECT_TRUE(p.starts_at_horizon());
  EXPECT_EQ(p.size(), 256u);
  auto bad = p;
  bad.u[5] *= 1.01;
  EXPECT_THROW(bad.validate(), DomainError);
  EXPECT_THROW(kottler_area_profile(model, 1.0, 2.0, 8), GridTooCoarse);
  auto truncated = p;
  truncated.grid.resize(8);
  EXPECT_THROW(truncated.validate(), GridTooCoarse);
}

TEST(Profile, ArclengthInversion) {
  const auto model = KottlerModel::hyperbolic(0.0);
  // m = 0: r = cosh s, so s(r) = acosh r.
  for (double r : {1.0, 1.2, 3.0, 40.0}) {
    EXPECT_NEAR(kottler_arclength(model, r), std::acosh(r), 1e-12);
    EXPECT_NEAR(kottler_radius_at_arclength(model, std::acosh(r)), r, 1e-12 * r);
  }
  EXPECT_THROW(kottler_arclength(KottlerModel::hyperbolic(critical_mass), 2.0), DomainError);
}

TEST(ScalarCurvature, ClosedFormProfilesAnalyticDerivatives) {
  for (double m : sweep_masses) {
    const auto model = KottlerModel::hyperbolic(m);
    const auto p = kottler_area_profile(model, model.horizon().radius, 10.0, 512);
    EXPECT_LT(sup_abs_plus6(scalar_curvature(p)), 1e-10) << m;
  }
}

TEST(ScalarCurvature, FiniteDifferencesOnAreaGrid) {
  for (double m : sweep_masses) {
    const auto model = KottlerModel::hyperbolic(m);
    const auto p = kottler_area_profile(model, 1.1, 10.0, 512);
    const auto r = scalar_curvature(p, DerivativeMode::finite_difference);
    EXPECT_EQ(r.index.front(), 2u);
    EXPECT_EQ(r.index.back(), 509u);
    EXPECT_LT(sup_abs_plus6(r), 1e-6) << m;
  }
}

TEST(ScalarCurvature, FiniteDifferencesOnArclengthGrid) {
  for (double m : {0.0, -0.1}) {
    const auto model = KottlerModel::hyperbolic(m);
    const auto p = fd_profile(kottler_arclength_profile(model, 0.0, 4.0, 512));
    EXPECT_LT(sup_abs_plus6(scalar_curvature(p)), 1e-6) << m;
  }
}

TEST(ScalarCurvature, DetectsScaledRadialLapse) {
  const auto model = KottlerModel::hyperbolic(0.0);
  auto p = fd_profile(kottler_area_profile(model, 1.1, 10.0, 512));
  for (double& d : p.drho) d *= 1.1;
  EXPECT_GT(sup_abs_plus6(scalar_curvature(p)), 0.1);
}

TEST(ScalarCurvature, TooFewSamples) {
  RadialProfile p;
  p.grid = {1, 2, 3, 4};
  p.u = p.rho = p.du = p.drho = {1, 1, 1, 1};
  EXPECT_THROW(scalar_curvature(p), GridTooCoarse);
}

TEST(StaticResiduals, ExactOnKottler) {
  for (double m : {0.0, -0.15762, -0.1, critical_mass + 1e-4}) {
    const auto model = KottlerModel::hyperbolic(m);
    const auto p = kottler_area_profile(model, model.horizon().radius, 10.0, 512);
    const auto a = static_residuals(p);
    EXPECT_LT(a.tensor, 1e-10);
    EXPECT_LT(a.trace, 1e-10);
    const auto f = static_residuals(fd_profile(kottler_area_profile(model, 1.1, 10.0, 512)));
    EXPECT_LT(f.tensor, 1e-6) << m;
    EXPECT_LT(f.trace, 1e-6) << m;
  }
}

TEST(StaticResiduals, ShiftedPotentialGivesTraceDefect) {
  const auto model = KottlerModel::hyperbolic(0.0);
  auto p = kottler_area_profile(model, 1.1, 10.0, 512);
  for (double& u : p.u) u += 0.01;
  const auto s = static_residual_samples(p);
  EXPECT_NEAR(s.trace.back(), -0.03, 1e-12);
  EXPECT_NEAR(static_residuals(p).trace, 0.03, 1e-12);
}

TEST(StaticResiduals, OnePercentScalingDetected) {
  const auto model = KottlerModel::hyperbolic(-0.1);
  auto p = fd_profile(kottler_area_profile(model, 1.1, 10.0, 512));
  for (double& u : p.u) u *= 1.01;
  const auto s = static_residuals(p);
  EXPECT_GT(std::max(s.tensor, s.trace), 1e-3);
}

TEST(StaticResiduals, FourthOrderConvergence) {
  const auto model = KottlerModel::hyperbolic(-0.1);
  std::vector<double> err;
  for (int n : {128, 256, 512}) {
    const auto s = static_residuals(fd_profile(kottler_area_profile(model, 1.1, 10.0, n)));
    err.push_back(std::max(s.tensor, s.trace));
  }
  EXPECT_GT(std::log2(err[0] / err[1]), 3.5);
  EXPECT_GT(std::log2(err[1] / err[2]), 3.5);
}

TEST(StaticResiduals, FrameIndependence) {
  const auto model = KottlerModel::hyperbolic(-0.1);
  const auto arc = fd_profile(kottler_arclength_profile(model, 0.5, 3.0, 1024));
  const auto area_grid = kottler_area_profile(model, arc.rho.front(), arc.rho.back(), 1024);
  const auto ra = static_residual_samples(fd_profile(area_grid));
  const auto rs = static_residual_samples(arc);
  std::vector<double> rho_s;
  for (auto i : rs.index) rho_s.push_back(arc.rho[i]);
  const numerics::MonotoneCubic trace_s(rho_s, rs.trace);
  for (std::size_t j = 0; j < ra.index.size(); ++j) {
    const double r = area_grid.rho[ra.index[j]];
    if (r < trace_s.x_min() || r > trace_s.x_max()) continue;
    EXPECT_NEAR(trace_s(r), ra.trace[j], 1e-8);
  }
}

TEST(LevelSet, WarpedKottlerIsUmbilic) {
  const auto model = KottlerModel::hyperbolic(0.0);
  const auto p = kottler_area_profile(model, 1.0, 3.0, 201);  // r = 2 at index 100
  ASSERT_NEAR(p.grid[100], 2.0, 1e-14);
  const auto g = level_set_geometry(p, 100);
  EXPECT_LT(g.traceless_norm_sq, 1e-10);
  EXPECT_NEAR(g.mean_curvature, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(g.h_tangential, std::sqrt(3.0) / 2, 1e-12);
  // Finite-difference Hessian gives the same mean curvature.
  const auto gf = level_set_geometry(fd_profile(p), 100);
  EXPECT_NEAR(gf.mean_curvature, std::sqrt(3.0), 1e-7);
  EXPECT_LT(gf.traceless_norm_sq, 1e-10);
}

TEST(LevelSet, HorizonIsTotallyGeodesic) {
  const auto model = KottlerModel::hyperbolic(-0.1);
  const auto p = kottler_area_profile(model, model.horizon().radius, 5.0, 128);
  const auto g = level_set_geometry(p, 0);
  EXPECT_NEAR(g.mean_curvature, 0.0, 1e-14);
  EXPECT_NEAR(g.h_tangential, 0.0, 1e-14);
}

TEST(LevelSet, DegenerateHorizonIsCriticalPoint) {
  const auto model = KottlerModel::hyperbolic(critical_mass);
  const auto p = kottler_area_profile(model, critical_radius, 3.0, 64);
  EXPECT_THROW(level_set_geometry(p, 0), CriticalPoint);
  EXPECT_NO_THROW(level_set_geometry(p, 10));
}

TEST(Bochner, VanishesOnModelAnalytic) {
  for (double m : {0.0, -0.1, -0.15762, critical_mass + 1e-4, critical_mass}) {
    const PseudoRadialMap map(m);
    const auto w = model_w_function(map, uniform(0.5, 5.0, 200), WFunction::Provenance::analytic);
    for (double r : bochner_residual(w)) EXPECT_LT(std::abs(r), 1e-9) << m;
  }
}

TEST(Bochner, VanishesOnModelFiniteDifference) {
  for (double m : {0.0, -0.15762, critical_mass}) {
    const PseudoRadialMap map(m);
    const auto w =
        model_w_function(map, uniform(0.1, 10.0, 1000), WFunction::Provenance::finite_difference);
    for (double r : bochner_residual(w)) EXPECT_LT(std::abs(r), 1e-5) << m;
  }
}

TEST(Bochner, ConstantShiftDetected) {
  const PseudoRadialMap map(-0.15762);
  auto w = model_w_function(map, uniform(0.5, 5.0, 100), WFunction::Provenance::analytic);
  for (double& v : w.w) v += 0.1;
  double worst = 0.0;
  for (double r : bochner_residual(w)) worst = std::max(worst, std::abs(r));
  EXPECT_GT(worst, 1e-2);
}

TEST(Bochner, HorizonSampleRejected) {
  const PseudoRadialMap map(0.0);
  const auto w = model_w_function(map, uniform(0.0, 1.0, 20), WFunction::Provenance::analytic);
  EXPECT_THROW(bochner_residual(w), DomainError);
}

TEST(Bochner, ProfileResampledInU) {
  const auto model = KottlerModel::hyperbolic(-0.1);
  const auto p = kottler_area_profile(model, 1.0, 12.0, 4000);
  const auto w = profile_w_function(p, uniform(0.5, 5.0, 400));
  for (double r : bochner_residual(w)) EXPECT_LT(std::abs(r), 1e-3);
}

TEST(TracelessIdentity, VanishesOnModels) {
  EXPECT_NEAR(traceless_identity_rhs(model_w_function(PseudoRadialMap(0.0), std::vector<double>{1.0},
                                                      WFunction::Provenance::analytic),
                                     0),
              0.0, 1e-8);
  const PseudoRadialMap m01(-0.1);
  const auto w2 = model_w_function(m01, std::vector<double>{2.0}, WFunction::Provenance::analytic);
  EXPECT_NEAR(traceless_identity_rhs(w2, 0), 0.0, 1e-6);
  for (double m : {0.0, -0.05, -0.1, -0.15, critical_mass + 1e-4, critical_mass}) {
    const PseudoRadialMap map(m);
    const auto w = model_w_function(map, uniform(0.1, 10.0, 300), WFunction::Provenance::analytic);
    for (std::size_t i = 0; i < w.u.size(); ++i) {
      EXPECT_LT(std::abs(traceless_identity_rhs(w, i)), 1e-10) << m << " " << w.u[i];
    }
  }
}

TEST(TracelessIdentity, NonStaticToy) {
  // W = u^3: W' = 3, W'' = 6 at u = 1; the five terms give 3 + 9/2 - 9/4 - 9/8 - 3/2.
  EXPECT_NEAR(traceless_identity_rhs(1.0, 1.0, 3.0, 6.0), 21.0 / 8.0, 1e-15);
  // W = u^2 solves the identity exactly, so it is not a useful negative control.
  EXPECT_NEAR(traceless_identity_rhs(1.0, 1.0, 2.0, 2.0), 0.0, 1e-15);
  EXPECT_THROW(traceless_identity_rhs(0.0, 1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(traceless_identity_rhs(1.0, 0.0, 1.0, 1.0), DomainError);
}
