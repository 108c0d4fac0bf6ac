#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kottler/errors.hpp"
#include "kottler/models.hpp"
#include "oracles.hpp"

using namespace kottler;

namespace {
constexpr double pi = std::numbers::pi;

std::vector<double> admissible_masses() {
  std::vector<double> masses{critical_mass, critical_mass + 1e-12, critical_mass + 1e-4,
                             -0.15762, -0.1, -0.05, 0.0, 0.3, 2.0, 50.0};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(critical_mass, 5.0);
  for (int i = 0; i < 200; ++i) masses.push_back(dist(rng));
  return masses;
}
}  // namespace

TEST(HorizonRadius, ReferenceValues) {
  EXPECT_DOUBLE_EQ(horizon_radius(Curvature::negative, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(horizon_radius(Curvature::negative, critical_mass), 1.0 / std::sqrt(3.0));
  const double oracle_value = static_cast<double>(oracle::hyperbolic_horizon(-0.1L));
  EXPECT_NEAR(oracle_value, 0.878885066249972832, 1e-15);
  EXPECT_NEAR(horizon_radius(Curvature::negative, -0.1), oracle_value, 1e-14 * oracle_value);
}

TEST(HorizonRadius, MatchesBisectionOracleAcrossBranch) {
  for (double m : admissible_masses()) {
    const double r = horizon_radius(Curvature::negative, m);
    const double ref = static_cast<double>(oracle::hyperbolic_horizon(m));
    // Near the double root the root is only determined to sqrt(eps) by the data.
    const double tol = (m - critical_mass < 1e-6) ? 1e-7 : 1e-14 * ref;
    EXPECT_NEAR(r, ref, tol) << "m=" << m;
    EXPECT_LT(std::abs(r * r * r - r - 2 * m), 1e-12 * std::max(1.0, std::abs(m))) << m;
  }
}

TEST(HorizonRadius, FlatAndSphericalCrossSections) {
  for (double m : {0.01, 0.5, 3.0}) {
    const double r0 = horizon_radius(Curvature::flat, m);
    EXPECT_NEAR(r0 * r0 * r0, 2 * m, 1e-14 * 2 * m);
    const double r1 = horizon_radius(Curvature::positive, m);
    EXPECT_NEAR(r1 + r1 * r1 * r1, 2 * m, 1e-14 * (1 + 2 * m));
  }
}

TEST(HorizonRadius, RejectsInadmissibleMasses) {
  EXPECT_THROW(horizon_radius(Curvature::negative, -0.5), MassOutOfRange);
  EXPECT_THROW(horizon_radius(Curvature::negative, critical_mass - 1e-12), MassOutOfRange);
  EXPECT_THROW(horizon_radius(Curvature::flat, 0.0), MassOutOfRange);
  EXPECT_THROW(horizon_radius(Curvature::positive, -0.1), MassOutOfRange);
  try {
    horizon_radius(Curvature::negative, -0.5);
  } catch (const MassOutOfRange& e) {
    EXPECT_NE(std::string(e.what()).find("-0.19245"), std::string::npos) << e.what();
  }
}

TEST(MetricCoefficient, ReferenceValues) {
  EXPECT_NEAR(metric_coefficient(KottlerModel::hyperbolic(0.0), 1.0), 0.0, 1e-16);
  EXPECT_NEAR(metric_coefficient(KottlerModel::hyperbolic(0.0), 2.0), 3.0, 1e-15);
  EXPECT_NEAR(metric_coefficient(KottlerModel::hyperbolic(-0.1), 2.0), 3.1, 1e-15);
  EXPECT_THROW(metric_coefficient(KottlerModel::hyperbolic(0.0), 0.9), DomainError);
}

TEST(MetricCoefficient, VanishesAtHorizonAndIncreases) {
  for (double m : {critical_mass + 1e-4, -0.15, -0.1, -0.05, 0.0}) {
    const auto model = KottlerModel::hyperbolic(m);
    const double rm = model.horizon().radius;
    EXPECT_LT(std::abs(model.metric_coefficient(rm)), 1e-15);
    double prev = 0.0;
    for (int i = 1; i < 400; ++i) {
      const double r = rm + 0.025 * i;
      const double f = model.metric_coefficient(r);
      EXPECT_GT(f, prev);
      EXPECT_NEAR(f, -1 + r * r - 2 * m / r, 1e-13 * r * r);
      EXPECT_GT(model.metric_slope(r), 0.0);
      prev = f;
    }
  }
}

TEST(GradientNormSq, ReferenceValuesAndFiniteDifferenceOracle) {
  EXPECT_DOUBLE_EQ(gradient_norm_sq(0.0, 1.0), 1.0);
  EXPECT_NEAR(gradient_norm_sq(critical_mass, critical_radius), 0.0, 1e-30);
  EXPECT_NEAR(gradient_norm_sq(-0.1, 2.0), 3.900625, 1e-14);
  // |grad u|^2 = f (du/dr)^2 = f'^2/4 for u = sqrt f.
  const auto model = KottlerModel::hyperbolic(-0.1);
  const double fp = oracle::central_difference([&](double r) { return model.metric_coefficient(r); },
                                               2.0, 1e-5);
  EXPECT_NEAR(gradient_norm_sq(-0.1, 2.0), fp * fp / 4, 1e-9);
  EXPECT_THROW(gradient_norm_sq(0.0, 0.5), DomainError);
}

TEST(SurfaceGravity, ReferenceValues) {
  EXPECT_DOUBLE_EQ(surface_gravity(Curvature::negative, 0.0), 1.0);
  EXPECT_EQ(surface_gravity(Curvature::negative, critical_mass), 0.0);
  const double r = static_cast<double>(oracle::hyperbolic_horizon(-0.1L));
  EXPECT_NEAR(surface_gravity(Curvature::negative, -0.1), (3 * r * r - 1) / (2 * r), 1e-14);
  EXPECT_NEAR(surface_gravity(Curvature::negative, -0.1), 0.749424998568007085, 1e-15);
}

TEST(SurfaceGravity, AgreesWithGradientAtHorizon) {
  for (double m : admissible_masses()) {
    const auto model = KottlerModel::hyperbolic(m);
    const double r = model.horizon().radius;
    EXPECT_NEAR(model.horizon().surface_gravity, (r * r * r + m) / (r * r),
                1e-12 * std::max(1.0, r)) << m;
    EXPECT_EQ(model.horizon().degenerate, m == critical_mass);
  }
}

TEST(MassFromSurfaceGravity, ReferenceValues) {
  EXPECT_EQ(mass_from_surface_gravity(1.0), 0.0);
  EXPECT_EQ(mass_from_surface_gravity(0.0), critical_mass);
  // Oracle: bisection of k(m) - 0.5 over [m_crit, 0] using the cubic directly.
  const long double m_ref = oracle::bisect(
      [](long double m) {
        const long double r = oracle::hyperbolic_horizon(m);
        return (3 * r * r - 1) / (2 * r) - 0.5L;
      },
      static_cast<long double>(critical_mass), 0.0L, 1e-16L);
  EXPECT_NEAR(mass_from_surface_gravity(0.5), static_cast<double>(m_ref), 1e-13);
  EXPECT_NEAR(mass_from_surface_gravity(0.5), -0.157664410901110615, 1e-15);
  EXPECT_THROW(mass_from_surface_gravity(-0.01), DomainError);
  EXPECT_THROW(mass_from_surface_gravity(1.5), DomainError);
}

TEST(MassFromSurfaceGravity, BijectionOnBranch) {
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double k = i / 1000.0;
    const double m = mass_from_surface_gravity(k);
    EXPECT_GT(m, prev);
    EXPECT_NEAR(surface_gravity(Curvature::negative, m), k, 1e-12) << k;
    prev = m;
  }
  for (int i = 0; i <= 1000; ++i) {
    const double m = critical_mass * (1 - i / 1000.0);
    EXPECT_NEAR(mass_from_surface_gravity(surface_gravity(Curvature::negative, m)), m, 1e-12) << m;
  }
}

TEST(ModelHorizonArea, ReferenceValues) {
  EXPECT_NEAR(model_horizon_area(0.0, 2), 4 * pi, 1e-14);
  EXPECT_NEAR(model_horizon_area(critical_mass, 2), 4 * pi / 3, 1e-14);
  const double r = static_cast<double>(oracle::hyperbolic_horizon(-0.1L));
  EXPECT_NEAR(model_horizon_area(-0.1, 3), 8 * pi * r * r, 1e-13);
  EXPECT_NEAR(model_horizon_area(-0.1, 3), 19.4135084885479533, 1e-13);
  EXPECT_THROW(model_horizon_area(0.0, 1), DomainError);
}

TEST(ModelHorizonArea, PerHandleAreaIndependentOfGenus) {
  for (double m : {critical_mass, -0.1, 0.0, 0.7}) {
    const double per = model_horizon_area(m, 2);
    for (int g = 3; g <= 8; ++g) EXPECT_NEAR(model_horizon_area(m, g) / (g - 1), per, 1e-13 * per);
  }
}

TEST(KottlerModel, GenusValidation) {
  EXPECT_THROW(KottlerModel(Curvature::negative, 0.0, 1), DomainError);
  EXPECT_THROW(KottlerModel(Curvature::flat, 0.5, 2), DomainError);
  EXPECT_THROW(KottlerModel(Curvature::positive, 0.5, 1), DomainError);
  EXPECT_NO_THROW(KottlerModel(Curvature::flat, 0.5, 1));
  EXPECT_FALSE(KottlerModel(Curvature::flat, 0.5, 1).horizon().area.has_value());
  EXPECT_NEAR(*KottlerModel(Curvature::positive, 1.0, 0).horizon().area, 4 * pi, 1e-13);
}
