#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "kottler/errors.hpp"
#include "kottler/models.hpp"
#include "kottler/pseudoradial.hpp"
#include "oracles.hpp"

using namespace kottler;
using Real = PseudoRadialMap::Real;

namespace {

const std::vector<double> sweep_masses{0.0, -0.05, -0.1, -0.15, -0.15762, critical_mass + 1e-4,
                                       critical_mass};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g{0.0};
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, i / double(n - 1)));
  return g;
}

// Independent oracle: bisection of F over [r_m0, sqrt(u^2 + 1 + 2|m0|) + 1].
// The degenerate map represents the exact critical mass, not its double rounding.
long double psi_oracle(double m0_in, long double u) {
  const long double m0 = m0_in == critical_mass ? -1 / (3 * std::sqrt(3.0L)) : m0_in;
  const long double lo = oracle::hyperbolic_horizon(m0);
  const long double hi = std::sqrt(u * u + 1 + 2 * std::fabs(m0)) + 1;
  auto F = [&](long double p) { return u * u + 1 - p * p + 2 * m0 / p; };
  if (F(lo) <= 0) return lo;
  return oracle::bisect(F, lo, hi, 1e-19L);
}

}  // namespace

TEST(PseudoRadial, ReferenceValues) {
  const PseudoRadialMap flat(0.0);
  EXPECT_NEAR(static_cast<double>(flat.evaluate(1.0)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(flat.derivative(1.0)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(flat.derivative(0.0), 0.0L);
  EXPECT_NEAR(static_cast<double>(flat.model_gradient(0.0)), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(flat.model_gradient(1.0)), 2.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(flat.identity_residual(1.0L, std::sqrt(2.0L))), 0.0, 1e-18);
  EXPECT_NEAR(static_cast<double>(flat.identity_residual(0.0L, 2.0L)), -3.0, 1e-18);

  const PseudoRadialMap crit(critical_mass);
  EXPECT_TRUE(crit.degenerate());
  EXPECT_DOUBLE_EQ(static_cast<double>(crit.evaluate(0.0)), critical_radius);
  EXPECT_NEAR(static_cast<double>(crit.model_gradient(0.0)), 0.0, 1e-30);
  EXPECT_THROW(crit.derivative(0.0), DegenerateDerivative);
  EXPECT_DOUBLE_EQ(static_cast<double>(crit.derivative_at_horizon()), critical_radius);

  const PseudoRadialMap m01(-0.1);
  const Real psi = m01.evaluate(1.0);
  EXPECT_LT(std::fabs(m01.identity_residual(1.0L, psi)), 1e-13L);
}

TEST(PseudoRadial, MatchesBisectionOracle) {
  for (double m0 : sweep_masses) {
    const PseudoRadialMap map(m0);
    for (double u : {0.0, 1e-6, 1e-3, 0.5, 2.0, 37.0, 1000.0}) {
      const long double ref = psi_oracle(m0, u);
      // At the double root the oracle itself is conditioned like eps_L / (6 (psi - r)).
      const double conditioning = map.degenerate() && u > 0 ? 1e-19 / u : 0.0;
      EXPECT_NEAR(static_cast<double>(map.evaluate(u)), static_cast<double>(ref),
                  2e-15 * static_cast<double>(ref) + conditioning)
          << "m0=" << m0 << " u=" << u;
    }
  }
}

TEST(PseudoRadial, DegenerateSeriesAgainstOracle) {
  const PseudoRadialMap crit(critical_mass);
  for (double u : {1e-3, 1e-4, 1e-5}) {
    const long double ref = psi_oracle(crit.m0(), u);
    EXPECT_NEAR(static_cast<double>(crit.evaluate(u)), static_cast<double>(ref), 1e-15) << u;
    // Leading behaviour psi - r_crit ~ u / sqrt 3.
    EXPECT_NEAR(static_cast<double>((ref - critical_radius) / u), 1 / std::sqrt(3.0), u);
  }
  // 40-digit references for the same points.
  EXPECT_NEAR(static_cast<double>(crit.evaluate(1e-6)), 0.57735084654008740419, 2e-16);
  EXPECT_NEAR(static_cast<double>(crit.evaluate(1e-4)), 0.57740800614101354723, 2e-16);
  EXPECT_NEAR(static_cast<double>(crit.evaluate(1e-3)), 0.57792781187680873522, 2e-16);
  // Continuity across the series cutoff.
  const double c = PseudoRadialMap::degenerate_series_cutoff;
  const Real jump = crit.evaluate(c * (1 + 1e-9)) - crit.evaluate(c * (1 - 1e-9));
  EXPECT_NEAR(static_cast<double>(jump - crit.derivative(c) * static_cast<Real>(2e-9 * c)), 0.0,
              1e-18);
}

TEST(PseudoRadial, RoundTripOnLogGrid) {
  for (double m0 : sweep_masses) {
    const PseudoRadialMap map(m0);
    for (double u : log_grid(1e-8, 1e3, 400)) {
      const Real psi = map.evaluate(u);
      const Real lu = u;
      const Real back = -1 + psi * psi - 2 * static_cast<Real>(m0) / psi;
      EXPECT_LT(std::fabs(lu * lu - back), 1e-11L) << "m0=" << m0 << " u=" << u;
      EXPECT_LT(std::fabs(map.identity_residual(lu, psi)), 1e-13L * std::max(1.0L, lu * lu))
          << "m0=" << m0 << " u=" << u;
    }
  }
}

TEST(PseudoRadial, MonotoneAndAsymptoticallyLinear) {
  for (double m0 : sweep_masses) {
    const PseudoRadialMap map(m0);
    Real prev = -1;
    for (double u : log_grid(1e-6, 1e3, 300)) {
      const Real psi = map.evaluate(u);
      EXPECT_GT(psi, prev) << m0 << " " << u;
      EXPECT_GE(psi, static_cast<Real>(map.horizon_radius()) * (1 - 1e-15L));
      prev = psi;
    }
    EXPECT_NEAR(static_cast<double>(map.evaluate(1e3) / 1e3L), 1.0, 1e-4);
  }
}

TEST(PseudoRadial, DerivativeMatchesCentralDifferences) {
  for (double m0 : sweep_masses) {
    const PseudoRadialMap map(m0);
    for (double u : {0.01, 0.3, 2.0, 10.0, 400.0}) {
      const double h = 1e-5;
      const double fd = static_cast<double>((map.evaluate(u + h) - map.evaluate(u - h)) / (2 * h));
      const double d = static_cast<double>(map.derivative(u));
      EXPECT_NEAR(d, fd, 1e-6 * std::abs(d)) << m0 << " " << u;
    }
  }
}

TEST(PseudoRadial, ModelGradientDerivativesMatchFiniteDifferences) {
  for (double m0 : {0.0, -0.1, -0.15762, critical_mass}) {
    const PseudoRadialMap map(m0);
    for (double u : {0.1, 1.0, 5.0}) {
      const double h = 1e-4;
      auto w = [&](double x) { return static_cast<double>(map.model_gradient(x)); };
      EXPECT_NEAR(static_cast<double>(map.model_gradient_slope(u)),
                  oracle::central_difference(w, u, h), 1e-7 * std::max(1.0, u));
      EXPECT_NEAR(static_cast<double>(map.model_gradient_curvature(u)),
                  oracle::second_difference(w, u, h), 1e-4);
    }
  }
}

TEST(PseudoRadial, KottlerConsistency) {
  for (double m0 : sweep_masses) {
    const PseudoRadialMap map(m0);
    const auto model = KottlerModel::hyperbolic(m0);
    const double rm = model.horizon().radius;
    for (int i = 0; i <= 500; ++i) {
      const double r = rm + (100.0 - rm) * std::pow(i / 500.0, 2);
      const double u = model.potential(r);
      EXPECT_NEAR(static_cast<double>(map.evaluate(u)), r, 1e-10 * std::max(1.0, r))
          << m0 << " " << r;
      EXPECT_NEAR(static_cast<double>(map.model_gradient(u)), gradient_norm_sq(m0, r),
                  1e-10 * std::max(1.0, r * r))
          << m0 << " " << r;
    }
  }
}

TEST(PseudoRadial, DeterministicBits) {
  const PseudoRadialMap a(-0.123456789);
  const PseudoRadialMap b(-0.123456789);
  for (double u : {0.0, 0.7, 123.0}) EXPECT_EQ(a.evaluate(u), b.evaluate(u));
}

TEST(PseudoRadial, DomainChecks) {
  EXPECT_THROW(PseudoRadialMap(0.1), DomainError);
  EXPECT_THROW(PseudoRadialMap(-0.3), DomainError);
  EXPECT_THROW(PseudoRadialMap(0.0).evaluate(-1.0), DomainError);
}
