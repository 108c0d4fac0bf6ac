#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "kottler/numerics/dormand_prince.hpp"
#include "kottler/numerics/finite_difference.hpp"
#include "kottler/numerics/interpolation.hpp"
#include "kottler/numerics/quadrature.hpp"
#include "kottler/numerics/root_find.hpp"
#include "oracles.hpp"

namespace kn = kottler::numerics;

TEST(GaussLegendre, WeightsSumToTwo) {
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u, 128u}) {
    const auto rule = kn::gauss_legendre(n);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    EXPECT_NEAR(sum, 2.0, 1e-14) << n;
  }
}

TEST(GaussLegendre, ExactForPolynomialsOfDegree2nMinus1) {
  const auto rule = kn::gauss_legendre(8);
  for (int p = 0; p <= 15; ++p) {
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) q += rule.weights[i] * std::pow(rule.nodes[i], p);
    const double exact = (p % 2) ? 0.0 : 2.0 / (p + 1);
    EXPECT_NEAR(q, exact, 1e-14) << p;
  }
}

TEST(GaussLegendre, CompositeMatchesSimpsonOracle) {
  auto f = [](double x) { return std::exp(-x) * std::sin(3 * x); };
  const double gl = kn::composite_gauss_legendre(f, 0.0, 4.0, 8, 16);
  const double simpson = oracle::simpson(f, 0.0, 4.0, 20000);
  EXPECT_NEAR(gl, simpson, 1e-12);
}

TEST(GaussLegendre, AdaptiveHandlesSquareRootEndpoint) {
  const double value = kn::adaptive_gauss_legendre([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  EXPECT_NEAR(value, 2.0 / 3.0, 1e-12);
}

TEST(FiniteDifference, FourthOrderOnSine) {
  auto max_error = [](std::size_t n) {
    std::vector<double> y(n);
    const double h = 2.0 / (n - 1);
    for (std::size_t i = 0; i < n; ++i) y[i] = std::sin(1.0 + i * h);
    const auto d1 = kn::first_derivative(y, h);
    const auto d2 = kn::second_derivative(y, h);
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = 1.0 + i * h;
      e = std::max({e, std::abs(d1[i] - std::cos(x)), std::abs(d2[i] + std::sin(x))});
    }
    return e;
  };
  const double coarse = max_error(65);
  const double fine = max_error(129);
  EXPECT_GT(std::log2(coarse / fine), 3.5);
}

TEST(FiniteDifference, RejectsNonUniformGrid) {
  std::vector<double> g{0.0, 1.0, 2.5, 3.0};
  EXPECT_THROW(kn::uniform_spacing(g), std::invalid_argument);
}

TEST(Interpolation, MonotoneCubicPreservesMonotonicity) {
  std::vector<double> x{0, 1, 2, 3, 4, 5};
  std::vector<double> y{0, 0.1, 0.2, 5, 5.1, 5.2};
  const kn::MonotoneCubic c(x, y);
  double prev = c(0.0);
  for (int i = 1; i <= 500; ++i) {
    const double v = c(i * 0.01);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_DOUBLE_EQ(c(3.0), 5.0);
}

TEST(Interpolation, HermiteExactOnCubics) {
  auto p = [](double x) { return 2 * x * x * x - x + 3; };
  auto dp = [](double x) { return 6 * x * x - 1; };
  EXPECT_NEAR(kn::hermite(0.3, 0.0, 1.0, p(0), p(1), dp(0), dp(1)), p(0.3), 1e-14);
  EXPECT_NEAR(kn::hermite_derivative(0.3, 0.0, 1.0, p(0), p(1), dp(0), dp(1)), dp(0.3), 1e-13);
}

TEST(RootFind, AgreesWithBisectionOracle) {
  auto f = [](double x) { return std::cos(x) - x; };
  const auto res = kn::safeguarded_newton<double>(
      [&](double x) { return std::pair{f(x), -std::sin(x) - 1}; }, 0.0, 1.0, 0.5);
  ASSERT_TRUE(res.converged);
  const double ref = static_cast<double>(oracle::bisect(
      [](long double x) { return std::cos(x) - x; }, 0.0L, 1.0L));
  EXPECT_NEAR(res.root, ref, 1e-15);
}

TEST(RootFind, DoubleRootConvergesThroughBisection) {
  auto res = kn::safeguarded_newton<double>(
      [](double x) { return std::pair{(x - 1) * (x - 1) * (x + 2) - 1e-30, 3 * (x - 1) * (x + 1)}; },
      1.0, 3.0, 2.5);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.root, 1.0, 1e-7);
}

TEST(DormandPrince, HarmonicOscillatorToTolerance) {
  using Solver = kn::DormandPrince<2>;
  kn::StepControl control;
  control.abs_tol = 1e-12;
  control.rel_tol = 1e-12;
  Solver solver(control);
  Solver::State y{0.0, 1.0};
  double t = 0.0;
  double h = 1e-3;
  auto rhs = [](double, const Solver::State& s) { return Solver::State{s[1], -s[0]}; };
  for (int i = 1; i <= 10; ++i) {
    ASSERT_EQ(solver.advance(rhs, t, y, i * 1.0, h), kn::AdvanceStatus::ok);
    EXPECT_DOUBLE_EQ(t, i * 1.0);
    EXPECT_NEAR(y[0], std::sin(t), 1e-9);
    EXPECT_NEAR(y[1], std::cos(t), 1e-9);
  }
  EXPECT_GT(solver.statistics().accepted, 0);
}

TEST(DormandPrince, ErrorScalesWithTolerance) {
  using Solver = kn::DormandPrince<1>;
  auto run = [](double tol) {
    kn::StepControl control;
    control.abs_tol = tol;
    control.rel_tol = tol;
    Solver solver(control);
    Solver::State y{1.0};
    double t = 0.0;
    double h = 1e-2;
    solver.advance([](double tt, const Solver::State& s) { return Solver::State{-2 * tt * s[0]}; },
                   t, y, 3.0, h);
    return std::abs(y[0] - std::exp(-9.0));
  };
  EXPECT_LT(run(1e-11), run(1e-7));
}
