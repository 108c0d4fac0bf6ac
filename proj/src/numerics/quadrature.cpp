#include "kottler/numerics/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kottler::numerics {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double composite_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t panels, std::size_t nodes) {
  if (panels == 0) throw std::invalid_argument("composite_gauss_legendre: no panels");
  const GaussLegendreRule rule = gauss_legendre(nodes);
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    total += 0.5 * width * panel;
  }
  return total;
}

namespace {

double panel_rule(const std::function<double(double)>& f, double a, double b,
                  const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

double refine(const std::function<double(double)>& f, double a, double b, double whole,
              double tolerance, int depth, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double left = panel_rule(f, a, mid, rule);
  const double right = panel_rule(f, mid, b, rule);
  const double split = left + right;
  if (depth <= 0 || std::abs(split - whole) <= tolerance * (1.0 + std::abs(split))) {
    return split;
  }
  return refine(f, a, mid, left, tolerance, depth - 1, rule) +
         refine(f, mid, b, right, tolerance, depth - 1, rule);
}

}  // namespace

double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double tolerance, int max_depth) {
  static const GaussLegendreRule rule = gauss_legendre(16);
  if (a == b) return 0.0;
  return refine(f, a, b, panel_rule(f, a, b, rule), tolerance, max_depth, rule);
}

}  // namespace kottler::numerics
