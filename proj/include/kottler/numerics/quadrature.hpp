#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace kottler::numerics {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on P_n with the asymptotic initial guess.
/// Weights sum to 2 to round-off for every n >= 1.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite rule over `panels` equal sub-intervals of [a, b].
double composite_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t panels, std::size_t nodes);

/// Globally adaptive bisection of [a, b] with a 16-point rule per panel;
/// a panel is accepted when its two halves agree with it to
/// `tolerance * (1 + |total|)`.
double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double tolerance = 1e-14, int max_depth = 40);

}  // namespace kottler::numerics
