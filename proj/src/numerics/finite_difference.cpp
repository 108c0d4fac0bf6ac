#include "kottler/numerics/finite_difference.hpp"

#include <cmath>
#include <stdexcept>

namespace kottler::numerics {

std::vector<double> first_derivative(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 5) throw std::invalid_argument("first_derivative: need at least 5 samples");
  std::vector<double> d(n);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
  }
  d[0] = (-25.0 * y[0] + 48.0 * y[1] - 36.0 * y[2] + 16.0 * y[3] - 3.0 * y[4]) / (12.0 * h);
  d[1] = (-3.0 * y[0] - 10.0 * y[1] + 18.0 * y[2] - 6.0 * y[3] + y[4]) / (12.0 * h);
  d[n - 2] = (3.0 * y[n - 1] + 10.0 * y[n - 2] - 18.0 * y[n - 3] + 6.0 * y[n - 4] - y[n - 5]) /
             (12.0 * h);
  d[n - 1] = (25.0 * y[n - 1] - 48.0 * y[n - 2] + 36.0 * y[n - 3] - 16.0 * y[n - 4] +
              3.0 * y[n - 5]) /
             (12.0 * h);
  return d;
}

std::vector<double> second_derivative(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 6) throw std::invalid_argument("second_derivative: need at least 6 samples");
  std::vector<double> d(n);
  const double h2 = h * h;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (-y[i - 2] + 16.0 * y[i - 1] - 30.0 * y[i] + 16.0 * y[i + 1] - y[i + 2]) / (12.0 * h2);
  }
  // One-sided six-point stencils (fourth order).
  auto forward = [&](std::size_t i) {
    return (45.0 * y[i] - 154.0 * y[i + 1] + 214.0 * y[i + 2] - 156.0 * y[i + 3] +
            61.0 * y[i + 4] - 10.0 * y[i + 5]) /
           (12.0 * h2);
  };
  auto backward = [&](std::size_t i) {
    return (45.0 * y[i] - 154.0 * y[i - 1] + 214.0 * y[i - 2] - 156.0 * y[i - 3] +
            61.0 * y[i - 4] - 10.0 * y[i - 5]) /
           (12.0 * h2);
  };
  d[0] = forward(0);
  d[1] = (10.0 * y[0] - 15.0 * y[1] - 4.0 * y[2] + 14.0 * y[3] - 6.0 * y[4] + y[5]) / (12.0 * h2);
  d[n - 1] = backward(n - 1);
  d[n - 2] = (10.0 * y[n - 1] - 15.0 * y[n - 2] - 4.0 * y[n - 3] + 14.0 * y[n - 4] -
              6.0 * y[n - 5] + y[n - 6]) /
             (12.0 * h2);
  return d;
}

double uniform_spacing(std::span<const double> grid, double relative_tolerance) {
  if (grid.size() < 2) throw std::invalid_argument("uniform_spacing: need two samples");
  const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs((grid[i] - grid[i - 1]) - h) > relative_tolerance * std::abs(h)) {
      throw std::invalid_argument("uniform_spacing: grid is not uniform");
    }
  }
  return h;
}

}  // namespace kottler::numerics
