#include "kottler/numerics/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kottler::numerics {

MonotoneCubic::MonotoneCubic(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()), slope_(x.size()) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw std::invalid_argument("MonotoneCubic: bad sample arrays");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("MonotoneCubic: x not increasing");
  }
  std::vector<double> secant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
  slope_[0] = secant[0];
  slope_[n - 1] = secant[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (secant[i - 1] * secant[i] <= 0.0) {
      slope_[i] = 0.0;
    } else {
      // Weighted harmonic mean (Fritsch-Butland), always inside the monotone region.
      const double h0 = x_[i] - x_[i - 1];
      const double h1 = x_[i + 1] - x_[i];
      const double w0 = 2.0 * h1 + h0;
      const double w1 = h1 + 2.0 * h0;
      slope_[i] = (w0 + w1) / (w0 / secant[i - 1] + w1 / secant[i]);
    }
  }
}

std::size_t MonotoneCubic::interval(double x) const { return bracket_index(x_, x); }

double MonotoneCubic::operator()(double x) const {
  const std::size_t i = interval(x);
  return hermite(x, x_[i], x_[i + 1], y_[i], y_[i + 1], slope_[i], slope_[i + 1]);
}

double MonotoneCubic::derivative(double x) const {
  const std::size_t i = interval(x);
  return hermite_derivative(x, x_[i], x_[i + 1], y_[i], y_[i + 1], slope_[i], slope_[i + 1]);
}

double hermite(double x, double x0, double x1, double y0, double y1, double d0, double d1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * y1 +
         (t3 - t2) * h * d1;
}

double hermite_derivative(double x, double x0, double x1, double y0, double y1, double d0,
                          double d1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  return ((6 * t2 - 6 * t) * y0 + (-6 * t2 + 6 * t) * y1) / h + (3 * t2 - 4 * t + 1) * d0 +
         (3 * t2 - 2 * t) * d1;
}

std::size_t bracket_index(std::span<const double> grid, double x) {
  if (grid.size() < 2) throw std::invalid_argument("bracket_index: need two samples");
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  std::size_t i = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
  return std::min(i, grid.size() - 2);
}

}  // namespace kottler::numerics
