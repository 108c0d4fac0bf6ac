#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kottler::numerics {

/// Shape-preserving piecewise cubic (Fritsch-Carlson slopes). Monotone data
/// stays monotone, which matters when a monotone u(r) is re-parametrized by u.
class MonotoneCubic {
 public:
  MonotoneCubic(std::span<const double> x, std::span<const double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> slope_;
};

/// Cubic Hermite on [x0, x1] from values and first derivatives.
double hermite(double x, double x0, double x1, double y0, double y1, double d0, double d1);
double hermite_derivative(double x, double x0, double x1, double y0, double y1, double d0,
                          double d1);

/// Index i with grid[i] <= x <= grid[i+1], clamped to [0, n-2].
std::size_t bracket_index(std::span<const double> grid, double x);

}  // namespace kottler::numerics
