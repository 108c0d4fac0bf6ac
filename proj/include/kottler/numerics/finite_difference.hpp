#pragma once

#include <span>
#include <vector>

namespace kottler::numerics {

/// Fourth-order first derivative on a uniform grid with spacing h: 5-point
/// central stencil in the interior, 4th-order one-sided stencils on the first
/// and last two samples. Requires at least 5 samples.
std::vector<double> first_derivative(std::span<const double> y, double h);

/// Fourth-order second derivative, same stencil layout as first_derivative.
std::vector<double> second_derivative(std::span<const double> y, double h);

/// Spacing of a uniform grid; throws std::invalid_argument when the spacing
/// varies by more than `relative_tolerance`.
double uniform_spacing(std::span<const double> grid, double relative_tolerance = 1e-9);

}  // namespace kottler::numerics
