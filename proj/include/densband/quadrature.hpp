#pragma once

#include <functional>
#include <vector>

namespace densband {

/// Gauss-Legendre quadrature of f over [a, b], fixed 16-node rule.
/// Exact for polynomials up to degree 31.
double gauss_legendre(const std::function<double(double)>& f, double a, double b);

/// Composite Gauss-Legendre over [a, b] split into n equal cells.
double gauss_legendre_composite(const std::function<double(double)>& f, double a, double b,
                                int cells);

/// Composite quadrature that honors a sorted list of interior breakpoints
/// (kinks or jumps of the integrand); each smooth piece gets a composite
/// 16-node rule with at least `min_cells_per_piece` cells.
double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           const std::vector<double>& breakpoints, int min_cells_per_piece = 1);

}  // namespace densband
