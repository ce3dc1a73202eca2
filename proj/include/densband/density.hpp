#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "densband/band.hpp"
#include "densband/rng.hpp"

namespace densband {

/// A test density: exact evaluator, sampler, declared smoothness and the
/// class parameters (delta, F) it claims. `file_sample` densities carry no
/// evaluator and cannot be used in coverage experiments.
struct DensitySpec {
  std::string kind;  ///< "gaussian_mixture" | "condition3_haar" | "file_sample"
  std::function<double(double)> pdf;         ///< empty for file_sample
  std::function<double(PhiloxRng&)> sample1; ///< one draw
  std::optional<double> holder_t;
  double delta = 0.0;                    ///< computed min of pdf over F
  std::pair<double, double> F{-0.5, 1.5};
  std::vector<double> breakpoints;       ///< non-smooth points, for quadrature
  double quad_lo = -10.0;                ///< effective support for integration
  double quad_hi = 10.0;
};

/// Gaussian mixture with exact evaluator and direct sampler. Validates that
/// the evaluator integrates to one (quadrature, 1e-6) and records
/// delta = min over an F-grid.
DensitySpec gaussian_mixture(const std::vector<double>& weights, const std::vector<double>& means,
                             const std::vector<double>& sds,
                             std::pair<double, double> F = {-0.5, 1.5},
                             std::optional<double> holder_t = std::nullopt);

DensitySpec standard_normal();

/// Haar detail coefficient beta_{lk}(f) = int psi_{lk} f, psi = 1_[0,1/2) - 1_[1/2,1),
/// by breakpoint-aware quadrature.
double haar_detail_coefficient(const DensitySpec& f, int l, long k);

/// Bump the Haar detail coefficients of `base` at position k0: for
/// l0 <= l <= l_max, any |beta_{l k0}| below 2^{-l(t+1/2)} is raised to that
/// threshold. The perturbation integrates to zero, lives in
/// [k0 2^-l, (k0+1) 2^-l] (all inside [0,1] when 0 <= k0 < 2^{l0}), and the
/// result keeps pdf >= delta (1 - eps_guard) on F; if not, throws with the
/// computed perturbation bound. The sampler is rejection against
/// base + ||perturbation||_inf on the modified region.
DensitySpec build_condition3_density(const DensitySpec& base, double t, long k0, int l0,
                                     int l_max, double eps_guard = 0.5);

/// Coverage of the band against the density's exact evaluator.
bool check_coverage(const BandResult& band, const DensitySpec& truth);

/// Re-check the (delta, F) class declaration on a grid; throws on violation.
void validate_density(const DensitySpec& d);

}  // namespace densband
