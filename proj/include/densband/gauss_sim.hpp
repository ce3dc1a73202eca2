#pragma once

#include <Eigen/Core>

#include "densband/constants.hpp"
#include "densband/rng.hpp"

namespace densband {

/// One realization of the white-noise coordinates of the limit field
/// Y(t) = sum_m phi(t - m) g_m on [0, 2^j]. `g` holds g_m for
/// m in [g_lo, g_lo + g.size()); the pad beyond [0, 2^j] is sized from the
/// coefficient decay so the truncated tail of the sum is below 1e-10 in sup.
/// For a convolution kernel, g instead discretizes dW on a step-`dt` grid
/// starting at `t0`.
struct GaussianFieldSample {
  std::string family;
  int j = 0;
  long pad = 0;
  long g_lo = 0;
  double t0 = 0.0;
  double dt = 1.0;
  Eigen::VectorXd g;
};

/// Draw the Gaussian coordinates for one repetition.
GaussianFieldSample sample_gaussian_field(const KernelSpec& spec, int j, PhiloxRng& rng);

/// sup_{t in [0, 2^j]} |Y(t)| / c(K) for a given realization. Exact for Haar
/// (max over cells) and r = 2 (piecewise linear: max over the integer
/// lattice); for r in {3, 4} the per-cell polynomial (degree r-1) is
/// maximized at its endpoints and interior critical points, which is exact
/// as well. The convolution field is evaluated on its white-noise grid.
double field_sup(const KernelSpec& spec, const GaussianFieldSample& field);

/// Draw one realization and return its normalized sup.
double simulate_sup(const KernelSpec& spec, int j, PhiloxRng& rng);

/// r(s, t) = E Y(s) Y(t) = sum_k phi(s-k) phi(t-k), truncated symmetrically
/// (the summation window shifts with floor(s), floor(t), so
/// r(s+1, t+1) = r(s, t) exactly). Convolution kernels use quadrature of
/// int K(s-u) K(t-u) du.
double covariance_eval(const KernelSpec& spec, double s, double t);

/// Empirical check of the Gumbel limit for normalized suprema.
struct LimitTestReport {
  std::string family;
  int j = 0;
  long reps = 0;
  double ks_stat = 0.0;
  Eigen::VectorXd normalized;  ///< sorted A(j) (sup_i - B(j))
};

double gumbel_cdf(double x);

/// Kolmogorov-Smirnov distance between the empirical law of `draws` and the
/// Gumbel distribution.
double ks_distance_to_gumbel(Eigen::VectorXd draws);

/// reps independent sup draws (stream = rep index, so results do not depend
/// on evaluation order), normalized by (A(j), B(j)) from norming().
LimitTestReport gumbel_ks_test(const KernelSpec& spec, int j, long reps, std::uint64_t seed);

}  // namespace densband
