#pragma once

#include <Eigen/Core>
#include <functional>

#include "densband/constants.hpp"
#include "densband/estimator.hpp"

namespace densband {

/// Tuning of the resolution selector. `m_prime` scales the comparison
/// threshold M = m_prime * sqrt(max(sup-norm plug-in, 1)); `sup_grid` is the
/// grid on which sup-norms of curve differences are taken.
struct LepskiConfig {
  double m_prime = 1.5;
  Eigen::VectorXd sup_grid;
};

/// Smallest j in J whose estimate is within M sqrt(2^l l / n2) of every finer
/// estimate l > j (j_max passes vacuously, so the minimum always exists; it
/// doubles as the conservative fallback). The sup-norm plug-in is the grid
/// sup of |f_{n2}(. , j_max)|.
int lepski_select(const KernelSpec& spec, const Eigen::VectorXd& s2, const ResolutionGrid& grid,
                  const LepskiConfig& cfg);

/// Upper Gumbel quantile: the x with exp(-exp(-x)) = 1 - alpha,
/// alpha in (0, 1).
double gumbel_quantile(double alpha);

/// A confidence band: center curve, pointwise half-widths and everything that
/// went into them.
struct BandResult {
  Eigen::VectorXd grid;
  Eigen::VectorXd center;
  Eigen::VectorXd halfwidth;
  int j_hat = 0;
  int u_n = 0;
  double sigma_hat = 0.0;
  NormingConstants constants;
  double x_quantile = 0.0;
  double alpha = 0.0;
  double threshold_M = 0.0;
  double m_prime = 0.0;
  double eps_floor = 0.0;
  long n1 = 0;
  long n2 = 0;

  Eigen::VectorXd lower() const { return center - halfwidth; }
  Eigen::VectorXd upper() const { return center + halfwidth; }
};

/// Full band construction: selector on s2, undersmoothing by u_n levels,
/// center from s1 at level j_hat + u_n, half-width
///   s_n(y) = sigma_hat c(K) sqrt(max(center(y), eps_floor)) (x/A + B),
/// sigma_hat = sqrt(2^{j_hat+u_n}/n1). Throws "level too extreme for this
/// sample size" when x/A + B <= 0.
BandResult construct_band(const KernelSpec& spec, const SampleSplit& split,
                          const ResolutionGrid& grid, const LepskiConfig& cfg, double alpha,
                          std::pair<double, double> interval, double eps_floor = 1e-4);

/// True iff truth(y) lies in [center - halfwidth, center + halfwidth] at
/// every grid point.
bool check_coverage(const BandResult& band, const std::function<double(double)>& truth);

}  // namespace densband
