#pragma once

#include <Eigen/Core>

#include "densband/kernel.hpp"
#include "densband/rng.hpp"

namespace densband {

/// The two halves of a shuffled sample; |n1 - n2| <= 1 by construction.
struct SampleSplit {
  Eigen::VectorXd s1;
  Eigen::VectorXd s2;
  long n1() const { return s1.size(); }
  long n2() const { return s2.size(); }
};

/// Seeded Fisher-Yates shuffle followed by deterministic interleaving
/// (even positions -> s1, odd -> s2).
SampleSplit split_sample(const Eigen::VectorXd& data, PhiloxRng& rng);

/// Dyadic resolution window J = [j_min, j_max].
struct ResolutionGrid {
  int j_min = 0;
  int j_max = 0;
  bool clamped = false;  ///< true when j_max was raised to j_min + 3
};

/// j_min = round(log2(c_min (n2/log n2)^{1/(2r+1)})),
/// j_max = round(log2(c_max n2/(log n2)^4)), then raised to at least
/// j_min + 3 (with `clamped` set) since the raw j_max formula is degenerate
/// at small n. Throws when n2 < 16 or the resulting j_min < 1.
ResolutionGrid resolution_grid(long n2, int r, double c_min = 1.0, double c_max = 1.0);

/// u_n = max(1, round(2 log2 log n)), i.e. 2^{u_n} tracks (log n)^2.
int undersmooth_level(long n);

/// A density curve f_n(. , j) evaluated on an ordered grid.
struct CurveEstimate {
  Eigen::VectorXd grid;
  Eigen::VectorXd values;
  double j = 0.0;
  std::string subsample;
};

/// Linear kernel-type estimate f_n(y, j) = (2^j/n) sum_m K(2^j y, 2^j x_m)
/// on the given grid. Noninteger j is allowed. Cost is O((n + |grid|) * w)
/// where w is the kernel's coefficient support width; only the k with
/// phi(2^j y - k) != 0 are visited.
CurveEstimate linear_estimate(const KernelSpec& spec, const Eigen::VectorXd& data, double j,
                              const Eigen::VectorXd& grid);

/// Uniform grid over [a, b] including both endpoints.
Eigen::VectorXd uniform_grid(double a, double b, double spacing);

/// Default evaluation-grid spacing 2^{-(j_max + u_n + 3)}: finer than the
/// finest resolution in use.
double default_grid_spacing(const ResolutionGrid& grid, int u_n);

}  // namespace densband
