#pragma once

#include <string>
#include <vector>

#include "densband/kernel.hpp"

namespace densband {

/// Shape of the period-one variance profile sigma^2(t) = sum_k phi^2(t-k) of
/// the limiting Gaussian field: its maximum, where (mod 1) the maximum sits,
/// and the spline-order-specific curvature constants.
struct VarianceProfile {
  std::string family;
  double sigma_max_sq = 0.0;            ///< sigma_r^2
  std::vector<double> argmax_offsets;   ///< maxima locations mod 1
  double M = 0.0;                       ///< r = 3 only
  double A_quartic = 0.0;               ///< r = 4 only
  double C = 0.0;                       ///< r = 4 only
};

/// Gumbel norming pair (A(l), B(l)) plus the scale c(K) for one family at
/// resolution l. A(l) = sqrt(2 (log 2) l) for every family. Note: for the
/// r in {3,4} spline families the second-order correction in B(l) is divided
/// by A(l), while the Haar / r=2 correction is divided by 2 A(l); both forms
/// are kept as printed in their respective normalizations (see README).
struct NormingConstants {
  double A_l = 0.0;
  double B_l = 0.0;
  double c_K = 0.0;
  int level_l = 0;
  std::string family;
};

enum class SigmaMode { Direct, Closed };

/// sigma^2(t) of the Gaussian field for Haar / Battle-Lemarie families.
/// Direct mode sums the truncated series sum_k phi^2(t-k); closed mode
/// evaluates the per-order polynomial form (r in {2,3,4} only). Period 1.
double sigma_sq(const KernelSpec& spec, double t, SigmaMode mode);

/// Variance-profile constants from the coefficient sequence, r in {2,3,4}.
VarianceProfile lemma1_summary(SplineOrder r, const CoefficientSeq& coeffs);

/// c(K) = sqrt(sup_x int K^2(x,y) dy). Family shortcuts: Haar -> 1,
/// convolution -> L2 norm of K (quadrature), Battle-Lemarie -> sigma_r.
double c_of_K(const KernelSpec& spec);

/// D_r correction inside B(l) for the r in {3,4} spline families.
double norming_correction_D(const KernelSpec& spec);

/// Norming constants at resolution level l >= 2.
NormingConstants norming(const KernelSpec& spec, int l);

}  // namespace densband
