#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>

#include "densband/bspline.hpp"

namespace densband {

/// Two-sided integer-indexed coefficient sequence a_k, lo <= k <= hi, with
/// exponentially decaying tails. Normalized so that sum_k a_k = 1
/// (equivalently: the scaling function it defines integrates to one).
struct CoefficientSeq {
  long lo = 0;
  long hi = 0;
  Eigen::VectorXd values;  ///< values[k - lo] = a_k
  double decay_rate = 0.0; ///< fitted lambda with |a_k| <~ c * lambda^|k|

  double at(long k) const {
    return (k < lo || k > hi) ? 0.0 : values[static_cast<Eigen::Index>(k - lo)];
  }
  double sum() const { return values.sum(); }
};

/// Coefficients a_k of the orthonormalized B-spline (Battle-Lemarie) scaling
/// function phi_r = sum_k a_k N_r(. - k), obtained by Fourier
/// orthonormalization: the 2pi-periodic symbol Pi_r(xi) = sum_k |N^_r(xi+2pi k)|^2
/// equals the cosine polynomial sum_m N_{2r}(r+m) e^{-i m xi}, is sampled on a
/// 2^14 grid, and 1/sqrt(Pi_r) is inverted back to coefficient space.
/// The result is symmetric (a_k = a_{-k}) and truncated where |a_k| < tol.
/// r = 1 is rejected: the Haar scaling function needs no orthonormalization.
CoefficientSeq bl_coefficients(SplineOrder r, double tol = 1e-12);

/// A scaling function phi(x) = sum_k a_k N_r(x - k) stored as one polynomial
/// of degree r-1 per integer cell, so evaluation is a Horner step after a
/// floor(). Covers Haar (r = 1, a_0 = 1) and Battle-Lemarie r in {2,3,4}.
class ScalingFunction {
 public:
  static ScalingFunction haar();
  static ScalingFunction battle_lemarie(SplineOrder r, double tol = 1e-12);

  /// phi(x); exactly zero outside [cell_lo, cell_hi + 1).
  double operator()(double x) const {
    double fl = std::floor(x);
    long m = static_cast<long>(fl);
    if (m < cell_lo_ || m > cell_hi_) return 0.0;
    double s = x - fl;
    const double* c = cells_.data() + (m - cell_lo_) * order_;
    double v = c[order_ - 1];
    for (int d = order_ - 2; d >= 0; --d) v = v * s + c[d];
    return v;
  }

  int order() const { return order_; }
  const CoefficientSeq& coefficients() const { return coeffs_; }
  long cell_lo() const { return cell_lo_; }
  long cell_hi() const { return cell_hi_; }
  double support_lo() const { return static_cast<double>(cell_lo_); }
  double support_hi() const { return static_cast<double>(cell_hi_ + 1); }

  /// Polynomial coefficients (constant first) of phi on [m, m+1).
  Eigen::VectorXd cell_poly(long m) const;

 private:
  ScalingFunction(SplineOrder r, CoefficientSeq coeffs);

  int order_;
  CoefficientSeq coeffs_;
  long cell_lo_ = 0;
  long cell_hi_ = -1;
  Eigen::VectorXd cells_;  ///< row-major (cell, degree), degree-major stride order_
};

/// Truncated sum phi(x) = sum_k a_k N_r(x - k); the reference evaluation path
/// (at most r B-spline terms contribute for any x).
double scaling_eval(const CoefficientSeq& coeffs, SplineOrder r, double x);

/// Write (k, a_k) rows as CSV with header "k,a_k".
void write_coefficients_csv(const CoefficientSeq& coeffs, const std::string& path);

}  // namespace densband
