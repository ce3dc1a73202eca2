#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace densband {

/// Order of the cardinal B-spline / spline-wavelet family. r = 1 is the
/// unit-interval indicator (the Haar case); the piecewise closed forms used
/// by the fast paths cover r <= 4.
class SplineOrder {
 public:
  explicit SplineOrder(int r) : r_(r) {
    if (r < 1 || r > 4) throw std::invalid_argument("SplineOrder: r must be in {1,2,3,4}");
  }
  int value() const { return r_; }

 private:
  int r_;
};

/// N_r(x): the r-fold convolution of 1_[0,1), supported on [0, r],
/// continuous for r >= 2. Piecewise closed forms for r in {1,..,4}.
double bspline_eval(SplineOrder r, double x);

/// Same function by the Cox-de Boor style recursion
/// N_r = (x N_{r-1}(x) + (r-x) N_{r-1}(x-1)) / (r-1), valid for any r >= 1.
double bspline_eval_recursive(int r, double x);

/// Coefficients (constant first) of the polynomial s -> N_r(s + i) on
/// s in [0,1), for piece i in [0, r). These are the building blocks of all
/// per-cell polynomial evaluations.
Eigen::VectorXd bspline_piece_poly(int r, int i);

/// N_r(m) at integer m, computed by the recursion (needed up to r = 8 for
/// the orthonormalization of order-4 splines).
double bspline_integer_sample(int r, int m);

}  // namespace densband
