#include "densband/scaling.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "densband/io.hpp"

namespace densband {

namespace {
constexpr int kSymbolGridLog2 = 14;  // 2^14 sample points of the symbol

// Pi_r(xi) = sum_m N_{2r}(r+m) e^{-i m xi}: the 2r-order B-spline sampled at
// integers gives the autocorrelation of N_r, hence the orthonormalization
// symbol as a short cosine polynomial.
double symbol_value(int r, double xi) {
  double v = bspline_integer_sample(2 * r, r);
  for (int m = 1; m < r; ++m)
    v += 2.0 * bspline_integer_sample(2 * r, r + m) * std::cos(m * xi);
  return v;
}
}  // namespace

CoefficientSeq bl_coefficients(SplineOrder r, double tol) {
  if (r.value() == 1)
    throw std::invalid_argument("bl_coefficients: r = 1 is the Haar case and needs none");
  if (!(tol > 0.0)) throw std::invalid_argument("bl_coefficients: tol must be positive");

  const int N = 1 << kSymbolGridLog2;
  const double two_pi = 6.283185307179586476925286766559;
  std::vector<double> inv_sqrt(N);
  for (int jj = 0; jj < N; ++jj) {
    double p = symbol_value(r.value(), two_pi * jj / N);
    if (!(p > 0.0)) throw std::runtime_error("bl_coefficients: symbol not positive");
    inv_sqrt[jj] = 1.0 / std::sqrt(p);
  }

  // a_k = (1/N) sum_j cos(k xi_j) / sqrt(Pi_r(xi_j)); real and even in k, so
  // only k >= 0 is computed. The symbol is analytic and positive, so the
  // rectangle rule converges spectrally and 2^14 points are far below any
  // tolerance in play.
  auto coef = [&](long k) {
    double s = 0.0;
    for (int jj = 0; jj < N; ++jj) s += std::cos(two_pi * jj * k / N) * inv_sqrt[jj];
    return s / N;
  };

  std::vector<double> pos;  // a_0, a_1, ...
  pos.push_back(coef(0));
  long k = 1;
  int below = 0;
  while (below < 3 && k < N / 4) {
    double v = coef(k);
    pos.push_back(v);
    below = std::abs(v) < tol ? below + 1 : 0;
    ++k;
  }
  long hi = static_cast<long>(pos.size()) - 1;
  while (hi > 0 && std::abs(pos[hi]) < tol) --hi;

  CoefficientSeq seq;
  seq.lo = -hi;
  seq.hi = hi;
  seq.values.resize(2 * hi + 1);
  for (long i = -hi; i <= hi; ++i) seq.values[i + hi] = pos[std::labs(i)];

  double total = seq.sum();
  if (std::abs(total - 1.0) > 1e-8)
    throw std::runtime_error("bl_coefficients: normalization sum a_k != 1");

  // log-linear decay fit on the positive-k tail
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long cnt = 0;
  for (long i = 1; i <= hi; ++i) {
    double y = std::log(std::abs(pos[i]));
    sx += i; sy += y; sxx += static_cast<double>(i) * i; sxy += i * y;
    ++cnt;
  }
  double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  seq.decay_rate = std::exp(slope);
  if (!(seq.decay_rate > 0.0 && seq.decay_rate < 1.0))
    throw std::runtime_error("bl_coefficients: fitted decay rate outside (0,1)");
  return seq;
}

ScalingFunction::ScalingFunction(SplineOrder r, CoefficientSeq coeffs)
    : order_(r.value()), coeffs_(std::move(coeffs)) {
  // phi is nonzero on [lo, hi + r); cell m collects a_{m-i} N_r(s+i).
  cell_lo_ = coeffs_.lo;
  cell_hi_ = coeffs_.hi + order_ - 1;
  long ncells = cell_hi_ - cell_lo_ + 1;
  cells_ = Eigen::VectorXd::Zero(ncells * order_);
  for (long m = cell_lo_; m <= cell_hi_; ++m) {
    double* dst = cells_.data() + (m - cell_lo_) * order_;
    for (int i = 0; i < order_; ++i) {
      double a = coeffs_.at(m - i);
      if (a == 0.0) continue;
      Eigen::VectorXd p = bspline_piece_poly(order_, i);
      for (int d = 0; d < order_; ++d) dst[d] += a * p[d];
    }
  }
}

ScalingFunction ScalingFunction::haar() {
  CoefficientSeq one;
  one.lo = one.hi = 0;
  one.values = Eigen::VectorXd::Ones(1);
  one.decay_rate = 0.5;  // formally; the sequence has a single term
  return ScalingFunction(SplineOrder(1), std::move(one));
}

ScalingFunction ScalingFunction::battle_lemarie(SplineOrder r, double tol) {
  return ScalingFunction(r, bl_coefficients(r, tol));
}

Eigen::VectorXd ScalingFunction::cell_poly(long m) const {
  if (m < cell_lo_ || m > cell_hi_) return Eigen::VectorXd::Zero(order_);
  return cells_.segment((m - cell_lo_) * order_, order_);
}

double scaling_eval(const CoefficientSeq& coeffs, SplineOrder r, double x) {
  // at most r B-spline translates overlap x
  long m = static_cast<long>(std::floor(x));
  double v = 0.0;
  for (int i = 0; i < r.value(); ++i) v += coeffs.at(m - i) * bspline_eval(r, x - (m - i));
  return v;
}

void write_coefficients_csv(const CoefficientSeq& coeffs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "k,a_k\n";
  for (long k = coeffs.lo; k <= coeffs.hi; ++k)
    out << k << "," << format_double(coeffs.at(k)) << "\n";
}

}  // namespace densband
