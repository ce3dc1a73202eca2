#include "densband/bspline.hpp"

namespace densband {

double bspline_eval(SplineOrder r, double x) {
  switch (r.value()) {
    case 1:
      return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    case 2:
      if (x < 0.0 || x >= 2.0) return 0.0;
      return x < 1.0 ? x : 2.0 - x;
    case 3:
      if (x < 0.0 || x >= 3.0) return 0.0;
      if (x < 1.0) return 0.5 * x * x;
      if (x < 2.0) return 0.75 - (x - 1.5) * (x - 1.5);
      return 0.5 * (3.0 - x) * (3.0 - x);
    case 4: {
      if (x < 0.0 || x >= 4.0) return 0.0;
      double y = x <= 2.0 ? x : 4.0 - x;  // N_4(x) = N_4(4-x)
      if (y < 1.0) return y * y * y / 6.0;
      return 2.0 / 3.0 - 0.5 * y * (y - 2.0) * (y - 2.0);
    }
  }
  return 0.0;
}

double bspline_eval_recursive(int r, double x) {
  if (r < 1) throw std::invalid_argument("bspline_eval_recursive: r >= 1 required");
  if (x < 0.0 || x >= r) return 0.0;
  if (r == 1) return 1.0;
  return (x * bspline_eval_recursive(r - 1, x) +
          (r - x) * bspline_eval_recursive(r - 1, x - 1.0)) /
         (r - 1);
}

Eigen::VectorXd bspline_piece_poly(int r, int i) {
  if (r < 1 || r > 4 || i < 0 || i >= r)
    throw std::invalid_argument("bspline_piece_poly: need 1 <= r <= 4, 0 <= i < r");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(r);
  switch (r) {
    case 1:
      c << 1.0;
      break;
    case 2:
      if (i == 0) c << 0.0, 1.0;        // s
      else        c << 1.0, -1.0;       // 1 - s
      break;
    case 3:
      if (i == 0)      c << 0.0, 0.0, 0.5;    // s^2/2
      else if (i == 1) c << 0.5, 1.0, -1.0;   // 3/4 - (s-1/2)^2
      else             c << 0.5, -1.0, 0.5;   // (1-s)^2/2
      break;
    case 4:
      if (i == 0)      c << 0.0, 0.0, 0.0, 1.0 / 6.0;
      else if (i == 1) c << 1.0 / 6.0, 0.5, 0.5, -0.5;       // 2/3 - (s+1)(s-1)^2/2
      else if (i == 2) c << 2.0 / 3.0, 0.0, -1.0, 0.5;       // 2/3 - (2-s)s^2/2
      else             c << 1.0 / 6.0, -0.5, 0.5, -1.0 / 6.0;  // (1-s)^3/6
      break;
  }
  return c;
}

double bspline_integer_sample(int r, int m) {
  if (m <= 0 || m >= r) return 0.0;
  return bspline_eval_recursive(r, static_cast<double>(m));
}

}  // namespace densband
