#include "densband/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace densband {

namespace {
// 16-node Gauss-Legendre abscissae/weights on [-1, 1] (symmetric half).
constexpr double kX[8] = {0.0950125098376374401853193, 0.2816035507792589132304605,
                          0.4580167776572273863424194, 0.6178762444026437484466718,
                          0.7554044083550030338951012, 0.8656312023878317438804679,
                          0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kW[8] = {0.1894506104550684962853967, 0.1826034150449235888667637,
                          0.1691565193950025381893121, 0.1495959888165767320815017,
                          0.1246289712555338720524763, 0.0951585116824927848099251,
                          0.0622535239386478928628438, 0.0271524594117540948517806};
}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += kW[i] * (f(c - h * kX[i]) + f(c + h * kX[i]));
  return s * h;
}

double gauss_legendre_composite(const std::function<double(double)>& f, double a, double b,
                                int cells) {
  double s = 0.0, h = (b - a) / cells;
  for (int i = 0; i < cells; ++i) s += gauss_legendre(f, a + i * h, a + (i + 1) * h);
  return s;
}

double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           const std::vector<double>& breakpoints, int min_cells_per_piece) {
  std::vector<double> pts{a, b};
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i + 1] > pts[i])
      s += gauss_legendre_composite(f, pts[i], pts[i + 1], min_cells_per_piece);
  return s;
}

}  // namespace densband
