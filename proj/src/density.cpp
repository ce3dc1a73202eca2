#include "densband/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "densband/quadrature.hpp"

namespace densband {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;

double grid_min(const std::function<double(double)>& f, double a, double b, int points) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i)
    m = std::min(m, f(a + (b - a) * i / static_cast<double>(points - 1)));
  return m;
}
}  // namespace

DensitySpec gaussian_mixture(const std::vector<double>& weights, const std::vector<double>& means,
                             const std::vector<double>& sds, std::pair<double, double> F,
                             std::optional<double> holder_t) {
  std::size_t m = weights.size();
  if (m == 0 || means.size() != m || sds.size() != m)
    throw std::invalid_argument("gaussian_mixture: weights/means/sds must have equal size");
  double wsum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(weights[i] > 0.0)) throw std::invalid_argument("gaussian_mixture: weights > 0");
    if (!(sds[i] > 0.0)) throw std::invalid_argument("gaussian_mixture: sds > 0");
    wsum += weights[i];
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw std::invalid_argument("gaussian_mixture: weights must sum to one");

  DensitySpec d;
  d.kind = "gaussian_mixture";
  std::vector<double> w = weights, mu = means, sd = sds;
  d.pdf = [w, mu, sd](double x) {
    double v = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      double z = (x - mu[i]) / sd[i];
      v += w[i] * kInvSqrt2Pi * std::exp(-0.5 * z * z) / sd[i];
    }
    return v;
  };
  d.sample1 = [w, mu, sd](PhiloxRng& rng) {
    double u = rng.uniform();
    std::size_t i = 0;
    double acc = w[0];
    while (u > acc && i + 1 < w.size()) acc += w[++i];
    return mu[i] + sd[i] * rng.normal();
  };
  d.holder_t = holder_t;
  d.F = F;
  d.quad_lo = mu[0] - 10.0 * sd[0];
  d.quad_hi = mu[0] + 10.0 * sd[0];
  for (std::size_t i = 1; i < m; ++i) {
    d.quad_lo = std::min(d.quad_lo, mu[i] - 10.0 * sd[i]);
    d.quad_hi = std::max(d.quad_hi, mu[i] + 10.0 * sd[i]);
  }
  d.delta = grid_min(d.pdf, F.first, F.second, 2049);
  validate_density(d);
  return d;
}

DensitySpec standard_normal() { return gaussian_mixture({1.0}, {0.0}, {1.0}); }

void validate_density(const DensitySpec& d) {
  if (!d.pdf) {
    if (d.kind == "file_sample") return;
    throw std::invalid_argument("density: evaluator required");
  }
  double mass = integrate_piecewise(d.pdf, d.quad_lo, d.quad_hi, d.breakpoints, 64);
  if (std::abs(mass - 1.0) > 1e-6)
    throw std::runtime_error("density: evaluator integrates to " + std::to_string(mass) +
                             ", not 1");
  if (!(d.delta > 0.0)) throw std::runtime_error("density: delta must be positive on F");
  for (int i = 0; i < 2049; ++i) {
    double x = d.F.first + (d.F.second - d.F.first) * i / 2048.0;
    if (d.pdf(x) < d.delta * (1.0 - 1e-12))
      throw std::runtime_error("density: pdf dips below delta on F");
  }
}

double haar_detail_coefficient(const DensitySpec& f, int l, long k) {
  if (!f.pdf) throw std::invalid_argument("haar_detail_coefficient: evaluator required");
  double h = std::ldexp(1.0, -l);
  double a = k * h, mid = (k + 0.5) * h, b = (k + 1) * h;
  double left = integrate_piecewise(f.pdf, a, mid, f.breakpoints, 4);
  double right = integrate_piecewise(f.pdf, mid, b, f.breakpoints, 4);
  return std::sqrt(std::ldexp(1.0, l)) * (left - right);
}

DensitySpec build_condition3_density(const DensitySpec& base, double t, long k0, int l0,
                                     int l_max, double eps_guard) {
  if (!base.pdf) throw std::invalid_argument("build_condition3_density: base needs an evaluator");
  if (!(t > 0.0)) throw std::invalid_argument("build_condition3_density: t > 0 required");
  if (l0 < 1 || l_max < l0) throw std::invalid_argument("build_condition3_density: need 1 <= l0 <= l_max");
  if (k0 < 0 || k0 >= (1L << l0))
    throw std::invalid_argument(
        "build_condition3_density: need 0 <= k0 < 2^l0 so the modified cells stay in [0,1]");
  if (!(eps_guard > 0.0 && eps_guard < 1.0))
    throw std::invalid_argument("build_condition3_density: eps_guard in (0,1)");

  // raise |beta_{l k0}| to the threshold 2^{-l(t+1/2)} wherever it is below
  std::vector<double> bumps(l_max - l0 + 1, 0.0);
  for (int l = l0; l <= l_max; ++l) {
    double beta = haar_detail_coefficient(base, l, k0);
    double thr = std::exp2(-l * (t + 0.5));
    if (std::abs(beta) < thr) bumps[l - l0] = thr - beta;
  }

  DensitySpec g;
  g.kind = "condition3_haar";
  g.F = base.F;
  g.quad_lo = base.quad_lo;
  g.quad_hi = base.quad_hi;
  g.holder_t = t;

  // piecewise-constant perturbation sum_l bump_l psi_{l k0}; jumps only at
  // the edges and midpoints of the modified cells
  for (int l = l0; l <= l_max; ++l) {
    double h = std::ldexp(1.0, -l);
    g.breakpoints.push_back(k0 * h);
    g.breakpoints.push_back((k0 + 0.5) * h);
    g.breakpoints.push_back((k0 + 1) * h);
  }
  std::sort(g.breakpoints.begin(), g.breakpoints.end());
  g.breakpoints.erase(std::unique(g.breakpoints.begin(), g.breakpoints.end()),
                      g.breakpoints.end());

  auto base_pdf = base.pdf;
  auto delta_eval = [bumps, k0, l0, l_max](double x) {
    double v = 0.0;
    for (int l = l0; l <= l_max; ++l) {
      double b = bumps[l - l0];
      if (b == 0.0) continue;
      double z = std::ldexp(x, l) - k0;  // 2^l x - k0
      if (z >= 0.0 && z < 1.0) v += b * std::sqrt(std::ldexp(1.0, l)) * (z < 0.5 ? 1.0 : -1.0);
    }
    return v;
  };
  g.pdf = [base_pdf, delta_eval](double x) { return base_pdf(x) + delta_eval(x); };

  // exact sup of the piecewise-constant perturbation: midpoints of its pieces
  double reg_lo = g.breakpoints.front(), reg_hi = g.breakpoints.back();
  double sup_delta = 0.0;
  for (std::size_t i = 0; i + 1 < g.breakpoints.size(); ++i)
    sup_delta = std::max(sup_delta,
                         std::abs(delta_eval(0.5 * (g.breakpoints[i] + g.breakpoints[i + 1]))));

  double floor_needed = base.delta * (1.0 - eps_guard);
  double gmin = grid_min(g.pdf, g.F.first, g.F.second, 2049);
  for (std::size_t i = 0; i + 1 < g.breakpoints.size(); ++i) {
    double x = 0.5 * (g.breakpoints[i] + g.breakpoints[i + 1]);
    gmin = std::min(gmin, g.pdf(x));
  }
  if (gmin < floor_needed)
    throw std::runtime_error(
        "build_condition3_density: l0 too small; perturbation sup " +
        std::to_string(sup_delta) + " drives the density to " + std::to_string(gmin) +
        " < delta(1-eps) = " + std::to_string(floor_needed));

  g.delta = gmin;

  // rejection sampler against base + sup_delta on the modified region
  auto base_sample = base.sample1;
  double W = sup_delta * (reg_hi - reg_lo);
  auto g_pdf = g.pdf;
  g.sample1 = [base_sample, base_pdf, g_pdf, sup_delta, reg_lo, reg_hi, W](PhiloxRng& rng) {
    for (int iter = 0; iter < 100000; ++iter) {
      double x;
      if (rng.uniform() * (1.0 + W) < W) {
        x = reg_lo + (reg_hi - reg_lo) * rng.uniform();
      } else {
        x = base_sample(rng);
      }
      double envelope = base_pdf(x) + (x >= reg_lo && x < reg_hi ? sup_delta : 0.0);
      if (rng.uniform() * envelope <= g_pdf(x)) return x;
    }
    throw std::runtime_error("condition3 sampler: rejection loop failed to accept");
  };

  validate_density(g);
  return g;
}

bool check_coverage(const BandResult& band, const DensitySpec& truth) {
  if (!truth.pdf)
    throw std::invalid_argument("check_coverage: density must carry an exact evaluator");
  return check_coverage(band, truth.pdf);
}

}  // namespace densband
