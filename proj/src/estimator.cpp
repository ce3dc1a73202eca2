#include "densband/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace densband {

namespace {
// unbiased integer in [0, bound) (Lemire's multiply-with-rejection)
std::uint64_t uniform_below(PhiloxRng& rng, std::uint64_t bound) {
  std::uint64_t x = rng.next_u64();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  std::uint64_t lo = static_cast<std::uint64_t>(m);
  if (lo < bound) {
    std::uint64_t cutoff = (0 - bound) % bound;
    while (lo < cutoff) {
      x = rng.next_u64();
      m = static_cast<unsigned __int128>(x) * bound;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}
}  // namespace

SampleSplit split_sample(const Eigen::VectorXd& data, PhiloxRng& rng) {
  long n = data.size();
  if (n < 2) throw std::invalid_argument("split_sample: need at least 2 observations");
  std::vector<double> v(data.data(), data.data() + n);
  for (long i = n - 1; i > 0; --i) {
    long j = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(i + 1)));
    std::swap(v[i], v[j]);
  }
  SampleSplit out;
  out.s1.resize((n + 1) / 2);
  out.s2.resize(n / 2);
  for (long i = 0; i < n; ++i) {
    if (i % 2 == 0) out.s1[i / 2] = v[i];
    else out.s2[i / 2] = v[i];
  }
  return out;
}

ResolutionGrid resolution_grid(long n2, int r, double c_min, double c_max) {
  if (n2 < 16) throw std::invalid_argument("resolution_grid: n2 >= 16 required");
  if (!(c_min > 0.0) || !(c_max > 0.0))
    throw std::invalid_argument("resolution_grid: proportionality constants must be positive");
  double ln = std::log(static_cast<double>(n2));
  double jm = std::log2(c_min * std::pow(n2 / ln, 1.0 / (2.0 * r + 1.0)));
  double jM = std::log2(c_max * n2 / std::pow(ln, 4.0));
  ResolutionGrid g;
  g.j_min = static_cast<int>(std::lround(jm));
  int raw = static_cast<int>(std::lround(jM));
  if (g.j_min < 1)
    throw std::invalid_argument("resolution_grid: n2 too small to yield a valid grid");
  // the raw j_max formula is asymptotic and degenerate at desk-scale n where
  // (log n)^4 dominates; keep at least three levels above j_min
  g.j_max = std::max(raw, g.j_min + 3);
  g.clamped = raw < g.j_max;
  return g;
}

int undersmooth_level(long n) {
  if (n < 3) throw std::invalid_argument("undersmooth_level: n >= 3 required");
  double u = 2.0 * std::log2(std::log(static_cast<double>(n)));
  return std::max(1, static_cast<int>(std::lround(u)));
}

Eigen::VectorXd uniform_grid(double a, double b, double spacing) {
  if (!(b > a) || !(spacing > 0.0)) throw std::invalid_argument("uniform_grid: bad interval");
  long n = static_cast<long>(std::lround((b - a) / spacing)) + 1;
  Eigen::VectorXd g(n);
  for (long i = 0; i < n; ++i) g[i] = a + i * spacing;
  return g;
}

double default_grid_spacing(const ResolutionGrid& grid, int u_n) {
  return std::ldexp(1.0, -(grid.j_max + u_n + 3));
}

namespace {

CurveEstimate haar_estimate(const Eigen::VectorXd& data, double j, const Eigen::VectorXd& grid) {
  double scale = std::exp2(j);
  std::unordered_map<long, long> counts;
  counts.reserve(static_cast<std::size_t>(data.size()));
  for (long i = 0; i < data.size(); ++i)
    ++counts[static_cast<long>(std::floor(scale * data[i]))];
  CurveEstimate out;
  out.grid = grid;
  out.j = j;
  out.values.resize(grid.size());
  double w = scale / static_cast<double>(data.size());
  for (long i = 0; i < grid.size(); ++i) {
    auto it = counts.find(static_cast<long>(std::floor(scale * grid[i])));
    out.values[i] = it == counts.end() ? 0.0 : w * static_cast<double>(it->second);
  }
  return out;
}

CurveEstimate bl_estimate(const KernelSpec& spec, const Eigen::VectorXd& data, double j,
                          const Eigen::VectorXd& grid) {
  const ScalingFunction& phi = spec.phi();
  double scale = std::exp2(j);
  long clo = phi.cell_lo(), chi = phi.cell_hi();

  // level-j scaling coefficients c_k = (1/n) sum_i phi(2^j x_i - k): dense
  // over the k-range the data touches, accumulated in data order
  long kmin = std::numeric_limits<long>::max(), kmax = std::numeric_limits<long>::min();
  std::vector<long> cell(data.size());
  for (long i = 0; i < data.size(); ++i) {
    long m = static_cast<long>(std::floor(scale * data[i]));
    cell[i] = m;
    kmin = std::min(kmin, m - chi);
    kmax = std::max(kmax, m - clo);
  }
  std::vector<double> c(static_cast<std::size_t>(kmax - kmin + 1), 0.0);
  for (long i = 0; i < data.size(); ++i) {
    double z = scale * data[i];
    for (long k = cell[i] - chi; k <= cell[i] - clo; ++k) c[k - kmin] += phi(z - k);
  }
  double inv_n = 1.0 / static_cast<double>(data.size());

  CurveEstimate out;
  out.grid = grid;
  out.j = j;
  out.values.resize(grid.size());
  for (long i = 0; i < grid.size(); ++i) {
    double z = scale * grid[i];
    long mu = static_cast<long>(std::floor(z));
    double s = 0.0;
    long k0 = std::max(mu - chi, kmin), k1 = std::min(mu - clo, kmax);
    for (long k = k0; k <= k1; ++k) s += c[k - kmin] * phi(z - k);
    out.values[i] = scale * inv_n * s;
  }
  return out;
}

CurveEstimate conv_estimate(const KernelSpec& spec, const Eigen::VectorXd& data, double j,
                            const Eigen::VectorXd& grid) {
  const ConvolutionKernel& K = spec.conv();
  double scale = std::exp2(j);
  double reach = K.support_radius / scale;
  std::vector<double> x(data.data(), data.data() + data.size());
  std::sort(x.begin(), x.end());
  CurveEstimate out;
  out.grid = grid;
  out.j = j;
  out.values.resize(grid.size());
  double w = scale / static_cast<double>(data.size());
  for (long i = 0; i < grid.size(); ++i) {
    double y = grid[i];
    auto lo = std::lower_bound(x.begin(), x.end(), y - reach);
    auto hi = std::upper_bound(x.begin(), x.end(), y + reach);
    double s = 0.0;
    for (auto it = lo; it != hi; ++it) s += K.eval(scale * (y - *it));
    out.values[i] = w * s;
  }
  return out;
}

}  // namespace

CurveEstimate linear_estimate(const KernelSpec& spec, const Eigen::VectorXd& data, double j,
                              const Eigen::VectorXd& grid) {
  if (data.size() == 0) throw std::invalid_argument("linear_estimate: data must be nonempty");
  if (grid.size() == 0) throw std::invalid_argument("linear_estimate: grid must be nonempty");
  switch (spec.family()) {
    case KernelSpec::Family::Haar:
      return haar_estimate(data, j, grid);
    case KernelSpec::Family::BattleLemarie:
      return bl_estimate(spec, data, j, grid);
    case KernelSpec::Family::Convolution:
      return conv_estimate(spec, data, j, grid);
  }
  throw std::logic_error("linear_estimate: unreachable");
}

}  // namespace densband
