#include "densband/gauss_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "densband/quadrature.hpp"

namespace densband {

namespace {

// |polynomial| max over s in [0,1]: endpoints plus interior critical points.
double abs_poly_max_01(const double* c, int deg) {
  auto eval = [&](double s) {
    double v = c[deg];
    for (int d = deg - 1; d >= 0; --d) v = v * s + c[d];
    return std::abs(v);
  };
  double best = std::max(eval(0.0), eval(1.0));
  if (deg == 2) {
    if (c[2] != 0.0) {
      double s = -c[1] / (2.0 * c[2]);
      if (s > 0.0 && s < 1.0) best = std::max(best, eval(s));
    }
  } else if (deg == 3) {
    double A = 3.0 * c[3], B = 2.0 * c[2], C = c[1];
    if (A == 0.0) {
      if (B != 0.0) {
        double s = -C / B;
        if (s > 0.0 && s < 1.0) best = std::max(best, eval(s));
      }
    } else {
      double disc = B * B - 4.0 * A * C;
      if (disc >= 0.0) {
        double rt = std::sqrt(disc);
        for (double s : {(-B + rt) / (2.0 * A), (-B - rt) / (2.0 * A)})
          if (s > 0.0 && s < 1.0) best = std::max(best, eval(s));
      }
    }
  }
  return best;
}

}  // namespace

GaussianFieldSample sample_gaussian_field(const KernelSpec& spec, int j, PhiloxRng& rng) {
  if (j < 1) throw std::invalid_argument("sample_gaussian_field: j >= 1 required");
  GaussianFieldSample f;
  f.family = spec.name();
  f.j = j;
  long T = 1L << j;
  switch (spec.family()) {
    case KernelSpec::Family::Haar: {
      f.pad = 0;
      f.g_lo = 0;
      f.g.resize(T + 1);
      break;
    }
    case KernelSpec::Family::BattleLemarie: {
      // pad covers the truncated coefficient support, so the discarded tail
      // of sum_m phi(t-m) g_m stays below 1e-10 in sup
      f.pad = spec.phi().coefficients().hi + spec.order();
      f.g_lo = -f.pad;
      f.g.resize(T + 2 * f.pad + 1);
      break;
    }
    case KernelSpec::Family::Convolution: {
      double R = spec.conv().support_radius;
      f.dt = 2.0 * R / 64.0;
      f.t0 = -R;
      long m = static_cast<long>(std::ceil((T + 2.0 * R) / f.dt)) + 1;
      f.g_lo = 0;
      f.pad = static_cast<long>(std::ceil(R / f.dt));
      f.g.resize(m);
      break;
    }
  }
  for (long i = 0; i < f.g.size(); ++i) f.g[i] = rng.normal();
  return f;
}

double field_sup(const KernelSpec& spec, const GaussianFieldSample& field) {
  long T = 1L << field.j;
  switch (spec.family()) {
    case KernelSpec::Family::Haar:
      // Y(t) = g_[t]; the sup over [0, 2^j] is the max over 2^j + 1 cells
      return field.g.cwiseAbs().maxCoeff();

    case KernelSpec::Family::BattleLemarie: {
      const ScalingFunction& phi = spec.phi();
      const CoefficientSeq& a = phi.coefficients();
      int r = spec.order();
      // h = a * g; per cell l, Y(l+s) = sum_{i<r} N_r(s+i) h_{l-i}
      long q_lo = -(r - 1), q_hi = T - 1;
      Eigen::VectorXd h(q_hi - q_lo + 1);
      for (long q = q_lo; q <= q_hi; ++q) {
        double s = 0.0;
        for (long p = a.lo; p <= a.hi; ++p) {
          long gi = q - p - field.g_lo;
          if (gi >= 0 && gi < field.g.size()) s += a.at(p) * field.g[gi];
        }
        h[q - q_lo] = s;
      }
      double best = 0.0;
      if (r == 2) {
        // piecewise linear: the max over [0, 2^j] sits on the integer lattice
        for (long l = 0; l <= T; ++l) best = std::max(best, std::abs(h[l - 1 - q_lo]));
      } else {
        Eigen::VectorXd p0 = bspline_piece_poly(r, 0);
        std::vector<Eigen::VectorXd> pieces;
        for (int i = 0; i < r; ++i) pieces.push_back(bspline_piece_poly(r, i));
        double c[4];
        for (long l = 0; l < T; ++l) {
          for (int d = 0; d < r; ++d) c[d] = 0.0;
          for (int i = 0; i < r; ++i) {
            double hv = h[l - i - q_lo];
            const Eigen::VectorXd& pc = pieces[i];
            for (int d = 0; d < r; ++d) c[d] += hv * pc[d];
          }
          best = std::max(best, abs_poly_max_01(c, r - 1));
        }
      }
      return best / c_of_K(spec);
    }

    case KernelSpec::Family::Convolution: {
      const ConvolutionKernel& K = spec.conv();
      double R = K.support_radius;
      double sqdt = std::sqrt(field.dt);
      double best = 0.0;
      long nt = static_cast<long>(std::floor(T / field.dt)) + 1;
      long win = static_cast<long>(std::ceil(2.0 * R / field.dt)) + 1;
      for (long it = 0; it < nt; ++it) {
        double t = it * field.dt;
        long m0 = std::max<long>(0, static_cast<long>(std::floor((t - R - field.t0) / field.dt)));
        double y = 0.0;
        for (long m = m0; m <= std::min<long>(field.g.size() - 1, m0 + win); ++m)
          y += K.eval(t - (field.t0 + m * field.dt)) * field.g[m];
        best = std::max(best, std::abs(y) * sqdt);
      }
      return best / c_of_K(spec);
    }
  }
  return 0.0;
}

double simulate_sup(const KernelSpec& spec, int j, PhiloxRng& rng) {
  GaussianFieldSample f = sample_gaussian_field(spec, j, rng);
  return field_sup(spec, f);
}

double covariance_eval(const KernelSpec& spec, double s, double t) {
  switch (spec.family()) {
    case KernelSpec::Family::Haar:
      return std::floor(s) == std::floor(t) ? 1.0 : 0.0;
    case KernelSpec::Family::BattleLemarie: {
      const ScalingFunction& phi = spec.phi();
      long ms = static_cast<long>(std::floor(s)), mt = static_cast<long>(std::floor(t));
      // window pinned to the integer parts so r(s+1, t+1) = r(s, t) exactly
      long k0 = std::max(ms, mt) - phi.cell_hi();
      long k1 = std::min(ms, mt) - phi.cell_lo();
      double sum = 0.0;
      for (long k = k0; k <= k1; ++k) sum += phi(s - k) * phi(t - k);
      return sum;
    }
    case KernelSpec::Family::Convolution: {
      const ConvolutionKernel& K = spec.conv();
      double R = K.support_radius;
      double v = std::abs(t - s);
      if (v >= 2.0 * R) return 0.0;
      return gauss_legendre_composite(
          [&](double w) { return K.eval(w) * K.eval(w - v); }, v - R, R, 64);
    }
  }
  return 0.0;
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double ks_distance_to_gumbel(Eigen::VectorXd draws) {
  if (draws.size() == 0) throw std::invalid_argument("ks_distance_to_gumbel: no draws");
  std::sort(draws.data(), draws.data() + draws.size());
  double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (long i = 0; i < draws.size(); ++i) {
    double F = gumbel_cdf(draws[i]);
    d = std::max(d, std::max((i + 1) / n - F, F - i / n));
  }
  return d;
}

LimitTestReport gumbel_ks_test(const KernelSpec& spec, int j, long reps, std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("gumbel_ks_test: reps >= 1 required");
  NormingConstants nc = norming(spec, j);
  LimitTestReport rep;
  rep.family = spec.name();
  rep.j = j;
  rep.reps = reps;
  rep.normalized.resize(reps);
  for (long i = 0; i < reps; ++i) {
    PhiloxRng rng(seed, static_cast<std::uint64_t>(i));
    rep.normalized[i] = nc.A_l * (simulate_sup(spec, j, rng) - nc.B_l);
  }
  std::sort(rep.normalized.data(), rep.normalized.data() + reps);
  rep.ks_stat = ks_distance_to_gumbel(rep.normalized);
  return rep;
}

}  // namespace densband
