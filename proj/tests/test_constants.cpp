#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "densband/constants.hpp"
#include "densband/quadrature.hpp"

using namespace densband;

namespace {
// brute-force oracle for sup_x int K^2(x, y) dy over one period
double grid_max_l2(const KernelSpec& spec, int grid_points) {
  double w = spec.phi().support_hi() - spec.phi().support_lo();
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    double x = static_cast<double>(i) / grid_points;
    double lo = std::floor(x - w), hi = std::ceil(x + w);
    double v = gauss_legendre_composite(
        [&](double y) { double k = kernel_eval(spec, x, y); return k * k; }, lo, hi,
        static_cast<int>(hi - lo));
    best = std::max(best, v);
  }
  return best;
}
}  // namespace

TEST_CASE("variance profile: frozen constants (40-digit oracle)") {
  KernelSpec bl2 = KernelSpec::battle_lemarie(2);
  KernelSpec bl3 = KernelSpec::battle_lemarie(3);
  KernelSpec bl4 = KernelSpec::battle_lemarie(4);

  VarianceProfile p2 = lemma1_summary(SplineOrder(2), bl2.phi().coefficients());
  CHECK(p2.sigma_max_sq == doctest::Approx(1.7320508075688773).epsilon(1e-12));  // = sqrt(3)
  CHECK(p2.argmax_offsets == std::vector<double>{0.0});

  VarianceProfile p3 = lemma1_summary(SplineOrder(3), bl3.phi().coefficients());
  CHECK(p3.M == doctest::Approx(14.386756528976556).epsilon(1e-11));
  CHECK(p3.sigma_max_sq == doctest::Approx(1.2098068660475748).epsilon(1e-11));
  CHECK(p3.argmax_offsets == std::vector<double>{0.5});
  CHECK(p3.M > 0.0);

  VarianceProfile p4 = lemma1_summary(SplineOrder(4), bl4.phi().coefficients());
  CHECK(p4.A_quartic == doctest::Approx(214.36300361405294).epsilon(1e-10));
  CHECK(p4.C == doctest::Approx(173.79796556791244).epsilon(1e-10));
  CHECK(p4.sigma_max_sq == doctest::Approx(1.2034563841794268).epsilon(1e-11));
  CHECK(p4.C > 0.0);
  CHECK(p4.A_quartic > 0.0);

  CHECK(norming_correction_D(bl3) == doctest::Approx(0.31540744385160809).epsilon(1e-10));
  CHECK(norming_correction_D(bl4) == doctest::Approx(0.33729929404997432).epsilon(1e-10));
}

TEST_CASE("sigma_sq: haar is flat, closed matches direct, period one") {
  KernelSpec haar = KernelSpec::haar();
  for (double t : {0.0, 0.31, 0.99, -2.5}) CHECK(sigma_sq(haar, t, SigmaMode::Direct) == 1.0);
  CHECK_THROWS_AS(sigma_sq(haar, 0.5, SigmaMode::Closed), std::invalid_argument);
  CHECK_THROWS_AS(sigma_sq(KernelSpec::convolution(biweight_kernel()), 0.5, SigmaMode::Direct),
                  std::invalid_argument);

  for (int r = 2; r <= 4; ++r) {
    KernelSpec spec = KernelSpec::battle_lemarie(r);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double t = static_cast<double>(i) / 1000.0;
      worst = std::max(worst, std::abs(sigma_sq(spec, t, SigmaMode::Direct) -
                                       sigma_sq(spec, t, SigmaMode::Closed)));
    }
    CHECK(worst < 1e-9);
    // period one in both modes
    CHECK(sigma_sq(spec, 0.37, SigmaMode::Direct) ==
          doctest::Approx(sigma_sq(spec, 1.37, SigmaMode::Direct)).epsilon(1e-12));
  }

  KernelSpec bl3 = KernelSpec::battle_lemarie(3);
  VarianceProfile p3 = lemma1_summary(SplineOrder(3), bl3.phi().coefficients());
  CHECK(sigma_sq(bl3, 0.5, SigmaMode::Closed) - sigma_sq(bl3, 0.0, SigmaMode::Closed) ==
        doctest::Approx(p3.M / 32.0).epsilon(1e-12));

  KernelSpec bl4 = KernelSpec::battle_lemarie(4);
  CHECK(sigma_sq(bl4, 0.0, SigmaMode::Closed) ==
        doctest::Approx(sigma_sq(bl4, 1.0, SigmaMode::Closed)).epsilon(1e-14));
}

TEST_CASE("variance maxima sit where they should") {
  for (int r = 2; r <= 4; ++r) {
    KernelSpec spec = KernelSpec::battle_lemarie(r);
    double best = -1.0, arg = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double t = static_cast<double>(i) / 1000.0;
      double v = sigma_sq(spec, t, SigmaMode::Direct);
      if (v > best) { best = v; arg = t; }
    }
    double expect = r == 3 ? 0.5 : 0.0;
    double dist = std::min(std::abs(arg - expect), 1.0 - std::abs(arg - expect));
    CHECK(dist <= 1.0 / 1000.0 + 1e-12);
    VarianceProfile p = lemma1_summary(SplineOrder(r), spec.phi().coefficients());
    CHECK(best <= p.sigma_max_sq + 1e-12);
    CHECK(p.sigma_max_sq > 0.0);
  }
}

TEST_CASE("c(K): shortcuts against the grid-search quadrature oracle") {
  CHECK(c_of_K(KernelSpec::haar()) == 1.0);
  KernelSpec bw = KernelSpec::convolution(biweight_kernel());
  CHECK(c_of_K(bw) == doctest::Approx(std::sqrt(5.0 / 7.0)).epsilon(1e-9));
  for (int r = 2; r <= 4; ++r) {
    KernelSpec spec = KernelSpec::battle_lemarie(r);
    double c = c_of_K(spec);
    double oracle = grid_max_l2(spec, 200);  // max lands exactly on the grid
    CHECK(c * c == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(std::abs(c - std::sqrt(oracle)) < 1e-9);
  }
}

TEST_CASE("norming constants") {
  const double log2 = std::log(2.0);
  KernelSpec haar = KernelSpec::haar();
  NormingConstants h8 = norming(haar, 8);
  CHECK(h8.A_l == doctest::Approx(3.3302184446307910).epsilon(1e-14));
  CHECK(h8.B_l == doctest::Approx(2.9011687359615464).epsilon(1e-14));
  CHECK(h8.c_K == 1.0);

  for (int l = 2; l <= 30; ++l) {
    CHECK(norming(haar, l).A_l == std::sqrt(2.0 * log2 * l));  // exact
    CHECK(norming(KernelSpec::battle_lemarie(3), l).A_l == std::sqrt(2.0 * log2 * l));
  }
  CHECK_THROWS_AS(norming(haar, 1), std::invalid_argument);

  // bl2 shares the Haar norming; only c(K) differs
  NormingConstants b2 = norming(KernelSpec::battle_lemarie(2), 8);
  CHECK(b2.B_l == doctest::Approx(h8.B_l).epsilon(1e-15));
  CHECK(b2.c_K == doctest::Approx(std::sqrt(1.7320508075688773)).epsilon(1e-12));

  // biweight: C = (1/2) int (K')^2 = 15/14, Ctilde = 3/2
  KernelSpec bw = KernelSpec::convolution(biweight_kernel());
  NormingConstants c8 = norming(bw, 8);
  CHECK(c8.B_l == doctest::Approx(3.1514242449664030).epsilon(1e-12));
  ConvolutionKernel nod = biweight_kernel();
  nod.twice_differentiable = false;
  CHECK_THROWS_AS(norming(KernelSpec::convolution(nod), 8), std::invalid_argument);

  // bl3: B < A exactly when log l + log(pi log 2) > log sqrt(1 + D_3)
  KernelSpec bl3 = KernelSpec::battle_lemarie(3);
  double D3 = norming_correction_D(bl3);
  for (int l : {2, 3, 8, 20}) {
    NormingConstants nc = norming(bl3, l);
    bool lhs = nc.B_l < nc.A_l;
    bool rhs = std::log(static_cast<double>(l)) + std::log(M_PI * log2) >
               std::log(std::sqrt(1.0 + D3));
    CHECK(lhs == rhs);
  }

  // A increasing, B/A -> 1
  double prev = 0.0;
  for (int l = 2; l <= 40; ++l) {
    double A = norming(haar, l).A_l;
    CHECK(A > prev);
    prev = A;
  }
  double r20 = norming(haar, 20).B_l / norming(haar, 20).A_l;
  double r200 = norming(haar, 200).B_l / norming(haar, 200).A_l;
  CHECK(std::abs(1.0 - r200) < std::abs(1.0 - r20));
  CHECK(std::abs(1.0 - r200) < 0.05);
}
