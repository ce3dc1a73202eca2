#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "densband/kernel.hpp"
#include "densband/quadrature.hpp"
#include "densband/rng.hpp"

using namespace densband;

TEST_CASE("haar kernel is the common-cell indicator") {
  KernelSpec haar = KernelSpec::haar();
  CHECK(kernel_eval(haar, 0.3, 0.7) == 1.0);
  CHECK(kernel_eval(haar, 0.3, 1.2) == 0.0);
  CHECK(kernel_eval(haar, -0.2, -0.9) == 1.0);
  CHECK(kernel_eval(haar, -0.2, 0.1) == 0.0);
}

TEST_CASE("biweight validates and evaluates") {
  KernelSpec bw = KernelSpec::convolution(biweight_kernel());
  CHECK(kernel_eval(bw, 1.0, 1.0) == doctest::Approx(15.0 / 16.0).epsilon(1e-15));
  CHECK(kernel_eval(bw, 0.0, 1.5) == 0.0);
  CHECK(bw.order() == 2);

  ConvolutionKernel bad = biweight_kernel();
  bad.eval = [](double u) { return std::abs(u) < 1.0 ? 0.5 * (1.0 + u) : 0.0; };
  CHECK_THROWS_AS(KernelSpec::convolution(bad), std::invalid_argument);

  ConvolutionKernel off = biweight_kernel();
  off.eval = [](double u) { return std::abs(u) < 1.0 ? 0.6 : 0.0; };  // mass 1.2
  CHECK_THROWS_AS(KernelSpec::convolution(off), std::invalid_argument);
}

TEST_CASE("spline projection kernel is symmetric") {
  PhiloxRng rng(31);
  for (int r = 2; r <= 4; ++r) {
    KernelSpec spec = KernelSpec::battle_lemarie(r);
    for (int i = 0; i < 100; ++i) {
      double x = -5.0 + 10.0 * rng.uniform();
      double y = -5.0 + 10.0 * rng.uniform();
      CHECK(kernel_eval(spec, x, y) == doctest::Approx(kernel_eval(spec, y, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("projection kernel reproduces polynomials up to degree r-1") {
  PhiloxRng rng(32);
  for (int r = 2; r <= 4; ++r) {
    KernelSpec spec = KernelSpec::battle_lemarie(r);
    double w = spec.phi().support_hi() - spec.phi().support_lo();
    for (int trial = 0; trial < 20; ++trial) {
      double x = -1.0 + 2.0 * rng.uniform();
      for (int l = 0; l < r; ++l) {
        double lo = std::floor(x - w), hi = std::ceil(x + w);
        double integral = gauss_legendre_composite(
            [&](double y) { return kernel_eval(spec, x, y) * std::pow(y, l); }, lo, hi,
            static_cast<int>(hi - lo));
        CHECK(std::abs(integral - std::pow(x, l)) < 1e-5);
      }
    }
  }
}

TEST_CASE("kernel family parsing") {
  CHECK(KernelSpec::from_name("haar").family() == KernelSpec::Family::Haar);
  CHECK(KernelSpec::from_name("bl3").order() == 3);
  CHECK(KernelSpec::from_name("biweight").family() == KernelSpec::Family::Convolution);
  CHECK_THROWS_AS(KernelSpec::from_name("epanechnikov"), std::invalid_argument);
  CHECK(KernelSpec::battle_lemarie(1).family() == KernelSpec::Family::Haar);
}
