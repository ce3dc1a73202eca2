#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "densband/quadrature.hpp"
#include "densband/rng.hpp"
#include "densband/scaling.hpp"

using namespace densband;

TEST_CASE("coefficients: frozen values from an independent quadrature oracle") {
  // a_k = (1/pi) int_0^pi cos(k xi) / sqrt(Pi_r(xi)) dxi, evaluated with
  // 40-digit adaptive quadrature (mpmath); frozen to double precision
  CoefficientSeq a2 = bl_coefficients(SplineOrder(2));
  CHECK(a2.at(0) == doctest::Approx(1.2916754821350826).epsilon(1e-13));
  CHECK(a2.at(1) == doctest::Approx(-0.17466322755517728).epsilon(1e-13));
  CHECK(a2.at(2) == doctest::Approx(0.035210112768778523).epsilon(1e-13));
  CHECK(a2.at(5) == doctest::Approx(-0.00044592139837435322).epsilon(1e-11));
  CHECK(a2.at(-3) == a2.at(3));

  CoefficientSeq a3 = bl_coefficients(SplineOrder(3));
  CHECK(a3.at(0) == doctest::Approx(1.5855235615337166).epsilon(1e-13));
  CHECK(a3.at(1) == doctest::Approx(-0.3833074143778075).epsilon(1e-13));
  CHECK(a3.at(2) == doctest::Approx(0.12241008490034098).epsilon(1e-13));

  CoefficientSeq a4 = bl_coefficients(SplineOrder(4));
  CHECK(a4.at(0) == doctest::Approx(1.9697616817880010).epsilon(1e-13));
  CHECK(a4.at(1) == doctest::Approx(-0.6724304852836222).epsilon(1e-13));
  CHECK(a4.at(2) == doctest::Approx(0.26870424357566757).epsilon(1e-13));
}

TEST_CASE("coefficients: normalization, alternating decay, fitted rate") {
  for (int r = 2; r <= 4; ++r) {
    CoefficientSeq a = bl_coefficients(SplineOrder(r));
    CHECK(std::abs(a.sum() - 1.0) < 1e-10);
    for (long k = 0; k <= 8; ++k) {
      CHECK(a.at(k) * (k % 2 == 0 ? 1.0 : -1.0) > 0.0);  // alternating signs
      CHECK(std::abs(a.at(k + 1)) < std::abs(a.at(k)));  // decaying magnitude
    }
    CHECK(a.decay_rate > 0.0);
    CHECK(a.decay_rate < 1.0);
    // log-linear fit really bounds the tail: |a_k| <= c * lambda^|k|
    double c_fit = std::abs(a.at(1)) / a.decay_rate * 3.0;
    for (long k = a.lo; k <= a.hi; ++k)
      CHECK(std::abs(a.at(k)) <= c_fit * std::pow(a.decay_rate, std::labs(k)) + 1e-12);
    CHECK(std::abs(a.at(a.hi + 1)) == 0.0);  // truncated tail
  }
  CHECK_THROWS_AS(bl_coefficients(SplineOrder(1)), std::invalid_argument);
}

TEST_CASE("partition of unity at 200 random points") {
  PhiloxRng rng(21);
  for (int r = 2; r <= 4; ++r) {
    ScalingFunction phi = ScalingFunction::battle_lemarie(SplineOrder(r));
    for (int i = 0; i < 200; ++i) {
      double x = -4.0 + 8.0 * rng.uniform();
      double s = 0.0;
      for (long k = static_cast<long>(x - phi.support_hi()) - 1;
           k <= static_cast<long>(x - phi.support_lo()) + 1; ++k)
        s += phi(x - k);
      CHECK(std::abs(s - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("orthonormality of integer translates by quadrature") {
  // integrand is polynomial on every unit cell, so an integer-aligned
  // composite 16-node rule is exact up to coefficient truncation
  for (int r = 2; r <= 4; ++r) {
    ScalingFunction phi = ScalingFunction::battle_lemarie(SplineOrder(r));
    for (long k = 0; k <= 5; ++k) {
      double lo = phi.support_lo(), hi = phi.support_hi() + k;
      int cells = static_cast<int>(hi - lo);
      double ip = gauss_legendre_composite(
          [&](double x) { return phi(x) * phi(x - k); }, lo, hi, cells);
      double expect = k == 0 ? 1.0 : 0.0;
      CHECK(std::abs(ip - expect) < 1e-6);
    }
  }
}

TEST_CASE("scaling_eval matches the cell-polynomial evaluator") {
  PhiloxRng rng(22);
  for (int r = 2; r <= 4; ++r) {
    CoefficientSeq a = bl_coefficients(SplineOrder(r));
    ScalingFunction phi = ScalingFunction::battle_lemarie(SplineOrder(r));
    for (int i = 0; i < 300; ++i) {
      double x = -30.0 + 60.0 * rng.uniform();
      CHECK(scaling_eval(a, SplineOrder(r), x) == doctest::Approx(phi(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("phi_2 at integers picks out a_{k-1}") {
  CoefficientSeq a = bl_coefficients(SplineOrder(2));
  for (long k = -3; k <= 3; ++k)
    CHECK(scaling_eval(a, SplineOrder(2), static_cast<double>(k)) ==
          doctest::Approx(a.at(k - 1)).epsilon(1e-14));
}

TEST_CASE("translated sums hit one and the tail is dead") {
  CoefficientSeq a = bl_coefficients(SplineOrder(3));
  double s = 0.0;
  for (long k = -40; k <= 40; ++k) s += scaling_eval(a, SplineOrder(3), 0.37 - k);
  CHECK(std::abs(s - 1.0) < 1e-8);
  ScalingFunction phi = ScalingFunction::battle_lemarie(SplineOrder(3));
  CHECK(std::abs(phi(1e6)) < 1e-10);
  CHECK(std::abs(phi(phi.support_hi() + 0.5)) < 1e-10);
}
