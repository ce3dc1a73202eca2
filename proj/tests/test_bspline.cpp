#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "densband/bspline.hpp"
#include "densband/quadrature.hpp"
#include "densband/rng.hpp"

using namespace densband;

TEST_CASE("closed forms at pinned points") {
  CHECK(bspline_eval(SplineOrder(1), 0.5) == 1.0);
  CHECK(bspline_eval(SplineOrder(1), 1.0) == 0.0);
  CHECK(bspline_eval(SplineOrder(2), 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(bspline_eval(SplineOrder(3), 1.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(bspline_eval(SplineOrder(4), 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(bspline_eval(SplineOrder(3), -0.1) == 0.0);
  CHECK(bspline_eval(SplineOrder(3), 3.0) == 0.0);
  CHECK(bspline_eval(SplineOrder(4), 5.0) == 0.0);
}

TEST_CASE("recursion agrees with the closed forms") {
  PhiloxRng rng(11);
  for (int r = 1; r <= 4; ++r) {
    for (int i = 0; i < 500; ++i) {
      double x = -1.0 + 6.0 * rng.uniform();
      CHECK(bspline_eval(SplineOrder(r), x) ==
            doctest::Approx(bspline_eval_recursive(r, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("N_r is the convolution of N_{r-1} with the unit indicator") {
  // N_r(x) = int_{x-1}^{x} N_{r-1}(t) dt, checked by quadrature on a grid
  for (int r = 2; r <= 4; ++r) {
    for (int i = 0; i <= 200; ++i) {
      double x = -0.5 + (r + 1.0) * i / 200.0;
      double conv = integrate_piecewise(
          [&](double u) { return bspline_eval(SplineOrder(r - 1), u); }, x - 1.0, x,
          {0.0, 1.0, 2.0, 3.0}, 2);
      CHECK(bspline_eval(SplineOrder(r), x) == doctest::Approx(conv).epsilon(1e-10));
    }
  }
}

TEST_CASE("continuity for r >= 2 at the knots") {
  for (int r = 2; r <= 4; ++r) {
    for (int knot = 0; knot <= r; ++knot) {
      double lhs = bspline_eval(SplineOrder(r), knot - 1e-10);
      double rhs = bspline_eval(SplineOrder(r), knot + 1e-10);
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }
}

TEST_CASE("partition of unity of integer translates") {
  PhiloxRng rng(12);
  for (int r = 1; r <= 4; ++r) {
    for (int i = 0; i < 100; ++i) {
      double x = -3.0 + 9.0 * rng.uniform();
      double s = 0.0;
      for (int k = -8; k <= 8; ++k) s += bspline_eval(SplineOrder(r), x - k);
      CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("piece polynomials reproduce the closed forms") {
  for (int r = 1; r <= 4; ++r) {
    for (int i = 0; i < r; ++i) {
      Eigen::VectorXd c = bspline_piece_poly(r, i);
      for (double s : {0.0, 0.25, 0.5, 0.75, 0.99}) {
        double v = c[r - 1];
        for (int d = r - 2; d >= 0; --d) v = v * s + c[d];
        CHECK(v == doctest::Approx(bspline_eval(SplineOrder(r), s + i)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("integer samples up to order 8") {
  CHECK(bspline_integer_sample(2, 1) == doctest::Approx(1.0));
  CHECK(bspline_integer_sample(4, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // x120 at order 6: 1, 26, 66, 26, 1
  CHECK(bspline_integer_sample(6, 1) * 120 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bspline_integer_sample(6, 2) * 120 == doctest::Approx(26.0).epsilon(1e-12));
  CHECK(bspline_integer_sample(6, 3) * 120 == doctest::Approx(66.0).epsilon(1e-12));
  // x5040 at order 8: 1, 120, 1191, 2416, ...
  CHECK(bspline_integer_sample(8, 1) * 5040 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bspline_integer_sample(8, 2) * 5040 == doctest::Approx(120.0).epsilon(1e-12));
  CHECK(bspline_integer_sample(8, 3) * 5040 == doctest::Approx(1191.0).epsilon(1e-12));
  CHECK(bspline_integer_sample(8, 4) * 5040 == doctest::Approx(2416.0).epsilon(1e-12));
  CHECK(bspline_integer_sample(8, 8) == 0.0);
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(SplineOrder(0), std::invalid_argument);
  CHECK_THROWS_AS(SplineOrder(5), std::invalid_argument);
}
