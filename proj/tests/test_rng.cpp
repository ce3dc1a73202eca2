#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "densband/rng.hpp"

using namespace densband;

TEST_CASE("philox4x64-10 known-answer vectors") {
  // reference blocks generated with numpy.random.Philox (4x64, 10 rounds)
  auto b = philox4x64({1, 0, 0, 0}, {0, 0});
  CHECK(b[0] == 0x02f4ba6408e4d89bULL);
  CHECK(b[1] == 0x3dd62b0b9ca8c5b2ULL);
  CHECK(b[2] == 0x1c8667a55d902e79ULL);
  CHECK(b[3] == 0x907d7a052fd5b4dcULL);

  b = philox4x64({1, 0, 0, 0}, {0xdeadbeefULL, 0});
  CHECK(b[0] == 0xa4e930dc738acaf1ULL);
  CHECK(b[1] == 0xb1c7ecc6484e9cf0ULL);
  CHECK(b[2] == 0x6b88a411909298aaULL);
  CHECK(b[3] == 0x66f3c896201f7262ULL);

  b = philox4x64({6, 0, 0, 7}, {0x0123456789abcdefULL, 0xfedcba9876543210ULL});
  CHECK(b[0] == 0x4a1469144b47b394ULL);
  CHECK(b[1] == 0x1b70c284350668e7ULL);
  CHECK(b[2] == 0x6859bcb84717604aULL);
  CHECK(b[3] == 0x78aef9c4bec0e254ULL);
}

TEST_CASE("streams are reproducible and distinct") {
  PhiloxRng a(42, 0), b(42, 0), c(42, 1);
  for (int i = 0; i < 100; ++i) {
    auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
}

TEST_CASE("uniform lies in (0, 1]") {
  PhiloxRng rng(7);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("normal moments") {
  PhiloxRng rng(123);
  const long n = 200000;
  double s = 0, s2 = 0, s3 = 0;
  for (long i = 0; i < n; ++i) {
    double z = rng.normal();
    s += z;
    s2 += z * z;
    s3 += z * z * z;
  }
  CHECK(std::abs(s / n) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(s2 / n - 1.0) < 6.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(s3 / n) < 4.0 * std::sqrt(15.0 / n));
}
