#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace densband {

namespace detail {
inline void mulhilo64(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}
}  // namespace detail

/// Philox4x64-10 counter-based block function (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3"). One block of four 64-bit words per
/// (counter, key) pair; distinct keys give independent sequences, which is
/// what makes per-repetition seeding order-free.
inline std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> x,
                                               std::array<std::uint64_t, 2> k) {
  constexpr std::uint64_t M0 = 0xD2E7470EE14C6C93ULL;
  constexpr std::uint64_t M1 = 0xCA5A826395121157ULL;
  constexpr std::uint64_t W0 = 0x9E3779B97F4A7C15ULL;
  constexpr std::uint64_t W1 = 0xBB67AE8584CAA73BULL;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    detail::mulhilo64(M0, x[0], hi0, lo0);
    detail::mulhilo64(M1, x[2], hi1, lo1);
    x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    k[0] += W0;
    k[1] += W1;
  }
  return x;
}

/// Deterministic RNG stream keyed by (seed, stream). Stateless apart from the
/// block counter, so any number of streams can run concurrently.
class PhiloxRng {
 public:
  explicit PhiloxRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream}, counter_{0, 0, 0, 0}, pos_(4) {}

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      ++counter_[0];
      if (counter_[0] == 0) ++counter_[1];
      block_ = philox4x64(counter_, key_);
      pos_ = 0;
    }
    return block_[pos_++];
  }

  /// Uniform on (0, 1]; never 0, so log() stays finite.
  double uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (second value of each pair cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> block_{};
  int pos_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace densband
