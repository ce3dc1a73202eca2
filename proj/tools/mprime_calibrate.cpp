// Calibration sweep for the selector constant M'. For each candidate, draw
// `reps` subsamples of size n2 from the standard normal, run the selector,
// and report how often the choice lands in [j_min, j_min + 2]. The shipped
// default in experiment.hpp is the smallest sweep value with >= 95%
// concentration at n2 = 50000 (seed 20260810, bl2, 200 reps).
//
// Usage: mprime_calibrate [n2] [reps] [seed]

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "densband/band.hpp"
#include "densband/density.hpp"

using namespace densband;

int main(int argc, char** argv) {
  long n2 = argc > 1 ? std::atol(argv[1]) : 50000;
  long reps = argc > 2 ? std::atol(argv[2]) : 200;
  std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 20260810ULL;

  KernelSpec spec = KernelSpec::battle_lemarie(2);
  DensitySpec density = standard_normal();
  ResolutionGrid grid = resolution_grid(n2, spec.order());
  int u_n = undersmooth_level(2 * n2);
  Eigen::VectorXd sup_grid = uniform_grid(0.0, 1.0, default_grid_spacing(grid, u_n));

  std::printf("n2=%ld reps=%ld seed=%llu grid=[%d,%d]\n", n2, reps,
              static_cast<unsigned long long>(seed), grid.j_min, grid.j_max);
  std::printf("%8s %-24s %s\n", "M'", "j_hat histogram", "frac in [j_min, j_min+2]");

  for (double mprime : {0.4, 0.6, 0.8, 1.0, 1.25, 1.5, 2.0, 3.0}) {
    std::vector<long> hist(grid.j_max - grid.j_min + 1, 0);
    long good = 0;
    for (long rep = 0; rep < reps; ++rep) {
      PhiloxRng rng(seed, static_cast<std::uint64_t>(rep));
      Eigen::VectorXd s2(n2);
      for (long i = 0; i < n2; ++i) s2[i] = density.sample1(rng);
      LepskiConfig cfg;
      cfg.m_prime = mprime;
      cfg.sup_grid = sup_grid;
      int j = lepski_select(spec, s2, grid, cfg);
      ++hist[j - grid.j_min];
      if (j <= grid.j_min + 2) ++good;
    }
    std::printf("%8.2f  ", mprime);
    for (long h : hist) std::printf("%6ld", h);
    std::printf("    %.3f\n", static_cast<double>(good) / reps);
  }
  return 0;
}
