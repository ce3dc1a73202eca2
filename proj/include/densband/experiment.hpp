#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "densband/density.hpp"

namespace densband {

/// Default selector constant. Calibrated once with tools/mprime_calibrate
/// (n2 = 50000, standard normal, bl2, 200 reps, seed 20260810): the smallest
/// sweep value with >= 95% of selections at j_min; see README.
inline constexpr double kDefaultMPrime = 1.5;

inline constexpr double kDefaultEpsFloor = 1e-4;

/// JSON-able description of a test density.
struct DensityConfig {
  std::string kind = "gaussian_mixture";
  // gaussian_mixture
  std::vector<double> weights{1.0};
  std::vector<double> means{0.0};
  std::vector<double> sds{1.0};
  std::optional<double> holder_t;
  std::pair<double, double> F{-0.5, 1.5};
  // condition3_haar (base is the mixture above)
  double t = 0.6;
  long k0 = 1;
  int l0 = 4;
  std::optional<int> l_max;  ///< default: j_max + u_n + 2 from the experiment's n
  double eps_guard = 0.5;
};

/// One experiment = (kernel, density, sizes, level, seed). Every field has a
/// default; the effective config (defaults filled in) is echoed into all
/// output metadata.
struct ExperimentConfig {
  std::string kernel = "bl2";
  long n = 50000;
  double alpha = 0.10;
  long reps = 500;
  std::uint64_t seed = 20260810;
  double a = 0.0;
  double b = 1.0;
  double m_prime = kDefaultMPrime;
  double eps_floor = kDefaultEpsFloor;
  double c_min = 1.0;
  double c_max = 1.0;
  DensityConfig density;

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig from_file(const std::string& path);
  nlohmann::json to_json() const;
};

/// Build the runtime density from its config (resolving l_max from n).
DensitySpec make_density(const ExperimentConfig& cfg);
KernelSpec make_kernel(const ExperimentConfig& cfg);

/// Per-repetition outcome of a coverage experiment.
struct RepResult {
  int rep = 0;
  int j_hat = -1;
  bool errored = false;
  bool covered = false;
  double sup_halfwidth = 0.0;
  double mean_halfwidth = 0.0;
  bool covered_truth_studentized = false;  ///< diagnostic: sqrt(f) in place of sqrt(center)
  std::string error;
};

struct CoverageReport {
  long covered = 0;
  long uncovered = 0;
  long errored = 0;
  double coverage = 0.0;                    ///< covered / (covered + uncovered)
  double coverage_truth_studentized = 0.0;  ///< diagnostic companion
  std::vector<long> j_hist;                 ///< counts for j_min..j_max
  int j_min = 0;
  int j_max = 0;
  int u_n = 0;
  double mean_sup_halfwidth = 0.0;
  double median_sup_halfwidth = 0.0;
  double max_halfwidth = 0.0;
  std::vector<RepResult> reps;

  nlohmann::json to_json(const ExperimentConfig& cfg) const;
};

/// One repetition, seeded by (cfg.seed, rep); independent of every other rep.
RepResult run_coverage_rep(const ExperimentConfig& cfg, const KernelSpec& spec,
                           const DensitySpec& density, int rep);

/// Sample / band / check loop over cfg.reps repetitions. Errors are counted
/// in their own bucket, never as covered or uncovered.
CoverageReport run_coverage(const ExperimentConfig& cfg);

/// Band for observations read from `data_path`; writes band.csv
/// (y,center,lower,upper) and band_meta.json into out_dir. Byte-identical for
/// identical (file, config, seed).
void run_band(const ExperimentConfig& cfg, const std::string& data_path,
              const std::string& out_dir);

}  // namespace densband
