#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>

#include "densband/experiment.hpp"
#include "densband/gauss_sim.hpp"
#include "densband/io.hpp"

using nlohmann::json;
using namespace densband;

namespace {

json lemma1_json(int r) {
  KernelSpec spec = KernelSpec::battle_lemarie(r);
  const CoefficientSeq& a = spec.phi().coefficients();
  VarianceProfile p = lemma1_summary(SplineOrder(r), a);
  json j;
  j["family"] = p.family;
  j["sigma_sq"] = p.sigma_max_sq;
  j["sigma"] = std::sqrt(p.sigma_max_sq);
  j["argmax_offsets"] = p.argmax_offsets;
  if (r == 3) {
    j["M"] = p.M;
    j["D"] = norming_correction_D(spec);
  }
  if (r == 4) {
    j["A"] = p.A_quartic;
    j["C"] = p.C;
    j["D"] = norming_correction_D(spec);
  }
  j["c_K"] = c_of_K(spec);
  j["coefficients"] = {{"lo", a.lo}, {"hi", a.hi}, {"decay_rate", a.decay_rate},
                       {"sum", a.sum()}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive confidence bands for nonparametric density estimation"};
  app.require_subcommand(1);

  std::string config_path, data_path, out_dir, family = "bl2";
  int j_level = 13, r_order = 3;
  long reps = 20000;
  std::uint64_t seed = 20260810;

  CLI::App* band = app.add_subcommand("band", "confidence band for observations in a file");
  band->add_option("--config", config_path, "JSON config")->required();
  band->add_option("--data", data_path, "observations (newline-delimited or CSV column 'x')")
      ->required();
  band->add_option("--out", out_dir, "output directory")->required();

  CLI::App* coverage = app.add_subcommand("coverage", "Monte Carlo coverage experiment");
  coverage->add_option("--config", config_path, "JSON config")->required();
  coverage->add_option("--out", out_dir, "output directory")->required();

  CLI::App* limits = app.add_subcommand("limits", "Gumbel limit simulation for suprema");
  limits->add_option("--family", family, "haar|bl2|bl3|bl4|biweight");
  limits->add_option("--j", j_level, "resolution level");
  limits->add_option("--reps", reps, "repetitions");
  limits->add_option("--seed", seed, "64-bit seed");
  limits->add_option("--out", out_dir, "output directory")->required();

  CLI::App* lemma1 = app.add_subcommand("lemma1", "variance-profile constants of a spline family");
  lemma1->add_option("--r", r_order, "spline order (2, 3 or 4)")->required();
  lemma1->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (band->parsed()) {
      run_band(ExperimentConfig::from_file(config_path), data_path, out_dir);
    } else if (coverage->parsed()) {
      ExperimentConfig cfg = ExperimentConfig::from_file(config_path);
      CoverageReport rep = run_coverage(cfg);
      std::filesystem::create_directories(out_dir);
      write_text_file(out_dir + "/coverage_report.json", rep.to_json(cfg).dump(2) + "\n");
      std::cout << "coverage " << rep.coverage << " (" << rep.covered << "/"
                << rep.covered + rep.uncovered << ", " << rep.errored << " errored)\n";
    } else if (limits->parsed()) {
      KernelSpec spec = KernelSpec::from_name(family);
      if (j_level < 2) throw std::invalid_argument("limits: --j >= 2 required");
      LimitTestReport rep = gumbel_ks_test(spec, j_level, reps, seed);
      std::filesystem::create_directories(out_dir);
      write_single_column_csv(rep.normalized, "normalized_sup",
                              out_dir + "/normalized_sup.csv");
      NormingConstants nc = norming(spec, j_level);
      json j;
      j["family"] = rep.family;
      j["j"] = rep.j;
      j["reps"] = rep.reps;
      j["seed"] = seed;
      j["ks_stat"] = rep.ks_stat;
      j["A"] = nc.A_l;
      j["B"] = nc.B_l;
      j["c_K"] = nc.c_K;
      write_text_file(out_dir + "/limits_report.json", j.dump(2) + "\n");
      std::cout << j.dump(2) << "\n";
    } else if (lemma1->parsed()) {
      if (r_order < 2 || r_order > 4)
        throw std::invalid_argument("lemma1: --r must be 2, 3 or 4");
      json j = lemma1_json(r_order);
      std::filesystem::create_directories(out_dir);
      write_text_file(out_dir + "/lemma1_bl" + std::to_string(r_order) + ".json",
                      j.dump(2) + "\n");
      write_coefficients_csv(KernelSpec::battle_lemarie(r_order).phi().coefficients(),
                             out_dir + "/coefficients_bl" + std::to_string(r_order) + ".csv");
      std::cout << j.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    json err;
    err["error"] = {{"type", "runtime"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
