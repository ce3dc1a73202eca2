#include "densband/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "densband/io.hpp"

namespace densband {

using nlohmann::json;

namespace {

DensityConfig density_from_json(const json& j) {
  DensityConfig d;
  for (auto& [key, val] : j.items()) {
    if (key == "kind") d.kind = val.get<std::string>();
    else if (key == "weights") d.weights = val.get<std::vector<double>>();
    else if (key == "means") d.means = val.get<std::vector<double>>();
    else if (key == "sds") d.sds = val.get<std::vector<double>>();
    else if (key == "holder_t") { if (!val.is_null()) d.holder_t = val.get<double>(); }
    else if (key == "F") { auto v = val.get<std::vector<double>>(); d.F = {v.at(0), v.at(1)}; }
    else if (key == "t") d.t = val.get<double>();
    else if (key == "k0") d.k0 = val.get<long>();
    else if (key == "l0") d.l0 = val.get<int>();
    else if (key == "l_max") { if (!val.is_null()) d.l_max = val.get<int>(); }
    else if (key == "eps_guard") d.eps_guard = val.get<double>();
    else throw std::invalid_argument("config: unknown density key '" + key + "'");
  }
  if (d.kind != "gaussian_mixture" && d.kind != "condition3_haar")
    throw std::invalid_argument("config: unknown density kind '" + d.kind + "'");
  return d;
}

json density_to_json(const DensityConfig& d) {
  json j;
  j["kind"] = d.kind;
  j["weights"] = d.weights;
  j["means"] = d.means;
  j["sds"] = d.sds;
  j["holder_t"] = d.holder_t ? json(*d.holder_t) : json(nullptr);
  j["F"] = {d.F.first, d.F.second};
  if (d.kind == "condition3_haar") {
    j["t"] = d.t;
    j["k0"] = d.k0;
    j["l0"] = d.l0;
    j["l_max"] = d.l_max ? json(*d.l_max) : json(nullptr);
    j["eps_guard"] = d.eps_guard;
  }
  return j;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  for (auto& [key, val] : j.items()) {
    if (key == "kernel") c.kernel = val.get<std::string>();
    else if (key == "n") c.n = val.get<long>();
    else if (key == "alpha") c.alpha = val.get<double>();
    else if (key == "reps") c.reps = val.get<long>();
    else if (key == "seed") c.seed = val.get<std::uint64_t>();
    else if (key == "interval") {
      auto v = val.get<std::vector<double>>();
      c.a = v.at(0);
      c.b = v.at(1);
    } else if (key == "m_prime") c.m_prime = val.get<double>();
    else if (key == "eps_floor") c.eps_floor = val.get<double>();
    else if (key == "grid") {
      for (auto& [gk, gv] : val.items()) {
        if (gk == "c_min") c.c_min = gv.get<double>();
        else if (gk == "c_max") c.c_max = gv.get<double>();
        else throw std::invalid_argument("config: unknown grid key '" + gk + "'");
      }
    } else if (key == "density") c.density = density_from_json(val);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  if (c.n < 4) throw std::invalid_argument("config: n >= 4 required");
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw std::invalid_argument("config: alpha in (0,1)");
  if (c.reps < 1) throw std::invalid_argument("config: reps >= 1 required");
  if (!(c.b > c.a)) throw std::invalid_argument("config: interval must be nonempty");
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  json j = json::parse(in);
  return from_json(j);
}

json ExperimentConfig::to_json() const {
  json j;
  j["kernel"] = kernel;
  j["n"] = n;
  j["alpha"] = alpha;
  j["reps"] = reps;
  j["seed"] = seed;
  j["interval"] = {a, b};
  j["m_prime"] = m_prime;
  j["eps_floor"] = eps_floor;
  j["grid"] = {{"c_min", c_min}, {"c_max", c_max}};
  j["density"] = density_to_json(density);
  return j;
}

KernelSpec make_kernel(const ExperimentConfig& cfg) { return KernelSpec::from_name(cfg.kernel); }

DensitySpec make_density(const ExperimentConfig& cfg) {
  DensitySpec base = gaussian_mixture(cfg.density.weights, cfg.density.means, cfg.density.sds,
                                      cfg.density.F, cfg.density.holder_t);
  if (cfg.density.kind == "gaussian_mixture") return base;
  int l_max;
  if (cfg.density.l_max) {
    l_max = *cfg.density.l_max;
  } else {
    KernelSpec spec = make_kernel(cfg);
    ResolutionGrid grid = resolution_grid(cfg.n / 2, spec.order(), cfg.c_min, cfg.c_max);
    l_max = grid.j_max + undersmooth_level(cfg.n) + 2;
  }
  return build_condition3_density(base, cfg.density.t, cfg.density.k0, cfg.density.l0, l_max,
                                  cfg.density.eps_guard);
}

RepResult run_coverage_rep(const ExperimentConfig& cfg, const KernelSpec& spec,
                           const DensitySpec& density, int rep) {
  RepResult r;
  r.rep = rep;
  try {
    PhiloxRng rng(cfg.seed, static_cast<std::uint64_t>(rep));
    Eigen::VectorXd x(cfg.n);
    for (long i = 0; i < cfg.n; ++i) x[i] = density.sample1(rng);
    SampleSplit split = split_sample(x, rng);

    ResolutionGrid grid = resolution_grid(split.n2(), spec.order(), cfg.c_min, cfg.c_max);
    int u_n = undersmooth_level(cfg.n);
    LepskiConfig lep;
    lep.m_prime = cfg.m_prime;
    lep.sup_grid = uniform_grid(cfg.a, cfg.b, default_grid_spacing(grid, u_n));

    BandResult band =
        construct_band(spec, split, grid, lep, cfg.alpha, {cfg.a, cfg.b}, cfg.eps_floor);
    r.j_hat = band.j_hat;
    r.covered = check_coverage(band, density);
    r.sup_halfwidth = band.halfwidth.maxCoeff();
    r.mean_halfwidth = band.halfwidth.mean();

    // diagnostic: same statistic studentized by the true density instead of
    // the (noisy) plug-in center
    double q = band.x_quantile / band.constants.A_l + band.constants.B_l;
    double scale = band.sigma_hat * band.constants.c_K * q;
    bool ok = true;
    for (long i = 0; i < band.grid.size() && ok; ++i) {
      double f = density.pdf(band.grid[i]);
      ok = std::abs(band.center[i] - f) <= scale * std::sqrt(f);
    }
    r.covered_truth_studentized = ok;
  } catch (const std::exception& e) {
    r.errored = true;
    r.error = e.what();
  }
  return r;
}

CoverageReport run_coverage(const ExperimentConfig& cfg) {
  KernelSpec spec = make_kernel(cfg);
  DensitySpec density = make_density(cfg);
  if (!density.pdf) throw std::invalid_argument("run_coverage: density needs an exact evaluator");

  CoverageReport rep;
  ResolutionGrid grid = resolution_grid(cfg.n / 2, spec.order(), cfg.c_min, cfg.c_max);
  rep.j_min = grid.j_min;
  rep.j_max = grid.j_max;
  rep.u_n = undersmooth_level(cfg.n);
  rep.j_hist.assign(grid.j_max - grid.j_min + 1, 0);

  std::vector<double> sup_halfwidths;
  long covered_ts = 0;
  for (long i = 0; i < cfg.reps; ++i) {
    RepResult r = run_coverage_rep(cfg, spec, density, static_cast<int>(i));
    rep.reps.push_back(r);
    if (r.errored) {
      ++rep.errored;
      continue;
    }
    if (r.covered) ++rep.covered;
    else ++rep.uncovered;
    if (r.covered_truth_studentized) ++covered_ts;
    if (r.j_hat >= grid.j_min && r.j_hat <= grid.j_max) ++rep.j_hist[r.j_hat - grid.j_min];
    sup_halfwidths.push_back(r.sup_halfwidth);
    rep.mean_sup_halfwidth += r.sup_halfwidth;
    rep.max_halfwidth = std::max(rep.max_halfwidth, r.sup_halfwidth);
  }
  long done = rep.covered + rep.uncovered;
  rep.coverage = done > 0 ? static_cast<double>(rep.covered) / done : 0.0;
  rep.coverage_truth_studentized = done > 0 ? static_cast<double>(covered_ts) / done : 0.0;
  if (!sup_halfwidths.empty()) {
    rep.mean_sup_halfwidth /= static_cast<double>(sup_halfwidths.size());
    std::sort(sup_halfwidths.begin(), sup_halfwidths.end());
    std::size_t m = sup_halfwidths.size();
    rep.median_sup_halfwidth = m % 2 == 1
                                   ? sup_halfwidths[m / 2]
                                   : 0.5 * (sup_halfwidths[m / 2 - 1] + sup_halfwidths[m / 2]);
  }
  return rep;
}

json CoverageReport::to_json(const ExperimentConfig& cfg) const {
  json j;
  j["config"] = cfg.to_json();
  j["covered"] = covered;
  j["uncovered"] = uncovered;
  j["errored"] = errored;
  j["coverage"] = coverage;
  j["coverage_truth_studentized"] = coverage_truth_studentized;
  j["j_min"] = j_min;
  j["j_max"] = j_max;
  j["u_n"] = u_n;
  j["j_hat_histogram"] = j_hist;
  j["mean_sup_halfwidth"] = mean_sup_halfwidth;
  j["median_sup_halfwidth"] = median_sup_halfwidth;
  j["max_halfwidth"] = max_halfwidth;
  json reps_json = json::array();
  for (const RepResult& r : reps) {
    json rj;
    rj["rep"] = r.rep;
    rj["j_hat"] = r.j_hat;
    rj["errored"] = r.errored;
    if (r.errored) rj["error"] = r.error;
    rj["covered"] = r.covered;
    rj["covered_truth_studentized"] = r.covered_truth_studentized;
    rj["sup_halfwidth"] = r.sup_halfwidth;
    rj["mean_halfwidth"] = r.mean_halfwidth;
    reps_json.push_back(rj);
  }
  j["reps"] = reps_json;
  return j;
}

void run_band(const ExperimentConfig& cfg, const std::string& data_path,
              const std::string& out_dir) {
  Eigen::VectorXd data = read_observations(data_path);
  if (data.size() < 100)
    throw std::runtime_error("run_band: need at least 100 observations, got " +
                             std::to_string(data.size()));
  KernelSpec spec = make_kernel(cfg);
  PhiloxRng rng(cfg.seed, 0);
  SampleSplit split = split_sample(data, rng);

  ResolutionGrid grid = resolution_grid(split.n2(), spec.order(), cfg.c_min, cfg.c_max);
  int u_n = undersmooth_level(data.size());
  LepskiConfig lep;
  lep.m_prime = cfg.m_prime;
  lep.sup_grid = uniform_grid(cfg.a, cfg.b, default_grid_spacing(grid, u_n));

  BandResult band =
      construct_band(spec, split, grid, lep, cfg.alpha, {cfg.a, cfg.b}, cfg.eps_floor);

  std::filesystem::create_directories(out_dir);
  write_band_csv(band, out_dir + "/band.csv");

  json meta;
  meta["config"] = cfg.to_json();
  meta["n_observations"] = data.size();
  meta["n1"] = band.n1;
  meta["n2"] = band.n2;
  meta["j_min"] = grid.j_min;
  meta["j_max"] = grid.j_max;
  meta["j_max_clamped"] = grid.clamped;
  meta["j_hat"] = band.j_hat;
  meta["u_n"] = band.u_n;
  meta["sigma_hat"] = band.sigma_hat;
  meta["A_hat"] = band.constants.A_l;
  meta["B_hat"] = band.constants.B_l;
  meta["c_K"] = band.constants.c_K;
  meta["x_quantile"] = band.x_quantile;
  meta["alpha"] = band.alpha;
  meta["threshold_M"] = band.threshold_M;
  meta["m_prime"] = band.m_prime;
  meta["eps_floor"] = band.eps_floor;
  meta["seed"] = cfg.seed;
  meta["grid_points"] = band.grid.size();
  write_text_file(out_dir + "/band_meta.json", meta.dump(2) + "\n");
}

}  // namespace densband
