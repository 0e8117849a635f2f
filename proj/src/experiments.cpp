#include "dirichlet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <numeric>

#include "dirichlet/parallel.hpp"
#include "dirichlet/rng.hpp"

#ifndef DIRICHLET_VERSION
#define DIRICHLET_VERSION "0.0.0"
#endif

namespace dirichlet {

std::string tool_version() { return DIRICHLET_VERSION; }

Json FamilySpec::to_json() const {
  Json j{{"family", family}, {"shift", shift}};
  if (family == "galpha" || family == "thm1") j["alpha"] = alpha;
  if (family == "wintner") {
    j["seed"] = seed;
    j["forced_sign"] = forced_sign ? Json(*forced_sign) : Json(nullptr);
  }
  return j;
}

CoefficientSeq build_family(const FamilySpec& spec, std::size_t N) {
  auto base = [&]() -> CoefficientSeq {
    if (spec.family == "zeta") return zeta_coeffs(N);
    if (spec.family == "lchi3") return lchi3_coeffs(N);
    if (spec.family == "galpha") return galpha_coeffs(spec.alpha, N);
    if (spec.family == "thm1") return galpha_lchi3_coeffs(spec.alpha, N);
    if (spec.family == "mobius") return mobius_seq(N);
    if (spec.family == "wintner") return wintner_coeffs({spec.seed, N, spec.forced_sign});
    throw UsageError("unknown family '" + spec.family +
                     "' (expected zeta, lchi3, galpha, thm1, wintner or mobius)");
  }();
  return spec.shift == 0.0 ? base : horizontal_shift(base, spec.shift);
}

SampleGrid default_grid(const FamilySpec& spec, std::uint64_t N) {
  return spec.family == "galpha" ? SampleGrid::dyadic_triadic(N) : SampleGrid::dyadic(N);
}

Json ExperimentReport::to_json() const {
  return Json{{"experiment", experiment},
              {"config", config},
              {"results", results},
              {"pass", pass ? Json(*pass) : Json(nullptr)},
              {"timestamp", timestamp},
              {"tool_version", tool_version}};
}

std::string report_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

ExperimentReport make_report(std::string name, Json config) {
  ExperimentReport r;
  r.experiment = std::move(name);
  r.config = std::move(config);
  r.timestamp = report_timestamp();
  r.tool_version = tool_version();
  return r;
}

Json grid_json(const SampleGrid& grid) {
  return Json(std::vector<std::uint64_t>(grid.scales().begin(), grid.scales().end()));
}

}  // namespace

Json to_json(const AbscissaEstimate& est) {
  Json samples = Json::array();
  for (const auto& s : est.samples) samples.push_back({s.x, s.statistic});
  return Json{{"kind", to_string(est.kind)},     {"estimate", est.estimate},
              {"tail_ratio", est.tail_ratio},    {"envelope_slope", est.envelope_slope},
              {"clamped", est.clamped},          {"method", est.method},
              {"samples", std::move(samples)}};
}

Json to_json(const OptimizerConfig& opt) {
  return Json{{"restarts", opt.restarts},
              {"coordinate_sweeps", opt.coordinate_sweeps},
              {"angle_tolerance", opt.angle_tolerance},
              {"value_tolerance", opt.value_tolerance},
              {"seed", opt.seed}};
}

ExperimentReport run_abscissa(const CoefficientSeq& a, const Json& source, const SampleGrid& grid,
                              const std::string& which, const OptimizerConfig& opt) {
  if (which.empty() || which.find_first_not_of("cba") != std::string::npos) {
    throw UsageError("abscissa: --which must be a nonempty subset of 'cba'");
  }
  Json config{{"source", source}, {"N", a.length()}, {"grid", grid_json(grid)}, {"which", which}};
  if (which.find('b') != std::string::npos) config["optimizer"] = to_json(opt);
  ExperimentReport report = make_report("abscissa", std::move(config));

  std::optional<double> c, b, abs;
  for (char k : std::string("cba")) {
    if (which.find(k) == std::string::npos) continue;
    AbscissaEstimate est = k == 'c'   ? sigma_c_estimate(a, grid)
                           : k == 'b' ? sigma_b_estimate(a, grid, opt)
                                      : sigma_a_estimate(a, grid);
    (k == 'c' ? c : k == 'b' ? b : abs) = est.estimate;
    report.results[std::string("sigma_") + k] = to_json(est);
  }
  if (c && abs) report.results["gap_a_minus_c"] = *abs - *c;
  if (b && abs) report.results["gap_a_minus_b"] = *abs - *b;
  if (c && b) report.results["gap_b_minus_c"] = *b - *c;
  return report;
}

ExperimentReport run_thm1_sweep(const std::vector<double>& alphas, std::size_t N,
                                double tolerance) {
  if (alphas.empty()) throw UsageError("thm1-sweep: no alpha values");
  for (double alpha : alphas) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw UsageError("thm1-sweep: alpha must lie in [0, 1]");
  }
  ExperimentReport report = make_report(
      "thm1_sweep", Json{{"alphas", alphas}, {"N", N}, {"tolerance", tolerance}, {"grid", "dyadic"}});
  const SampleGrid grid = SampleGrid::dyadic(N);
  Json rows = Json::array();
  bool all = true;
  for (double alpha : alphas) {
    FamilySpec spec;
    spec.family = alpha == 0.0 ? "zeta" : alpha == 1.0 ? "lchi3" : "thm1";
    spec.alpha = alpha;
    const CoefficientSeq a = build_family(spec, N);
    const AbscissaEstimate c = sigma_c_estimate(a, grid);
    const AbscissaEstimate s = sigma_a_estimate(a, grid);
    const double gap = s.estimate - c.estimate;
    const bool ok = std::abs(gap - alpha) <= tolerance;
    all = all && ok;
    rows.push_back({{"alpha", alpha},
                    {"family", spec.family},
                    {"sigma_c", c.estimate},
                    {"sigma_a", s.estimate},
                    {"gap", gap},
                    {"pass", ok}});
  }
  report.results["sweep"] = std::move(rows);
  report.pass = all;
  return report;
}

ExperimentReport run_wintner_mc(const WintnerMcConfig& cfg) {
  if (cfg.trials < 1) throw UsageError("wintner-mc: trials must be at least 1");
  Json config{{"trials", cfg.trials},
              {"N", cfg.N},
              {"seed", cfg.seed},
              {"forced_sign", cfg.forced_sign ? Json(*cfg.forced_sign) : Json(nullptr)},
              {"window", {cfg.lower, cfg.upper}},
              {"grid", "dyadic"}};
  ExperimentReport report = make_report("wintner_mc", std::move(config));
  const SampleGrid grid = SampleGrid::dyadic(cfg.N);

  std::vector<double> estimates(static_cast<std::size_t>(cfg.trials));
  parallel_for(estimates.size(), cfg.threads, [&](std::size_t i) {
    const CoefficientSeq a = wintner_coeffs({cfg.seed + i, cfg.N, cfg.forced_sign});
    estimates[i] = sigma_c_estimate(a, grid).estimate;
  });
  const double n = static_cast<double>(estimates.size());
  const double mean = std::accumulate(estimates.begin(), estimates.end(), 0.0) / n;
  double ss = 0.0;
  for (double e : estimates) ss += (e - mean) * (e - mean);
  const double sd = estimates.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;

  Json trials = Json::array();
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    trials.push_back({{"seed", cfg.seed + i}, {"sigma_c", estimates[i]}});
  }
  report.results = Json{{"trials", std::move(trials)}, {"mean", mean}, {"stddev", sd}};
  if (!cfg.forced_sign) report.pass = mean >= cfg.lower && mean <= cfg.upper;
  return report;
}

std::vector<Complex> random_polynomial(std::uint64_t seed, std::uint64_t i, int max_degree) {
  StreamRng rng(seed, i);
  const int degree = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
  std::vector<Complex> b(static_cast<std::size_t>(degree) + 1);
  switch (i % 3) {
    case 0:  // box-uniform complex coefficients
      for (auto& c : b) c = {rng.symmetric(), rng.symmetric()};
      break;
    case 1:  // unimodular coefficients with random phases
      for (auto& c : b) c = std::polar(1.0, rng.angle());
      break;
    default:  // sparse real signs
      for (auto& c : b) c = rng.uniform() < 0.5 ? 0.0 : (rng.uniform() < 0.5 ? -1.0 : 1.0);
      break;
  }
  if (std::all_of(b.begin(), b.end(), [](Complex c) { return c == Complex{}; })) b[0] = 1.0;
  return b;
}

ExperimentReport run_bohr_check(const BohrCheckConfig& cfg) {
  if (cfg.count < 1) throw UsageError("bohr-check: count must be at least 1");
  if (cfg.degree < 0) throw UsageError("bohr-check: degree must be nonnegative");
  for (double r : cfg.radii) {
    if (!(r >= 0.0 && r < 1.0)) throw UsageError("bohr-check: radii must lie in [0, 1)");
  }
  ExperimentReport report = make_report(
      "bohr_check", Json{{"count", cfg.count},
                         {"degree", cfg.degree},
                         {"radii", cfg.radii},
                         {"seed", cfg.seed},
                         {"circle_grid", 1 << 14},
                         {"angle_tolerance", cfg.opt.angle_tolerance}});

  const std::size_t count = static_cast<std::size_t>(cfg.count);
  std::vector<std::vector<MajorantCheck>> checks(count);
  parallel_for(count, cfg.opt.threads, [&](std::size_t i) {
    const auto b = random_polynomial(cfg.seed, i, cfg.degree);
    for (double r : cfg.radii) checks[i].push_back(bohr_majorant_check(b, r, cfg.opt));
  });

  Json per_radius = Json::array();
  std::size_t total_failures = 0;
  for (std::size_t k = 0; k < cfg.radii.size(); ++k) {
    std::size_t failures = 0;
    double worst = 0.0;
    Json failed = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
      const auto& m = checks[i][k];
      worst = std::max(worst, m.lhs / m.rhs);
      if (!m.pass) {
        ++failures;
        failed.push_back({{"index", i}, {"lhs", m.lhs}, {"rhs", m.rhs}});
      }
    }
    total_failures += failures;
    per_radius.push_back({{"r", cfg.radii[k]},
                          {"C", bohr_C(cfg.radii[k])},
                          {"failures", failures},
                          {"max_lhs_over_rhs", worst},
                          {"failed", std::move(failed)}});
  }
  report.results = Json{{"per_radius", std::move(per_radius)}, {"failures", total_failures}};
  report.pass = total_failures == 0;
  return report;
}

ExperimentReport run_thm2_check(const Thm2CheckConfig& cfg) {
  if (cfg.epsilons.empty()) throw UsageError("thm2-check: no epsilon values");
  Json config{{"family", cfg.family.to_json()},
              {"N", cfg.N},
              {"epsilons", cfg.epsilons},
              {"gap_tolerance", cfg.gap_tolerance},
              {"optimizer", to_json(cfg.opt)}};
  const CoefficientSeq a = build_family(cfg.family, cfg.N);
  if (!is_multiplicative(a)) {
    throw StructureError("thm2-check: family '" + cfg.family.family +
                         "' does not have multiplicative coefficients");
  }
  const SampleGrid grid = default_grid(cfg.family, cfg.N);
  config["grid"] = grid_json(grid);
  ExperimentReport report = make_report("thm2_check", std::move(config));

  bool all = true;
  Json chains = Json::array();
  for (double eps : cfg.epsilons) {
    const EulerChainCheck c = euler_chain_check(a, eps, cfg.opt);
    all = all && c.pass;
    chains.push_back({{"epsilon", eps},
                      {"lhs", c.lhs},
                      {"log_middle_product", c.log_middle_product},
                      {"log_factor_product", c.log_factor_product},
                      {"correction_product", c.correction_product},
                      {"log_rhs", c.log_rhs},
                      {"primes", c.primes},
                      {"corrected_primes", c.corrected_primes},
                      {"factors_hold", c.factors_hold},
                      {"divergence_warning", c.divergence_warning},
                      {"pass", c.pass}});
  }
  const AbscissaEstimate sa = sigma_a_estimate(a, grid);
  const AbscissaEstimate sb = sigma_b_estimate(a, grid, cfg.opt);
  const double gap = sa.estimate - sb.estimate;
  const bool gap_ok = std::abs(gap) <= cfg.gap_tolerance;
  report.results = Json{{"chains", std::move(chains)},
                        {"sigma_a", to_json(sa)},
                        {"sigma_b", to_json(sb)},
                        {"gap_a_minus_b", gap},
                        {"gap_pass", gap_ok}};
  report.pass = all && gap_ok;
  return report;
}

}  // namespace dirichlet
