// dirichlet: build coefficient sequences, estimate abscissas and run the
// experiment suite. Exit status 0 on success or pass, 1 on a failed
// experiment or a runtime error, 2 on a usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirichlet/experiments.hpp"

namespace fs = std::filesystem;
using namespace dirichlet;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Accepts plain integers and exact forms such as 1e6 or 2^17.
std::size_t parse_size(const std::string& text) {
  const auto caret = text.find('^');
  double value = 0.0;
  std::size_t used = 0;
  try {
    if (caret != std::string::npos) {
      value = std::pow(std::stod(text.substr(0, caret)), std::stod(text.substr(caret + 1)));
      used = text.size();
    } else {
      value = std::stod(text, &used);
    }
  } catch (const std::exception&) {
    throw UsageError("not a size: '" + text + "'");
  }
  if (used != text.size() || !(value >= 1.0) || value > 1e12 || value != std::floor(value)) {
    throw UsageError("not a positive integer: '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

// One real number, allowing a fraction such as 1/3.
double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } else {
      std::size_t u1 = 0, u2 = 0;
      const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
      const double v = std::stod(num, &u1) / std::stod(den, &u2);
      if (u1 == num.size() && u2 == den.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw UsageError("not a number: '" + text + "'");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_real(item));
  }
  if (out.empty()) throw UsageError("empty list: '" + text + "'");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
}

int emit(const ExperimentReport& report, const std::string& path) {
  write_text(path, report.to_json().dump(2) + "\n");
  return report.exit_code();
}

struct FamilyFlags {
  std::string family;
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::optional<int> force_sign;
  double shift = 0.0;

  void attach(CLI::App* cmd, bool required) {
    auto* f = cmd->add_option("--family", family, "zeta, lchi3, galpha, thm1, wintner or mobius");
    if (required) f->required();
    cmd->add_option("--alpha", alpha, "parameter of galpha and thm1, in (0, 1)");
    cmd->add_option("--seed", seed, "seed of the wintner signs");
    cmd->add_option("--force-sign", force_sign, "override every wintner sign with +1 or -1")
        ->check(CLI::IsMember({-1, 1}));
    cmd->add_option("--shift", shift, "replace a_n by a_n n^-shift");
  }

  FamilySpec spec() const { return {family, alpha, seed, force_sign, shift}; }
};

struct OptimizerFlags {
  OptimizerConfig opt;

  // The optimizer seed is taken from the family flags when those exist.
  void attach(CLI::App* cmd, std::uint64_t* seed) {
    cmd->add_option("--restarts", opt.restarts, "random starts of the torus optimizer")->capture_default_str();
    cmd->add_option("--sweeps", opt.coordinate_sweeps, "coordinate sweeps per start")->capture_default_str();
    cmd->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    if (seed == nullptr) cmd->add_option("--seed", opt.seed, "optimizer seed");
  }
};

void write_samples(const Json& results, const std::string& dir) {
  fs::create_directories(dir);
  for (const char* key : {"sigma_c", "sigma_b", "sigma_a"}) {
    if (!results.contains(key)) continue;
    AbscissaEstimate est;
    for (const auto& s : results[key]["samples"]) est.samples.push_back({s[0].get<double>(), s[1].get<double>()});
    std::ofstream out(fs::path(dir) / (std::string(key) + ".csv"), std::ios::binary);
    if (!out) throw UsageError("cannot write samples into '" + dir + "'");
    write_samples_csv(out, est);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abscissas of Dirichlet series: coefficient generation, estimators and experiments"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a coefficient CSV (n,re,im)");
  FamilyFlags gen_family;
  std::string gen_N, gen_out;
  gen_family.attach(gen, true);
  gen->add_option("--N", gen_N, "truncation length")->required();
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // abscissa
  auto* abs_cmd = app.add_subcommand("abscissa", "estimate sigma_c, sigma_b and sigma_a");
  FamilyFlags abs_family;
  OptimizerFlags abs_opt;
  std::string abs_in, abs_N, abs_which = "cba", abs_grid = "auto", abs_samples, abs_report;
  abs_family.attach(abs_cmd, false);
  abs_opt.attach(abs_cmd, &abs_family.seed);
  abs_cmd->add_option("--in", abs_in, "coefficient CSV to read instead of --family");
  abs_cmd->add_option("--N", abs_N, "truncation length (default: length of --in)");
  abs_cmd->add_option("--which", abs_which, "subset of cba")->capture_default_str();
  abs_cmd->add_option("--grid", abs_grid, "auto, dyadic or triadic")
      ->check(CLI::IsMember({"auto", "dyadic", "triadic"}))
      ->capture_default_str();
  abs_cmd->add_option("--samples-dir", abs_samples, "write sigma_*.csv sample trails here");
  abs_cmd->add_option("--report", abs_report, "report path (default stdout)");

  // thm1-sweep
  auto* sweep = app.add_subcommand("thm1-sweep", "measure sigma_a - sigma_c across alpha");
  std::string sweep_alphas = "0.25,0.5,0.75", sweep_N = "1000000", sweep_report;
  double sweep_tol = 0.1;
  sweep->add_option("--alphas", sweep_alphas, "comma-separated alphas in [0, 1]")->capture_default_str();
  sweep->add_option("--N", sweep_N, "truncation length")->capture_default_str();
  sweep->add_option("--tolerance", sweep_tol, "allowed |gap - alpha|")->capture_default_str();
  sweep->add_option("--report", sweep_report, "report path (default stdout)");

  // wintner-mc
  auto* mc = app.add_subcommand("wintner-mc", "sigma_c of random Euler products");
  WintnerMcConfig mc_cfg;
  std::string mc_N = "1000000", mc_report;
  mc->add_option("--trials", mc_cfg.trials, "number of seeds")->capture_default_str();
  mc->add_option("--N", mc_N, "truncation length")->capture_default_str();
  mc->add_option("--seed", mc_cfg.seed, "first seed (trial i uses seed + i)");
  mc->add_option("--force-sign", mc_cfg.forced_sign, "override every sign with +1 or -1")
      ->check(CLI::IsMember({-1, 1}));
  mc->add_option("--threads", mc_cfg.threads, "worker threads (0 = all cores)");
  mc->add_option("--report", mc_report, "report path (default stdout)");

  // bohr-check
  auto* bohr = app.add_subcommand("bohr-check", "majorant inequality on random polynomials");
  BohrCheckConfig bohr_cfg;
  std::string bohr_radii = "0.1,1/3,0.6,0.9", bohr_report;
  bohr->add_option("--count", bohr_cfg.count, "number of polynomials")->capture_default_str();
  bohr->add_option("--degree", bohr_cfg.degree, "maximum degree")->capture_default_str();
  bohr->add_option("--radii", bohr_radii, "comma-separated radii in [0, 1)")->capture_default_str();
  bohr->add_option("--seed", bohr_cfg.seed, "campaign seed");
  bohr->add_option("--threads", bohr_cfg.opt.threads, "worker threads (0 = all cores)");
  bohr->add_option("--report", bohr_report, "report path (default stdout)");

  // thm2-check
  auto* thm2 = app.add_subcommand("thm2-check", "Euler-factor bound chain and sigma_a - sigma_b");
  FamilyFlags thm2_family;
  OptimizerFlags thm2_opt;
  std::string thm2_N = "10000", thm2_eps = "0.2,0.5,1.0", thm2_report;
  double thm2_gap = 0.15;
  thm2_family.attach(thm2, true);
  thm2_opt.attach(thm2, &thm2_family.seed);
  thm2->add_option("--N", thm2_N, "truncation length")->capture_default_str();
  thm2->add_option("--epsilons", thm2_eps, "comma-separated positive epsilons")->capture_default_str();
  thm2->add_option("--gap-tolerance", thm2_gap, "allowed |sigma_a - sigma_b|")->capture_default_str();
  thm2->add_option("--report", thm2_report, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const auto a = build_family(gen_family.spec(), parse_size(gen_N));
      std::ostringstream out;
      write_csv(out, a);
      write_text(gen_out, out.str());
      return 0;
    }

    if (abs_cmd->parsed()) {
      CoefficientSeq a = [&] {
        if (!abs_in.empty()) {
          if (!abs_family.family.empty()) throw UsageError("abscissa: give either --in or --family");
          std::ifstream in(abs_in, std::ios::binary);
          if (!in) throw UsageError("abscissa: cannot read '" + abs_in + "'");
          CoefficientSeq seq = read_csv(in);
          if (!abs_N.empty()) {
            const std::size_t N = parse_size(abs_N);
            if (N > seq.length()) throw UsageError("abscissa: --N exceeds the input length");
            seq = CoefficientSeq(std::vector<Complex>(seq.values().begin(), seq.values().begin() + N));
          }
          if (abs_family.shift != 0.0) seq = horizontal_shift(seq, abs_family.shift);
          return seq;
        }
        if (abs_family.family.empty()) throw UsageError("abscissa: one of --in or --family is required");
        if (abs_N.empty()) throw UsageError("abscissa: --N is required with --family");
        return build_family(abs_family.spec(), parse_size(abs_N));
      }();
      Json source = abs_in.empty() ? abs_family.spec().to_json()
                                   : Json{{"file", abs_in}, {"shift", abs_family.shift}};
      const bool triadic = abs_grid == "triadic" || (abs_grid == "auto" && abs_in.empty() &&
                                                     abs_family.family == "galpha");
      const SampleGrid grid = triadic ? SampleGrid::dyadic_triadic(a.length()) : SampleGrid::dyadic(a.length());
      abs_opt.opt.seed = abs_family.seed;
      ExperimentReport report;
      try {
        report = run_abscissa(a, source, grid, abs_which, abs_opt.opt);
      } catch (const DegenerateInputError& e) {
        report.experiment = "abscissa";
        report.config = Json{{"source", source}, {"N", a.length()}, {"which", abs_which}};
        report.results = Json{{"error", {{"type", "degenerate_input"}, {"message", e.what()}}}};
        report.pass = false;
        report.timestamp = report_timestamp();
        report.tool_version = tool_version();
      }
      if (!abs_samples.empty()) write_samples(report.results, abs_samples);
      return emit(report, abs_report);
    }

    if (sweep->parsed()) {
      return emit(run_thm1_sweep(parse_list(sweep_alphas), parse_size(sweep_N), sweep_tol), sweep_report);
    }

    if (mc->parsed()) {
      mc_cfg.N = parse_size(mc_N);
      return emit(run_wintner_mc(mc_cfg), mc_report);
    }

    if (bohr->parsed()) {
      bohr_cfg.radii = parse_list(bohr_radii);
      return emit(run_bohr_check(bohr_cfg), bohr_report);
    }

    if (thm2->parsed()) {
      Thm2CheckConfig cfg;
      cfg.family = thm2_family.spec();
      cfg.N = parse_size(thm2_N);
      cfg.epsilons = parse_list(thm2_eps);
      cfg.gap_tolerance = thm2_gap;
      cfg.opt = thm2_opt.opt;
      cfg.opt.seed = thm2_family.seed;
      return emit(run_thm2_check(cfg), thm2_report);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
