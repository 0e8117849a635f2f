#pragma once

// Experiment drivers behind the command-line harness. Each returns an
// ExperimentReport whose `config` echoes every parameter that influences
// `results`, so equal configs reproduce equal reports (up to timestamp).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirichlet/abscissa.hpp"
#include "dirichlet/bohrlift.hpp"
#include "dirichlet/coeffs.hpp"
#include "dirichlet/constructions.hpp"

namespace dirichlet {

using Json = nlohmann::json;

std::string tool_version();

struct FamilySpec {
  std::string family = "zeta";  // zeta, lchi3, galpha, thm1, wintner, mobius
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::optional<int> forced_sign;
  double shift = 0.0;  // coefficients become a_n n^{-shift}

  Json to_json() const;
};

// Throws UsageError for an unknown family; domain errors propagate.
CoefficientSeq build_family(const FamilySpec& spec, std::size_t N);

// dyadic_triadic for galpha, dyadic otherwise.
SampleGrid default_grid(const FamilySpec& spec, std::uint64_t N);

struct ExperimentReport {
  std::string experiment;
  Json config = Json::object();
  Json results = Json::object();
  std::optional<bool> pass;
  std::string timestamp;
  std::string tool_version;

  Json to_json() const;
  // 0 on success or pass, 1 on a failed experiment.
  int exit_code() const { return pass.value_or(true) ? 0 : 1; }
};

// UTC ISO-8601 now, or SOURCE_DATE_EPOCH when set.
std::string report_timestamp();

Json to_json(const AbscissaEstimate& est);
Json to_json(const OptimizerConfig& opt);

// One estimate per letter of `which` (subset of "cba").
ExperimentReport run_abscissa(const CoefficientSeq& a, const Json& source, const SampleGrid& grid,
                              const std::string& which, const OptimizerConfig& opt);

// Measured sigma_a - sigma_c per alpha; 0 and 1 map to zeta and lchi3.
ExperimentReport run_thm1_sweep(const std::vector<double>& alphas, std::size_t N,
                                double tolerance = 0.1);

struct WintnerMcConfig {
  int trials = 20;
  std::size_t N = 1'000'000;
  std::uint64_t seed = 0;  // trial i uses seed + i
  std::optional<int> forced_sign;
  double lower = 0.35;
  double upper = 0.65;
  unsigned threads = 0;
};

// pass is decided only for the random model; forced signs report no verdict.
ExperimentReport run_wintner_mc(const WintnerMcConfig& cfg);

struct BohrCheckConfig {
  int count = 500;
  int degree = 20;  // polynomial degrees are drawn from 0..degree
  std::vector<double> radii{0.1, 1.0 / 3.0, 0.6, 0.9};
  std::uint64_t seed = 0;
  OptimizerConfig opt;
};

// Random polynomial i of the campaign: coefficients from stream (seed, i).
std::vector<Complex> random_polynomial(std::uint64_t seed, std::uint64_t i, int max_degree);

ExperimentReport run_bohr_check(const BohrCheckConfig& cfg);

struct Thm2CheckConfig {
  FamilySpec family;
  std::size_t N = 10'000;
  std::vector<double> epsilons{0.2, 0.5, 1.0};
  double gap_tolerance = 0.15;
  OptimizerConfig opt;
};

// Bound chain per epsilon plus sigma_a - sigma_b for the (shifted) family.
// Throws StructureError for non-multiplicative families.
ExperimentReport run_thm2_check(const Thm2CheckConfig& cfg);

}  // namespace dirichlet
