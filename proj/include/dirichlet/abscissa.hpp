#pragma once

// Finite-truncation estimators for the abscissas of simple (sigma_c),
// uniform (sigma_b) and absolute (sigma_a) convergence, from the limsup
// formulas
//
//   sigma = limsup_{x -> oo} log(numerator(x)) / log x
//
// with numerator |sum_{n<=x} a_n|, sup_t |sum_{n<=x} a_n n^{-it}| and
// sum_{n<=x} |a_n| respectively. The formulas hold when the series diverges
// at s = 0, so estimates are clamped at 0.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/bohrlift.hpp"
#include "dirichlet/coeffs.hpp"

namespace dirichlet {

enum class AbscissaKind { simple, uniform, absolute };

std::string to_string(AbscissaKind k);

struct Sample {
  double x;
  double statistic;  // log of the numerator at scale x
};

struct AbscissaEstimate {
  AbscissaKind kind = AbscissaKind::simple;
  double estimate = 0.0;
  std::vector<Sample> samples;
  double tail_ratio = 0.0;
  double envelope_slope = 0.0;
  bool clamped = false;
  std::string method;
};

class SampleGrid {
 public:
  // Throws DimensionError unless scales are nonempty, strictly increasing and >= 2.
  explicit SampleGrid(std::vector<std::uint64_t> scales);

  // Powers of two in [16, N].
  static SampleGrid dyadic(std::uint64_t N);
  // dyadic(N) plus floor(1.5 * 3^k) in [16, N], for series carried by powers of 3.
  static SampleGrid dyadic_triadic(std::uint64_t N);

  std::span<const std::uint64_t> scales() const noexcept { return scales_; }
  std::uint64_t max_scale() const noexcept { return scales_.back(); }

 private:
  std::vector<std::uint64_t> scales_;
};

struct LimsupFit {
  double estimate;
  double tail_ratio;      // max of y / log x over the upper half of the samples
  double envelope_slope;  // least-squares slope of the running max of y vs log x, same window
};

// Throws InsufficientDataError for fewer than 4 samples.
LimsupFit limsup_fit(std::span<const Sample> samples);

// Prefix sums S(x) at each grid scale, computed in one pass.
// Throws DimensionError if the grid exceeds a.length().
std::vector<std::pair<std::uint64_t, Complex>> partial_sum_profile(const CoefficientSeq& a,
                                                                   const SampleGrid& grid);

// Scales with S(x) = 0 (to rounding, relative to sum |a_n|) give no sample.
AbscissaEstimate sigma_c_estimate(const CoefficientSeq& a, const SampleGrid& grid);
AbscissaEstimate sigma_a_estimate(const CoefficientSeq& a, const SampleGrid& grid);

// Each scale's numerator is the torus sup of the Bohr lift of the length-x
// truncation; the previous scale's maximizer is passed as a warm start.
AbscissaEstimate sigma_b_estimate(const CoefficientSeq& a, const SampleGrid& grid,
                                  const OptimizerConfig& opt);

// CSV trail `x,statistic,ratio`.
void write_samples_csv(std::ostream& out, const AbscissaEstimate& est);

}  // namespace dirichlet
