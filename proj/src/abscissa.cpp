#include "dirichlet/abscissa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace dirichlet {

std::string to_string(AbscissaKind k) {
  switch (k) {
    case AbscissaKind::uniform:
      return "uniform";
    case AbscissaKind::absolute:
      return "absolute";
    case AbscissaKind::simple:
      break;
  }
  return "simple";
}

SampleGrid::SampleGrid(std::vector<std::uint64_t> scales) : scales_(std::move(scales)) {
  if (scales_.empty()) throw DimensionError("SampleGrid: no scales");
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    if (scales_[i] < 2 || (i > 0 && scales_[i - 1] >= scales_[i])) {
      throw DimensionError("SampleGrid: scales must be strictly increasing and >= 2");
    }
  }
}

SampleGrid SampleGrid::dyadic(std::uint64_t N) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t x = 16; x <= N; x *= 2) s.push_back(x);
  if (s.empty()) throw DimensionError("SampleGrid::dyadic: N must be at least 16");
  return SampleGrid(std::move(s));
}

SampleGrid SampleGrid::dyadic_triadic(std::uint64_t N) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t x = 16; x <= N; x *= 2) s.push_back(x);
  for (std::uint64_t p3 = 1; p3 + p3 / 2 <= N; p3 *= 3) {
    const std::uint64_t x = p3 + p3 / 2;  // floor(1.5 * 3^k)
    if (x >= 16) s.push_back(x);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw DimensionError("SampleGrid::dyadic_triadic: N must be at least 16");
  return SampleGrid(std::move(s));
}

LimsupFit limsup_fit(std::span<const Sample> samples) {
  if (samples.size() < 4) {
    throw InsufficientDataError("limsup_fit: need at least 4 samples, got " +
                                std::to_string(samples.size()));
  }
  const std::size_t start = samples.size() / 2;
  const auto tail = samples.subspan(start);

  double ratio = -std::numeric_limits<double>::infinity();
  double running = -std::numeric_limits<double>::infinity();
  double sum_u = 0.0, sum_v = 0.0;
  std::vector<double> u, v;
  for (const auto& s : tail) {
    const double lx = std::log(s.x);
    ratio = std::max(ratio, s.statistic / lx);
    running = std::max(running, s.statistic);
    u.push_back(lx);
    v.push_back(running);
    sum_u += lx;
    sum_v += running;
  }
  const double mu = sum_u / static_cast<double>(u.size());
  const double mv = sum_v / static_cast<double>(v.size());
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cov += (u[i] - mu) * (v[i] - mv);
    var += (u[i] - mu) * (u[i] - mu);
  }
  return {ratio, ratio, cov / var};
}

std::vector<std::pair<std::uint64_t, Complex>> partial_sum_profile(const CoefficientSeq& a,
                                                                   const SampleGrid& grid) {
  if (grid.max_scale() > a.length()) {
    throw DimensionError("partial_sum_profile: grid scale " + std::to_string(grid.max_scale()) +
                         " exceeds truncation " + std::to_string(a.length()));
  }
  std::vector<std::pair<std::uint64_t, Complex>> out;
  Complex s{};
  std::uint64_t n = 0;
  for (std::uint64_t x : grid.scales()) {
    while (n < x) s += a[++n];
    out.emplace_back(x, s);
  }
  return out;
}

namespace {

AbscissaEstimate finish(AbscissaKind kind, std::vector<Sample> samples, std::string method) {
  if (samples.empty()) {
    throw DegenerateInputError("abscissa estimate (" + to_string(kind) +
                               "): every numerator vanished on the grid");
  }
  const LimsupFit fit = limsup_fit(samples);
  AbscissaEstimate est;
  est.kind = kind;
  est.samples = std::move(samples);
  est.tail_ratio = fit.tail_ratio;
  est.envelope_slope = fit.envelope_slope;
  est.clamped = fit.estimate < 0.0;
  est.estimate = est.clamped ? 0.0 : fit.estimate;
  est.method = std::move(method);
  return est;
}

void require_grid(const CoefficientSeq& a, const SampleGrid& grid) {
  if (grid.max_scale() > a.length()) {
    throw DimensionError("abscissa estimate: grid scale " + std::to_string(grid.max_scale()) +
                         " exceeds truncation " + std::to_string(a.length()));
  }
}

}  // namespace

AbscissaEstimate sigma_c_estimate(const CoefficientSeq& a, const SampleGrid& grid) {
  require_grid(a, grid);
  constexpr double kZero = 64.0 * std::numeric_limits<double>::epsilon();
  std::vector<Sample> samples;
  Complex s{};
  double mass = 0.0;
  std::uint64_t n = 0;
  for (std::uint64_t x : grid.scales()) {
    while (n < x) {
      ++n;
      s += a[n];
      mass += std::abs(a[n]);
    }
    const double mag = std::abs(s);
    if (mag > kZero * mass) samples.push_back({static_cast<double>(x), std::log(mag)});
  }
  return finish(AbscissaKind::simple, std::move(samples), "tail-max log|S(x)|/log x");
}

AbscissaEstimate sigma_a_estimate(const CoefficientSeq& a, const SampleGrid& grid) {
  require_grid(a, grid);
  std::vector<Sample> samples;
  double mass = 0.0;
  std::uint64_t n = 0;
  for (std::uint64_t x : grid.scales()) {
    while (n < x) mass += std::abs(a[++n]);
    if (mass > 0.0) samples.push_back({static_cast<double>(x), std::log(mass)});
  }
  return finish(AbscissaKind::absolute, std::move(samples), "tail-max log(sum|a_n|)/log x");
}

AbscissaEstimate sigma_b_estimate(const CoefficientSeq& a, const SampleGrid& grid,
                                  const OptimizerConfig& opt) {
  require_grid(a, grid);
  opt.validate();
  std::vector<Sample> samples;
  std::vector<TorusPoint> warm;
  const auto values = a.values();
  for (std::uint64_t x : grid.scales()) {
    const auto prefix = values.first(x);
    if (std::all_of(prefix.begin(), prefix.end(), [](Complex c) { return c == Complex{}; })) {
      continue;
    }
    const CoefficientSeq truncated(std::vector<Complex>(prefix.begin(), prefix.end()),
                                   a.structure());
    const LiftedPolynomial F = lift(truncated);
    SupNormResult sup = sup_norm_torus(F, opt, warm);
    samples.push_back({static_cast<double>(x), std::log(sup.value)});
    warm.assign(1, std::move(sup.argmax));
  }
  return finish(AbscissaKind::uniform, std::move(samples),
                "tail-max log(torus sup of lifted truncation)/log x");
}

void write_samples_csv(std::ostream& out, const AbscissaEstimate& est) {
  out << "x,statistic,ratio\n";
  for (const auto& s : est.samples) {
    out << format_double(s.x) << ',' << format_double(s.statistic) << ','
        << format_double(s.statistic / std::log(s.x)) << '\n';
  }
}

}  // namespace dirichlet
