#include "dirichlet/constructions.hpp"

#include <cmath>
#include <vector>

#include "dirichlet/rng.hpp"

namespace dirichlet {

namespace {

void require_open_unit(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(who) +
                      ": alpha must lie in (0, 1); use zeta (alpha = 0) or lchi3 (alpha = 1)");
  }
}

}  // namespace

CoefficientSeq zeta_coeffs(std::size_t N) {
  return CoefficientSeq(std::vector<Complex>(N, Complex{1.0, 0.0}),
                        Structure::completely_multiplicative);
}

CoefficientSeq lchi3_coeffs(std::size_t N) { return character_seq(character_mod3(), N); }

CoefficientSeq galpha_coeffs(double alpha, std::size_t N) {
  require_open_unit(alpha, "galpha_coeffs");
  std::vector<Complex> v(N, Complex{});
  std::uint32_t k = 0;
  for (std::uint64_t q = 1; q <= N; q *= 3, ++k) {
    v[q - 1] = std::pow(3.0, (1.0 - alpha) * k);
    if (q > N / 3) break;
  }
  return CoefficientSeq(std::move(v), Structure::completely_multiplicative);
}

CoefficientSeq galpha_lchi3_coeffs(double alpha, std::size_t N) {
  CoefficientSeq f = dirichlet_convolve(galpha_coeffs(alpha, N), lchi3_coeffs(N));
  if (!is_completely_multiplicative(f)) {
    throw ConstructionError("galpha_lchi3_coeffs: product is not completely multiplicative");
  }
  return f.with_structure(Structure::completely_multiplicative);
}

CoefficientSeq galpha_lchi3_by_expansion(double alpha, std::size_t N) {
  require_open_unit(alpha, "galpha_lchi3_by_expansion");
  const auto chi = character_mod3();
  std::vector<PrimeLocalRule> rules;
  for (std::uint64_t p : sieve_primes(N)) {
    PrimeLocalRule rule{p, {}};
    const std::uint32_t K = max_exponent(p, N);
    for (std::uint32_t k = 1; k <= K; ++k) {
      rule.local_values.push_back(p == 3 ? Complex{std::pow(3.0, (1.0 - alpha) * k), 0.0}
                                         : Complex{std::pow(chi(p).real(), static_cast<int>(k)), 0.0});
    }
    rules.push_back(std::move(rule));
  }
  return multiplicative_expand(rules, N).with_structure(Structure::completely_multiplicative);
}

void RandomModelConfig::validate() const {
  if (N < 2) throw DomainError("RandomModelConfig: N must be at least 2");
  if (forced_sign && *forced_sign != 1 && *forced_sign != -1) {
    throw DomainError("RandomModelConfig: forced sign must be +1 or -1");
  }
}

int wintner_sign(std::uint64_t seed, std::uint64_t p) {
  return (stream_key(seed, p) >> 63) != 0 ? 1 : -1;
}

CoefficientSeq wintner_coeffs(const RandomModelConfig& cfg) {
  cfg.validate();
  const std::size_t N = cfg.N;
  std::vector<std::int64_t> a(N, 1);
  for (std::uint64_t p : sieve_primes(N)) {
    const std::int64_t eps = cfg.forced_sign ? *cfg.forced_sign : wintner_sign(cfg.seed, p);
    for (std::uint64_t j = p; j <= N; j += p) a[j - 1] *= eps;
    if (p <= N / p) {
      for (std::uint64_t j = p * p; j <= N; j += p * p) a[j - 1] = 0;
    }
  }
  std::vector<Complex> v(a.begin(), a.end());
  return CoefficientSeq(std::move(v), Structure::multiplicative);
}

}  // namespace dirichlet
