#pragma once

// Concrete series families: zeta(s), L(s, chi_3), the geometric series
// g_alpha(s) = (1 - 3^{1 - alpha - s})^{-1}, the completely multiplicative
// product g_alpha(s) L(s, chi_3) whose abscissas differ by alpha, and the
// random Euler product prod_p (1 + eps_p p^{-s}) with Rademacher signs.

#include <cstdint>
#include <optional>

#include "dirichlet/coeffs.hpp"

namespace dirichlet {

CoefficientSeq zeta_coeffs(std::size_t N);
CoefficientSeq lchi3_coeffs(std::size_t N);

// a_{3^k} = 3^{(1 - alpha) k}, zero elsewhere. Throws DomainError unless
// 0 < alpha < 1.
CoefficientSeq galpha_coeffs(double alpha, std::size_t N);

// Dirichlet convolution of galpha_coeffs and lchi3_coeffs. Throws
// ConstructionError if the result is not completely multiplicative.
CoefficientSeq galpha_lchi3_coeffs(double alpha, std::size_t N);

// The same sequence from its Euler factors: a_{3^k} = 3^{(1 - alpha) k} and
// a_{p^k} = chi_3(p)^k for p != 3.
CoefficientSeq galpha_lchi3_by_expansion(double alpha, std::size_t N);

struct RandomModelConfig {
  std::uint64_t seed = 0;
  std::size_t N = 2;
  std::optional<int> forced_sign;  // +1 or -1 overrides every eps_p

  // Throws DomainError unless N >= 2 and any forced sign is +-1.
  void validate() const;
};

// eps_p for the given seed, a function of (seed, p) only.
int wintner_sign(std::uint64_t seed, std::uint64_t p);

// a_n = prod_{p | n} eps_p on squarefree n, 0 otherwise.
CoefficientSeq wintner_coeffs(const RandomModelConfig& cfg);

}  // namespace dirichlet
