#pragma once

// The Bohr lift p_j^{-s} <-> z_j: Dirichlet polynomials become polynomials on
// the polytorus, whose sup norm equals sup_t |sum a_n n^{-it}|. Also the
// single-variable Euler factors of multiplicative sequences, the majorant
// constant C(r), and the Euler-factor bound chain for sum |a_n| n^{-eps}.

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dirichlet/coeffs.hpp"

namespace dirichlet {

// Exponent vector alpha(n) over a prime basis, stored sparsely. Conceptually
// a length-dimension() vector of nonnegative integers.
class MultiIndex {
 public:
  struct Entry {
    std::uint32_t variable;
    std::uint32_t exponent;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  MultiIndex() = default;
  // Entries must have distinct variables < dimension and positive exponents;
  // they are sorted on construction. Throws DimensionError otherwise.
  MultiIndex(std::size_t dimension, std::vector<Entry> nonzero);

  static MultiIndex from_dense(std::span<const std::uint32_t> exponents);

  std::size_t dimension() const noexcept { return dimension_; }
  std::uint32_t operator[](std::size_t variable) const noexcept;
  std::span<const Entry> nonzero() const noexcept { return nonzero_; }
  std::vector<std::uint32_t> dense() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<Entry> nonzero_;
};

struct LiftedTerm {
  MultiIndex index;
  Complex coeff;
};

class LiftedPolynomial {
 public:
  // Validates: basis is ascending primes; every index has the basis
  // dimension; the integer of each index is <= source_length; indices are
  // unique. Terms are stored in increasing order of their integer n.
  LiftedPolynomial(std::vector<std::uint64_t> prime_basis, std::vector<LiftedTerm> terms,
                   std::uint64_t source_length);

  // Dense exponent vectors; source_length is the largest integer among the terms.
  static LiftedPolynomial from_dense(std::vector<std::uint64_t> prime_basis,
                                     std::span<const std::pair<std::vector<std::uint32_t>, Complex>> terms);

  std::span<const std::uint64_t> prime_basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::span<const LiftedTerm> terms() const noexcept { return terms_; }
  std::uint64_t source_length() const noexcept { return source_length_; }

  // n = prod p_j^{alpha_j} for the j-th term.
  std::uint64_t term_integer(std::size_t j) const noexcept { return integers_[j]; }

  // Trivial upper bound on the torus sup: sum of |coefficients|.
  double coefficient_l1() const noexcept;

 private:
  std::vector<std::uint64_t> basis_;
  std::vector<LiftedTerm> terms_;
  std::vector<std::uint64_t> integers_;
  std::uint64_t source_length_;
};

struct TorusPoint {
  std::vector<double> angles;
};

struct OptimizerConfig {
  int restarts = 32;
  int coordinate_sweeps = 200;
  double angle_tolerance = 1e-10;
  double value_tolerance = 1e-12;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency; results do not depend on it

  // Throws DomainError unless every field is positive.
  void validate() const;
};

struct SupNormResult {
  double value = 0.0;        // |F| at `argmax`; a lower bound of the true sup
  double upper_bound = 0.0;  // sum |coefficients|
  TorusPoint argmax;
  int starts = 0;  // number of ascent runs performed
};

// Throws CoverageError if a prime factor of n is not in the basis.
MultiIndex alpha_index(std::uint64_t n, std::span<const std::uint64_t> prime_basis);

// Basis = primes <= a.length(); one term per nonzero a_n.
// Throws DegenerateInputError on an all-zero sequence.
LiftedPolynomial lift(const CoefficientSeq& a);

// sum c exp(i <alpha, angles>). Throws DimensionError on a dimension mismatch.
Complex eval(const LiftedPolynomial& F, const TorusPoint& point);

// Multistart cyclic coordinate ascent of |F| over the torus. Starts: the
// all-zero point, then each warm start (shorter warm starts are padded with
// zero angles), then opt.restarts uniform random points drawn from streams
// keyed by (opt.seed, restart index). Each 1-D subproblem is scanned and
// polished by golden section to opt.angle_tolerance.
SupNormResult sup_norm_torus(const LiftedPolynomial& F, const OptimizerConfig& opt,
                             std::span<const TorusPoint> warm_starts = {});

struct CircleMax {
  double value;
  double angle;
};

// max over |z| = 1 of |sum_m b_m z^m|: grid_points-point scan then golden
// section polish around the best grid point.
CircleMax sup_norm_circle(std::span<const Complex> coeffs, std::size_t grid_points,
                          double angle_tolerance);

// Local Euler factors per prime p <= N. Throws StructureError unless
// is_multiplicative(a).
std::vector<PrimeLocalRule> per_prime_factors(const CoefficientSeq& a);

// sup over the unit circle of 1 + sum_k a_{p^k} z^k (4096-point grid + polish).
double factor_sup_norm(const PrimeLocalRule& rule, const OptimizerConfig& opt);

// 1 on [0, 1/3], 1/sqrt(1 - r^2) on (1/3, 1). Throws DomainError outside [0, 1).
double bohr_C(double r);

struct MajorantCheck {
  double lhs;  // sum |b_m| r^m
  double sup;  // grid sup of |F| on the circle
  double constant;
  double rhs;  // constant * sup
  bool pass;   // lhs <= rhs (1 + 1e-3)
};

MajorantCheck bohr_majorant_check(std::span<const Complex> coeffs, double r,
                                  const OptimizerConfig& opt);

struct EulerChainCheck {
  double epsilon = 0.0;
  double lhs = 0.0;                 // sum_{n<=N} |a_n| n^{-eps}
  double log_middle_product = 0.0;  // sum_p log(1 + sum_k |a_{p^k}| p^{-k eps})
  double log_factor_product = 0.0;  // sum_p log sup |f_p|
  double correction_product = 1.0;  // prod_{p^eps < 3} (1 - p^{-2 eps})^{-1/2}
  double log_rhs = 0.0;             // log(correction_product) + log_factor_product
  std::size_t primes = 0;
  std::size_t corrected_primes = 0;
  bool factors_hold = true;         // each middle factor <= C(p^-eps) sup |f_p| (1 + 1e-3)
  bool divergence_warning = false;  // some p > N still has p^eps < 3
  bool pass = false;                // lhs <= rhs (1 + 1e-3)
};

// sum |a_n| n^{-eps} <= prod_p (1 + sum_k |a_{p^k}| p^{-k eps})
//                    <= prod_{p^eps < 3} (1 - p^{-2 eps})^{-1/2} prod_p sup |f_p|,
// checked at truncation N with the left side truncated and every factor p <= N
// on the right. Products are accumulated in log space.
EulerChainCheck euler_chain_check(const CoefficientSeq& a, double epsilon,
                                  const OptimizerConfig& opt);

}  // namespace dirichlet
