#pragma once

// Truncated coefficient sequences a_1..a_N of ordinary Dirichlet series and
// the exact arithmetic on them: sieving, multiplicative expansion, Dirichlet
// convolution, characters and the Moebius function.
//
// Indexing convention: every sequence is 1-based in meaning. Raw spans and
// vectors store a_n at position n - 1.

#include <complex>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/error.hpp"

namespace dirichlet {

using Complex = std::complex<double>;

enum class Structure { unknown, multiplicative, completely_multiplicative };

std::string to_string(Structure s);

// Absolute tolerance of the multiplicativity predicates; relative once the
// compared product exceeds 1 in modulus.
inline constexpr double kMultiplicativeTolerance = 1e-12;

class CoefficientSeq {
 public:
  // Throws DimensionError on an empty value list. The structure flag is
  // advisory metadata and is not verified here.
  explicit CoefficientSeq(std::vector<Complex> values, Structure structure = Structure::unknown);

  std::size_t length() const noexcept { return values_.size(); }

  // 1-based access; throws DimensionError outside 1..length().
  Complex at(std::uint64_t n) const;
  Complex operator[](std::uint64_t n) const noexcept { return values_[n - 1]; }

  std::span<const Complex> values() const noexcept { return values_; }
  Structure structure() const noexcept { return structure_; }

  // Copy with the same values and a different advisory flag.
  CoefficientSeq with_structure(Structure s) const { return CoefficientSeq(values_, s); }

 private:
  std::vector<Complex> values_;
  Structure structure_;
};

// Per-prime data a_{p^1}, a_{p^2}, ... of a multiplicative sequence.
struct PrimeLocalRule {
  std::uint64_t prime = 0;
  std::vector<Complex> local_values;  // local_values[k - 1] = a_{p^k}
};

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

// Trial division; primes ascending, empty for n = 1. Throws DomainError for n = 0.
std::vector<PrimePower> factorize(std::uint64_t n);

// Smallest-prime-factor table for bulk factorization of 1..limit.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint32_t smallest_factor(std::uint64_t n) const noexcept { return spf_[n]; }
  bool is_prime(std::uint64_t n) const noexcept { return n >= 2 && spf_[n] == n; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

  std::vector<PrimePower> factorize(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> primes_;
};

// Largest k with p^k <= n (0 when p > n).
std::uint32_t max_exponent(std::uint64_t p, std::uint64_t n) noexcept;

// a_n = prod a_{p^e} over the factorization of n. Throws CoverageError naming
// the first prime or prime power not covered by the rules.
CoefficientSeq multiplicative_expand(std::span<const PrimeLocalRule> rules, std::size_t N);

// c_n = sum_{d | n} a_d b_{n/d}. Throws DimensionError on a length mismatch.
CoefficientSeq dirichlet_convolve(const CoefficientSeq& a, const CoefficientSeq& b);

template <std::integral T>
std::vector<T> dirichlet_convolve_exact(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw DimensionError("dirichlet_convolve_exact: length mismatch");
  const std::size_t N = a.size();
  std::vector<T> c(N, T{0});
  for (std::size_t d = 1; d <= N; ++d) {
    const T ad = a[d - 1];
    if (ad == T{0}) continue;
    for (std::size_t m = 1; d * m <= N; ++m) c[d * m - 1] += ad * b[m - 1];
  }
  return c;
}

// Exact Moebius values mu(1..N).
std::vector<std::int64_t> mobius_values(std::size_t N);
CoefficientSeq mobius_seq(std::size_t N);

class DirichletCharacter {
 public:
  // values_mod_q[r] = chi(r). Throws DomainError unless the table is a
  // Dirichlet character modulo q (zero exactly off the units, unimodular on
  // the units, completely multiplicative on residues).
  DirichletCharacter(std::uint64_t modulus, std::vector<Complex> values_mod_q);

  static DirichletCharacter principal(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_principal() const noexcept { return principal_; }
  std::span<const Complex> table() const noexcept { return values_; }

  Complex operator()(std::uint64_t n) const noexcept { return values_[n % modulus_]; }

 private:
  std::uint64_t modulus_;
  std::vector<Complex> values_;
  bool principal_;
};

// The non-principal character modulo 3.
DirichletCharacter character_mod3();

CoefficientSeq character_seq(const DirichletCharacter& chi, std::size_t N);

// Integer values chi(1..N); throws DomainError unless every value is -1, 0 or 1.
std::vector<std::int64_t> character_values_exact(const DirichletCharacter& chi, std::size_t N);

// Exhaustive checks over all admissible pairs with mn <= N; both require a_1 = 1.
bool is_multiplicative(const CoefficientSeq& a);
bool is_completely_multiplicative(const CoefficientSeq& a);

CoefficientSeq abs_seq(const CoefficientSeq& a);

// a_n n^{-delta}: the series translated by delta to the left. Structure is kept.
CoefficientSeq horizontal_shift(const CoefficientSeq& a, double delta);

// CSV with header `n,re,im`, one row per n in order, 17 significant digits.
void write_csv(std::ostream& out, const CoefficientSeq& a);
CoefficientSeq read_csv(std::istream& in);

std::string format_double(double v);

}  // namespace dirichlet
