#include "dirichlet/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dirichlet {

std::string to_string(Structure s) {
  switch (s) {
    case Structure::multiplicative:
      return "multiplicative";
    case Structure::completely_multiplicative:
      return "completely_multiplicative";
    case Structure::unknown:
      break;
  }
  return "unknown";
}

CoefficientSeq::CoefficientSeq(std::vector<Complex> values, Structure structure)
    : values_(std::move(values)), structure_(structure) {
  if (values_.empty()) throw DimensionError("CoefficientSeq: length must be positive");
}

Complex CoefficientSeq::at(std::uint64_t n) const {
  if (n < 1 || n > values_.size()) {
    throw DimensionError("CoefficientSeq: index " + std::to_string(n) + " outside 1.." +
                         std::to_string(values_.size()));
  }
  return values_[n - 1];
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  if (limit < 2) return {};
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (spf_[i] != 0) continue;
    primes_.push_back(i);
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit_; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::vector<PrimePower> PrimeSieve::factorize(std::uint64_t n) const {
  if (n == 0 || n > limit_) throw DomainError("PrimeSieve::factorize: n outside 1..limit");
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

std::uint32_t max_exponent(std::uint64_t p, std::uint64_t n) noexcept {
  std::uint32_t k = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    ++k;
    if (q > n / p) break;
  }
  return k;
}

CoefficientSeq multiplicative_expand(std::span<const PrimeLocalRule> rules, std::size_t N) {
  if (N == 0) throw DimensionError("multiplicative_expand: N must be positive");
  const PrimeSieve sieve(N);
  std::vector<const PrimeLocalRule*> by_prime(N + 1, nullptr);
  for (const auto& rule : rules) {
    if (rule.prime <= N) by_prime[rule.prime] = &rule;
  }
  for (std::uint64_t p : sieve.primes()) {
    const PrimeLocalRule* rule = by_prime[p];
    if (rule == nullptr) {
      throw CoverageError("multiplicative_expand: no local rule for prime " + std::to_string(p));
    }
    const std::uint32_t needed = max_exponent(p, N);
    if (rule->local_values.size() < needed) {
      throw CoverageError("multiplicative_expand: rule for prime " + std::to_string(p) +
                          " does not cover " + std::to_string(p) + "^" +
                          std::to_string(rule->local_values.size() + 1));
    }
  }

  std::vector<Complex> a(N);
  a[0] = 1.0;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const std::uint64_t p = sieve.smallest_factor(n);
    std::uint64_t m = n;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    a[n - 1] = a[m - 1] * by_prime[p]->local_values[e - 1];
  }
  return CoefficientSeq(std::move(a), Structure::multiplicative);
}

CoefficientSeq dirichlet_convolve(const CoefficientSeq& a, const CoefficientSeq& b) {
  if (a.length() != b.length()) {
    throw DimensionError("dirichlet_convolve: lengths " + std::to_string(a.length()) + " and " +
                         std::to_string(b.length()) + " differ");
  }
  const std::size_t N = a.length();
  const auto av = a.values();
  const auto bv = b.values();
  std::vector<Complex> c(N, Complex{0.0, 0.0});
  for (std::size_t d = 1; d <= N; ++d) {
    const Complex ad = av[d - 1];
    if (ad == Complex{0.0, 0.0}) continue;
    for (std::size_t m = 1, n = d; n <= N; ++m, n += d) c[n - 1] += ad * bv[m - 1];
  }
  const bool both = a.structure() != Structure::unknown && b.structure() != Structure::unknown;
  return CoefficientSeq(std::move(c), both ? Structure::multiplicative : Structure::unknown);
}

std::vector<std::int64_t> mobius_values(std::size_t N) {
  if (N == 0) throw DimensionError("mobius_values: N must be positive");
  std::vector<std::int64_t> mu(N, 1);
  std::vector<bool> composite(N + 1, false);
  for (std::uint64_t p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t j = p; j <= N; j += p) {
      if (j > p) composite[j] = true;
      mu[j - 1] = -mu[j - 1];
    }
    if (p <= N / p) {
      for (std::uint64_t j = p * p; j <= N; j += p * p) mu[j - 1] = 0;
    }
  }
  return mu;
}

CoefficientSeq mobius_seq(std::size_t N) {
  const auto mu = mobius_values(N);
  std::vector<Complex> v(mu.begin(), mu.end());
  return CoefficientSeq(std::move(v), Structure::multiplicative);
}

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<Complex> values_mod_q)
    : modulus_(modulus), values_(std::move(values_mod_q)), principal_(true) {
  if (modulus_ == 0) throw DomainError("DirichletCharacter: modulus must be positive");
  if (values_.size() != modulus_) {
    throw DomainError("DirichletCharacter: table must have exactly q entries");
  }
  constexpr double tol = 1e-12;
  for (std::uint64_t r = 0; r < modulus_; ++r) {
    const bool unit = std::gcd(r, modulus_) == 1;
    const double mag = std::abs(values_[r]);
    if (unit ? std::abs(mag - 1.0) > tol : mag != 0.0) {
      throw DomainError("DirichletCharacter: bad value at residue " + std::to_string(r));
    }
    if (unit && std::abs(values_[r] - Complex{1.0, 0.0}) > tol) principal_ = false;
  }
  for (std::uint64_t r = 0; r < modulus_; ++r) {
    for (std::uint64_t s = r; s < modulus_; ++s) {
      const Complex lhs = values_[(r * s) % modulus_];
      if (std::abs(lhs - values_[r] * values_[s]) > tol) {
        throw DomainError("DirichletCharacter: table is not multiplicative at residues " +
                          std::to_string(r) + ", " + std::to_string(s));
      }
    }
  }
}

DirichletCharacter DirichletCharacter::principal(std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("DirichletCharacter: modulus must be positive");
  std::vector<Complex> v(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) v[r] = std::gcd(r, modulus) == 1 ? 1.0 : 0.0;
  return DirichletCharacter(modulus, std::move(v));
}

DirichletCharacter character_mod3() { return DirichletCharacter(3, {0.0, 1.0, -1.0}); }

CoefficientSeq character_seq(const DirichletCharacter& chi, std::size_t N) {
  std::vector<Complex> v(N);
  for (std::size_t n = 1; n <= N; ++n) v[n - 1] = chi(n);
  return CoefficientSeq(std::move(v), Structure::completely_multiplicative);
}

std::vector<std::int64_t> character_values_exact(const DirichletCharacter& chi, std::size_t N) {
  std::vector<std::int64_t> table(chi.modulus());
  for (std::uint64_t r = 0; r < chi.modulus(); ++r) {
    const Complex v = chi.table()[r];
    if (v.imag() != 0.0 || (v.real() != 0.0 && v.real() != 1.0 && v.real() != -1.0)) {
      throw DomainError("character_values_exact: character is not integer valued");
    }
    table[r] = static_cast<std::int64_t>(v.real());
  }
  std::vector<std::int64_t> out(N);
  for (std::size_t n = 1; n <= N; ++n) out[n - 1] = table[n % chi.modulus()];
  return out;
}

namespace {

bool close_to_product(Complex mn, Complex m, Complex n) {
  const Complex prod = m * n;
  return std::abs(mn - prod) <= kMultiplicativeTolerance * std::max(1.0, std::abs(prod));
}

bool check_pairs(const CoefficientSeq& a, bool coprime_only) {
  const auto v = a.values();
  if (std::abs(v[0] - Complex{1.0, 0.0}) > kMultiplicativeTolerance) return false;
  const std::uint64_t N = v.size();
  for (std::uint64_t m = 2; m * m <= N; ++m) {
    for (std::uint64_t n = m; m * n <= N; ++n) {
      if (coprime_only && std::gcd(m, n) != 1) continue;
      if (!close_to_product(v[m * n - 1], v[m - 1], v[n - 1])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_multiplicative(const CoefficientSeq& a) { return check_pairs(a, true); }

bool is_completely_multiplicative(const CoefficientSeq& a) { return check_pairs(a, false); }

CoefficientSeq abs_seq(const CoefficientSeq& a) {
  std::vector<Complex> v(a.length());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::abs(a.values()[i]);
  return CoefficientSeq(std::move(v), a.structure());
}

CoefficientSeq horizontal_shift(const CoefficientSeq& a, double delta) {
  std::vector<Complex> v(a.values().begin(), a.values().end());
  for (std::size_t n = 2; n <= v.size(); ++n) v[n - 1] *= std::pow(static_cast<double>(n), -delta);
  return CoefficientSeq(std::move(v), a.structure());
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const CoefficientSeq& a) {
  out << "n,re,im\n";
  const auto v = a.values();
  for (std::size_t n = 1; n <= v.size(); ++n) {
    out << n << ',' << format_double(v[n - 1].real()) << ',' << format_double(v[n - 1].imag())
        << '\n';
  }
}

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_field(const std::string& field, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw Error("read_csv: bad number '" + field + "' on line " + std::to_string(line_no));
  }
  return v;
}

}  // namespace

CoefficientSeq read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("read_csv: empty input");
  strip_cr(line);
  if (line != "n,re,im") throw Error("read_csv: expected header 'n,re,im', got '" + line + "'");
  std::vector<Complex> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string f_n, f_re, f_im;
    if (!std::getline(ss, f_n, ',') || !std::getline(ss, f_re, ',') || !std::getline(ss, f_im)) {
      throw Error("read_csv: malformed row on line " + std::to_string(line_no));
    }
    const double n = parse_field(f_n, line_no);
    if (n != static_cast<double>(values.size() + 1)) {
      throw Error("read_csv: rows must list n = 1..N in order (line " + std::to_string(line_no) +
                  ")");
    }
    values.emplace_back(parse_field(f_re, line_no), parse_field(f_im, line_no));
  }
  if (values.empty()) throw DimensionError("read_csv: no coefficient rows");
  return CoefficientSeq(std::move(values));
}

}  // namespace dirichlet
