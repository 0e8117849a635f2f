#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "dirichlet/coeffs.hpp"
#include "dirichlet/constructions.hpp"
#include "oracles.hpp"

using namespace dirichlet;

namespace {

std::vector<Complex> vec(const CoefficientSeq& a) { return {a.values().begin(), a.values().end()}; }

CoefficientSeq random_seq(std::mt19937_64& rng, std::size_t N) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> v(N);
  for (auto& c : v) c = {u(rng), u(rng)};
  return CoefficientSeq(std::move(v));
}

// Random multiplicative rules: every prime p <= N with random local values.
std::vector<PrimeLocalRule> random_rules(std::mt19937_64& rng, std::size_t N) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<PrimeLocalRule> rules;
  for (std::uint64_t p : sieve_primes(N)) {
    PrimeLocalRule r{p, {}};
    for (std::uint32_t k = 0; k < max_exponent(p, N); ++k) r.local_values.push_back({u(rng), u(rng)});
    rules.push_back(std::move(r));
  }
  return rules;
}

}  // namespace

TEST_CASE("sieve_primes small cases") {
  CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
  CHECK(sieve_primes(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(0).empty());
}

TEST_CASE("sieve_primes matches trial division") {
  const auto primes = sieve_primes(5000);
  std::size_t i = 0;
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    if (oracle::is_prime(n)) {
      REQUIRE(i < primes.size());
      CHECK(primes[i++] == n);
    }
  }
  CHECK(i == primes.size());
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(50) == std::vector<PrimePower>{{2, 1}, {5, 2}});
  CHECK(factorize(97) == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);

  const PrimeSieve sieve(2000);
  for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(sieve.factorize(n) == factorize(n));
}

TEST_CASE("max_exponent") {
  CHECK(max_exponent(2, 1) == 0);
  CHECK(max_exponent(2, 8) == 3);
  CHECK(max_exponent(3, 26) == 2);
  CHECK(max_exponent(3, 27) == 3);
  CHECK(max_exponent(7, 6) == 0);
}

TEST_CASE("multiplicative_expand examples") {
  const auto primes = sieve_primes(8);
  SUBCASE("all-ones rule gives zeta coefficients") {
    std::vector<PrimeLocalRule> rules;
    for (auto p : primes) rules.push_back({p, std::vector<Complex>(max_exponent(p, 6), 1.0)});
    const auto a = multiplicative_expand(rules, 6);
    CHECK(vec(a) == std::vector<Complex>(6, 1.0));
    CHECK(a.structure() == Structure::multiplicative);
  }
  SUBCASE("Moebius-local rule") {
    std::vector<PrimeLocalRule> rules;
    for (auto p : primes) {
      std::vector<Complex> v(max_exponent(p, 8), 0.0);
      v[0] = -1.0;
      rules.push_back({p, v});
    }
    const auto a = multiplicative_expand(rules, 8);
    CHECK(vec(a) == std::vector<Complex>{1, -1, -1, 0, -1, 1, -1, 0});
  }
  SUBCASE("rule supported at 3 with 3^{(1-alpha)k}") {
    std::vector<PrimeLocalRule> rules;
    for (auto p : sieve_primes(9)) {
      std::vector<Complex> v(max_exponent(p, 9), 0.0);
      if (p == 3) v = {std::pow(3.0, 0.5), 3.0};
      rules.push_back({p, v});
    }
    const auto a = multiplicative_expand(rules, 9);
    CHECK(a[1] == Complex(1.0));
    CHECK(a[3].real() == doctest::Approx(1.7320508).epsilon(1e-7));
    CHECK(a[9].real() == doctest::Approx(3.0));
    for (std::uint64_t n : {2, 4, 5, 6, 7, 8}) CHECK(a[n] == Complex{});
  }
}

TEST_CASE("multiplicative_expand reports missing coverage") {
  std::vector<PrimeLocalRule> rules{{2, {1.0, 1.0, 1.0}}, {3, {1.0, 1.0}}};
  CHECK_THROWS_WITH_AS(multiplicative_expand(rules, 10), doctest::Contains("prime 5"), CoverageError);
  rules.push_back({5, {1.0}});
  rules.push_back({7, {1.0}});
  CHECK_NOTHROW(multiplicative_expand(rules, 10));
  rules[0].local_values.pop_back();
  CHECK_THROWS_WITH_AS(multiplicative_expand(rules, 10), doctest::Contains("2^3"), CoverageError);
}

TEST_CASE("dirichlet_convolve examples") {
  SUBCASE("ones * mobius = e") {
    const auto c = dirichlet_convolve(zeta_coeffs(6), mobius_seq(6));
    CHECK(vec(c) == std::vector<Complex>{1, 0, 0, 0, 0, 0});
  }
  SUBCASE("e is the identity") {
    std::mt19937_64 rng(11);
    const auto a = random_seq(rng, 40);
    std::vector<Complex> e(40, 0.0);
    e[0] = 1.0;
    CHECK(vec(dirichlet_convolve(CoefficientSeq(e), a)) == vec(a));
  }
  SUBCASE("g_0.5 * chi_3 at n = 12") {
    const auto g = galpha_coeffs(0.5, 12);
    const auto chi = lchi3_coeffs(12);
    const auto expected = oracle::naive_convolve(vec(g), vec(chi));
    CHECK(expected[11].real() == doctest::Approx(std::sqrt(3.0)));
    const auto c = dirichlet_convolve(g, chi);
    CHECK(std::abs(c[12] - expected[11]) < 1e-15);
    CHECK(c[12].real() == doctest::Approx(1.7320508).epsilon(1e-7));
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(dirichlet_convolve(zeta_coeffs(5), zeta_coeffs(6)), DimensionError);
  }
}

TEST_CASE("dirichlet_convolve agrees with the naive divisor sum") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t N = 1 + rng() % 64;
    const auto a = random_seq(rng, N);
    const auto b = random_seq(rng, N);
    const auto fast = dirichlet_convolve(a, b);
    const auto slow = oracle::naive_convolve(vec(a), vec(b));
    for (std::size_t n = 1; n <= N; ++n) CHECK(std::abs(fast[n] - slow[n - 1]) < 1e-12);
  }
}

TEST_CASE("convolution is commutative and associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t N = 1 + rng() % 64;
    const auto a = random_seq(rng, N);
    const auto b = random_seq(rng, N);
    const auto c = random_seq(rng, N);
    const auto ab = dirichlet_convolve(a, b);
    const auto ba = dirichlet_convolve(b, a);
    const auto ab_c = dirichlet_convolve(ab, c);
    const auto a_bc = dirichlet_convolve(a, dirichlet_convolve(b, c));
    for (std::size_t n = 1; n <= N; ++n) {
      CHECK(std::abs(ab[n] - ba[n]) < 1e-12);
      CHECK(std::abs(ab_c[n] - a_bc[n]) < 1e-12);
    }
  }
}

TEST_CASE("convolution truncation consistency") {
  std::mt19937_64 rng(8);
  const auto a = random_seq(rng, 64);
  const auto b = random_seq(rng, 64);
  const auto full = dirichlet_convolve(a, b);
  for (std::size_t M : {1, 7, 30, 63}) {
    const CoefficientSeq am(std::vector<Complex>(a.values().begin(), a.values().begin() + M));
    const CoefficientSeq bm(std::vector<Complex>(b.values().begin(), b.values().begin() + M));
    const auto part = dirichlet_convolve(am, bm);
    for (std::size_t n = 1; n <= M; ++n) CHECK(part[n] == full[n]);
  }
}

TEST_CASE("exact integer path: ones * mu = e") {
  for (std::size_t N : {1, 2, 10, 1000, 100000}) {
    const std::vector<std::int64_t> ones(N, 1);
    const auto mu = mobius_values(N);
    const auto e = dirichlet_convolve_exact<std::int64_t>(ones, mu);
    CHECK(e[0] == 1);
    CHECK(std::all_of(e.begin() + 1, e.end(), [](std::int64_t v) { return v == 0; }));
  }
}

TEST_CASE("mobius_seq") {
  CHECK(vec(mobius_seq(1)) == std::vector<Complex>{1.0});
  const auto mu = mobius_seq(20);
  CHECK(mu[2] == Complex(-1.0));
  CHECK(mu[12] == Complex(0.0));
  const auto exact = mobius_values(3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) CHECK(exact[n - 1] == oracle::mobius_trial(n));
}

TEST_CASE("multiplicative_expand of Moebius-local rules equals mobius_seq") {
  const std::size_t N = 5000;
  std::vector<PrimeLocalRule> rules;
  for (auto p : sieve_primes(N)) {
    std::vector<Complex> v(max_exponent(p, N), 0.0);
    v[0] = -1.0;
    rules.push_back({p, v});
  }
  CHECK(vec(multiplicative_expand(rules, N)) == vec(mobius_seq(N)));
}

TEST_CASE("characters") {
  const auto chi = character_mod3();
  CHECK(chi.modulus() == 3);
  CHECK_FALSE(chi.is_principal());
  CHECK(chi(4) == Complex(1.0));
  CHECK(chi(3) == Complex(0.0));
  CHECK(chi(2) * chi(2) == chi(4));
  CHECK(vec(character_seq(chi, 6)) == std::vector<Complex>{1, -1, 0, 1, -1, 0});
  CHECK(vec(character_seq(DirichletCharacter::principal(1), 3)) == std::vector<Complex>{1, 1, 1});
  CHECK(DirichletCharacter::principal(4).is_principal());

  Complex s{};
  for (std::uint64_t n = 1; n <= 300; ++n) {
    s += chi(n);
    CHECK((s == Complex(0.0) || s == Complex(1.0)));
  }
  CHECK(character_values_exact(chi, 6) == std::vector<std::int64_t>{1, -1, 0, 1, -1, 0});

  // chi mod 5 with chi(2) = i.
  const Complex i{0.0, 1.0};
  const DirichletCharacter quartic(5, {0.0, 1.0, i, -i, -1.0});
  CHECK_FALSE(quartic.is_principal());
  CHECK(is_completely_multiplicative(character_seq(quartic, 200)));
  CHECK_THROWS_AS(character_values_exact(quartic, 4), DomainError);
}

TEST_CASE("invalid character tables are rejected") {
  CHECK_THROWS_AS(DirichletCharacter(3, {1.0, 1.0, -1.0}), DomainError);  // chi(0) != 0
  CHECK_THROWS_AS(DirichletCharacter(3, {0.0, 1.0, 0.5}), DomainError);   // not unimodular
  CHECK_THROWS_AS(DirichletCharacter(5, {0.0, 1.0, -1.0, 1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(DirichletCharacter(3, {0.0, 1.0}), DomainError);
}

TEST_CASE("multiplicativity predicates") {
  const auto mu = mobius_seq(20);
  CHECK(is_multiplicative(mu));
  CHECK_FALSE(is_completely_multiplicative(mu));
  const auto chi = lchi3_coeffs(20);
  CHECK(is_multiplicative(chi));
  CHECK(is_completely_multiplicative(chi));
  CHECK(is_completely_multiplicative(galpha_lchi3_coeffs(0.5, 20)));

  CHECK_FALSE(is_multiplicative(CoefficientSeq(std::vector<Complex>(10, 0.0))));
  std::vector<Complex> broken(vec(zeta_coeffs(30)));
  broken[5] = 2.0;  // a_6 != a_2 a_3
  CHECK_FALSE(is_multiplicative(CoefficientSeq(broken)));
  CHECK(is_multiplicative(CoefficientSeq(std::vector<Complex>{1.0})));
}

TEST_CASE("multiplicative_expand output is multiplicative (randomized rules)") {
  std::mt19937_64 rng(21);
  for (std::size_t N : {2, 17, 100, 1000, 10000}) {
    const auto a = multiplicative_expand(random_rules(rng, N), N);
    CHECK(is_multiplicative(a));
  }
}

TEST_CASE("convolution of multiplicative sequences is multiplicative") {
  std::mt19937_64 rng(4);
  const std::size_t N = 600;
  const auto a = multiplicative_expand(random_rules(rng, N), N);
  const auto b = multiplicative_expand(random_rules(rng, N), N);
  const auto c = dirichlet_convolve(a, b);
  CHECK(c.structure() == Structure::multiplicative);
  CHECK(is_multiplicative(c));
  CHECK(dirichlet_convolve(a, random_seq(rng, N)).structure() == Structure::unknown);
}

TEST_CASE("abs_seq") {
  CHECK(vec(abs_seq(mobius_seq(6))) == std::vector<Complex>{1, 1, 1, 0, 1, 1});
  const auto t = abs_seq(galpha_lchi3_coeffs(0.5, 12));
  CHECK(t[12].real() == doctest::Approx(std::sqrt(3.0)));
  CHECK(vec(abs_seq(t)) == vec(t));
  CHECK(abs_seq(mobius_seq(6)).structure() == Structure::multiplicative);
}

TEST_CASE("horizontal_shift") {
  const auto s = horizontal_shift(zeta_coeffs(10), 0.5);
  CHECK(s[1] == Complex(1.0));
  CHECK(s[4].real() == doctest::Approx(0.5));
  CHECK(s.structure() == Structure::completely_multiplicative);
}

TEST_CASE("CoefficientSeq basics") {
  CHECK_THROWS_AS(CoefficientSeq(std::vector<Complex>{}), DimensionError);
  const auto z = zeta_coeffs(3);
  CHECK(z.length() == 3);
  CHECK_THROWS_AS(z.at(0), DimensionError);
  CHECK_THROWS_AS(z.at(4), DimensionError);
  CHECK(z.at(3) == Complex(1.0));
}

TEST_CASE("CSV round trip preserves values bit for bit") {
  std::mt19937_64 rng(99);
  const auto a = random_seq(rng, 50);
  std::stringstream ss;
  write_csv(ss, a);
  const auto b = read_csv(ss);
  CHECK(vec(a) == vec(b));
}

TEST_CASE("CSV format") {
  std::stringstream ss;
  write_csv(ss, galpha_lchi3_coeffs(0.5, 3));
  CHECK(ss.str() == "n,re,im\n1,1,0\n2,-1,0\n3,1.7320508075688772,0\n");

  std::stringstream neg;
  write_csv(neg, CoefficientSeq(std::vector<Complex>{{-0.0, -0.0}}));
  CHECK(neg.str() == "n,re,im\n1,0,0\n");

  std::stringstream bad_header("n,x,y\n1,1,0\n");
  CHECK_THROWS(read_csv(bad_header));
  std::stringstream bad_order("n,re,im\n2,1,0\n");
  CHECK_THROWS(read_csv(bad_order));
  std::stringstream crlf("n,re,im\r\n1,0.5,-2\r\n");
  const auto c = read_csv(crlf);
  CHECK(c[1] == Complex(0.5, -2.0));
}
