#pragma once

#include <random>
#include <set>

#include "dirichlet/bohrlift.hpp"
#include "oracles.hpp"

namespace testgen {

struct RandomLifted {
  dirichlet::LiftedPolynomial poly;
  oracle::DensePoly dense;
};

// Polynomial in 1..3 variables over the basis (2, 3, 5) with 1..12 distinct
// terms, exponents 0..3, coefficients uniform in the complex box [-1, 1]^2.
inline RandomLifted random_lifted(std::mt19937_64& rng) {
  const std::size_t d = 1 + rng() % 3;
  const std::vector<std::uint64_t> basis_all{2, 3, 5};
  std::vector<std::uint64_t> basis(basis_all.begin(), basis_all.begin() + d);
  const std::size_t max_terms = d == 1 ? 4 : 12;
  const std::size_t want = 1 + rng() % max_terms;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::set<std::vector<std::uint32_t>> seen;
  oracle::DensePoly dense{d, {}};
  while (dense.terms.size() < want) {
    std::vector<std::uint32_t> e(d);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 4);
    if (!seen.insert(e).second) continue;
    dense.terms.emplace_back(e, std::complex<double>(u(rng), u(rng)));
  }
  return {dirichlet::LiftedPolynomial::from_dense(basis, dense.terms), dense};
}

}  // namespace testgen
