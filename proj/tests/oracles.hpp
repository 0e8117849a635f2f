#pragma once

// Independent brute-force oracles. Nothing here calls into the code paths
// it is used to check (convolution, sieves, the torus optimizer).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// c_n = sum over d = 1..n with n % d == 0.
inline std::vector<Complex> naive_convolve(const std::vector<Complex>& a,
                                           const std::vector<Complex>& b) {
  const std::size_t N = a.size();
  std::vector<Complex> c(N);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) c[n - 1] += a[d - 1] * b[n / d - 1];
    }
  }
  return c;
}

inline int mobius_trial(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Polynomial in dense form: exponent vectors and coefficients.
struct DensePoly {
  std::size_t dimension = 0;
  std::vector<std::pair<std::vector<std::uint32_t>, Complex>> terms;
};

inline Complex dense_eval(const DensePoly& F, const std::vector<double>& angles) {
  Complex s{};
  for (const auto& [exps, c] : F.terms) {
    double phase = 0.0;
    for (std::size_t j = 0; j < exps.size(); ++j) phase += exps[j] * angles[j];
    s += c * std::polar(1.0, phase);
  }
  return s;
}

struct GridSup {
  double raw;      // best value on the coarse grid
  double refined;  // best value after zooming around the best coarse cells
};

// Full tensor grid with `per_angle` points per coordinate (dimension <= 3),
// then nested zoom grids (9 points per coordinate, 10 levels) around the ten
// best coarse points.
inline GridSup dense_torus_sup(const DensePoly& F, std::size_t per_angle) {
  const std::size_t d = F.dimension;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(per_angle);
  std::vector<Complex> table(per_angle);
  for (std::size_t i = 0; i < per_angle; ++i) table[i] = std::polar(1.0, h * static_cast<double>(i));

  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= per_angle;
  std::vector<std::pair<double, std::size_t>> best;  // (value, flat index), top 10
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t j = 0; j < d; ++j) {
      idx[j] = rem % per_angle;
      rem /= per_angle;
    }
    Complex s{};
    for (const auto& [exps, c] : F.terms) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < d; ++j) k += exps[j] * idx[j];
      s += c * table[k % per_angle];
    }
    const double v = std::abs(s);
    if (best.size() < 10 || v > best.back().first) {
      best.emplace_back(v, flat);
      std::sort(best.begin(), best.end(), [](auto& x, auto& y) { return x.first > y.first; });
      if (best.size() > 10) best.pop_back();
    }
  }

  double refined = best.front().first;
  for (const auto& [value, flat] : best) {
    std::vector<double> centre(d);
    std::size_t rem = flat;
    for (std::size_t j = 0; j < d; ++j) {
      centre[j] = h * static_cast<double>(rem % per_angle);
      rem /= per_angle;
    }
    double radius = h;
    double local = value;
    for (int level = 0; level < 10; ++level) {
      std::vector<double> next = centre;
      std::size_t pts = 1;
      for (std::size_t j = 0; j < d; ++j) pts *= 9;
      std::vector<double> probe(d);
      for (std::size_t q = 0; q < pts; ++q) {
        std::size_t r = q;
        for (std::size_t j = 0; j < d; ++j) {
          probe[j] = centre[j] + radius * (static_cast<double>(r % 9) - 4.0) / 4.0;
          r /= 9;
        }
        const double v = std::abs(dense_eval(F, probe));
        if (v > local) {
          local = v;
          next = probe;
        }
      }
      centre = next;
      radius /= 4.0;
    }
    refined = std::max(refined, local);
  }
  return {best.front().first, refined};
}

// max over an M-point grid of |sum b_m e^{i m theta}| (direct summation).
inline double circle_grid_sup(const std::vector<Complex>& b, std::size_t M) {
  double best = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(M);
    Complex s{};
    for (std::size_t m = 0; m < b.size(); ++m) s += b[m] * std::polar(1.0, t * static_cast<double>(m));
    best = std::max(best, std::abs(s));
  }
  return best;
}

}  // namespace oracle
