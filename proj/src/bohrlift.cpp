#include "dirichlet/bohrlift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dirichlet/parallel.hpp"
#include "dirichlet/rng.hpp"

namespace dirichlet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvGolden = 0.6180339887498949;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a >= kTwoPi ? 0.0 : a;
}

Complex unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Maximizes f on [lo, hi] assuming one peak in the bracket.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol) {
  double x1 = hi - kInvGolden * (hi - lo);
  double x2 = lo + kInvGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// |sum_k g_k e^{ik phi}|^2 by Horner's rule.
double trig_power(std::span<const Complex> g, double phi) {
  const Complex z = unit(phi);
  Complex acc = g.back();
  for (std::size_t k = g.size() - 1; k-- > 0;) acc = acc * z + g[k];
  return std::norm(acc);
}

// Best angle for |sum_k g_k e^{ik phi}|^2 starting from `current`.
std::pair<double, double> maximize_trig(std::span<const Complex> g, double current,
                                        double tol) {
  const double at_current = trig_power(g, current);
  if (g.size() == 2) {
    if (g[0] == Complex{} || g[1] == Complex{}) return {current, at_current};
    const double phi = wrap_angle(std::arg(g[0]) - std::arg(g[1]));
    const double v = trig_power(g, phi);
    return v > at_current ? std::pair{phi, v} : std::pair{current, at_current};
  }
  const std::size_t scan = std::max<std::size_t>(32, 8 * g.size());
  const double step = kTwoPi / static_cast<double>(scan);
  double best_phi = current;
  double best = at_current;
  std::size_t best_i = scan;
  for (std::size_t i = 0; i < scan; ++i) {
    const double phi = step * static_cast<double>(i);
    const double v = trig_power(g, phi);
    if (v > best) {
      best = v;
      best_phi = phi;
      best_i = i;
    }
  }
  const double centre = best_i == scan ? current : best_phi;
  auto [phi, v] = golden_max([&](double x) { return trig_power(g, x); }, centre - step,
                             centre + step, tol);
  if (v > best) {
    best = v;
    best_phi = wrap_angle(phi);
  }
  return {best_phi, best};
}

// Sparse incidence structure shared by all ascent runs on one polynomial.
class CoordinateAscent {
 public:
  CoordinateAscent(const LiftedPolynomial& F, const OptimizerConfig& opt) : F_(F), opt_(opt) {
    const std::size_t d = F.dimension();
    occurrences_.resize(d);
    max_exponent_.assign(d, 0);
    const auto terms = F.terms();
    for (std::uint32_t t = 0; t < terms.size(); ++t) {
      for (const auto& e : terms[t].index.nonzero()) {
        occurrences_[e.variable].push_back({t, e.exponent});
        max_exponent_[e.variable] = std::max(max_exponent_[e.variable], e.exponent);
      }
    }
  }

  // Returns |F| reached and overwrites `angles` with the final point.
  double run(std::vector<double>& angles) const {
    const auto terms = F_.terms();
    std::vector<Complex> w(terms.size());
    Complex total = refresh(angles, w);
    std::vector<Complex> g;
    std::vector<Complex> powers;
    for (int sweep = 0; sweep < opt_.coordinate_sweeps; ++sweep) {
      const double before = std::abs(total);
      for (std::size_t j = 0; j < occurrences_.size(); ++j) {
        const auto& occ = occurrences_[j];
        if (occ.empty()) continue;
        const std::uint32_t K = max_exponent_[j];
        g.assign(K + 1, Complex{});
        powers.resize(K + 1);
        powers_of(unit(-angles[j]), powers);
        Complex involved{};
        for (const auto& [t, k] : occ) {
          g[k] += w[t] * powers[k];
          involved += w[t];
        }
        g[0] = total - involved;
        const double current = std::norm(total);
        const auto [phi, value] = maximize_trig(g, angles[j], opt_.angle_tolerance);
        if (!(value > current)) continue;
        powers_of(unit(phi - angles[j]), powers);
        for (const auto& [t, k] : occ) w[t] *= powers[k];
        powers_of(unit(phi), powers);
        total = Complex{};
        for (std::uint32_t k = 0; k <= K; ++k) total += g[k] * powers[k];
        angles[j] = phi;
      }
      total = refresh(angles, w);
      const double after = std::abs(total);
      if (after - before <= opt_.value_tolerance * std::max(1.0, after)) break;
    }
    return std::abs(total);
  }

 private:
  static void powers_of(Complex z, std::vector<Complex>& out) {
    Complex acc{1.0, 0.0};
    for (auto& p : out) {
      p = acc;
      acc *= z;
    }
  }

  Complex refresh(const std::vector<double>& angles, std::vector<Complex>& w) const {
    const auto terms = F_.terms();
    Complex total{};
    for (std::size_t t = 0; t < terms.size(); ++t) {
      double phase = 0.0;
      for (const auto& e : terms[t].index.nonzero()) phase += e.exponent * angles[e.variable];
      w[t] = terms[t].coeff * unit(phase);
      total += w[t];
    }
    return total;
  }

  const LiftedPolynomial& F_;
  const OptimizerConfig& opt_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> occurrences_;
  std::vector<std::uint32_t> max_exponent_;
};

std::uint64_t checked_power_product(std::span<const std::uint64_t> basis, const MultiIndex& idx) {
  std::uint64_t n = 1;
  for (const auto& e : idx.nonzero()) {
    for (std::uint32_t k = 0; k < e.exponent; ++k) {
      if (__builtin_mul_overflow(n, basis[e.variable], &n)) {
        throw DimensionError("LiftedPolynomial: term integer overflows 64 bits");
      }
    }
  }
  return n;
}

}  // namespace

MultiIndex::MultiIndex(std::size_t dimension, std::vector<Entry> nonzero)
    : dimension_(dimension), nonzero_(std::move(nonzero)) {
  std::sort(nonzero_.begin(), nonzero_.end());
  for (std::size_t i = 0; i < nonzero_.size(); ++i) {
    const auto& e = nonzero_[i];
    if (e.variable >= dimension_ || e.exponent == 0 ||
        (i > 0 && nonzero_[i - 1].variable == e.variable)) {
      throw DimensionError("MultiIndex: invalid entry for variable " + std::to_string(e.variable));
    }
  }
}

MultiIndex MultiIndex::from_dense(std::span<const std::uint32_t> exponents) {
  std::vector<Entry> nz;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] != 0) nz.push_back({static_cast<std::uint32_t>(j), exponents[j]});
  }
  return MultiIndex(exponents.size(), std::move(nz));
}

std::uint32_t MultiIndex::operator[](std::size_t variable) const noexcept {
  for (const auto& e : nonzero_) {
    if (e.variable == variable) return e.exponent;
  }
  return 0;
}

std::vector<std::uint32_t> MultiIndex::dense() const {
  std::vector<std::uint32_t> out(dimension_, 0);
  for (const auto& e : nonzero_) out[e.variable] = e.exponent;
  return out;
}

LiftedPolynomial::LiftedPolynomial(std::vector<std::uint64_t> prime_basis,
                                   std::vector<LiftedTerm> terms, std::uint64_t source_length)
    : basis_(std::move(prime_basis)), source_length_(source_length) {
  if (!basis_.empty()) {
    const PrimeSieve sieve(basis_.back());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (!sieve.is_prime(basis_[j]) || (j > 0 && basis_[j - 1] >= basis_[j])) {
        throw DomainError("LiftedPolynomial: basis must be ascending primes");
      }
    }
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  order.reserve(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].index.dimension() != basis_.size()) {
      throw DimensionError("LiftedPolynomial: multi-index dimension does not match the basis");
    }
    const std::uint64_t n = checked_power_product(basis_, terms[t].index);
    if (n > source_length_) {
      throw DimensionError("LiftedPolynomial: term n = " + std::to_string(n) +
                           " exceeds source length " + std::to_string(source_length_));
    }
    order.emplace_back(n, t);
  }
  std::sort(order.begin(), order.end());
  terms_.reserve(terms.size());
  integers_.reserve(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && order[i - 1].first == order[i].first) {
      throw DomainError("LiftedPolynomial: duplicate multi-index for n = " +
                        std::to_string(order[i].first));
    }
    terms_.push_back(std::move(terms[order[i].second]));
    integers_.push_back(order[i].first);
  }
}

LiftedPolynomial LiftedPolynomial::from_dense(
    std::vector<std::uint64_t> prime_basis,
    std::span<const std::pair<std::vector<std::uint32_t>, Complex>> terms) {
  std::vector<LiftedTerm> lifted;
  std::uint64_t largest = 1;
  for (const auto& [exps, c] : terms) {
    if (exps.size() != prime_basis.size()) {
      throw DimensionError("LiftedPolynomial::from_dense: exponent vector length mismatch");
    }
    lifted.push_back({MultiIndex::from_dense(exps), c});
    largest = std::max(largest, checked_power_product(prime_basis, lifted.back().index));
  }
  return LiftedPolynomial(std::move(prime_basis), std::move(lifted), largest);
}

double LiftedPolynomial::coefficient_l1() const noexcept {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

void OptimizerConfig::validate() const {
  if (restarts <= 0 || coordinate_sweeps <= 0 || !(angle_tolerance > 0.0) ||
      !(value_tolerance > 0.0)) {
    throw DomainError("OptimizerConfig: restarts, sweeps and tolerances must be positive");
  }
}

MultiIndex alpha_index(std::uint64_t n, std::span<const std::uint64_t> prime_basis) {
  if (n == 0) throw DomainError("alpha_index: n must be positive");
  std::vector<MultiIndex::Entry> nz;
  for (const auto& [p, e] : factorize(n)) {
    const auto it = std::lower_bound(prime_basis.begin(), prime_basis.end(), p);
    if (it == prime_basis.end() || *it != p) {
      throw CoverageError("alpha_index: prime " + std::to_string(p) + " of " + std::to_string(n) +
                          " is not in the basis");
    }
    nz.push_back({static_cast<std::uint32_t>(it - prime_basis.begin()), e});
  }
  return MultiIndex(prime_basis.size(), std::move(nz));
}

LiftedPolynomial lift(const CoefficientSeq& a) {
  const std::size_t N = a.length();
  const PrimeSieve sieve(N);
  const auto& primes = sieve.primes();
  std::vector<std::uint32_t> position(N + 1, 0);
  for (std::uint32_t j = 0; j < primes.size(); ++j) position[primes[j]] = j;

  std::vector<LiftedTerm> terms;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const Complex c = a[n];
    if (c == Complex{}) continue;
    std::vector<MultiIndex::Entry> nz;
    for (const auto& [p, e] : sieve.factorize(n)) nz.push_back({position[p], e});
    terms.push_back({MultiIndex(primes.size(), std::move(nz)), c});
  }
  if (terms.empty()) throw DegenerateInputError("lift: coefficient sequence is identically zero");
  return LiftedPolynomial(primes, std::move(terms), N);
}

Complex eval(const LiftedPolynomial& F, const TorusPoint& point) {
  if (point.angles.size() != F.dimension()) {
    throw DimensionError("eval: point has " + std::to_string(point.angles.size()) +
                         " angles, polynomial has " + std::to_string(F.dimension()) + " variables");
  }
  Complex total{};
  for (const auto& t : F.terms()) {
    double phase = 0.0;
    for (const auto& e : t.index.nonzero()) phase += e.exponent * point.angles[e.variable];
    total += t.coeff * unit(phase);
  }
  return total;
}

SupNormResult sup_norm_torus(const LiftedPolynomial& F, const OptimizerConfig& opt,
                             std::span<const TorusPoint> warm_starts) {
  opt.validate();
  if (F.terms().empty()) throw DegenerateInputError("sup_norm_torus: polynomial has no terms");
  const std::size_t d = F.dimension();

  std::vector<std::vector<double>> starts;
  starts.emplace_back(d, 0.0);
  for (const auto& w : warm_starts) {
    std::vector<double> s(d, 0.0);
    std::copy_n(w.angles.begin(), std::min(d, w.angles.size()), s.begin());
    for (auto& x : s) x = wrap_angle(x);
    starts.push_back(std::move(s));
  }
  for (int r = 0; r < opt.restarts; ++r) {
    StreamRng rng(opt.seed, static_cast<std::uint64_t>(r));
    std::vector<double> s(d);
    for (auto& x : s) x = rng.angle();
    starts.push_back(std::move(s));
  }

  const CoordinateAscent ascent(F, opt);
  std::vector<double> reached(starts.size());
  parallel_for(starts.size(), opt.threads, [&](std::size_t i) { reached[i] = ascent.run(starts[i]); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < starts.size(); ++i) {
    if (reached[i] > reached[best]) best = i;
  }
  SupNormResult out;
  out.argmax.angles = std::move(starts[best]);
  out.value = std::abs(eval(F, out.argmax));
  out.upper_bound = F.coefficient_l1();
  out.starts = static_cast<int>(starts.size());
  return out;
}

CircleMax sup_norm_circle(std::span<const Complex> coeffs, std::size_t grid_points,
                          double angle_tolerance) {
  if (coeffs.empty()) throw DegenerateInputError("sup_norm_circle: no coefficients");
  if (coeffs.size() == 1) return {std::abs(coeffs[0]), 0.0};
  const double step = kTwoPi / static_cast<double>(grid_points);
  double best = -1.0;
  double best_angle = 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double phi = step * static_cast<double>(i);
    const double v = trig_power(coeffs, phi);
    if (v > best) {
      best = v;
      best_angle = phi;
    }
  }
  auto [phi, v] = golden_max([&](double x) { return trig_power(coeffs, x); }, best_angle - step,
                             best_angle + step, angle_tolerance);
  if (v > best) {
    best = v;
    best_angle = wrap_angle(phi);
  }
  return {std::sqrt(best), best_angle};
}

std::vector<PrimeLocalRule> per_prime_factors(const CoefficientSeq& a) {
  if (!is_multiplicative(a)) {
    throw StructureError("per_prime_factors: coefficients are not multiplicative");
  }
  const std::uint64_t N = a.length();
  std::vector<PrimeLocalRule> rules;
  for (std::uint64_t p : sieve_primes(N)) {
    PrimeLocalRule rule{p, {}};
    for (std::uint64_t q = p;; q *= p) {
      rule.local_values.push_back(a[q]);
      if (q > N / p) break;
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

double factor_sup_norm(const PrimeLocalRule& rule, const OptimizerConfig& opt) {
  std::vector<Complex> poly;
  poly.reserve(rule.local_values.size() + 1);
  poly.emplace_back(1.0, 0.0);
  poly.insert(poly.end(), rule.local_values.begin(), rule.local_values.end());
  return sup_norm_circle(poly, 4096, opt.angle_tolerance).value;
}

double bohr_C(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("bohr_C: r must lie in [0, 1)");
  return r <= 1.0 / 3.0 ? 1.0 : 1.0 / std::sqrt(1.0 - r * r);
}

MajorantCheck bohr_majorant_check(std::span<const Complex> coeffs, double r,
                                  const OptimizerConfig& opt) {
  const double constant = bohr_C(r);
  if (std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c == Complex{}; })) {
    throw DegenerateInputError("bohr_majorant_check: polynomial is identically zero");
  }
  MajorantCheck out{};
  double rk = 1.0;
  for (const Complex b : coeffs) {
    out.lhs += std::abs(b) * rk;
    rk *= r;
  }
  out.sup = sup_norm_circle(coeffs, std::size_t{1} << 14, opt.angle_tolerance).value;
  out.constant = constant;
  out.rhs = constant * out.sup;
  out.pass = out.lhs <= out.rhs * (1.0 + 1e-3);
  return out;
}

EulerChainCheck euler_chain_check(const CoefficientSeq& a, double epsilon,
                                  const OptimizerConfig& opt) {
  if (!(epsilon > 0.0)) throw DomainError("euler_chain_check: epsilon must be positive");
  const auto rules = per_prime_factors(a);
  const std::size_t N = a.length();

  EulerChainCheck out;
  out.epsilon = epsilon;
  for (std::size_t n = 1; n <= N; ++n) {
    out.lhs += std::abs(a[n]) * std::pow(static_cast<double>(n), -epsilon);
  }
  double log_correction = 0.0;
  for (const auto& rule : rules) {
    const double r = std::pow(static_cast<double>(rule.prime), -epsilon);
    double middle = 1.0;
    double rk = 1.0;
    for (const Complex c : rule.local_values) {
      rk *= r;
      middle += std::abs(c) * rk;
    }
    const double sup = factor_sup_norm(rule, opt);
    const double constant = bohr_C(r);
    out.log_middle_product += std::log(middle);
    out.log_factor_product += std::log(sup);
    if (r > 1.0 / 3.0) {
      log_correction += std::log(constant);
      ++out.corrected_primes;
    }
    if (middle > constant * sup * (1.0 + 1e-3)) out.factors_hold = false;
    ++out.primes;
  }
  out.correction_product = std::exp(log_correction);
  out.log_rhs = log_correction + out.log_factor_product;
  out.divergence_warning = std::pow(3.0, 1.0 / epsilon) > static_cast<double>(N);
  out.pass = std::log(out.lhs) <= out.log_rhs + std::log1p(1e-3);
  return out;
}

}  // namespace dirichlet
