#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dirichlet/experiments.hpp"

namespace py = pybind11;
using namespace dirichlet;

namespace {

std::vector<Complex> to_vector(std::span<const Complex> s) { return {s.begin(), s.end()}; }

SampleGrid grid_or_dyadic(const CoefficientSeq& a, const std::optional<std::vector<std::uint64_t>>& scales) {
  return scales ? SampleGrid(*scales) : SampleGrid::dyadic(a.length());
}

OptimizerConfig make_optimizer(int restarts, int sweeps, std::uint64_t seed, unsigned threads) {
  OptimizerConfig opt;
  opt.restarts = restarts;
  opt.coordinate_sweeps = sweeps;
  opt.seed = seed;
  opt.threads = threads;
  return opt;
}

std::string dump(const ExperimentReport& r) { return r.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Abscissas of Dirichlet series: coefficients, estimators, Bohr lift";
  m.attr("__version__") = tool_version();

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<CoverageError>(m, "CoverageError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base.ptr());
  py::register_exception<StructureError>(m, "StructureError", base.ptr());
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  py::enum_<Structure>(m, "Structure")
      .value("unknown", Structure::unknown)
      .value("multiplicative", Structure::multiplicative)
      .value("completely_multiplicative", Structure::completely_multiplicative);

  py::class_<CoefficientSeq>(m, "CoefficientSeq")
      .def(py::init<std::vector<Complex>, Structure>(), py::arg("values"),
           py::arg("structure") = Structure::unknown)
      .def("__len__", &CoefficientSeq::length)
      .def("__getitem__", &CoefficientSeq::at, py::arg("n"), "1-based coefficient a_n")
      .def_property_readonly("values", [](const CoefficientSeq& a) { return to_vector(a.values()); })
      .def_property_readonly("structure", &CoefficientSeq::structure);

  py::class_<PrimeLocalRule>(m, "PrimeLocalRule")
      .def(py::init<std::uint64_t, std::vector<Complex>>(), py::arg("prime"), py::arg("local_values"))
      .def_readwrite("prime", &PrimeLocalRule::prime)
      .def_readwrite("local_values", &PrimeLocalRule::local_values);

  m.def("sieve_primes", &sieve_primes, py::arg("limit"));
  m.def("multiplicative_expand",
        [](const std::vector<PrimeLocalRule>& rules, std::size_t N) { return multiplicative_expand(rules, N); },
        py::arg("rules"), py::arg("N"));
  m.def("dirichlet_convolve", &dirichlet_convolve, py::arg("a"), py::arg("b"));
  m.def("mobius_seq", &mobius_seq, py::arg("N"));
  m.def("character_mod3", [](std::size_t N) { return lchi3_coeffs(N); }, py::arg("N"));
  m.def("is_multiplicative", &is_multiplicative, py::arg("a"));
  m.def("is_completely_multiplicative", &is_completely_multiplicative, py::arg("a"));
  m.def("horizontal_shift", &horizontal_shift, py::arg("a"), py::arg("delta"));

  m.def("zeta_coeffs", &zeta_coeffs, py::arg("N"));
  m.def("lchi3_coeffs", &lchi3_coeffs, py::arg("N"));
  m.def("galpha_coeffs", &galpha_coeffs, py::arg("alpha"), py::arg("N"));
  m.def("thm1_coeffs", &galpha_lchi3_coeffs, py::arg("alpha"), py::arg("N"));
  m.def("wintner_coeffs",
        [](std::uint64_t seed, std::size_t N, std::optional<int> forced_sign) {
          return wintner_coeffs({seed, N, forced_sign});
        },
        py::arg("seed"), py::arg("N"), py::arg("forced_sign") = py::none());

  py::enum_<AbscissaKind>(m, "AbscissaKind")
      .value("simple", AbscissaKind::simple)
      .value("uniform", AbscissaKind::uniform)
      .value("absolute", AbscissaKind::absolute);

  py::class_<AbscissaEstimate>(m, "AbscissaEstimate")
      .def_readonly("kind", &AbscissaEstimate::kind)
      .def_readonly("estimate", &AbscissaEstimate::estimate)
      .def_readonly("tail_ratio", &AbscissaEstimate::tail_ratio)
      .def_readonly("envelope_slope", &AbscissaEstimate::envelope_slope)
      .def_readonly("clamped", &AbscissaEstimate::clamped)
      .def_readonly("method", &AbscissaEstimate::method)
      .def_property_readonly("samples", [](const AbscissaEstimate& e) {
        std::vector<std::pair<double, double>> out;
        for (const auto& s : e.samples) out.emplace_back(s.x, s.statistic);
        return out;
      });

  m.def("dyadic_grid", [](std::uint64_t N) { auto g = SampleGrid::dyadic(N); return std::vector<std::uint64_t>(g.scales().begin(), g.scales().end()); }, py::arg("N"));
  m.def("sigma_c_estimate",
        [](const CoefficientSeq& a, std::optional<std::vector<std::uint64_t>> scales) {
          return sigma_c_estimate(a, grid_or_dyadic(a, scales));
        },
        py::arg("a"), py::arg("scales") = py::none());
  m.def("sigma_a_estimate",
        [](const CoefficientSeq& a, std::optional<std::vector<std::uint64_t>> scales) {
          return sigma_a_estimate(a, grid_or_dyadic(a, scales));
        },
        py::arg("a"), py::arg("scales") = py::none());
  m.def("sigma_b_estimate",
        [](const CoefficientSeq& a, std::optional<std::vector<std::uint64_t>> scales, int restarts, int sweeps,
           std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return sigma_b_estimate(a, grid_or_dyadic(a, scales), make_optimizer(restarts, sweeps, seed, threads));
        },
        py::arg("a"), py::arg("scales") = py::none(), py::arg("restarts") = 32, py::arg("sweeps") = 200,
        py::arg("seed") = 0, py::arg("threads") = 0);

  py::class_<LiftedPolynomial>(m, "LiftedPolynomial")
      .def_property_readonly("prime_basis", [](const LiftedPolynomial& F) {
        return std::vector<std::uint64_t>(F.prime_basis().begin(), F.prime_basis().end());
      })
      .def_property_readonly("dimension", &LiftedPolynomial::dimension)
      .def_property_readonly("terms", [](const LiftedPolynomial& F) {
        std::vector<std::pair<std::vector<std::uint32_t>, Complex>> out;
        for (const auto& t : F.terms()) out.emplace_back(t.index.dense(), t.coeff);
        return out;
      })
      .def_property_readonly("source_length", &LiftedPolynomial::source_length);

  m.def("lift", &lift, py::arg("a"));
  m.def("eval", [](const LiftedPolynomial& F, std::vector<double> angles) { return eval(F, {std::move(angles)}); },
        py::arg("F"), py::arg("angles"));
  m.def("sup_norm_torus",
        [](const LiftedPolynomial& F, int restarts, int sweeps, std::uint64_t seed, unsigned threads) {
          SupNormResult r;
          {
            py::gil_scoped_release release;
            r = sup_norm_torus(F, make_optimizer(restarts, sweeps, seed, threads));
          }
          return py::make_tuple(r.value, r.argmax.angles);
        },
        py::arg("F"), py::arg("restarts") = 32, py::arg("sweeps") = 200, py::arg("seed") = 0,
        py::arg("threads") = 0, "returns (value, argmax angles)");
  m.def("bohr_C", &bohr_C, py::arg("r"));
  m.def("bohr_majorant_check",
        [](const std::vector<Complex>& b, double r) {
          const auto c = bohr_majorant_check(b, r, OptimizerConfig{});
          return py::dict(py::arg("lhs") = c.lhs, py::arg("sup") = c.sup, py::arg("constant") = c.constant,
                          py::arg("rhs") = c.rhs, py::arg("pass") = c.pass);
        },
        py::arg("coeffs"), py::arg("r"));
  m.def("euler_chain_check",
        [](const CoefficientSeq& a, double eps) {
          const auto c = euler_chain_check(a, eps, OptimizerConfig{});
          return py::dict(py::arg("epsilon") = c.epsilon, py::arg("lhs") = c.lhs,
                          py::arg("log_rhs") = c.log_rhs, py::arg("primes") = c.primes,
                          py::arg("divergence_warning") = c.divergence_warning, py::arg("pass") = c.pass);
        },
        py::arg("a"), py::arg("epsilon"));

  m.def("_thm1_sweep", [](std::vector<double> alphas, std::size_t N, double tol) {
    py::gil_scoped_release release;
    return dump(run_thm1_sweep(alphas, N, tol));
  });
  m.def("_wintner_mc", [](int trials, std::size_t N, std::uint64_t seed, std::optional<int> forced) {
    py::gil_scoped_release release;
    WintnerMcConfig cfg;
    cfg.trials = trials;
    cfg.N = N;
    cfg.seed = seed;
    cfg.forced_sign = forced;
    return dump(run_wintner_mc(cfg));
  });
  m.def("_bohr_check", [](int count, int degree, std::vector<double> radii, std::uint64_t seed) {
    py::gil_scoped_release release;
    BohrCheckConfig cfg;
    cfg.count = count;
    cfg.degree = degree;
    cfg.radii = std::move(radii);
    cfg.seed = seed;
    return dump(run_bohr_check(cfg));
  });
}
