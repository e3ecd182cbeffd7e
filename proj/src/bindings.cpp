#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "truncmean/expcorr.hpp"
#include "truncmean/experiments.hpp"
#include "truncmean/fixed_point.hpp"
#include "truncmean/gibbs.hpp"
#include "truncmean/oracles.hpp"
#include "truncmean/problem.hpp"
#include "truncmean/problem_io.hpp"
#include "truncmean/special_functions.hpp"
#include "truncmean/truncated_normal.hpp"

namespace py = pybind11;
using namespace truncmean;

namespace {

Problem build_problem(Vector mu, std::optional<Matrix> sigma, std::optional<Matrix> sigma_inv,
                      std::optional<std::pair<Index, double>> expcorr,
                      const std::vector<std::pair<std::string, double>>& bounds) {
    Problem p;
    p.mu = std::move(mu);
    p.sigma = std::move(sigma);
    p.sigma_inv = std::move(sigma_inv);
    if (expcorr) p.expcorr = ExpCorrSpec{expcorr->first, expcorr->second};
    for (const auto& [side, cut] : bounds) {
        if (side == "left") {
            p.bounds.push_back(TruncationBound::left(cut));
        } else if (side == "right") {
            p.bounds.push_back(TruncationBound::right(cut));
        } else {
            throw std::invalid_argument("bound side must be 'left' or 'right'");
        }
    }
    p.validate();
    return p;
}

}  // namespace

PYBIND11_MODULE(_truncmean, m) {
    m.doc() = "Mean of a one-sided truncated multivariate normal: deterministic "
              "fixed-point solver, Gibbs baseline, and validation oracles";

    // scalar kernels
    m.def("erfc", py::vectorize(&truncmean::erfc), py::arg("x"),
          "Complementary error function");
    m.def("erfcx", py::vectorize(&truncmean::erfcx), py::arg("x"),
          "Scaled complementary error function exp(x^2) erfc(x)");
    m.def("hazard_ratio", py::vectorize(&hazard_ratio), py::arg("x"),
          "exp(-x^2)/erfc(-x), the kernel of the one-sided truncated mean");
    m.def("hazard_ratio_deriv", py::vectorize(&hazard_ratio_deriv), py::arg("x"),
          "Derivative of hazard_ratio; lies in [-sqrt(pi), 0]");
    m.def("norm_pdf", py::vectorize(&norm_pdf), py::arg("x"));
    m.def("norm_cdf", py::vectorize(&norm_cdf), py::arg("x"));
    m.def("norm_quantile", py::vectorize(&norm_quantile), py::arg("p"));

    py::class_<Rng>(m, "Rng", "Deterministic seeded generator; one per stream")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
        .def("uniform01", &Rng::uniform01)
        .def("exponential", &Rng::exponential)
        .def("standard_normal", &Rng::standard_normal);

    py::class_<TruncationBound>(m, "TruncationBound")
        .def_static("left", &TruncationBound::left, py::arg("cut"),
                    "Support [cut, inf)")
        .def_static("right", &TruncationBound::right, py::arg("cut"),
                    "Support (-inf, cut]")
        .def_property_readonly("side",
                               [](const TruncationBound& b) {
                                   return b.side == BoundSide::Left ? "left" : "right";
                               })
        .def_readonly("cut", &TruncationBound::cut)
        .def("__repr__", [](const TruncationBound& b) {
            return std::string("TruncationBound(") +
                   (b.side == BoundSide::Left ? "left" : "right") + ", " +
                   std::to_string(b.cut) + ")";
        });

    m.def("truncated_mean_one_sided", &truncated_mean_one_sided, py::arg("mu"),
          py::arg("sigma"), py::arg("bound"));
    m.def("truncated_mean_two_sided", &truncated_mean_two_sided, py::arg("mu"),
          py::arg("sigma"), py::arg("a"), py::arg("b"));
    m.def("sample_truncated", &sample_truncated, py::arg("mu"), py::arg("sigma"),
          py::arg("bound"), py::arg("rng"));

    py::class_<DominanceReport>(m, "DominanceReport")
        .def_readonly("is_dominant", &DominanceReport::is_dominant)
        .def_readonly("modulus", &DominanceReport::modulus)
        .def_readonly("worst_row", &DominanceReport::worst_row);

    m.def("invert_spd", &invert_spd, py::arg("sigma"));
    m.def("dominance_report", &dominance_report, py::arg("sigma_inv"));

    py::class_<ConditionalParams>(m, "ConditionalParams")
        .def_static("from_covariance", &ConditionalParams::from_covariance, py::arg("mu"),
                    py::arg("sigma"))
        .def_static("from_precision", &ConditionalParams::from_precision, py::arg("mu"),
                    py::arg("sigma_inv"))
        .def_property_readonly("sigma_star",
                               [](const ConditionalParams& p) { return p.sigma_star(); })
        .def("conditional_mean", &ConditionalParams::conditional_mean, py::arg("i"),
             py::arg("x"))
        .def("coupling_row", &ConditionalParams::coupling_row, py::arg("i"))
        .def("dominance", &ConditionalParams::dominance);

    py::class_<TridiagonalPrecision>(m, "TridiagonalPrecision")
        .def_readonly("diag", &TridiagonalPrecision::diag)
        .def_readonly("off", &TridiagonalPrecision::off)
        .def("dense", &TridiagonalPrecision::dense);

    m.def("build_expcorr",
          [](Index n, double rho) { return build_expcorr(ExpCorrSpec{n, rho}); },
          py::arg("n"), py::arg("rho"));
    m.def("build_expcorr_inverse",
          [](Index n, double rho) { return build_expcorr_inverse(ExpCorrSpec{n, rho}); },
          py::arg("n"), py::arg("rho"));

    py::class_<Problem>(m, "Problem")
        .def(py::init(&build_problem), py::arg("mu"), py::arg("sigma") = std::nullopt,
             py::arg("sigma_inv") = std::nullopt, py::arg("expcorr") = std::nullopt,
             py::arg("bounds"))
        .def_readonly("mu", &Problem::mu)
        .def_readonly("bounds", &Problem::bounds)
        .def_property_readonly("n", &Problem::size)
        .def("covariance", &Problem::covariance)
        .def("precision", &Problem::precision);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init([](double tol, int max_iters, std::optional<Vector> initial,
                         bool enforce_dominance) {
                 SolverConfig cfg;
                 cfg.tol = tol;
                 cfg.max_iters = max_iters;
                 cfg.initial = std::move(initial);
                 cfg.enforce_dominance = enforce_dominance;
                 return cfg;
             }),
             py::arg("tol") = 1e-10, py::arg("max_iters") = 500,
             py::arg("initial") = std::nullopt, py::arg("enforce_dominance") = false)
        .def_readwrite("tol", &SolverConfig::tol)
        .def_readwrite("max_iters", &SolverConfig::max_iters)
        .def_readwrite("enforce_dominance", &SolverConfig::enforce_dominance);

    py::class_<SolverTrace>(m, "SolverTrace")
        .def_readonly("iterates", &SolverTrace::iterates)
        .def_readonly("deltas", &SolverTrace::deltas)
        .def_readonly("modulus", &SolverTrace::modulus)
        .def_readonly("converged", &SolverTrace::converged)
        .def_readonly("iterations_used", &SolverTrace::iterations_used)
        .def_readonly("warning", &SolverTrace::warning)
        .def_property_readonly("fixed_point",
                               [](const SolverTrace& t) { return t.fixed_point(); });

    m.def("solve",
          [](const Problem& p, const SolverConfig& cfg) { return solve(p, cfg); },
          py::arg("problem"), py::arg("config") = SolverConfig{});
    m.def("contraction_ratio", &contraction_ratio, py::arg("trace"));

    py::class_<ChainConfig>(m, "ChainConfig")
        .def(py::init([](std::int64_t total_iters, std::int64_t burn_in, std::uint64_t seed) {
                 return ChainConfig{total_iters, burn_in, seed};
             }),
             py::arg("total_iters") = 200000, py::arg("burn_in") = 20000, py::arg("seed") = 0)
        .def_readwrite("total_iters", &ChainConfig::total_iters)
        .def_readwrite("burn_in", &ChainConfig::burn_in)
        .def_readwrite("seed", &ChainConfig::seed);

    py::class_<ChainStats>(m, "ChainStats")
        .def_readonly("mean_estimate", &ChainStats::mean_estimate)
        .def_readonly("sample_variance", &ChainStats::sample_variance)
        .def_readonly("sample_count", &ChainStats::sample_count)
        .def_readonly("rng_seed_used", &ChainStats::rng_seed_used)
        .def("standard_error", &ChainStats::standard_error);

    m.def("gibbs_estimate",
          [](const Problem& p, const ChainConfig& cfg) { return gibbs_estimate(p, cfg); },
          py::arg("problem"), py::arg("config") = ChainConfig{});

    m.def("quadrature_mean", &quadrature_mean, py::arg("problem"),
          py::arg("grid_points_per_dim") = 0, py::arg("extent_sigmas") = 10.0);

    py::class_<RejectionEstimate>(m, "RejectionEstimate")
        .def_readonly("mean", &RejectionEstimate::mean)
        .def_readonly("standard_error", &RejectionEstimate::standard_error)
        .def_readonly("accepts", &RejectionEstimate::accepts)
        .def_readonly("proposals", &RejectionEstimate::proposals);

    m.def("rejection_mean", &rejection_mean, py::arg("problem"), py::arg("target_accepts"),
          py::arg("seed"));

    m.def("generate_dominant_problem", &generate_dominant_problem, py::arg("n"),
          py::arg("seed"));

    m.def("read_problem", &read_problem_file, py::arg("path"));
    m.def("write_problem", &write_problem_file, py::arg("path"), py::arg("problem"));

    m.attr("__version__") = "0.1.0";
}
