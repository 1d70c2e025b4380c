#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hankelasym/asymptotics.hpp"
#include "hankelasym/detcalc.hpp"
#include "hankelasym/errors.hpp"
#include "hankelasym/hankel.hpp"
#include "hankelasym/io.hpp"
#include "hankelasym/selftest.hpp"
#include "hankelasym/special.hpp"
#include "hankelasym/symbol.hpp"

#include <sstream>

namespace py = pybind11;
using namespace hankelasym;
using complexd = std::complex<double>;

PYBIND11_MODULE(_hankelasym, m) {
    m.doc() = "Hankel truncations of jump symbols: log-determinants, trace powers and "
              "their log N asymptotics";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DimensionTooLarge>(m, "DimensionTooLarge", PyExc_ValueError);
    py::register_exception<SeriesNotConverged>(m, "SeriesNotConverged", PyExc_ArithmeticError);
    py::register_exception<QuadratureNotConverged>(m, "QuadratureNotConverged",
                                                   PyExc_ArithmeticError);
    py::register_exception<EigensolverFailed>(m, "EigensolverFailed", PyExc_ArithmeticError);
    py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ArithmeticError);
    py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<CirclePoint>(m, "CirclePoint")
        .def(py::init<double>(), py::arg("theta"))
        .def_property_readonly("theta", &CirclePoint::theta)
        .def_property_readonly("value", &CirclePoint::value)
        .def("conjugate", &CirclePoint::conjugate)
        .def("unit_power", &CirclePoint::unit_power, py::arg("k"))
        .def("same_point", &CirclePoint::same_point, py::arg("other"), py::arg("tol") = 1e-12)
        .def("__repr__", [](const CirclePoint& p) {
            std::ostringstream os;
            os << "CirclePoint(theta=" << p.theta() << ")";
            return os.str();
        });

    py::class_<JumpSpec>(m, "JumpSpec")
        .def_readonly("location", &JumpSpec::location)
        .def_readonly("kappa", &JumpSpec::kappa);

    py::class_<Symbol>(m, "Symbol")
        .def_static("hilbert_psi", &Symbol::hilbert_psi)
        .def_static("indicator_eta", &Symbol::indicator_eta)
        .def_static(
            "composite",
            [](const std::vector<std::pair<complexd, double>>& jumps,
               const std::vector<std::pair<int, complexd>>& trig) {
                std::vector<Symbol::JumpTerm> jt;
                for (const auto& [coeff, theta] : jumps) jt.push_back({coeff, CirclePoint(theta)});
                std::vector<Symbol::TrigTerm> tt;
                for (const auto& [k, coeff] : trig) tt.push_back({k, coeff});
                return Symbol::composite(std::move(jt), std::move(tt));
            },
            py::arg("jumps"), py::arg("trig") = std::vector<std::pair<int, complexd>>{},
            "Build sum_j a_j psi_{z_j} + trig polynomial from (coeff, theta) pairs")
        .def_static("from_json",
                    [](const std::string& text) {
                        return io::symbol_from_json(nlohmann::json::parse(text));
                    })
        .def("to_json", [](const Symbol& s) { return io::symbol_to_json(s).dump(); })
        .def("evaluate", &Symbol::evaluate, py::arg("theta"))
        .def("jump_height", &Symbol::jump_height, py::arg("z"))
        .def("jump_height", [](const Symbol& s, double theta) {
            return s.jump_height(CirclePoint(theta));
        })
        .def("fourier_coefficient", &Symbol::fourier_coefficient, py::arg("k"))
        .def("fourier_coefficient_quadrature", &Symbol::fourier_coefficient_quadrature,
             py::arg("k"))
        .def("jumps", [](const Symbol& s) { return s.jumps(); })
        .def("sup_norm_grid", &Symbol::sup_norm_grid, py::arg("grid_points") = 4096)
        .def_property_readonly("id", &Symbol::id)
        .def("__repr__", [](const Symbol& s) { return "Symbol(" + s.id() + ")"; });

    m.def("model_symbol", &model_symbol, py::arg("z"));
    m.def("model_symbol",
          [](double theta) { return model_symbol(CirclePoint(theta)); }, py::arg("theta"));

    py::class_<HankelTruncation>(m, "HankelTruncation")
        .def_property_readonly("n", &HankelTruncation::n)
        .def_property_readonly("symbol_id", &HankelTruncation::symbol_id)
        .def_property_readonly("real_symmetric", &HankelTruncation::real_symmetric)
        .def("entries", &HankelTruncation::entries, py::return_value_policy::copy)
        .def("eigenvalues", &HankelTruncation::eigenvalues, py::return_value_policy::copy);

    m.def("truncate", &hankelasym::truncate, py::arg("symbol"), py::arg("n"));
    m.def("trace_power", &trace_power, py::arg("truncation"), py::arg("k"));
    m.def("trace_power_direct", &trace_power_direct, py::arg("truncation"), py::arg("k"));
    m.def("hs_norm_sq", &hs_norm_sq, py::arg("truncation"));
    m.def("operator_norm", &operator_norm, py::arg("truncation"));
    m.def("compressed_square", &compressed_square, py::arg("n"));
    m.def("tail_hs", &tail_hs, py::arg("n"));

    py::class_<special::SeriesEvalConfig>(m, "SeriesEvalConfig")
        .def(py::init<>())
        .def(py::init([](std::size_t max_terms, double abs_tol) {
                 special::SeriesEvalConfig c;
                 c.max_terms = max_terms;
                 c.abs_tol = abs_tol;
                 return c;
             }),
             py::arg("max_terms"), py::arg("abs_tol"))
        .def_readwrite("max_terms", &special::SeriesEvalConfig::max_terms)
        .def_readwrite("abs_tol", &special::SeriesEvalConfig::abs_tol);

    m.def("beta_half", &special::beta_half, py::arg("k"));
    m.def("arcsin_c", &special::arcsin_c, py::arg("w"));
    m.def("arcsin_sq_of_square", &special::arcsin_sq_of_square, py::arg("u"),
          py::arg("cfg") = special::SeriesEvalConfig{});
    m.def("series_S", &special::series_S, py::arg("v"),
          py::arg("cfg") = special::SeriesEvalConfig{});
    m.def("series_T", &special::series_T, py::arg("v"),
          py::arg("cfg") = special::SeriesEvalConfig{});
    m.def("sech_integral", &special::sech_integral, py::arg("m"));
    m.def("log_integral", &special::log_integral, py::arg("v"));
    m.def("digamma", &special::digamma, py::arg("x"));
    m.def("trigamma", &special::trigamma, py::arg("x"));
    m.def("lerch_phi", &special::lerch_phi, py::arg("v"), py::arg("s"), py::arg("a"));

    py::class_<TraceCoefficient>(m, "TraceCoefficient")
        .def_readonly("k", &TraceCoefficient::k)
        .def_readonly("mu", &TraceCoefficient::mu);

    py::class_<AsymptoticPrediction>(m, "AsymptoticPrediction")
        .def_readonly("beta", &AsymptoticPrediction::beta)
        .def_readonly("gamma_raw", &AsymptoticPrediction::gamma_raw)
        .def_readonly("exponent", &AsymptoticPrediction::exponent)
        .def_readonly("linear_part", &AsymptoticPrediction::linear_part)
        .def_readonly("quadratic_part", &AsymptoticPrediction::quadratic_part);

    m.def("mu_k", &mu_k, py::arg("symbol"), py::arg("k"));
    m.def("gamma_exponent", &gamma_exponent, py::arg("symbol"), py::arg("beta"),
          py::arg("diagnostic") = false);
    m.def("mu_series_sum", &mu_series_sum, py::arg("symbol"), py::arg("beta"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](std::vector<int> ns) {
                 GridSpec g{std::move(ns)};
                 g.validate();
                 return g;
             }),
             py::arg("n_values"))
        .def_static("dyadic", &GridSpec::dyadic, py::arg("nmin") = 64, py::arg("nmax") = 4096)
        .def_readonly("n_values", &GridSpec::n_values);

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("per_n", &ConvergenceReport::per_n)
        .def_readonly("slopes", &ConvergenceReport::slopes)
        .def_readonly("predicted_slope", &ConvergenceReport::predicted_slope)
        .def_readonly("final_rel_err", &ConvergenceReport::final_rel_err)
        .def_readonly("trend_improving", &ConvergenceReport::trend_improving)
        .def("to_json", [](const ConvergenceReport& r) { return io::report_to_json(r).dump(); })
        .def("to_csv", [](const ConvergenceReport& r) { return io::report_to_csv(r); });

    py::class_<SquareCheckReport>(m, "SquareCheckReport")
        .def_readonly("report", &SquareCheckReport::report)
        .def_readonly("trace_discrepancy", &SquareCheckReport::trace_discrepancy);

    m.def("log_det_direct", &log_det_direct, py::arg("truncation"), py::arg("beta"),
          py::arg("diagnostic") = false);
    m.def("log_det_series", &log_det_series, py::arg("truncation"), py::arg("beta"),
          py::arg("tol") = 1e-12);
    m.def("slope_estimate", &slope_estimate, py::arg("samples"),
          py::arg("predicted") = std::nullopt);
    m.def("verify", &hankelasym::verify, py::arg("symbol"), py::arg("beta"), py::arg("grid"),
          py::call_guard<py::gil_scoped_release>());
    m.def("verify_traces", &verify_traces, py::arg("symbol"), py::arg("k_max"), py::arg("grid"),
          py::call_guard<py::gil_scoped_release>());
    m.def("compressed_square_check", &compressed_square_check, py::arg("beta"), py::arg("grid"),
          py::call_guard<py::gil_scoped_release>());

    m.def("run_selftest", []() {
        std::ostringstream os;
        bool ok = run_selftest(os);
        return py::make_tuple(ok, os.str());
    });

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
