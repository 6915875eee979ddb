// Python bindings for the core operations.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polybohr/report.hpp"

namespace py = pybind11;
using namespace polybohr;

namespace {

MultiIndex as_index(const std::vector<int>& entries) { return MultiIndex(entries); }

Form parse_form(const std::string& s) {
    if (s == "minus") return Form::minus;
    if (s == "plus") return Form::plus;
    throw std::invalid_argument("form must be 'minus' or 'plus'");
}

RadiusEquation equation_from(const std::string& family, int N, double a0,
                             const std::string& variant) {
    if (family == "psi") return RadiusEquation::psi_n(N);
    if (family == "psi-prime") return RadiusEquation::psi_prime_n(N);
    if (family == "r-a0") return RadiusEquation::r_a0(a0);
    if (family == "cubic-a0")
        return RadiusEquation::cubic(a0, variant == "proof" ? CubicVariant::proof
                                                            : CubicVariant::statement);
    if (family == "sqrt17") return RadiusEquation::sqrt17();
    if (family == "quartic") return RadiusEquation::quartic_eq();
    if (family == "tilde") return RadiusEquation::tilde_n(N);
    if (family == "tilde-prime") return RadiusEquation::tilde_prime_n(N);
    throw std::invalid_argument("unknown radius family '" + family + "'");
}

FunctionalValue functional_series(const std::string& name, const TruncatedSeries& f,
                                  const EvalContext& ctx) {
    if (name == "A1") return functional_A1(f, ctx);
    if (name == "A2") return functional_A2(f, ctx);
    if (name == "A3") return functional_A3(f, ctx);
    if (name == "A4") return functional_A4(f, ctx);
    if (name == "I") return functional_I(f, ctx);
    if (name == "J") return functional_J(f, ctx);
    if (name == "M") return functional_M(f, ctx);
    if (name == "N") return functional_N(f, ctx);
    throw std::invalid_argument("unknown functional '" + name + "'");
}

FunctionalValue functional_closed(const std::string& name, const ExtremalFunction& w, double r,
                                  int point_sign, int N) {
    if (name == "A1") return functional_A1_closed(w, r, point_sign, N);
    if (name == "A2") return functional_A2_closed(w, r, point_sign, N);
    if (name == "A3") return functional_A3_closed(w, r, point_sign);
    if (name == "A4") return functional_A4_closed(w, r, point_sign);
    if (name == "I") return functional_I_closed(w, r, point_sign);
    if (name == "J") return functional_J_closed(w, r, point_sign);
    if (name == "M") return functional_M_closed(w, r, point_sign, N);
    if (name == "N") return functional_N_closed(w, r, point_sign, N);
    throw std::invalid_argument("unknown functional '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bohr-type radii and inequality verification on the polydisk";

    py::class_<TruncatedSeries>(m, "TruncatedSeries")
        .def(py::init<int, int>(), py::arg("n"), py::arg("K"))
        .def_property_readonly("n", &TruncatedSeries::dimension)
        .def_property_readonly("K", &TruncatedSeries::truncation_degree)
        .def("set",
             [](TruncatedSeries& f, const std::vector<int>& alpha, Complex c) {
                 f.set(as_index(alpha), c);
             })
        .def("coefficient",
             [](const TruncatedSeries& f, const std::vector<int>& alpha) {
                 return f.coefficient(as_index(alpha));
             })
        .def("homogeneous_part",
             [](const TruncatedSeries& f, int k) {
                 std::vector<std::pair<std::vector<int>, Complex>> out;
                 for (const auto& [alpha, c] : f.homogeneous_part(k))
                     out.emplace_back(alpha.entries, c);
                 return out;
             })
        .def("eval",
             [](const TruncatedSeries& f, const std::vector<Complex>& z) {
                 const EvalResult e = f.eval(z);
                 return std::make_pair(e.value, e.remainder);
             })
        .def("radial_derivative", &TruncatedSeries::radial_derivative)
        .def("partial_derivative",
             [](const TruncatedSeries& f, const std::vector<int>& beta) {
                 return f.partial_derivative(as_index(beta));
             })
        .def("scaled_radius", &TruncatedSeries::scaled_radius)
        .def("dump", [](const TruncatedSeries& f) {
            std::ostringstream os;
            f.dump(os);
            return os.str();
        });

    py::class_<ExtremalFunction>(m, "ExtremalFunction")
        .def(py::init([](double a, const std::string& form, int n) {
                 return ExtremalFunction(a, parse_form(form), n);
             }),
             py::arg("a"), py::arg("form") = "minus", py::arg("n") = 1)
        .def_readonly("a", &ExtremalFunction::a)
        .def_readonly("n", &ExtremalFunction::n);

    py::class_<ClosedEval>(m, "ClosedEval")
        .def_readonly("value", &ClosedEval::value)
        .def_readonly("df_value", &ClosedEval::df_value)
        .def("derivative", &ClosedEval::derivative);

    py::class_<EvalContext>(m, "EvalContext")
        .def_static("diagonal", &EvalContext::diagonal, py::arg("n"), py::arg("r"),
                    py::arg("point_sign"), py::arg("N"))
        .def_property_readonly("rbar", &EvalContext::rbar)
        .def_readonly("N", &EvalContext::N);

    py::class_<FunctionalValue>(m, "FunctionalValue")
        .def_readonly("value", &FunctionalValue::value)
        .def_readonly("truncation_error", &FunctionalValue::truncation_error)
        .def_property_readonly("breakdown", [](const FunctionalValue& v) {
            py::dict d;
            d["modulus"] = v.breakdown.modulus;
            d["majorant"] = v.breakdown.majorant;
            d["sgn_quadratic"] = v.breakdown.sgn_quadratic;
            d["weighted_quadratic"] = v.breakdown.weighted_quadratic;
            d["derivative"] = v.breakdown.derivative;
            return d;
        });

    py::class_<RootCertificate>(m, "RootCertificate")
        .def_readonly("x_low", &RootCertificate::x_low)
        .def_readonly("x_high", &RootCertificate::x_high)
        .def_property_readonly("width", &RootCertificate::width)
        .def_property_readonly("midpoint", &RootCertificate::midpoint);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("theorem", &VerificationReport::theorem)
        .def_readonly("mode", &VerificationReport::mode)
        .def_readonly("margin", &VerificationReport::margin)
        .def_property_readonly("passed", &VerificationReport::passed)
        .def_property_readonly("rows", [](const VerificationReport& rep) {
            py::list rows;
            for (const auto& r : rep.results) {
                py::dict d;
                d["theorem"] = r.theorem;
                d["n"] = r.n;
                d["N"] = r.N;
                d["a0"] = r.a0;
                d["x"] = r.x;
                d["value"] = r.value;
                d["tail"] = r.tail;
                d["verdict"] = to_string(r.verdict);
                rows.append(d);
            }
            return rows;
        })
        .def("csv", [](const VerificationReport& rep) {
            std::ostringstream os;
            write_results(os, rep.results, OutputFormat::csv);
            return os.str();
        });

    m.def("enumerate_degree", [](int n, int k) {
        std::vector<std::vector<int>> out;
        for (const auto& a : enumerate_degree(n, k)) out.push_back(a.entries);
        return out;
    });
    m.def("multinomial",
          [](const std::vector<int>& alpha) { return multinomial(as_index(alpha)); });
    m.def("profile_coefficients", &profile_coefficients, py::arg("w"), py::arg("K"));
    m.def("to_series", &to_series, py::arg("w"), py::arg("K"));
    m.def("closed_eval", &closed_eval, py::arg("w"), py::arg("r"), py::arg("point_sign"));
    m.def("derivative_majorant_from", &derivative_majorant_from, py::arg("w"), py::arg("r"),
          py::arg("point_sign"), py::arg("from_order"));
    m.def("majorant_sum",
          [](const TruncatedSeries& f, const std::vector<double>& r, int from) {
              return majorant_sum(f, r, from);
          });
    m.def("refined_sum", &refined_sum);
    m.def("refined_sum_diagonal", &refined_sum_diagonal);
    m.def("functional_value", &functional_series, py::arg("name"), py::arg("f"),
          py::arg("ctx"));
    m.def("functional_value_closed", &functional_closed, py::arg("name"), py::arg("w"),
          py::arg("r"), py::arg("point_sign"), py::arg("N") = 1);
    m.def(
        "solve_radius",
        [](const std::string& family, int N, double a0, const std::string& variant,
           double tol) { return solve(equation_from(family, N, a0, variant), tol); },
        py::arg("family"), py::arg("N") = 1, py::arg("a0") = 0.0,
        py::arg("variant") = "statement", py::arg("tol") = 1e-13);
    m.def(
        "radius_in_r",
        [](const std::string& family, int n, int N, double a0, const std::string& variant,
           double tol) { return radius_in_r(equation_from(family, N, a0, variant), n, tol); },
        py::arg("family"), py::arg("n") = 1, py::arg("N") = 1, py::arg("a0") = 0.0,
        py::arg("variant") = "statement", py::arg("tol") = 1e-13);
    m.def("check_below", &check_below, py::arg("tag"), py::arg("n"), py::arg("N") = 1,
          py::arg("a0") = 0.0, py::arg("eps") = 1e-3);
    m.def("check_sharp", &check_sharp, py::arg("tag"), py::arg("n"), py::arg("N") = 1,
          py::arg("a0") = 0.0, py::arg("eps") = 1e-2, py::arg("margin") = 0.0);
    m.def("known_tags", []() { return known_tags(); });
}
