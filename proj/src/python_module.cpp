#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twoloop/knot_format.hpp"
#include "twoloop/print.hpp"
#include "twoloop/vassiliev.hpp"
#include "twoloop/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// twoloop::Rational <-> fractions.Fraction, exactly in both directions.
template <>
struct type_caster<twoloop::Rational> {
    PYBIND11_TYPE_CASTER(twoloop::Rational, const_name("fractions.Fraction"));

    static object fraction_type() {
        return module_::import("fractions").attr("Fraction");
    }

    static object int_from_string(const std::string& s) {
        PyObject* v = PyLong_FromString(s.c_str(), nullptr, 10);
        if (!v) throw error_already_set();
        return reinterpret_steal<object>(v);
    }

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = twoloop::Rational::parse(std::string(str(src)));
            return true;
        }
        if (isinstance(src, fraction_type())) {
            const std::string num(str(src.attr("numerator")));
            const std::string den(str(src.attr("denominator")));
            value = twoloop::Rational(twoloop::Integer(num), twoloop::Integer(den));
            return true;
        }
        return false;
    }

    static handle cast(const twoloop::Rational& r, return_value_policy, handle) {
        return fraction_type()(int_from_string(r.numerator().get_str()),
                               int_from_string(r.denominator().get_str()))
            .release();
    }
};

}  // namespace pybind11::detail

namespace {

using twoloop::LaurentPolynomial;
using twoloop::Rational;
using twoloop::ThetaPolynomial;

LaurentPolynomial laurent_from_terms(
    const std::vector<std::pair<Rational, Rational>>& terms) {
    LaurentPolynomial f;
    for (const auto& [exponent, coefficient] : terms) {
        const Rational doubled = exponent * Rational(2);
        if (!doubled.is_integer())
            throw twoloop::InvalidParamsError(
                "exponents must lie on the half-integer lattice");
        if (!mpz_fits_slong_p(doubled.numerator().get_mpz_t()))
            throw twoloop::InvalidParamsError("exponent out of range");
        f += LaurentPolynomial::monomial(coefficient, doubled.numerator().get_si());
    }
    return f;
}

std::vector<std::pair<Rational, Rational>> laurent_terms(const LaurentPolynomial& f) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& [e, c] : f.terms()) out.emplace_back(Rational(e, 2L), c);
    return out;
}

ThetaPolynomial theta_from_terms(
    const std::vector<std::tuple<Rational, Rational, Rational>>& terms) {
    ThetaPolynomial theta;
    for (const auto& [n, m, coefficient] : terms) {
        const Rational dn = n * Rational(2);
        const Rational dm = m * Rational(2);
        if (!dn.is_integer() || !dm.is_integer())
            throw twoloop::InvalidParamsError(
                "exponents must lie on the half-integer lattice");
        theta += ThetaPolynomial::monomial(coefficient, dn.numerator().get_si(),
                                           dm.numerator().get_si());
    }
    return theta;
}

std::vector<std::tuple<Rational, Rational, Rational>> theta_terms(
    const ThetaPolynomial& theta) {
    std::vector<std::tuple<Rational, Rational, Rational>> out;
    for (const auto& [k, c] : theta.terms())
        out.emplace_back(Rational(k.first, 2L), Rational(k.second, 2L), c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_twoloop, m) {
    m.doc() = "Exact 2-loop polynomial invariants of torus and cable knots";

    // Translators run newest-first, so the base class goes first.
    py::register_exception<twoloop::Error>(m, "TwoLoopError", PyExc_RuntimeError);
    py::register_exception<twoloop::InvalidParamsError>(m, "InvalidParamsError",
                                                        PyExc_ValueError);
    py::register_exception<twoloop::SyntaxError>(m, "RecordSyntaxError",
                                                 PyExc_ValueError);
    py::register_exception<twoloop::ValidationError>(m, "ValidationError",
                                                     PyExc_ValueError);

    py::class_<LaurentPolynomial>(m, "LaurentPolynomial")
        .def(py::init(&laurent_from_terms), py::arg("terms") =
             std::vector<std::pair<Rational, Rational>>{})
        .def("terms", &laurent_terms,
             "List of (exponent, coefficient) pairs, ascending")
        .def("evaluate_at_one", &LaurentPolynomial::evaluate_at_one)
        .def("is_symmetric", &LaurentPolynomial::is_symmetric)
        .def("is_zero", &LaurentPolynomial::is_zero)
        .def("derivative", &LaurentPolynomial::derivative)
        .def("substitute_power", &LaurentPolynomial::substitute_power, py::arg("k"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", [](const LaurentPolynomial& f) { return twoloop::pretty(f); })
        .def("__repr__", [](const LaurentPolynomial& f) {
            return "LaurentPolynomial(" + twoloop::pretty(f) + ")";
        });

    py::class_<ThetaPolynomial>(m, "ThetaPolynomial")
        .def(py::init(&theta_from_terms), py::arg("terms") =
             std::vector<std::tuple<Rational, Rational, Rational>>{})
        .def("terms", &theta_terms, "List of (n, m, coefficient) triples, ascending")
        .def("fundamental_domain",
             [](const ThetaPolynomial& theta) {
                 std::vector<std::tuple<std::int64_t, std::int64_t, Rational>> out;
                 for (const auto& cell : twoloop::fundamental_domain(theta))
                     out.emplace_back(cell.n, cell.m, cell.coefficient);
                 return out;
             },
             "Cells with 0 <= 2m <= n as (n, m, coefficient), sorted")
        .def("specialize", &ThetaPolynomial::specialize)
        .def("substitute_power", &ThetaPolynomial::substitute_power, py::arg("p"))
        .def("is_zero", &ThetaPolynomial::is_zero)
        .def("degree_t1", [](const ThetaPolynomial& t) { return twoloop::degree_t1(t); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const ThetaPolynomial& t) {
            return "ThetaPolynomial(" + t.repr() + ")";
        });

    py::class_<twoloop::RationalFunction>(m, "RationalFunction")
        .def_property_readonly("num", &twoloop::RationalFunction::num)
        .def_property_readonly("den", &twoloop::RationalFunction::den)
        .def("evaluate_at_one", &twoloop::RationalFunction::evaluate_at_one)
        .def("derivative", &twoloop::RationalFunction::derivative)
        .def("is_polynomial", &twoloop::RationalFunction::is_polynomial)
        .def("to_polynomial", &twoloop::RationalFunction::to_polynomial)
        .def(py::self == py::self)
        .def("__repr__", [](const twoloop::RationalFunction& f) {
            return "RationalFunction(" + f.repr() + ")";
        });

    py::class_<twoloop::KnotRecord>(m, "KnotRecord")
        .def_readonly("name", &twoloop::KnotRecord::name)
        .def_readonly("provenance", &twoloop::KnotRecord::provenance)
        .def_readonly("alexander", &twoloop::KnotRecord::alexander)
        .def_readonly("theta", &twoloop::KnotRecord::theta)
        .def("__repr__", [](const twoloop::KnotRecord& k) {
            return "KnotRecord(name='" + k.name + "')";
        });

    m.def("torus_alexander", &twoloop::torus_alexander, py::arg("p"), py::arg("q"));
    m.def("torus_phi", &twoloop::torus_phi, py::arg("p"), py::arg("q"));
    m.def("torus_psi", &twoloop::torus_psi, py::arg("p"), py::arg("q"));
    m.def("torus_theta", &twoloop::torus_theta, py::arg("p"), py::arg("q"));
    m.def("torus_theta_hat", &twoloop::torus_theta_hat, py::arg("p"), py::arg("q"));
    m.def("torus_theta_hat_closed_form", &twoloop::torus_theta_hat_closed_form,
          py::arg("p"), py::arg("q"));

    m.def("reduce_theta_hat", &twoloop::reduce_theta_hat, py::arg("theta"));
    m.def("symmetrize", &twoloop::symmetrize, py::arg("theta_prime"));

    m.def("unknot", &twoloop::unknot_record);
    m.def("torus_record", &twoloop::torus_record, py::arg("p"), py::arg("q"));
    m.def("builtin", &twoloop::builtin_record, py::arg("name"));
    m.def("cable", &twoloop::cable_record, py::arg("record"), py::arg("p"), py::arg("q"));
    m.def("cable_alexander", &twoloop::cable_alexander, py::arg("record"), py::arg("p"),
          py::arg("q"));
    m.def("cable_theta", &twoloop::cable_theta, py::arg("record"), py::arg("p"),
          py::arg("q"));
    m.def("cable_theta_hat", &twoloop::cable_theta_hat, py::arg("record"), py::arg("p"),
          py::arg("q"));

    m.def("v2", &twoloop::v2, py::arg("record"));
    m.def("v3", &twoloop::v3, py::arg("record"));
    m.def("v3_torus", &twoloop::v3_torus, py::arg("p"), py::arg("q"));
    m.def("v3_cable", &twoloop::v3_cable, py::arg("v3_base"),
          py::arg("alexander_dd_at_one"), py::arg("p"), py::arg("q"));
    m.def("alexander_second_derivative_at_one",
          &twoloop::alexander_second_derivative_at_one, py::arg("alexander"));

    m.def("parse_record",
          [](const std::string& text) { return twoloop::parse_record(text); },
          py::arg("text"));
    m.def("serialize_record", &twoloop::serialize_record, py::arg("record"));

    m.def("pretty", &twoloop::pretty, py::arg("polynomial"));
    m.def("render_grid_table", &twoloop::render_grid_table, py::arg("theta"));
    m.def("render_domain_table", &twoloop::render_domain_table, py::arg("theta"));

    m.def("run_verify",
          [](std::int64_t pmax, std::int64_t qmax) {
              const auto report = twoloop::run_verification(pmax, qmax);
              std::vector<std::tuple<std::string, bool, std::string>> out;
              for (const auto& c : report.checks)
                  out.emplace_back(c.name, c.passed, c.detail);
              return out;
          },
          py::arg("pmax"), py::arg("qmax"),
          "Run the cross-identity suite; returns (name, passed, detail) tuples");
}
