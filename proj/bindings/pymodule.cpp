#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grsq/bitwidth.hpp"
#include "grsq/bounds.hpp"
#include "grsq/codec.hpp"
#include "grsq/eea.hpp"
#include "grsq/io.hpp"

namespace py = pybind11;
using namespace grsq;

namespace {

Rat rat_from_object(const py::object& obj) {
    if (py::isinstance<Rat>(obj)) return obj.cast<Rat>();
    if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj))
        return Rat::parse(py::str(obj).cast<std::string>());
    throw py::type_error("expected Rat, int or rational string");
}

py::int_ mpz_to_int(const mpz_class& z) {
    return py::int_(py::str(z.get_str()));
}

std::vector<std::vector<Rat>> matrix_rows(const RatMatrix& m) {
    std::vector<std::vector<Rat>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows[r].assign(m.row(r).begin(), m.row(r).end());
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact generalized Reed-Solomon codec over the rationals";

    py::register_exception<DecodeFailure>(m, "DecodeFailure");

    py::class_<Rat>(m, "Rat")
        .def(py::init([](const py::object& obj) { return rat_from_object(obj); }))
        .def(py::init([](const py::object& num, const py::object& den) {
                 return rat_from_object(num) / rat_from_object(den);
             }),
             py::arg("num"), py::arg("den"))
        .def("num", [](const Rat& r) { return mpz_to_int(r.num()); })
        .def("den", [](const Rat& r) { return mpz_to_int(r.den()); })
        .def("is_zero", &Rat::is_zero)
        .def("is_integer", &Rat::is_integer)
        .def("inv", &Rat::inv)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def("__str__", &Rat::str)
        .def("__repr__", [](const Rat& r) { return "Rat('" + r.str() + "')"; });
    py::implicitly_convertible<py::int_, Rat>();
    py::implicitly_convertible<py::str, Rat>();

    py::class_<RatPoly>(m, "RatPoly")
        .def(py::init([](const std::vector<Rat>& coeffs) { return RatPoly(coeffs); }))
        .def("deg", &RatPoly::deg)
        .def("is_zero", &RatPoly::is_zero)
        .def("coeffs",
             [](const RatPoly& p) { return std::vector<Rat>(p.coeffs().begin(), p.coeffs().end()); })
        .def("eval", &RatPoly::eval)
        .def("derivative", &RatPoly::derivative)
        .def("__repr__", [](const RatPoly& p) {
            std::ostringstream os;
            os << "RatPoly([";
            for (std::size_t i = 0; i < p.coeffs().size(); ++i)
                os << (i ? ", " : "") << "'" << p.coeffs()[i].str() << "'";
            os << "])";
            return os.str();
        });

    py::enum_<Preset>(m, "Preset")
        .value("VPRIME_ONE", Preset::VPrimeOne)
        .value("CAUCHY_UNIT", Preset::CauchyUnit)
        .value("V_ONE", Preset::VOne)
        .value("CUSTOM", Preset::Custom);

    py::enum_<GeneratorKind>(m, "GeneratorKind")
        .value("VANDERMONDE", GeneratorKind::Vandermonde)
        .value("CAUCHY_SYSTEMATIC", GeneratorKind::CauchySystematic);

    py::class_<GrsCode>(m, "GrsCode")
        .def_readonly("n", &GrsCode::n)
        .def_readonly("k", &GrsCode::k)
        .def_readonly("alphas", &GrsCode::alphas)
        .def_readonly("v", &GrsCode::v)
        .def_readonly("v_prime", &GrsCode::v_prime)
        .def_readonly("preset", &GrsCode::preset)
        .def("distance", &GrsCode::distance)
        .def("radius", &GrsCode::radius);

    py::class_<RatMatrix>(m, "RatMatrix")
        .def("rows", &RatMatrix::rows)
        .def("cols", &RatMatrix::cols)
        .def("at", [](const RatMatrix& m_, std::size_t r, std::size_t c) { return m_.at(r, c); })
        .def("to_rows", &matrix_rows)
        .def("rank", &RatMatrix::rank)
        .def("is_zero", &RatMatrix::is_zero)
        .def("__mul__", [](const RatMatrix& a, const RatMatrix& b) { return a * b; })
        .def("transposed", &RatMatrix::transposed);

    py::class_<ErrorPattern>(m, "ErrorPattern")
        .def(py::init([](std::vector<std::size_t> pos, std::vector<Rat> vals) {
                 ErrorPattern p;
                 p.positions = std::move(pos);
                 p.values = std::move(vals);
                 return p;
             }),
             py::arg("positions"), py::arg("values"))
        .def_static("from_vector",
                    [](const std::vector<Rat>& e) { return ErrorPattern::from_vector(e); })
        .def("to_vector", &ErrorPattern::to_vector)
        .def("weight", &ErrorPattern::weight)
        .def_readonly("positions", &ErrorPattern::positions)
        .def_readonly("values", &ErrorPattern::values);

    py::class_<KeyEqSolution>(m, "KeyEqSolution")
        .def_readonly("locator", &KeyEqSolution::locator)
        .def_readonly("evaluator", &KeyEqSolution::evaluator);

    py::class_<GrowthReport>(m, "GrowthReport")
        .def_readonly("measured", &GrowthReport::measured)
        .def_readonly("bounds", &GrowthReport::bounds)
        .def_readonly("conforms", &GrowthReport::conforms)
        .def("to_kv_text", &GrowthReport::to_kv_text);

    py::class_<DecodeOutcome>(m, "DecodeOutcome")
        .def_readonly("codeword", &DecodeOutcome::codeword)
        .def_readonly("error", &DecodeOutcome::error)
        .def_readonly("report", &DecodeOutcome::report);

    py::class_<EeaTriple>(m, "EeaTriple")
        .def_readonly("r", &EeaTriple::r)
        .def_readonly("s", &EeaTriple::s)
        .def_readonly("t", &EeaTriple::t);

    m.def("enumerate_min_locators", &enumerate_min_locators, py::arg("n"));
    m.def("weights", [](const std::vector<Rat>& alphas) { return weights(alphas); });
    m.def(
        "make_code",
        [](std::size_t n, std::size_t k, std::vector<Rat> alphas, Preset preset) {
            return make_code(n, k, std::move(alphas), preset);
        },
        py::arg("n"), py::arg("k"), py::arg("alphas"), py::arg("preset"));
    m.def("make_code_with_v", &make_code_with_v);
    m.def("make_code_with_v_prime", &make_code_with_v_prime);
    m.def("generator_vandermonde", &generator_vandermonde);
    m.def("generator_cauchy", &generator_cauchy);
    m.def("parity_check", &parity_check);
    m.def("verify_system_eq1", &verify_system_eq1);

    m.def("encode", [](const GrsCode& code, GeneratorKind kind, const std::vector<Rat>& u) {
        return encode(code, kind, u);
    });
    m.def("corrupt",
          [](const std::vector<Rat>& c, const ErrorPattern& e) { return corrupt(c, e); });
    m.def("syndrome",
          [](const GrsCode& code, const std::vector<Rat>& r) { return syndrome(code, r); });
    m.def("syndrome_poly", [](const std::vector<Rat>& s) { return syndrome_poly(s); });
    m.def("common_denominator_xi",
          [](const RatPoly& s) { return mpz_to_int(common_denominator_xi(s)); });
    m.def("solve_key_equation", &solve_key_equation, py::arg("s_poly"), py::arg("d"));
    m.def("forney", &forney);
    m.def("decode",
          [](const GrsCode& code, const std::vector<Rat>& r) { return decode(code, r); });

    m.def("eea_with_stop", &eea_with_stop, py::arg("a"), py::arg("b"), py::arg("t_stop"));

    m.def("bitwidth_int",
          [](const py::int_& v) { return bitwidth(mpz_class(py::str(v).cast<std::string>())); });
    m.def("bitwidth", [](const Rat& r) { return bitwidth(r); });
    m.def("bitwidth", [](const RatPoly& p) { return bitwidth(p); });
    m.def("bitwidth", [](const RatMatrix& m_) { return bitwidth(m_); });
    m.def("bitwidth", [](const std::vector<Rat>& v) { return bitwidth(v); });

    py::class_<BoundInputs>(m, "BoundInputs")
        .def(py::init([](std::size_t n, std::size_t k, std::size_t tau, std::size_t lambda_alpha,
                         std::size_t lambda_v, std::size_t lambda_v_prime, std::size_t lambda_u,
                         std::size_t lambda_e) {
                 return BoundInputs{n, k, tau, lambda_alpha, lambda_v, lambda_v_prime, lambda_u,
                                    lambda_e};
             }),
             py::arg("n"), py::arg("k"), py::arg("tau") = 0, py::arg("lambda_alpha") = 1,
             py::arg("lambda_v") = 1, py::arg("lambda_v_prime") = 1, py::arg("lambda_u") = 1,
             py::arg("lambda_e") = 1);
    m.def("bound_inputs_for", &bound_inputs_for);
    m.def("bound_generator_vandermonde", &bound_generator_vandermonde);
    m.def("bound_generator_cauchy", &bound_generator_cauchy);
    m.def("bound_parity_check", &bound_parity_check);
    m.def("bound_codeword", &bound_codeword);
    m.def("bound_syndrome", &bound_syndrome);
    m.def("bound_eea_input", &bound_eea_input);
    m.def("bound_locator_poly", &bound_locator_poly);
    m.def("bound_evaluator_poly", &bound_evaluator_poly);
    m.def("conformance_check", &conformance_check);

    m.def("parse_rational_list",
          [](const std::string& s) { return parse_rational_list(s); });
}
