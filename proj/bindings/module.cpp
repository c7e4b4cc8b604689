// Python bindings for the core operations. Rationals cross the boundary
// as fractions.Fraction (ints and "p/q" strings also accepted); floats
// are rejected to keep the arithmetic exact.

#include "fiblucas/connect.hpp"
#include "fiblucas/decimal.hpp"
#include "fiblucas/hyp2f1.hpp"
#include "fiblucas/integrals.hpp"
#include "fiblucas/numbers.hpp"
#include "fiblucas/radicals.hpp"
#include "fiblucas/seq.hpp"
#include "fiblucas/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fiblucas;

namespace pybind11::detail {

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false; // exact inputs only
        if (PyLong_Check(src.ptr())) {
            value = Rational(Integer(std::string(py::str(src))));
            return true;
        }
        if (py::isinstance<py::str>(src)) {
            value = parse_rational(std::string(py::str(src)));
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            Integer n{std::string(py::str(src.attr("numerator")))};
            Integer d{std::string(py::str(src.attr("denominator")))};
            if (d == 0) return false;
            value = Rational(n, d);
            return true;
        }
        return false;
    }

    static handle cast(const Rational& r, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(to_string(r)).release();
    }
};

} // namespace pybind11::detail

namespace {

py::dict expansion_dict(const Expansion& e) {
    py::dict out;
    out["degree"] = e.degree;
    out["target_kind"] = kind_name(e.target.kind);
    py::list terms;
    for (const auto& t : e.terms) terms.append(py::make_tuple(t.m, t.coeff));
    out["terms"] = terms;
    return out;
}

py::dict denest_dict(const DenestResult& r) {
    py::dict out;
    out["status"] = r.status == DenestStatus::Denested ? "Denested" : "NotRecognized";
    if (r.value) out["value"] = *r.value;
    if (r.witness) {
        py::dict w;
        w["a"] = r.witness->a;
        w["b"] = r.witness->b;
        w["x"] = r.witness->x;
        w["k"] = r.witness->k;
        w["branch"] = r.witness->plus_branch ? "plus" : "minus";
        out["witness"] = w;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(fiblucas, m) {
    m.doc() = "exact generalized Fibonacci/Lucas polynomial toolkit";

    py::class_<Poly>(m, "Poly")
        .def(py::init<std::vector<Rational>>())
        .def("coeffs", &Poly::coeffs)
        .def("degree", &Poly::degree)
        .def("__call__", &Poly::eval)
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "Poly(" + p.str() + ")"; });

    py::class_<Surd>(m, "Surd")
        .def(py::init<Rational, Rational, Rational>(), py::arg("p"), py::arg("q"), py::arg("d"))
        .def_property_readonly("p", &Surd::rational_part)
        .def_property_readonly("q", &Surd::surd_part)
        .def_property_readonly("d", &Surd::radicand)
        .def("conj", &Surd::conj)
        .def("norm", &Surd::norm)
        .def("sign", &Surd::sign)
        .def("pow", &Surd::pow)
        .def("decimal", &Surd::to_double)
        .def("decimal_string",
             [](const Surd& s, unsigned digits) { return decimal_string(s, digits); },
             py::arg("digits") = kDefaultDecimalDigits)
        .def("__eq__", [](const Surd& a, const Surd& b) { return a == b; })
        .def("__add__", [](const Surd& a, const Surd& b) { return a + b; })
        .def("__sub__", [](const Surd& a, const Surd& b) { return a - b; })
        .def("__mul__", [](const Surd& a, const Surd& b) { return a * b; })
        .def("__truediv__", [](const Surd& a, const Surd& b) { return a / b; })
        .def("__pow__", [](const Surd& a, unsigned long k) { return a.pow(k); })
        .def("__str__", &Surd::str)
        .def("__repr__", [](const Surd& s) { return "Surd(" + s.str() + ")"; });

    m.def("gen_phi", &gen_phi, py::arg("a"), py::arg("b"), py::arg("j"));
    m.def("gen_psi", &gen_psi, py::arg("r"), py::arg("s"), py::arg("j"));
    m.def("phi_power_form", &phi_power_form);
    m.def("psi_power_form", &psi_power_form);
    m.def("binet_alpha_beta",
          [](const Rational& a, const Rational& b, const Rational& x) {
              return binet_alpha_beta(a, b, x);
          });

    m.def("eval_2f1",
          [](long mm, const Rational& a2, const Rational& b1, const Rational& z) {
              return eval_2f1_terminating({mm, a2, b1, z});
          },
          py::arg("m"), py::arg("a2"), py::arg("b1"), py::arg("z"));
    m.def("chu_vandermonde", &chu_vandermonde);

    auto connect_fn = [](const char* which) {
        return [which](const Rational& a, const Rational& b, const Rational& r, const Rational& s,
                       long i) {
            Expansion e = std::string(which) == "pp"   ? connect_phi_to_psi(a, b, r, s, i)
                          : std::string(which) == "sp" ? connect_psi_to_phi(a, b, r, s, i)
                          : std::string(which) == "ff" ? connect_phi_to_phi(a, b, r, s, i)
                                                       : connect_psi_to_psi(a, b, r, s, i);
            py::dict d = expansion_dict(e);
            d["verified"] = verify_expansion(e).equal;
            return d;
        };
    };
    m.def("connect_phi_to_psi", connect_fn("pp"));
    m.def("connect_psi_to_phi", connect_fn("sp"));
    m.def("connect_phi_to_phi", connect_fn("ff"));
    m.def("connect_psi_to_psi", connect_fn("ss"));

    m.def("invert_phi", [](const Rational& a, const Rational& b, long j) {
        Expansion e = invert_phi(a, b, j);
        py::dict d = expansion_dict(e);
        d["verified"] = verify_expansion(e).equal;
        return d;
    });
    m.def("invert_psi", [](const Rational& r, const Rational& s, long j) {
        Expansion e = invert_psi(r, s, j);
        py::dict d = expansion_dict(e);
        d["verified"] = verify_expansion(e).equal;
        return d;
    });

    m.def("integral_phi_T",
          [](const Rational& a, const Rational& b, long i, long j) {
              return integral_phi_T(a, b, i, j).coeff;
          },
          "pi-coefficient of the weight-1/sqrt(1-x^2) integral against T_j");
    m.def("integral_psi_U",
          [](const Rational& r, const Rational& s, long i, long j) {
              return integral_psi_U(r, s, i, j).coeff;
          },
          "pi-coefficient of the weight-sqrt(1-x^2) integral against U_j");
    m.def("quadrature_check",
          [](const std::string& which, const Rational& a, const Rational& b, long i, long j) {
              return quadrature_check(which == "phiT" ? WeightedIntegral::PhiT
                                                      : WeightedIntegral::PsiU,
                                      a, b, i, j, i + j + 2);
          });

    m.def("cross_family_number", [](long i, const std::string& from, const std::string& to) {
        auto f = parse_number_tag(from), t = parse_number_tag(to);
        if (!f || !t) throw std::invalid_argument("unknown number family tag");
        auto identity = cross_family_number(i, *f, *t);
        return py::make_tuple(identity.pass, identity.str());
    });

    m.def("square_identity_residual", &square_identity_residual);
    m.def("psi_composition_eval", &psi_composition_eval);

    auto pair_dict = [](const RadicalPair& p) {
        py::dict d;
        d["radicand_plus"] = p.radicand_plus;
        d["radicand_minus"] = p.radicand_minus;
        d["root_plus"] = p.root_plus;
        d["root_minus"] = p.root_minus;
        d["sum"] = p.sum;
        d["diff"] = p.diff;
        return d;
    };
    m.def("odd_radical_pair",
          [pair_dict](const Rational& a, const Rational& b, const Rational& x, long k) {
              return pair_dict(odd_radical_pair(a, b, x, k));
          });
    m.def("even_radical_pair",
          [pair_dict](const Rational& a, const Rational& b, const Rational& x, long k) {
              return pair_dict(even_radical_pair(a, b, x, k));
          });
    m.def("composed_odd_radical",
          [](const Rational& a, const Rational& b, long j, const Rational& x) {
              ComposedRadical r = composed_odd_radical(a, b, j, x);
              return py::make_tuple(r.value, r.radicand);
          });
    m.def("composed_even_radical",
          [](const Rational& a, const Rational& b, long j, const Rational& x) {
              ComposedRadical r = composed_even_radical(a, b, j, x);
              return py::make_tuple(r.value, r.radicand);
          });

    m.def("denest",
          [](long k, const Rational& u, const Rational& v, const Rational& d, unsigned bound) {
              return denest_dict(denest(NestedRadical(k, u, v, d), bound));
          },
          py::arg("k"), py::arg("u"), py::arg("v"), py::arg("d"), py::arg("bound") = 8);

    m.def("verify_all",
          [](long imax, std::uint64_t seed) {
              Report r = run_verify_all({imax, seed, false});
              py::dict d;
              d["passed"] = r.passed;
              d["failed"] = r.failed;
              d["all_pass"] = r.all_pass();
              return d;
          },
          py::arg("imax") = 10, py::arg("seed") = 0);
}
