// Python bindings for the main operations. Matrices cross the boundary as
// lists of rational strings, so exactness survives the trip.

#include "jmap/fixtures.hpp"
#include "jmap/goodpair.hpp"
#include "jmap/invert.hpp"
#include "jmap/io.hpp"
#include "jmap/universal.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace jmap;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;
using StrVec = std::vector<std::string>;

RMatrix to_matrix(const StrMatrix& rows) {
    std::vector<std::vector<Rational>> parsed;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(Rational::parse(cell));
        parsed.push_back(std::move(r));
    }
    return RMatrix::from_rows(parsed);
}

StrMatrix from_matrix(const RMatrix& a) {
    StrMatrix rows(a.size(), StrVec(a.size()));
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) rows[j - 1][k - 1] = a(j, k).str();
    return rows;
}

std::vector<Rational> to_rationals(const StrVec& v) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

StrVec from_rationals(const std::vector<Rational>& v) {
    StrVec out;
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(jmap, m) {
    m.doc() = "exact construction, classification and inversion of mappings x + phi(Ax)";

    m.def("parse_matrix", [](const std::string& text) { return from_matrix(parse_matrix(text)); },
          py::arg("text"), "Parse the shared matrix text format into rows of rational strings.");
    m.def("format_matrix", [](const StrMatrix& rows) { return format_matrix(to_matrix(rows)); },
          py::arg("rows"));

    m.def("circulant", [](const StrVec& v) { return from_matrix(circulant(to_rationals(v))); });
    m.def("hadamard",
          [](const StrMatrix& a, const StrMatrix& b) { return from_matrix(hadamard(to_matrix(a), to_matrix(b))); });
    m.def("hadamard_pow",
          [](const StrMatrix& a, int d) { return from_matrix(hadamard_pow(to_matrix(a), d)); });
    m.def("kronecker",
          [](const StrMatrix& a, const StrMatrix& b) { return from_matrix(kronecker(to_matrix(a), to_matrix(b))); });
    m.def("principal_minor", [](const StrMatrix& a, const IndexSet& I) {
        return principal_minor(to_matrix(a), I).str();
    });
    m.def("rank", [](const StrMatrix& a) { return rank(to_matrix(a)); });
    m.def("is_nilpotent", [](const StrMatrix& a) { return is_nilpotent(to_matrix(a)); });

    m.def("is_universal", [](const StrMatrix& a) { return is_universal(to_matrix(a)); });
    m.def("block_row_sum_matrix",
          [](const StrMatrix& a) { return from_matrix(block_row_sum_matrix(to_matrix(a))); });
    m.def("ordered_form", [](const StrMatrix& a) {
        OrderedForm of = ordered_form(to_matrix(a));
        py::dict out;
        out["matrix"] = from_matrix(of.matrix);
        out["partition"] = of.partition.parts();
        out["permutation"] = of.applied_permutation.images();
        return out;
    });
    m.def("build_universal",
          [](const std::string& spec_text) { return from_matrix(build_universal(parse_universal_spec(spec_text))); },
          py::arg("spec_text"), "Build U(p, Pi) from the universal spec text format.");
    m.def("parameter_count", [](const std::vector<int>& parts) { return parameter_count(Partition(parts)); });

    m.def("is_good_pair_monomial",
          [](const StrMatrix& a, int d) { return is_good_pair_monomial(to_matrix(a), d); });
    m.def("is_good_pair_log", [](const StrMatrix& a) { return is_good_pair_log(to_matrix(a)); });
    m.def("jacobian_minor_expansion",
          [](const StrMatrix& a, int d) { return jacobian_minor_expansion(to_matrix(a), d).str(); });
    m.def("simple_jacobian_equations",
          [](const StrMatrix& a, int d) { return from_rationals(simple_jacobian_equations(to_matrix(a), d)); });
    m.def("homogeneity_matrix", [](int n, int d, const StrVec& s) {
        return from_matrix(homogeneity_matrix(n, d, to_rationals(s)));
    });
    m.def("g2d", [](const std::string& s, const std::string& t, int d) {
        return from_matrix(g2d(Rational::parse(s), Rational::parse(t), d));
    });
    m.def("generate_jacobian_equations", [](int n, int d) {
        JacEquationSystem sys = generate_jacobian_equations(n, d);
        py::dict out;
        out["count"] = sys.equations.size();
        out["max_degree"] = sys.max_total_degree();
        StrVec eqs;
        auto names = sys.variable_names();
        for (const auto& e : sys.equations) eqs.push_back(e.str(names));
        out["equations"] = eqs;
        return out;
    });

    m.def("finite_newton_inverse", [](const StrMatrix& a, int d, int cap) {
        NewtonResult res = finite_newton_inverse(to_matrix(a), d, cap);
        py::dict out;
        out["order"] = res.order;
        out["inverse"] = format_polymap_machine(res.inverse);
        return out;
    }, py::arg("a"), py::arg("d"), py::arg("cap") = -1);
    m.def("newton_order", [](const StrMatrix& a, int d, int cap) {
        return finite_newton_core(to_matrix(a), d, cap).order;
    }, py::arg("a"), py::arg("d"), py::arg("cap") = -1);
    m.def("invert_point", [](const StrMatrix& a, int d, const StrVec& f) {
        return from_rationals(finite_newton_core(to_matrix(a), d).eval(to_rationals(f)));
    }, py::arg("a"), py::arg("d"), py::arg("f"), "Inverse image of a point under x + (Ax)^d.");

    m.def("run_fixtures", [](const std::string& catalog, const std::string& dir, const std::string& filter) {
        py::list out;
        for (const auto& result : fixtures::run_fixtures(catalog, dir, filter)) {
            py::dict item;
            item["name"] = result.name;
            item["passed"] = result.passed;
            item["detail"] = result.detail;
            out.append(item);
        }
        return out;
    }, py::arg("catalog"), py::arg("dir"), py::arg("filter") = "");

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<newton_divergence>(m, "NewtonDivergence");
}
