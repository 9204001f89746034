// Python bindings. Big integers cross the boundary as Python ints (via
// their decimal text); reports cross as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cmcert/anticert.hpp"
#include "cmcert/cases.hpp"
#include "cmcert/pullback.hpp"

namespace py = pybind11;
using namespace cmcert;

namespace {

Integer to_integer(const py::handle& h) { return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::int_ to_py(const Integer& z) {
    static py::object int_type = py::module_::import("builtins").attr("int");
    return int_type(z.get_str());
}

EdgeList edge_list(const py::sequence& s) {
    if (py::len(s) != kEdges) throw std::invalid_argument("expected six edge lengths");
    EdgeList d;
    for (std::size_t k = 0; k < kEdges; ++k) d[k] = to_integer(s[k]);
    return d;
}

py::dict certificate_dict(const Certificate& c) {
    py::dict out;
    out["status"] = to_string(c.status);
    out["steps"] = c.steps;
    out["leaves"] = c.leaves;
    out["subdivisions"] = c.subdivisions;
    out["max_depth"] = c.max_depth;
    out["splits_per_coordinate"] = c.splits_per_coordinate;
    out["trace"] = c.trace;
    if (c.status == CertificateStatus::NegativeWitness) {
        py::list corner;
        for (const auto& q : c.witness_corner) corner.append(q.get_str());
        out["witness_corner"] = corner;
        out["witness_value"] = c.witness_value.get_str();
        out["witness_lineage"] = lineage_string(c.witness_lineage);
    }
    return out;
}

py::dict witness_dict(const Witness& w) {
    py::dict out;
    out["beta"] = w.beta.to_string();
    out["chamber"] = w.chamber;
    py::list p;
    for (const auto& x : w.point) p.append(to_py(x));
    out["point"] = p;
    out["f"] = to_py(w.f);
    out["g"] = to_py(w.g);
    out["seed"] = w.seed;
    out["trial"] = w.trial;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Cayley-Menger evaluation and positive-dominance certification";

    m.def("f", [](const py::sequence& d) { return to_py(cm_f().evaluate(std::span<const Integer>(edge_list(d)))); },
          py::arg("d"), "Cayley-Menger determinant at six edge lengths (d12,d13,d14,d23,d24,d34).");
    m.def("f_determinant", [](const py::sequence& d) { return to_py(cm_determinant_value(edge_list(d))); },
          py::arg("d"), "Same value by fraction-free elimination.");
    m.def(
        "g",
        [](const std::string& beta, const py::sequence& d) {
            return to_py(directional_derivative(EdgeSubset::parse(beta)).evaluate(std::span<const Integer>(edge_list(d))));
        },
        py::arg("beta"), py::arg("d"));
    m.def(
        "combination",
        [](const std::string& beta, const py::int_& a, const py::int_& b, const py::sequence& d) {
            Polynomial p = combination(EdgeSubset::parse(beta), to_integer(a), to_integer(b));
            return to_py(p.evaluate(std::span<const Integer>(edge_list(d))));
        },
        py::arg("beta"), py::arg("a"), py::arg("b"), py::arg("d"), "a*g + b*f at d.");
    m.def("is_tetrahedral", [](const py::sequence& d) { return is_tetrahedral(edge_list(d)); }, py::arg("d"));
    m.def("named_point", [](const std::string& name) { return named_point(name); }, py::arg("name"));

    m.def(
        "certify_text",
        [](const std::string& text, std::uint64_t budget, bool parallel, unsigned threads) {
            Polynomial p = parse_polynomial(text);
            Certificate c;
            {
                py::gil_scoped_release release;
                c = certify(p, {budget, parallel, threads, kDegreeCap});
            }
            return certificate_dict(c);
        },
        py::arg("text"), py::arg("budget") = 1'000'000, py::arg("parallel") = false, py::arg("threads") = 0,
        "Certify a polynomial given in the '<coeff> <e1> ... <en>' line format on the unit cube.");
    m.def(
        "certify_on_simplex",
        [](const std::string& beta, const py::int_& a, const py::int_& b, const std::string& simplex_id, bool parallel) {
            Polynomial p = combination(EdgeSubset::parse(beta), to_integer(a), to_integer(b));
            Polynomial pz = pullback(p, simplex_by_id(simplex_id));
            Certificate c;
            {
                py::gil_scoped_release release;
                c = certify(pz, {1'000'000, parallel, 0, kDegreeCap});
            }
            return certificate_dict(c);
        },
        py::arg("beta"), py::arg("a"), py::arg("b"), py::arg("simplex"), py::arg("parallel") = false,
        "Certify a*g + b*f on a partition simplex such as 'C_11' or 'D_1112'.");

    m.def("case_names", [] {
        std::vector<std::string> out;
        for (const auto& c : case_registry()) out.push_back(c.name);
        return out;
    });
    m.def(
        "run_case_json",
        [](const std::string& name, bool anticertify, bool parallel, std::uint64_t seed, std::size_t samples) {
            RunOptions opt;
            opt.anticertify = anticertify;
            opt.parallel = parallel;
            opt.seed = seed;
            opt.soundness_samples = samples;
            const CaseSpec& spec = case_by_name(name);
            CaseReport rep;
            {
                py::gil_scoped_release release;
                rep = run_case(spec, opt);
            }
            return rep.json().dump();
        },
        py::arg("name"), py::arg("anticertify") = true, py::arg("parallel") = false, py::arg("seed") = 1,
        py::arg("soundness_samples") = 200);

    m.def("chambers_in", [](const std::string& beta) { return chambers_in(EdgeSubset::parse(beta)); }, py::arg("beta"));
    m.def(
        "chambers_outside", [](const std::string& beta) { return chambers_outside(EdgeSubset::parse(beta)); },
        py::arg("beta"));
    m.def(
        "anti_certify",
        [](const std::string& beta, const std::string& chamber, std::uint64_t trials, std::uint64_t seed) -> py::object {
            AntiCertifyOptions opt;
            opt.trials = trials;
            opt.seed = seed;
            auto res = anti_certify(chamber, EdgeSubset::parse(beta), opt);
            if (!res.witness) return py::none();
            return witness_dict(*res.witness);
        },
        py::arg("beta"), py::arg("chamber"), py::arg("trials") = 100'000, py::arg("seed") = 1,
        "First exact point with f > 0 and g < 0 in the chamber, or None.");
    m.def(
        "verify_witness_line",
        [](const std::string& line) {
            std::istringstream in(line);
            auto ws = read_witnesses(in);
            if (ws.size() != 1) throw std::invalid_argument("expected exactly one witness line");
            return verify_witness(ws.front()).ok();
        },
        py::arg("line"), "Re-verify one line of a witness file from scratch.");

    m.def(
        "partition_check",
        [](std::size_t samples, std::uint64_t seed) { return partition_check(samples, seed).ok; },
        py::arg("samples") = 10000, py::arg("seed") = 1);
    m.def(
        "lengthen_check", [](const py::sequence& d) { return lengthen_check(edge_list(d)); }, py::arg("d"),
        "f(D+1) (sum D)^6 >= f(D) (sum D + 6)^6 for a tetrahedral list D.");
    m.def(
        "explore_json",
        [](const std::string& beta, const py::sequence& d) {
            return explore(EdgeSubset::parse(beta), edge_list(d)).json().dump();
        },
        py::arg("beta"), py::arg("point"));
}
