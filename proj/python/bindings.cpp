#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "algderiv/invariants.hpp"
#include "algderiv/parse.hpp"
#include "algderiv/spectral.hpp"
#include "algderiv/verifier.hpp"

namespace py = pybind11;
using namespace algderiv;

namespace {

// pybind11 holders must be non-const; the immutable RingPtr used by the
// C++ API is produced by implicit conversion at the call sites below.
using PyRingPtr = std::shared_ptr<Ring>;

PyRingPtr make_ring_checked(const std::vector<std::string>& vars) {
    return std::make_shared<Ring>(vars);
}

WeightSymbolsPtr make_symbols(const std::vector<std::string>& names) {
    if (names.empty()) return nullptr;
    return std::make_shared<const std::vector<std::string>>(names);
}

Derivation general_from_strings(const PyRingPtr& ring,
                                const std::map<std::string, std::string>& images) {
    std::map<std::string, Poly> parsed;
    for (const auto& [var, text] : images) parsed.emplace(var, parse_poly(text, ring));
    return Derivation::general(ring, parsed);
}

Derivation diagonal_from_strings(const PyRingPtr& ring, const std::vector<std::string>& symbols,
                                 const std::map<std::string, std::string>& weights) {
    WeightSymbolsPtr table = make_symbols(symbols);
    std::vector<Eigenvalue> parsed;
    for (const auto& var : ring->vars()) {
        auto it = weights.find(var);
        if (it == weights.end())
            throw DomainError("missing weight for variable '" + var + "'");
        parsed.push_back(parse_weight_expr(it->second, table));
    }
    return Derivation::diagonal(ring, std::move(parsed), table);
}

QMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) throw DomainError("empty matrix");
    std::size_t n = rows.size();
    std::vector<Rational> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DomainError("matrix must be square");
        for (const auto& cell : row) entries.push_back(Rational::from_string(cell));
    }
    return QMatrix(n, n, std::move(entries));
}

py::dict report_to_dict(const SuiteReport& report) {
    py::dict d;
    d["suite"] = report.suite;
    d["seed"] = report.seed;
    d["cases_run"] = report.cases_run;
    d["skipped"] = report.skipped;
    d["passed"] = report.passed();
    py::list failures;
    for (const auto& f : report.failures) {
        py::dict row;
        row["input"] = f.input;
        row["expected"] = f.expected;
        row["observed"] = f.observed;
        failures.append(row);
    }
    d["failures"] = failures;
    return d;
}

py::dict nilpotence_to_dict(const NilpotenceVerdict& v) {
    py::dict d;
    if (const auto* nil = std::get_if<Nilpotent>(&v)) {
        d["verdict"] = "nilpotent";
        d["index"] = nil->index;
    } else if (const auto* not_nil = std::get_if<NotNilpotent>(&v)) {
        d["verdict"] = "not-nilpotent";
        d["witness"] = not_nil->witness.str();
    } else {
        d["verdict"] = "undetermined";
        d["cap"] = cap_name(std::get<NilpotenceUndetermined>(v).cap_hit);
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact spectral toolkit for derivations on polynomial rings";

    py::register_exception<Error>(m, "AlgderivError");

    py::class_<Ring, PyRingPtr>(m, "Ring")
        .def(py::init(&make_ring_checked), py::arg("vars"))
        .def_property_readonly("vars", &Ring::vars)
        .def("__len__", &Ring::size)
        .def("__repr__", [](const Ring& r) {
            std::ostringstream os;
            os << "Ring([";
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << "'" << r.var(i) << "'";
            os << "])";
            return os.str();
        });

    py::class_<Poly>(m, "Poly")
        .def("__str__", &format_poly)
        .def("__repr__", [](const Poly& p) { return "Poly(" + format_poly(p) + ")"; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("pow", &Poly::pow, py::arg("n"))
        .def_property_readonly("degree", &Poly::total_degree)
        .def_property_readonly("is_zero", &Poly::is_zero)
        .def_property_readonly("is_homogeneous", &Poly::is_homogeneous);

    py::class_<Eigenvalue>(m, "Eigenvalue")
        .def("__str__", &Eigenvalue::str)
        .def("__repr__", [](const Eigenvalue& e) { return "Eigenvalue(" + e.str() + ")"; })
        .def("__eq__", [](const Eigenvalue& a, const Eigenvalue& b) { return a == b; })
        .def("__lt__", [](const Eigenvalue& a, const Eigenvalue& b) { return a < b; })
        .def_property_readonly("constant", [](const Eigenvalue& e) { return e.constant().str(); })
        .def_property_readonly("is_rational", &Eigenvalue::is_rational);

    py::class_<Derivation>(m, "Derivation")
        .def_static("general", &general_from_strings, py::arg("ring"), py::arg("images"))
        .def_static("diagonal", &diagonal_from_strings, py::arg("ring"), py::arg("symbols"),
                    py::arg("weights"))
        .def_property_readonly("is_diagonal", &Derivation::is_diagonal);

    py::class_<Caps>(m, "Caps")
        .def(py::init([](std::size_t dim, std::size_t degree, std::size_t iterations) {
                 Caps caps{dim, degree, iterations};
                 caps.validate();
                 return caps;
             }),
             py::arg("dim") = 256, py::arg("degree") = 512, py::arg("iterations") = 1024)
        .def_readwrite("dim", &Caps::max_krylov_dim)
        .def_readwrite("degree", &Caps::max_degree)
        .def_readwrite("iterations", &Caps::max_iterations);

    py::class_<DecompositionPart>(m, "Part")
        .def_readonly("eigenvalue", &DecompositionPart::lambda)
        .def_readonly("component", &DecompositionPart::component)
        .def_readonly("height", &DecompositionPart::height)
        .def("__repr__", [](const DecompositionPart& p) {
            return "Part(lambda=" + p.lambda.str() + ", component=" + format_poly(p.component) +
                   ", height=" + std::to_string(p.height) + ")";
        });

    py::class_<MatrixGroup>(m, "MatrixGroup")
        .def_property_readonly("order", &MatrixGroup::order)
        .def_property_readonly("dimension",
                               [](const MatrixGroup& g) { return g.dimension; });

    m.def(
        "parse_poly",
        [](const std::string& text, const PyRingPtr& ring) { return parse_poly(text, ring); },
        py::arg("text"), py::arg("ring"));
    m.def("format_poly", &format_poly, py::arg("poly"));
    m.def("apply", &apply, py::arg("derivation"), py::arg("poly"));
    m.def("apply_power", &apply_power, py::arg("derivation"), py::arg("poly"), py::arg("n"));
    m.def(
        "phi",
        [](const Derivation& d, const Poly& p, unsigned order) {
            return phi_truncated(d, p, order).coefficients;
        },
        py::arg("derivation"), py::arg("poly"), py::arg("order") = 8,
        "Coefficients of the truncated series of the derivation at poly");
    m.def(
        "algebraic_dimension",
        [](const Derivation& d, const Poly& p, const Caps& caps) {
            return algebraic_dimension(d, p, caps);
        },
        py::arg("derivation"), py::arg("poly"), py::arg("caps") = Caps{});
    m.def(
        "decompose",
        [](const Derivation& d, const Poly& p, const Caps& caps) {
            return decompose_element(d, p, caps).parts;
        },
        py::arg("derivation"), py::arg("poly"), py::arg("caps") = Caps{});
    m.def(
        "mu_height",
        [](const Derivation& d, const Poly& p, const std::string& mu, const Caps& caps) {
            WeightSymbolsPtr symbols = d.is_diagonal() ? d.symbols() : nullptr;
            return mu_height(d, p, parse_weight_expr(mu, symbols), caps);
        },
        py::arg("derivation"), py::arg("poly"), py::arg("mu"), py::arg("caps") = Caps{});
    m.def(
        "nilpotence",
        [](const Derivation& d, const Poly& p, const Caps& caps) {
            return nilpotence_to_dict(nilpotence(d, p, caps));
        },
        py::arg("derivation"), py::arg("poly"), py::arg("caps") = Caps{});
    m.def(
        "is_locally_nilpotent",
        [](const Derivation& d, const Caps& caps) {
            LocalNilpotenceVerdict v = is_locally_nilpotent(d, caps);
            py::dict out;
            using Kind = LocalNilpotenceVerdict::Kind;
            out["verdict"] = v.kind == Kind::Nilpotent ? "locally-nilpotent"
                             : v.kind == Kind::NotNilpotent ? "not-locally-nilpotent"
                                                            : "undetermined";
            if (v.witness_variable) out["witness"] = d.ring()->var(*v.witness_variable);
            return out;
        },
        py::arg("derivation"), py::arg("caps") = Caps{});
    m.def(
        "spectrum",
        [](const Derivation& d, unsigned sum_bound, const Caps& caps) {
            SpectrumSample s = spectrum_and_monoid(d, caps, sum_bound);
            py::dict gens;
            for (const auto& [var, values] : s.generator_eigenvalues) {
                py::list items;
                for (const auto& v : values) items.append(v.str());
                gens[py::str(var)] = items;
            }
            py::list monoid;
            for (const auto& v : s.monoid_sample) monoid.append(v.str());
            py::dict out;
            out["generators"] = gens;
            out["monoid_sample"] = monoid;
            return out;
        },
        py::arg("derivation"), py::arg("sum_bound") = 4, py::arg("caps") = Caps{});
    m.def(
        "enumerate_group",
        [](const std::vector<std::vector<std::vector<std::string>>>& generators,
           std::size_t cap) {
            std::vector<QMatrix> mats;
            for (const auto& g : generators) mats.push_back(matrix_from_strings(g));
            return enumerate_group(mats, cap);
        },
        py::arg("generators"), py::arg("cap") = kDefaultGroupCap);
    m.def(
        "act",
        [](const std::vector<std::vector<std::string>>& g, const Poly& p) {
            return act(matrix_from_strings(g), p);
        },
        py::arg("matrix"), py::arg("poly"));
    m.def("reynolds", &reynolds, py::arg("group"), py::arg("poly"));
    m.def(
        "check_euler_descends",
        [](const MatrixGroup& G, const Poly& p) {
            EulerDescentReport r = check_euler_descends(G, p);
            py::dict out;
            out["image"] = format_poly(r.image);
            out["image_invariant"] = r.image_invariant;
            out["passed"] = r.passed();
            if (r.homogeneous_degree) {
                out["degree"] = *r.homogeneous_degree;
                out["scales_by_degree"] = r.scales_by_degree;
            }
            return out;
        },
        py::arg("group"), py::arg("poly"));
    m.def(
        "random_poly",
        [](std::uint64_t seed, const PyRingPtr& ring, unsigned max_degree, unsigned max_terms) {
            return random_poly(seed, ring, max_degree, max_terms);
        },
        py::arg("seed"), py::arg("ring"), py::arg("max_degree") = 3, py::arg("max_terms") = 4);
    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed) {
            return report_to_dict(run_suite(name, seed));
        },
        py::arg("name"), py::arg("seed") = 0);
}
