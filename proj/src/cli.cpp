#include "algderiv/cli.hpp"

#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "algderiv/invariants.hpp"
#include "algderiv/parse.hpp"
#include "algderiv/specfile.hpp"
#include "algderiv/verifier.hpp"

namespace algderiv {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string spec_path;
    std::string poly_text;
    Caps caps;
    bool machine = false;
};

void add_caps(CLI::App* cmd, Caps& caps) {
    cmd->add_option("--cap-dim", caps.max_krylov_dim, "Krylov dimension cap")
        ->capture_default_str();
    cmd->add_option("--cap-deg", caps.max_degree, "iterate degree cap")->capture_default_str();
    cmd->add_option("--cap-iter", caps.max_iterations, "iteration cap")->capture_default_str();
}

json decomposition_json(const Decomposition& dec) {
    json parts = json::array();
    for (const auto& part : dec.parts)
        parts.push_back({{"lambda", part.lambda.str()},
                         {"component", format_poly(part.component)},
                         {"height", part.height}});
    return parts;
}

void print_decomposition(std::ostream& out, const Decomposition& dec, bool machine,
                         const std::string& input) {
    if (machine) {
        out << json{{"input", input}, {"parts", decomposition_json(dec)}}.dump() << "\n";
        return;
    }
    out << "input: " << input << "\n";
    out << "parts: " << dec.parts.size() << "\n";
    for (const auto& part : dec.parts)
        out << "lambda=" << part.lambda << " height=" << part.height
            << " component=" << format_poly(part.component) << "\n";
}

json report_json(const SuiteReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"observed", f.observed}});
    return {{"suite", report.suite},     {"seed", report.seed},
            {"cases_run", report.cases_run}, {"skipped", report.skipped},
            {"passed", report.passed()}, {"failures", failures}};
}

void print_report(std::ostream& out, const SuiteReport& report) {
    out << "suite " << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << " ("
        << report.cases_run << " cases, " << report.skipped << " skipped, seed " << report.seed
        << ")\n";
    for (const auto& f : report.failures)
        out << "  failure: input=" << f.input << " expected=" << f.expected
            << " observed=" << f.observed << "\n";
}

int cmd_decompose(const CommonOpts& opts, std::ostream& out) {
    BuiltDerivation built = build_derivation(load_derivation_spec(opts.spec_path));
    Poly p = parse_poly(opts.poly_text, built.ring);
    Decomposition dec = decompose_element(built.derivation, p, opts.caps);
    print_decomposition(out, dec, opts.machine, format_poly(p));
    return 0;
}

int cmd_algebraic(const CommonOpts& opts, std::ostream& out) {
    BuiltDerivation built = build_derivation(load_derivation_spec(opts.spec_path));
    Poly p = parse_poly(opts.poly_text, built.ring);
    std::optional<std::size_t> dim;
    if (built.derivation.is_diagonal() && !built.derivation.has_rational_weights()) {
        // Monomials are eigenvectors; the orbit span is generated by the
        // distinct weight components.
        dim = decompose_diagonal(built.derivation, p).parts.size();
    } else {
        dim = algebraic_dimension(built.derivation, p, opts.caps);
    }
    if (opts.machine) {
        json doc = {{"input", format_poly(p)},
                    {"finite", dim.has_value()}};
        if (dim) doc["dimension"] = *dim;
        out << doc.dump() << "\n";
    } else if (dim) {
        out << "finite dimension=" << *dim << "\n";
    } else {
        out << "unknown-up-to-caps\n";
    }
    return dim ? 0 : 1;
}

int cmd_nilpotent(const CommonOpts& opts, std::ostream& out) {
    BuiltDerivation built = build_derivation(load_derivation_spec(opts.spec_path));
    if (opts.poly_text.empty()) {
        LocalNilpotenceVerdict v = is_locally_nilpotent(built.derivation, opts.caps);
        using Kind = LocalNilpotenceVerdict::Kind;
        std::string kind = v.kind == Kind::Nilpotent ? "locally-nilpotent"
                           : v.kind == Kind::NotNilpotent ? "not-locally-nilpotent"
                                                          : "undetermined";
        if (opts.machine) {
            json doc = {{"verdict", kind}};
            if (v.witness_variable) doc["witness"] = built.ring->var(*v.witness_variable);
            out << doc.dump() << "\n";
        } else {
            out << kind;
            if (v.witness_variable) out << " witness=" << built.ring->var(*v.witness_variable);
            out << "\n";
        }
        return v.kind == Kind::Undetermined ? 1 : 0;
    }
    Poly p = parse_poly(opts.poly_text, built.ring);
    NilpotenceVerdict v = nilpotence(built.derivation, p, opts.caps);
    json doc;
    std::ostringstream line;
    int rc = 0;
    if (const auto* nil = std::get_if<Nilpotent>(&v)) {
        doc = {{"verdict", "nilpotent"}, {"index", nil->index}};
        line << "nilpotent index=" << nil->index;
    } else if (const auto* not_nil = std::get_if<NotNilpotent>(&v)) {
        doc = {{"verdict", "not-nilpotent"}, {"witness", not_nil->witness.str()}};
        line << "not-nilpotent witness=" << not_nil->witness;
    } else {
        Cap cap = std::get<NilpotenceUndetermined>(v).cap_hit;
        doc = {{"verdict", "undetermined"}, {"cap", cap_name(cap)}};
        line << "undetermined cap=" << cap_name(cap);
        rc = 1;
    }
    out << (opts.machine ? doc.dump() : line.str()) << "\n";
    return rc;
}

int cmd_height(const CommonOpts& opts, const std::string& mu_text, std::ostream& out) {
    BuiltDerivation built = build_derivation(load_derivation_spec(opts.spec_path));
    Poly p = parse_poly(opts.poly_text, built.ring);
    Eigenvalue mu = parse_weight_expr(mu_text, built.symbols);
    std::optional<unsigned> h = mu_height(built.derivation, p, mu, opts.caps);
    if (opts.machine) {
        json doc = {{"input", format_poly(p)}, {"mu", mu.str()}, {"member", h.has_value()}};
        if (h) doc["height"] = *h;
        out << doc.dump() << "\n";
    } else if (h) {
        out << "height=" << *h << "\n";
    } else {
        out << "not-in-component mu=" << mu << "\n";
    }
    return 0;
}

int cmd_phi(const CommonOpts& opts, unsigned order, std::ostream& out) {
    BuiltDerivation built = build_derivation(load_derivation_spec(opts.spec_path));
    Poly p = parse_poly(opts.poly_text, built.ring);
    TruncatedSeries s = phi_truncated(built.derivation, p, order);
    if (opts.machine) {
        json coeffs = json::array();
        for (const Poly& c : s.coefficients) coeffs.push_back(format_poly(c));
        out << json{{"input", format_poly(p)}, {"order", s.order}, {"coefficients", coeffs}}.dump()
            << "\n";
        return 0;
    }
    for (unsigned n = 0; n <= s.order; ++n)
        out << "t^" << n << ": " << format_poly(s.coefficients[n]) << "\n";
    return 0;
}

int cmd_spectrum(const CommonOpts& opts, unsigned sum_bound, std::ostream& out) {
    BuiltDerivation built = build_derivation(load_derivation_spec(opts.spec_path));
    SpectrumSample sample = spectrum_and_monoid(built.derivation, opts.caps, sum_bound);
    if (opts.machine) {
        json gens = json::object();
        for (const auto& [var, values] : sample.generator_eigenvalues) {
            json arr = json::array();
            for (const auto& v : values) arr.push_back(v.str());
            gens[var] = arr;
        }
        json monoid = json::array();
        for (const auto& v : sample.monoid_sample) monoid.push_back(v.str());
        out << json{{"generators", gens}, {"monoid_sample", monoid}}.dump() << "\n";
        return 0;
    }
    for (const auto& var : built.ring->vars()) {
        out << var << ":";
        for (const auto& v : sample.generator_eigenvalues.at(var)) out << " " << v;
        out << "\n";
    }
    out << "monoid sample:";
    for (const auto& v : sample.monoid_sample) out << " " << v;
    out << "\n";
    return 0;
}

int cmd_invariants(const std::string& group_path, unsigned max_deg,
                   const std::vector<std::string>& vars, bool machine, std::ostream& out) {
    GroupSpec spec = load_group_spec(group_path);
    MatrixGroup G = enumerate_group(spec.generators);
    std::vector<std::string> names = vars;
    if (names.empty())
        for (std::size_t i = 0; i < spec.dimension; ++i)
            names.push_back("x" + std::to_string(i + 1));
    RingPtr ring = make_ring(names);
    if (ring->size() != spec.dimension)
        throw SpecFileError("variable list does not match the group dimension");

    // Reynolds images of all monomials up to the degree bound, deduplicated.
    std::set<std::string> seen;
    std::vector<Poly> invariants;
    std::vector<Monomial> monomials;
    {
        // All exponent vectors of total degree <= max_deg, graded order.
        std::vector<unsigned> exps(ring->size(), 0);
        auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
            if (pos + 1 == ring->size()) {
                for (unsigned e = 0; e <= left; ++e) {
                    exps[pos] = e;
                    monomials.emplace_back(exps);
                }
                return;
            }
            for (unsigned e = 0; e <= left; ++e) {
                exps[pos] = e;
                self(self, pos + 1, left - e);
            }
        };
        rec(rec, 0, max_deg);
    }
    for (const Monomial& m : monomials) {
        Poly image = reynolds(G, Poly::monomial(ring, m, 1));
        if (image.is_zero()) continue;
        std::string key = format_poly((Rational(1) / image.terms().rbegin()->second) * image);
        if (!seen.insert(key).second) continue;
        invariants.push_back(image);
    }

    json rows = json::array();
    bool all_ok = true;
    for (const Poly& inv : invariants) {
        EulerDescentReport report = check_euler_descends(G, inv);
        all_ok = all_ok && report.passed();
        if (machine) {
            json row = {{"invariant", format_poly(inv)},
                        {"image", format_poly(report.image)},
                        {"image_invariant", report.image_invariant},
                        {"passed", report.passed()}};
            if (report.homogeneous_degree) {
                row["degree"] = *report.homogeneous_degree;
                row["scales_by_degree"] = report.scales_by_degree;
            }
            rows.push_back(row);
        } else {
            out << (report.passed() ? "ok   " : "FAIL ") << format_poly(inv) << " -> "
                << format_poly(report.image);
            if (report.homogeneous_degree) out << "  (degree " << *report.homogeneous_degree << ")";
            out << "\n";
        }
    }
    if (machine)
        out << json{{"group_order", G.order()}, {"invariants", rows}, {"passed", all_ok}}.dump()
            << "\n";
    else
        out << "group order " << G.order() << ", invariants checked: " << invariants.size()
            << ", " << (all_ok ? "all pass" : "FAILURES") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_check(const std::string& suite, std::uint64_t seed, bool machine, std::ostream& out) {
    std::vector<SuiteReport> reports = run_suites(suite, seed);
    bool all_ok = true;
    json docs = json::array();
    for (const auto& report : reports) {
        all_ok = all_ok && report.passed();
        if (machine)
            docs.push_back(report_json(report));
        else
            print_report(out, report);
    }
    if (machine) out << docs.dump() << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spectral toolkit for derivations on polynomial rings"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string mu_text;
    unsigned order = 8;
    unsigned sum_bound = 4;
    std::string group_path;
    unsigned max_deg = 4;
    std::string vars_csv;
    std::string suite = "all";
    std::uint64_t seed = 0;
    bool machine = false;

    auto add_spec = [&](CLI::App* cmd, bool with_poly) {
        cmd->add_option("--spec", opts.spec_path, "derivation spec file (JSON)")->required();
        if (with_poly)
            cmd->add_option("--poly", opts.poly_text, "polynomial expression")->required();
        add_caps(cmd, opts.caps);
        cmd->add_flag("--machine", machine, "machine-readable JSON output");
    };

    CLI::App* dec = app.add_subcommand("decompose", "eigenspace decomposition of an element");
    add_spec(dec, true);

    CLI::App* alg = app.add_subcommand("algebraic", "orbit-span dimension of an element");
    add_spec(alg, true);

    CLI::App* nil = app.add_subcommand("nilpotent", "nilpotence certificate");
    nil->add_option("--spec", opts.spec_path, "derivation spec file (JSON)")->required();
    nil->add_option("--poly", opts.poly_text,
                    "polynomial expression (whole derivation when omitted)");
    add_caps(nil, opts.caps);
    nil->add_flag("--machine", machine, "machine-readable JSON output");

    CLI::App* hei = app.add_subcommand("height", "height within an eigenspace");
    add_spec(hei, true);
    hei->add_option("--mu", mu_text, "eigenvalue expression")->required();

    CLI::App* phi = app.add_subcommand("phi", "truncated exponential series of an element");
    add_spec(phi, true);
    phi->add_option("--order", order, "truncation order")->capture_default_str();

    CLI::App* spec_cmd = app.add_subcommand("spectrum", "generator eigenvalues and monoid sample");
    spec_cmd->add_option("--spec", opts.spec_path, "derivation spec file (JSON)")->required();
    spec_cmd->add_option("--sum-bound", sum_bound, "max number of summands")->capture_default_str();
    add_caps(spec_cmd, opts.caps);
    spec_cmd->add_flag("--machine", machine, "machine-readable JSON output");

    CLI::App* inv = app.add_subcommand("invariants", "group averages through the scaling derivation");
    inv->add_option("--group", group_path, "group spec file (JSON)")->required();
    inv->add_option("--max-deg", max_deg, "degree bound for averaged monomials")
        ->capture_default_str();
    inv->add_option("--vars", vars_csv, "comma-separated variable names (default x1,..,xr)");
    inv->add_flag("--machine", machine, "machine-readable JSON output");

    CLI::App* chk = app.add_subcommand("check", "run the property suites");
    chk->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
    chk->add_option("--seed", seed, "random seed")->capture_default_str();
    chk->add_flag("--machine", machine, "machine-readable JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    opts.machine = machine;
    try {
        if (dec->parsed()) return cmd_decompose(opts, out);
        if (alg->parsed()) return cmd_algebraic(opts, out);
        if (nil->parsed()) return cmd_nilpotent(opts, out);
        if (hei->parsed()) return cmd_height(opts, mu_text, out);
        if (phi->parsed()) return cmd_phi(opts, order, out);
        if (spec_cmd->parsed()) return cmd_spectrum(opts, sum_bound, out);
        if (inv->parsed()) {
            std::vector<std::string> vars;
            if (!vars_csv.empty()) {
                std::stringstream ss(vars_csv);
                std::string item;
                while (std::getline(ss, item, ',')) vars.push_back(item);
            }
            return cmd_invariants(group_path, max_deg, vars, machine, out);
        }
        if (chk->parsed()) return cmd_check(suite, seed, machine, out);
    } catch (const Error& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 1;
    }
    err << "error: usage: no subcommand\n";
    return 2;
}

} // namespace algderiv
