#include "algderiv/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace algderiv {

std::string cap_name(Cap c) {
    switch (c) {
        case Cap::Dim: return "dim";
        case Cap::Degree: return "degree";
        case Cap::Iterations: return "iterations";
    }
    return "?";
}

void Caps::validate() const {
    if (max_krylov_dim == 0 || max_degree == 0 || max_iterations == 0)
        throw DomainError("caps must be positive");
}

NonRationalSpectrumError::NonRationalSpectrumError(UniPoly residual)
    : Error("non-rational-spectrum",
            "characteristic polynomial does not split over the rationals; residual " +
                to_string(residual)),
      residual_(std::move(residual)) {}

namespace {

/* Incremental row echelon structure over monomial coordinates. Each row
 * keeps the reduced polynomial together with its expression in terms of
 * the raw iterates v_0..v_k, so a dependency immediately yields the
 * companion column. Rows have pairwise distinct leading monomials. */
class EchelonBasis {
public:
    // Returns the dependency coefficients c with v_new = sum c[j] * v_j
    // when v_new is dependent; otherwise stores the reduced row.
    std::optional<std::vector<Rational>> insert(Poly v, std::size_t index) {
        std::vector<Rational> combo(index + 1, Rational(0));
        combo[index] = 1;
        while (!v.is_zero()) {
            const Monomial& lead = v.terms().rbegin()->first;
            auto it = by_lead_.find(lead);
            if (it == by_lead_.end()) break;
            const Row& row = rows_[it->second];
            Rational factor = v.terms().rbegin()->second / row.value.terms().rbegin()->second;
            v -= factor * row.value;
            for (std::size_t j = 0; j < row.combo.size(); ++j) combo[j] -= factor * row.combo[j];
        }
        if (v.is_zero()) {
            combo.pop_back(); // drop the v_index slot; remaining entries negate to the dependency
            for (auto& c : combo) c = -c;
            return combo;
        }
        by_lead_.emplace(v.terms().rbegin()->first, rows_.size());
        rows_.push_back(Row{std::move(v), std::move(combo)});
        return std::nullopt;
    }

    std::size_t size() const { return rows_.size(); }

private:
    struct Row {
        Poly value;
        std::vector<Rational> combo;
    };
    std::vector<Row> rows_;
    std::map<Monomial, std::size_t, GrlexLess> by_lead_;
};

QMatrix companion(const std::vector<Rational>& last_column) {
    std::size_t d = last_column.size();
    QMatrix m(d, d);
    for (std::size_t j = 0; j + 1 < d; ++j) m.at(j + 1, j) = 1;
    for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = last_column[i];
    return m;
}

} // namespace

KrylovOutcome krylov_space(const Derivation& d_in, const Poly& p, const Caps& caps) {
    caps.validate();
    if (p.is_zero()) throw DomainError("krylov space of the zero element");
    const Derivation d = d_in.is_diagonal() ? d_in.to_general() : d_in;
    if (!same_ring(d.ring(), p.ring()))
        throw RingMismatchError("derivation and element over different rings");

    EchelonBasis echelon;
    std::vector<Poly> iterates;
    Poly v = p;
    for (std::size_t k = 0;; ++k) {
        if (k > caps.max_iterations) return CapExceeded{Cap::Iterations};
        if (v.total_degree() > caps.max_degree) return CapExceeded{Cap::Degree};
        if (auto dep = echelon.insert(v, k)) {
            QMatrix m = companion(*dep);
            return KrylovSpace{std::move(iterates), std::move(m), p};
        }
        if (echelon.size() > caps.max_krylov_dim) return CapExceeded{Cap::Dim};
        iterates.push_back(v);
        v = apply(d, v);
    }
}

std::optional<std::size_t> algebraic_dimension(const Derivation& d, const Poly& p,
                                               const Caps& caps) {
    if (p.is_zero()) return 0;
    KrylovOutcome out = krylov_space(d, p, caps);
    if (const auto* space = std::get_if<KrylovSpace>(&out)) return space->dimension();
    return std::nullopt;
}

namespace {

struct SpectrumSplit {
    KrylovSpace space;
    RootMultiset split; // of the characteristic polynomial of space.matrix
    UniPoly chi;
};

SpectrumSplit krylov_spectrum(const Derivation& d, const Poly& p, const Caps& caps) {
    KrylovOutcome out = krylov_space(d, p, caps);
    if (const auto* cap = std::get_if<CapExceeded>(&out))
        throw NotAlgebraicError(cap->which,
                                "element not algebraic up to caps (" + cap_name(cap->which) +
                                    " cap hit)");
    SpectrumSplit s{std::get<KrylovSpace>(std::move(out)), {}, {}};
    s.chi = char_poly(s.space.matrix);
    s.split = rational_root_split(s.chi);
    return s;
}

unsigned shifted_height(const Derivation& d, const Rational& lambda, const Poly& component) {
    // Largest r with (D - lambda)^r != 0 on the component.
    unsigned r = 0;
    Poly q = apply(d, component) - lambda * component;
    while (!q.is_zero()) {
        ++r;
        q = apply(d, q) - lambda * q;
    }
    return r;
}

} // namespace

Decomposition decompose_element(const Derivation& d_in, const Poly& p, const Caps& caps) {
    if (p.is_zero())
        throw DomainError("the zero element has no canonical decomposition");
    if (d_in.is_diagonal() && !d_in.has_rational_weights()) return decompose_diagonal(d_in, p);
    const Derivation d = d_in.is_diagonal() ? d_in.to_general() : d_in;

    SpectrumSplit s = krylov_spectrum(d, p, caps);
    if (s.split.residual.degree() > 0) throw NonRationalSpectrumError(s.split.residual);

    Decomposition dec;
    if (s.split.roots.size() == 1) {
        // Single eigenvalue: the element is its own component.
        const auto& [lambda, mult] = *s.split.roots.begin();
        dec.parts.push_back({Eigenvalue(lambda), p, shifted_height(d, lambda, p)});
        return dec;
    }

    // Component extraction by partial-fraction projectors: for each factor
    // g = (X - lambda)^m of chi, with cofactor h = chi/g, pick u with
    // u*h == 1 mod g; then (u*h)(D) applied to p is the component, read
    // off directly from the cached iterates.
    Poly reconstructed(p.ring());
    for (const auto& [lambda, mult] : s.split.roots) {
        UniPoly g = UniPoly::linear_root(lambda).pow(mult);
        UniPoly h = divmod(s.chi, g).quotient;
        UniExtGcd e = ext_gcd(h, g);
        // e.g is 1 since g and h are coprime; projector = e.u * h mod chi.
        UniPoly projector = divmod(e.u * h, s.chi).remainder;
        Poly component(p.ring());
        for (int j = 0; j <= projector.degree(); ++j) {
            Rational c = projector.coeff(static_cast<std::size_t>(j));
            if (!c.is_zero()) component += c * s.space.basis.at(static_cast<std::size_t>(j));
        }
        if (component.is_zero())
            throw std::logic_error("eigencomponent of a minimal-polynomial root vanished");
        dec.parts.push_back({Eigenvalue(lambda), component, shifted_height(d, lambda, component)});
        reconstructed += component;
    }
    if (reconstructed != p) throw std::logic_error("eigencomponents do not sum to the input");
    return dec;
}

Decomposition decompose_diagonal(const Derivation& d, const Poly& p) {
    if (!d.is_diagonal()) throw DomainError("decompose_diagonal requires a diagonal derivation");
    if (p.is_zero())
        throw DomainError("the zero element has no canonical decomposition");
    if (!same_ring(d.ring(), p.ring()))
        throw RingMismatchError("derivation and element over different rings");
    std::map<Eigenvalue, Poly> groups;
    for (const auto& [m, c] : p.terms()) {
        auto [it, inserted] = groups.emplace(monomial_weight(d, m), Poly(p.ring()));
        it->second.add_term(m, c);
    }
    Decomposition dec;
    for (auto& [lambda, component] : groups)
        dec.parts.push_back({lambda, std::move(component), 0});
    return dec;
}

std::optional<unsigned> mu_height(const Derivation& d, const Poly& p, const Eigenvalue& mu,
                                  const Caps& caps) {
    if (p.is_zero()) throw DomainError("height of the zero element is undefined");
    Decomposition dec = decompose_element(d, p, caps);
    if (dec.parts.size() != 1 || dec.parts.front().lambda != mu) return std::nullopt;
    return dec.parts.front().height;
}

namespace {

// Nilpotence with an optional witness: a closed spectrum with a nonzero
// part certifies non-nilpotence even when no rational root names it.
struct NilpotenceInternal {
    enum class Kind { Nilpotent, NotNilpotent, Undetermined } kind;
    unsigned index = 0;
    std::optional<Eigenvalue> witness;
    Cap cap = Cap::Dim;
    std::optional<UniPoly> residual; // non-split factor carrying the witness
};

NilpotenceInternal nilpotence_internal(const Derivation& d, const Poly& p, const Caps& caps) {
    using K = NilpotenceInternal::Kind;
    if (p.is_zero()) throw DomainError("nilpotence of the zero element is undefined");
    if (d.is_diagonal() && !d.has_rational_weights()) {
        // Formal weights: monomials are genuine eigenvectors, so the
        // verdict is read off the weight grouping.
        Decomposition dec = decompose_diagonal(d, p);
        for (const auto& part : dec.parts)
            if (!part.lambda.is_zero()) return {K::NotNilpotent, 0, part.lambda, Cap::Dim, {}};
        return {K::Nilpotent, 0, std::nullopt, Cap::Dim, {}};
    }
    const Derivation g = d.is_diagonal() ? d.to_general() : d;
    KrylovOutcome out = krylov_space(g, p, caps);
    if (const auto* cap = std::get_if<CapExceeded>(&out))
        return {K::Undetermined, 0, std::nullopt, cap->which, {}};
    const KrylovSpace& space = std::get<KrylovSpace>(out);
    RootMultiset split = rational_root_split(char_poly(space.matrix));
    bool only_zero_roots =
        split.residual.degree() == 0 && split.roots.size() == 1 && split.roots.begin()->first.is_zero();
    if (only_zero_roots) {
        // chi = X^dim: the last independent iterate is D^(dim-1)(p).
        return {K::Nilpotent, static_cast<unsigned>(space.dimension() - 1), std::nullopt,
                Cap::Dim, {}};
    }
    for (const auto& [root, mult] : split.roots)
        if (!root.is_zero()) return {K::NotNilpotent, 0, Eigenvalue(root), Cap::Dim, {}};
    // Only irrational nonzero eigenvalues remain; not nilpotent, but no
    // rational witness exists.
    return {K::NotNilpotent, 0, std::nullopt, Cap::Dim, split.residual};
}

} // namespace

NilpotenceVerdict nilpotence(const Derivation& d, const Poly& p, const Caps& caps) {
    NilpotenceInternal r = nilpotence_internal(d, p, caps);
    switch (r.kind) {
        case NilpotenceInternal::Kind::Nilpotent: return Nilpotent{r.index};
        case NilpotenceInternal::Kind::Undetermined: return NilpotenceUndetermined{r.cap};
        case NilpotenceInternal::Kind::NotNilpotent:
            if (r.witness) return NotNilpotent{*r.witness};
            // The spectrum is certainly nonzero but lives outside the
            // rationals; surface it like the other non-split cases.
            throw NonRationalSpectrumError(*r.residual);
    }
    throw std::logic_error("unreachable");
}

LocalNilpotenceVerdict is_locally_nilpotent(const Derivation& d, const Caps& caps) {
    bool undetermined = false;
    for (std::size_t i = 0; i < d.ring()->size(); ++i) {
        NilpotenceInternal r = nilpotence_internal(d, Poly::variable(d.ring(), i), caps);
        switch (r.kind) {
            case NilpotenceInternal::Kind::NotNilpotent:
                return {LocalNilpotenceVerdict::Kind::NotNilpotent, i};
            case NilpotenceInternal::Kind::Undetermined:
                undetermined = true;
                break;
            case NilpotenceInternal::Kind::Nilpotent: break;
        }
    }
    if (undetermined) return {LocalNilpotenceVerdict::Kind::Undetermined, std::nullopt};
    return {LocalNilpotenceVerdict::Kind::Nilpotent, std::nullopt};
}

SpectrumSample spectrum_and_monoid(const Derivation& d, const Caps& caps, unsigned sum_bound) {
    SpectrumSample out;
    std::set<Eigenvalue> observed;
    for (std::size_t i = 0; i < d.ring()->size(); ++i) {
        const std::string& name = d.ring()->var(i);
        std::set<Eigenvalue> values;
        if (d.is_diagonal() && !d.has_rational_weights()) {
            values.insert(d.weights()[i]);
        } else {
            try {
                Decomposition dec = decompose_element(d, Poly::variable(d.ring(), i), caps);
                for (const auto& part : dec.parts) values.insert(part.lambda);
            } catch (const NotAlgebraicError& e) {
                throw NotAlgebraicError(e.cap(), "variable '" + name + "' is not algebraic up to caps");
            }
        }
        observed.insert(values.begin(), values.end());
        out.generator_eigenvalues.emplace(name,
                                          std::vector<Eigenvalue>(values.begin(), values.end()));
    }

    // Sums of 1..sum_bound observed eigenvalues. Zero enters only through
    // a generator eigenvalue; the true monoid always contains it via the
    // constants.
    if (sum_bound == 0) return out;
    std::set<Eigenvalue> sample(observed.begin(), observed.end());
    std::set<Eigenvalue> level = sample;
    for (unsigned k = 2; k <= sum_bound; ++k) {
        std::set<Eigenvalue> next;
        for (const auto& a : level)
            for (const auto& b : observed) next.insert(a + b);
        sample.insert(next.begin(), next.end());
        level = std::move(next);
    }
    out.monoid_sample.assign(sample.begin(), sample.end());
    return out;
}

} // namespace algderiv
