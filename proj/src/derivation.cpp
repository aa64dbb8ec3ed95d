#include "algderiv/derivation.hpp"

#include <algorithm>

namespace algderiv {

Derivation Derivation::general(RingPtr ring, std::vector<Poly> images) {
    if (!ring) throw DomainError("derivation requires a ring");
    if (images.size() != ring->size())
        throw DomainError("derivation requires one image per ring variable");
    for (const Poly& im : images)
        if (!same_ring(im.ring(), ring))
            throw RingMismatchError("derivation image over a different ring");
    Derivation d;
    d.ring_ = std::move(ring);
    d.images_ = std::move(images);
    return d;
}

Derivation Derivation::general(RingPtr ring, const std::map<std::string, Poly>& images) {
    if (!ring) throw DomainError("derivation requires a ring");
    for (const auto& [name, img] : images)
        if (!ring->index_of(name)) throw UnknownVariableError(name);
    std::vector<Poly> vec;
    vec.reserve(ring->size());
    for (const auto& name : ring->vars()) {
        auto it = images.find(name);
        if (it == images.end())
            throw DomainError("derivation missing image for variable '" + name + "'");
        vec.push_back(it->second);
    }
    return general(std::move(ring), std::move(vec));
}

Derivation Derivation::diagonal(RingPtr ring, std::vector<Eigenvalue> weights,
                                WeightSymbolsPtr symbols) {
    if (!ring) throw DomainError("derivation requires a ring");
    if (ring->size() == 0 || weights.size() != ring->size())
        throw DomainError("diagonal derivation requires one weight per ring variable");
    Derivation d;
    d.ring_ = std::move(ring);
    d.diagonal_weights_ = std::move(weights);
    d.symbols_ = std::move(symbols);
    return d;
}

const std::vector<Poly>& Derivation::images() const {
    if (!is_general()) throw DomainError("images() on a diagonal derivation");
    return images_;
}

const std::vector<Eigenvalue>& Derivation::weights() const {
    if (!is_diagonal()) throw DomainError("weights() on a general derivation");
    return diagonal_weights_;
}

bool Derivation::has_rational_weights() const {
    if (is_general()) return false;
    return std::all_of(diagonal_weights_.begin(), diagonal_weights_.end(),
                       [](const Eigenvalue& w) { return w.is_rational(); });
}

Derivation Derivation::to_general() const {
    if (is_general()) return *this;
    if (!has_rational_weights())
        throw FormalWeightError("conversion to a general derivation requires rational weights");
    std::vector<Poly> images;
    images.reserve(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i)
        images.push_back(diagonal_weights_[i].constant() * Poly::variable(ring_, i));
    return general(ring_, std::move(images));
}

Eigenvalue monomial_weight(const Derivation& d, const Monomial& m) {
    const auto& w = d.weights();
    Eigenvalue acc;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) acc = acc + Rational(static_cast<long>(m[i])) * w[i];
    return acc;
}

Poly apply(const Derivation& d, const Poly& p) {
    if (!same_ring(d.ring(), p.ring()))
        throw RingMismatchError("derivation applied to polynomial over a different ring");
    if (d.is_diagonal()) {
        if (!d.has_rational_weights())
            throw FormalWeightError("applying a diagonal derivation requires rational weights");
        Poly r(p.ring());
        for (const auto& [m, c] : p.terms()) {
            Eigenvalue w = monomial_weight(d, m);
            r.add_term(m, c * w.constant());
        }
        return r;
    }
    // D(p) = sum_i D(x_i) * dp/dx_i
    Poly r(p.ring());
    const auto& images = d.images();
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].is_zero()) continue;
        Poly partial = p.diff(i);
        if (!partial.is_zero()) r += images[i] * partial;
    }
    return r;
}

Poly apply_power(const Derivation& d, const Poly& p, unsigned n) {
    Poly r = p;
    for (unsigned i = 0; i < n && !r.is_zero(); ++i) r = apply(d, r);
    return r;
}

TruncatedSeries phi_truncated(const Derivation& d, const Poly& p, unsigned order) {
    TruncatedSeries s{order, {}};
    s.coefficients.reserve(order + 1);
    Poly iter = p;
    for (unsigned n = 0; n <= order; ++n) {
        s.coefficients.push_back((Rational(1) / factorial(n)) * iter);
        if (n < order) iter = apply(d, iter);
    }
    return s;
}

TruncatedSeries phi_shifted_truncated(const Derivation& d, const Rational& lambda,
                                      const Poly& p, unsigned order) {
    TruncatedSeries s{order, {}};
    s.coefficients.reserve(order + 1);
    Poly iter = p;
    for (unsigned n = 0; n <= order; ++n) {
        s.coefficients.push_back((Rational(1) / factorial(n)) * iter);
        if (n < order) iter = apply(d, iter) - lambda * iter;
    }
    return s;
}

ScalarSeries exp_truncated(const Eigenvalue& lambda, unsigned order) {
    if (!lambda.is_rational())
        throw FormalWeightError("exponential series requires a rational eigenvalue");
    ScalarSeries s{order, {}};
    s.coefficients.reserve(order + 1);
    Rational power = 1;
    for (unsigned n = 0; n <= order; ++n) {
        s.coefficients.push_back(power / factorial(n));
        power *= lambda.constant();
    }
    return s;
}

TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned order = std::min(a.order, b.order);
    const RingPtr& ring = a.coefficients.at(0).ring();
    TruncatedSeries s{order, std::vector<Poly>(order + 1, Poly::zero(ring))};
    for (unsigned i = 0; i <= order; ++i)
        for (unsigned j = 0; i + j <= order; ++j)
            s.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    return s;
}

TruncatedSeries mul_truncated(const ScalarSeries& s, const TruncatedSeries& a) {
    unsigned order = std::min(s.order, a.order);
    const RingPtr& ring = a.coefficients.at(0).ring();
    TruncatedSeries r{order, std::vector<Poly>(order + 1, Poly::zero(ring))};
    for (unsigned i = 0; i <= order; ++i)
        for (unsigned j = 0; i + j <= order; ++j)
            r.coefficients[i + j] += s.coefficients[i] * a.coefficients[j];
    return r;
}

} // namespace algderiv
