#include "algderiv/invariants.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace algderiv {

NotInvariantError::NotInvariantError(std::size_t witness)
    : Error("not-invariant",
            "polynomial is moved by group element #" + std::to_string(witness)),
      witness_(witness) {}

MatrixGroup enumerate_group(const std::vector<QMatrix>& generators, std::size_t cap) {
    if (generators.empty()) throw GroupError("empty-group", "no generators given");
    std::size_t dim = generators.front().rows();
    for (const QMatrix& g : generators) {
        if (!g.is_square() || g.rows() != dim)
            throw GroupError("dimension-mismatch", "generators of unequal dimension");
        if (!is_invertible(g))
            throw GroupError("non-invertible-generator", "generator is not invertible");
    }

    MatrixGroup G{dim, {}};
    std::map<std::vector<Rational>, std::size_t> seen;
    std::deque<QMatrix> queue;
    QMatrix id = QMatrix::identity(dim);
    seen.emplace(id.entries(), 0);
    G.elements.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        QMatrix current = std::move(queue.front());
        queue.pop_front();
        for (const QMatrix& g : generators) {
            QMatrix next = current * g;
            if (seen.count(next.entries())) continue;
            if (G.elements.size() >= cap)
                throw GroupError("group-too-large",
                                 "group closure exceeds cap " + std::to_string(cap));
            seen.emplace(next.entries(), G.elements.size());
            G.elements.push_back(next);
            queue.push_back(next);
        }
    }
    return G;
}

Poly act(const QMatrix& g, const Poly& p) {
    const RingPtr& ring = p.ring();
    if (!ring || !g.is_square() || g.rows() != ring->size())
        throw GroupError("dimension-mismatch",
                         "group element dimension does not match the ring");
    std::vector<Poly> images;
    images.reserve(ring->size());
    for (std::size_t j = 0; j < ring->size(); ++j) {
        Poly image(ring);
        for (std::size_t i = 0; i < ring->size(); ++i) {
            if (g.at(i, j).is_zero()) continue;
            image += g.at(i, j) * Poly::variable(ring, i);
        }
        images.push_back(std::move(image));
    }
    return p.substitute(images);
}

bool is_invariant(const MatrixGroup& G, const Poly& p) {
    for (const QMatrix& g : G.elements)
        if (act(g, p) != p) return false;
    return true;
}

Poly reynolds(const MatrixGroup& G, const Poly& p) {
    Poly sum(p.ring());
    for (const QMatrix& g : G.elements) sum += act(g, p);
    return (Rational(1, static_cast<long>(G.order()))) * sum;
}

Derivation euler_derivation(const RingPtr& ring) {
    std::vector<Poly> images;
    images.reserve(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(Poly::variable(ring, i));
    return Derivation::general(ring, std::move(images));
}

EulerDescentReport check_euler_descends(const MatrixGroup& G, const Poly& p) {
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        if (act(G.elements[i], p) != p) throw NotInvariantError(i);

    EulerDescentReport report;
    report.input = p;
    report.image = apply(euler_derivation(p.ring()), p);
    report.image_invariant = is_invariant(G, report.image);
    if (!p.is_zero() && p.is_homogeneous()) {
        unsigned n = p.total_degree();
        report.homogeneous_degree = n;
        report.scales_by_degree =
            report.image == Rational(static_cast<long>(n)) * p;
    }
    return report;
}

} // namespace algderiv
