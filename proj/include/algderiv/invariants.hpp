#ifndef ALGDERIV_INVARIANTS_HPP
#define ALGDERIV_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "algderiv/derivation.hpp"
#include "algderiv/linalg.hpp"
#include "algderiv/poly.hpp"

namespace algderiv {

class GroupError : public Error {
public:
    GroupError(std::string code, const std::string& what) : Error(std::move(code), what) {}
};

class NotInvariantError : public Error {
public:
    explicit NotInvariantError(std::size_t witness);
    std::size_t witness_index() const { return witness_; }

private:
    std::size_t witness_;
};

/* A finite matrix group over the rationals, fully enumerated.
 * elements[0] is the identity; the rest follow in breadth-first order
 * from the generators as given. */
struct MatrixGroup {
    std::size_t dimension = 0;
    std::vector<QMatrix> elements;

    std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultGroupCap = 4096;

MatrixGroup enumerate_group(const std::vector<QMatrix>& generators,
                            std::size_t cap = kDefaultGroupCap);

// Image of p under the linear substitution x_j -> sum_i g(i,j) x_i.
// With that column convention, act(g*h, p) == act(g, act(h, p)).
Poly act(const QMatrix& g, const Poly& p);

bool is_invariant(const MatrixGroup& G, const Poly& p);

// Group average (1/|G|) * sum_g act(g, p): the projector onto the
// invariant ring.
Poly reynolds(const MatrixGroup& G, const Poly& p);

// The Euler derivation sum_i x_i d/dx_i on the given ring.
Derivation euler_derivation(const RingPtr& ring);

/* Outcome of pushing an invariant through the Euler derivation: the
 * image must stay invariant, and on a homogeneous invariant of degree n
 * the derivation must act as multiplication by n. */
struct EulerDescentReport {
    Poly input;
    Poly image;              // D(input)
    bool image_invariant = false;
    std::optional<unsigned> homogeneous_degree; // set when the input is homogeneous
    bool scales_by_degree = false;              // meaningful when homogeneous

    bool passed() const {
        return image_invariant && (!homogeneous_degree.has_value() || scales_by_degree);
    }
};

// Requires p to be G-invariant; otherwise throws NotInvariantError with
// the first moving group element as witness.
EulerDescentReport check_euler_descends(const MatrixGroup& G, const Poly& p);

} // namespace algderiv

#endif
