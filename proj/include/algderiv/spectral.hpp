#ifndef ALGDERIV_SPECTRAL_HPP
#define ALGDERIV_SPECTRAL_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algderiv/derivation.hpp"
#include "algderiv/linalg.hpp"

namespace algderiv {

enum class Cap { Dim, Degree, Iterations };
std::string cap_name(Cap c);

/* Resource bounds for the semi-decidable searches. Finite-dimensionality
 * of an orbit can only be confirmed, never refuted, at this interface. */
struct Caps {
    std::size_t max_krylov_dim = 256;
    std::size_t max_degree = 512;
    std::size_t max_iterations = 1024;

    void validate() const;
};

/* The D-stable space spanned by p, D(p), D^2(p), ... The basis is the
 * iterate sequence itself, cut at the first dependent iterate, so the
 * matrix of D on it is a companion matrix: column j of `matrix` holds
 * the coordinates of D(basis[j]) in the basis. */
struct KrylovSpace {
    std::vector<Poly> basis;
    QMatrix matrix;
    Poly generator;

    std::size_t dimension() const { return basis.size(); }
};

struct CapExceeded {
    Cap which;
};

using KrylovOutcome = std::variant<KrylovSpace, CapExceeded>;

KrylovOutcome krylov_space(const Derivation& d, const Poly& p, const Caps& caps = {});

// Dimension of the orbit span when it closes within caps; nullopt means
// unknown up to caps (one-sided: never claims non-algebraicity).
std::optional<std::size_t> algebraic_dimension(const Derivation& d, const Poly& p,
                                               const Caps& caps = {});

struct DecompositionPart {
    Eigenvalue lambda;
    Poly component;
    unsigned height; // largest r with (D - lambda)^r(component) != 0
};

/* Splitting of an element along the generalized eigenspaces of D.
 * Parts are strictly increasing in lambda and sum to the input. */
struct Decomposition {
    std::vector<DecompositionPart> parts;
};

class NotAlgebraicError : public Error {
public:
    explicit NotAlgebraicError(Cap cap, const std::string& what)
        : Error("not-algebraic-up-to-caps", what), cap_(cap) {}
    Cap cap() const { return cap_; }

private:
    Cap cap_;
};

class NonRationalSpectrumError : public Error {
public:
    explicit NonRationalSpectrumError(UniPoly residual);
    const UniPoly& residual() const { return residual_; }

private:
    UniPoly residual_;
};

// Eigen-decompose p. Diagonal derivations are routed through
// decompose_diagonal; general ones go through the Krylov space of p.
Decomposition decompose_element(const Derivation& d, const Poly& p, const Caps& caps = {});

// Monomial-weight grouping for diagonal derivations; every part has
// height zero and no caps are needed.
Decomposition decompose_diagonal(const Derivation& d, const Poly& p);

// The height of p within its eigenspace: nullopt when p is not a
// single-eigenvalue element at mu.
std::optional<unsigned> mu_height(const Derivation& d, const Poly& p, const Eigenvalue& mu,
                                  const Caps& caps = {});

struct Nilpotent {
    unsigned index; // D^index(p) != 0, D^(index+1)(p) == 0
};
struct NotNilpotent {
    Eigenvalue witness; // certified nonzero eigenvalue in the element's spectrum
};
struct NilpotenceUndetermined {
    Cap cap_hit;
};
using NilpotenceVerdict = std::variant<Nilpotent, NotNilpotent, NilpotenceUndetermined>;

NilpotenceVerdict nilpotence(const Derivation& d, const Poly& p, const Caps& caps = {});

struct LocalNilpotenceVerdict {
    enum class Kind { Nilpotent, NotNilpotent, Undetermined };
    Kind kind;
    std::optional<std::size_t> witness_variable; // set when NotNilpotent
};

// Certificate over the whole ring: D is locally nilpotent iff every
// variable is (the D-nilpotent elements form a subalgebra, by the
// binomial form of the Leibniz rule).
LocalNilpotenceVerdict is_locally_nilpotent(const Derivation& d, const Caps& caps = {});

struct SpectrumSample {
    // Eigenvalues appearing in each generator's decomposition, sorted.
    std::map<std::string, std::vector<Eigenvalue>> generator_eigenvalues;
    // Sums of at most sum_bound observed eigenvalues, sorted, deduplicated.
    std::vector<Eigenvalue> monoid_sample;
};

SpectrumSample spectrum_and_monoid(const Derivation& d, const Caps& caps,
                                   unsigned sum_bound);

} // namespace algderiv

#endif
