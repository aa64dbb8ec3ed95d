#ifndef ALGDERIV_POLY_HPP
#define ALGDERIV_POLY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algderiv/monomial.hpp"
#include "algderiv/rational.hpp"
#include "algderiv/ring.hpp"

namespace algderiv {

/* Sparse multivariate polynomial with exact rational coefficients.
 * Invariants: no stored zero coefficients; terms keyed in graded-lex
 * order; two polynomials are equal iff rings and term maps are equal. */
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Poly() = default; // zero over the empty ring; mostly a placeholder
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Rational& c);
    static Poly one(RingPtr ring) { return constant(std::move(ring), 1); }
    static Poly variable(RingPtr ring, std::size_t index);
    static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const; // 0 for the zero polynomial
    bool is_constant() const;
    bool is_homogeneous() const;   // vacuously true for zero

    Rational coeff(const Monomial& m) const;
    // The constant term.
    Rational constant_coeff() const { return coeff(Monomial(ring_ ? ring_->size() : 0)); }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    Poly pow(unsigned n) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Formal partial derivative with respect to variable `index`.
    Poly diff(std::size_t index) const;
    Poly diff(std::string_view var) const;

    // Ring endomorphism sending variable i to images[i]; exactly one
    // image per ring variable.
    Poly substitute(std::span<const Poly> images) const;
    Poly substitute(const std::map<std::string, Poly>& images) const;

private:
    void check_same_ring(const Poly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p); // canonical text form

} // namespace algderiv

#endif
