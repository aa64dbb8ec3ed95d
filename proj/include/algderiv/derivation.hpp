#ifndef ALGDERIV_DERIVATION_HPP
#define ALGDERIV_DERIVATION_HPP

#include <map>
#include <string>
#include <vector>

#include "algderiv/eigenvalue.hpp"
#include "algderiv/poly.hpp"

namespace algderiv {

/* The operator D on a polynomial ring. Either general, given by one
 * image polynomial per variable and extended by the Leibniz rule, or
 * diagonal, sending each variable x_i to w_i * x_i for a scalar
 * (possibly formal) weight w_i. A diagonal derivation with all-rational
 * weights converts to an equivalent general one. */
class Derivation {
public:
    static Derivation general(RingPtr ring, std::vector<Poly> images);
    static Derivation general(RingPtr ring, const std::map<std::string, Poly>& images);
    static Derivation diagonal(RingPtr ring, std::vector<Eigenvalue> weights,
                               WeightSymbolsPtr symbols = nullptr);

    bool is_general() const { return diagonal_weights_.empty(); }
    bool is_diagonal() const { return !diagonal_weights_.empty(); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& images() const; // general only
    const std::vector<Eigenvalue>& weights() const; // diagonal only
    const WeightSymbolsPtr& symbols() const { return symbols_; }

    bool has_rational_weights() const;
    Derivation to_general() const; // throws FormalWeightError on formal weights

private:
    Derivation() = default;

    RingPtr ring_;
    std::vector<Poly> images_;             // general form
    std::vector<Eigenvalue> diagonal_weights_; // diagonal form (nonempty iff diagonal)
    WeightSymbolsPtr symbols_;
};

// D(p), exact. A diagonal derivation scales each monomial by its weight,
// which requires rational weights; formal weights raise FormalWeightError.
Poly apply(const Derivation& d, const Poly& p);

// D^n(p); n = 0 is the identity.
Poly apply_power(const Derivation& d, const Poly& p, unsigned n);

// The monomial weight sum(e_i * w_i) of a diagonal derivation.
Eigenvalue monomial_weight(const Derivation& d, const Monomial& m);

/* Truncated power series in t with polynomial coefficients;
 * coefficients[n] is the coefficient of t^n, n = 0..order. */
struct TruncatedSeries {
    unsigned order = 0;
    std::vector<Poly> coefficients; // size order+1

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;
};

/* Truncated scalar series, same layout. */
struct ScalarSeries {
    unsigned order = 0;
    std::vector<Rational> coefficients; // size order+1

    friend bool operator==(const ScalarSeries& a, const ScalarSeries& b) = default;
};

// The series of D applied to p, truncated: coefficient of t^n is D^n(p)/n!.
TruncatedSeries phi_truncated(const Derivation& d, const Poly& p, unsigned order);

// Same series for the shifted operator q -> D(q) - lambda*q. The shift
// is not a derivation, so it is handled operationally here rather than
// as a Derivation value.
TruncatedSeries phi_shifted_truncated(const Derivation& d, const Rational& lambda,
                                      const Poly& p, unsigned order);

// exp(lambda*t) truncated: coefficient of t^n is lambda^n/n!. Requires a
// purely rational eigenvalue.
ScalarSeries exp_truncated(const Eigenvalue& lambda, unsigned order);

TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul_truncated(const ScalarSeries& s, const TruncatedSeries& a);

} // namespace algderiv

#endif
