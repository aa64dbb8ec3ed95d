#ifndef ALGDERIV_UNIPOLY_HPP
#define ALGDERIV_UNIPOLY_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "algderiv/rational.hpp"

namespace algderiv {

/* Univariate polynomial over the rationals, dense ascending coefficients,
 * no trailing zeros. The zero polynomial has an empty coefficient vector
 * and degree() == -1. */
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> ascending)
        : c_(ascending) { trim(); }
    static UniPoly from_coeffs(std::vector<Rational> ascending);
    static UniPoly constant(const Rational& c) { return from_coeffs({c}); }
    // (X - root)
    static UniPoly linear_root(const Rational& root) { return from_coeffs({-root, 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;
    bool is_monic() const { return !c_.empty() && leading().is_one(); }

    Rational eval(const Rational& x) const; // Horner

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    UniPoly pow(unsigned n) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Scale so the leading coefficient is 1. Zero stays zero.
    UniPoly monic() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct UniDivMod {
    UniPoly quotient;
    UniPoly remainder;
};
UniDivMod divmod(const UniPoly& a, const UniPoly& b); // throws on zero divisor

struct UniExtGcd {
    UniPoly g; // monic gcd (or zero if both inputs zero)
    UniPoly u;
    UniPoly v; // u*a + v*b = g
};
UniExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

/* All rational roots with multiplicities, plus the cofactor with no
 * rational roots (constant 1 when the input splits completely).
 * Invariant: prod (X-root)^mult * residual == input. */
struct RootMultiset {
    std::map<Rational, unsigned> roots;
    UniPoly residual;
};
RootMultiset rational_root_split(const UniPoly& p); // pre: monic, nonzero

std::ostream& operator<<(std::ostream& os, const UniPoly& p); // "X^2 + 1" style
std::string to_string(const UniPoly& p);

} // namespace algderiv

#endif
