#ifndef ALGDERIV_EIGENVALUE_HPP
#define ALGDERIV_EIGENVALUE_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "algderiv/rational.hpp"

namespace algderiv {

using WeightSymbolsPtr = std::shared_ptr<const std::vector<std::string>>;

/* Scalar of the form  c + a1*s1 + ... + ak*sk  where the s_i are the
 * declared formal weight symbols; purely rational when no symbols are
 * in play. Addition and equality are coordinatewise; the total order
 * is lexicographic on (constant, then weight coordinates in declaration
 * order). Trailing zero coordinates are trimmed so that values compare
 * independently of table length. */
class Eigenvalue {
public:
    Eigenvalue() = default;
    Eigenvalue(Rational constant) : c_(std::move(constant)) {} // NOLINT: implicit by design
    Eigenvalue(Rational constant, std::vector<Rational> weights,
               WeightSymbolsPtr symbols = nullptr);

    // Unit coordinate on symbol `index` of the given table.
    static Eigenvalue symbol(const WeightSymbolsPtr& symbols, std::size_t index);

    const Rational& constant() const { return c_; }
    const std::vector<Rational>& weights() const { return w_; }
    const WeightSymbolsPtr& symbols() const { return sym_; }

    bool is_rational() const { return w_.empty(); }
    bool is_zero() const { return c_.is_zero() && w_.empty(); }

    Eigenvalue operator-() const;
    friend Eigenvalue operator+(const Eigenvalue& a, const Eigenvalue& b);
    friend Eigenvalue operator-(const Eigenvalue& a, const Eigenvalue& b);
    friend Eigenvalue operator*(const Rational& c, const Eigenvalue& e);

    friend bool operator==(const Eigenvalue& a, const Eigenvalue& b) {
        return a.c_ == b.c_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Eigenvalue& a, const Eigenvalue& b) { return !(a == b); }
    friend bool operator<(const Eigenvalue& a, const Eigenvalue& b);
    friend bool operator<=(const Eigenvalue& a, const Eigenvalue& b) { return a < b || a == b; }

    std::string str() const;

private:
    void trim();

    Rational c_ = 0;
    std::vector<Rational> w_;
    WeightSymbolsPtr sym_; // optional; names used only for printing
};

std::ostream& operator<<(std::ostream& os, const Eigenvalue& e);

} // namespace algderiv

#endif
