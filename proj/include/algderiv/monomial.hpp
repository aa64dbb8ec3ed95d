#ifndef ALGDERIV_MONOMIAL_HPP
#define ALGDERIV_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

namespace algderiv {

/* Exponent vector with one slot per ring variable. */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exp_(std::move(exps)) {}

    std::size_t size() const { return exp_.size(); }
    unsigned operator[](std::size_t i) const { return exp_[i]; }
    void set(std::size_t i, unsigned e) { exp_[i] = e; }

    unsigned total_degree() const {
        return std::accumulate(exp_.begin(), exp_.end(), 0u);
    }
    bool is_constant() const { return total_degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += o.exp_[i];
        return r;
    }

    const std::vector<unsigned>& exponents() const { return exp_; }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<unsigned> exp_;
};

/* Graded lexicographic order: total degree first, then lexicographic
 * on exponent vectors in declared variable order. This is the canonical
 * term order throughout. */
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.exponents() < b.exponents();
    }
};

} // namespace algderiv

#endif
