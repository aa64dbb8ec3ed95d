#include "algderiv/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace algderiv {

UniPoly UniPoly::from_coeffs(std::vector<Rational> ascending) {
    UniPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    if (c.is_zero()) return {};
    UniPoly r(p);
    for (auto& x : r.c_) x *= c;
    return r;
}

UniPoly UniPoly::pow(unsigned n) const {
    UniPoly r = UniPoly::constant(1);
    UniPoly base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return (Rational(1) / leading()) * *this;
}

UniDivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
    Rational lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[i] / lead;
        if (q.is_zero()) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {UniPoly::from_coeffs(std::move(quo)), UniPoly::from_coeffs(std::move(rem))};
}

UniExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
    // Classic extended Euclid; invariants u*a + v*b = r at every step.
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::constant(1), u1;
    UniPoly v0, v1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly u2 = u0 - q * u1;
        UniPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {UniPoly{}, UniPoly{}, UniPoly{}};
    Rational scale = Rational(1) / r0.leading();
    return {scale * r0, scale * u0, scale * v0};
}

namespace {

// Positive divisors of |n|, ascending. Trial division; the inputs here
// are constant/leading coefficients of small characteristic polynomials.
std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

RootMultiset rational_root_split(const UniPoly& input) {
    if (input.is_zero()) throw DomainError("root split of zero polynomial");
    if (!input.is_monic()) throw DomainError("root split requires a monic polynomial");

    RootMultiset out;
    UniPoly p = input;

    // Extract the root at zero first so constant terms below are nonzero.
    unsigned zero_mult = 0;
    while (p.degree() > 0 && p.coeff(0).is_zero()) {
        std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = UniPoly::from_coeffs(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots[Rational(0)] = zero_mult;

    if (p.degree() > 0) {
        // Clear denominators to a primitive integer polynomial; its
        // rational roots are r/s with r | constant and s | leading.
        mpz_class lcm_den = 1;
        for (const auto& c : p.coeffs())
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> ic;
        ic.reserve(p.coeffs().size());
        mpz_class content = 0;
        for (const auto& c : p.coeffs()) {
            mpz_class v = c.numerator() * (lcm_den / c.denominator());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
            ic.push_back(v);
        }
        if (content > 1)
            for (auto& v : ic) v /= content;

        std::set<Rational> candidates;
        for (const auto& r : divisors(ic.front()))
            for (const auto& s : divisors(ic.back())) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
                if (g != 1) continue;
                candidates.insert(Rational(r, s));
                candidates.insert(Rational(-r, s));
            }

        for (const auto& cand : candidates) {
            while (p.degree() > 0 && p.eval(cand).is_zero()) {
                out.roots[cand] += 1;
                // Exact synthetic division by (X - cand); quotient stays monic.
                std::vector<Rational> q(static_cast<std::size_t>(p.degree()), Rational(0));
                Rational carry = 0;
                for (int i = p.degree(); i > 0; --i) {
                    carry = p.coeff(static_cast<std::size_t>(i)) + carry * cand;
                    q[static_cast<std::size_t>(i - 1)] = carry;
                }
                p = UniPoly::from_coeffs(std::move(q));
            }
            if (p.degree() == 0) break;
        }
    }

    out.residual = p;
    return out;
}

std::string to_string(const UniPoly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os;
}

} // namespace algderiv
