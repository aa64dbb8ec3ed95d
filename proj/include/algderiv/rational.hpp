#ifndef ALGDERIV_RATIONAL_HPP
#define ALGDERIV_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "algderiv/errors.hpp"

namespace algderiv {

/* Exact rational number backed by GMP. Always canonical:
 * gcd(|num|, den) = 1, den > 0, zero is 0/1. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, enables 0/1 literals
    Rational(long num, long den) { assign(mpz_class(num), mpz_class(den)); }
    Rational(const mpz_class& num, const mpz_class& den) { assign(num, den); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Strict "p" or "p/q" with optional leading '-' on p; q positive.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

private:
    void assign(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num) / mpq_class(den);
    }

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n!, exact.
Rational factorial(unsigned n);

} // namespace algderiv

#endif
