#include <doctest.h>

#include "algderiv/derivation.hpp"
#include "algderiv/parse.hpp"
#include "algderiv/verifier.hpp"

using namespace algderiv;

namespace {

RingPtr xy() {
    static RingPtr r = make_ring({"x", "y"});
    return r;
}

Poly P(const char* text) { return parse_poly(text, xy()); }

Derivation D(const char* dx, const char* dy) {
    return Derivation::general(xy(), std::vector<Poly>{P(dx), P(dy)});
}

// x^(n-1) y^n (x d/dx - y d/dy): images x -> x^n y^n, y -> -x^(n-1) y^(n+1)
Derivation twist(unsigned n) {
    Poly im_x = P("x").pow(n) * P("y").pow(n);
    Poly im_y = Rational(-1) * (P("x").pow(n - 1) * P("y").pow(n + 1));
    return Derivation::general(xy(), std::vector<Poly>{im_x, im_y});
}

} // namespace

TEST_CASE("apply examples") {
    Derivation euler = D("x", "y");
    CHECK(apply(euler, P("x^2 + x*y")) == P("2*x^2 + 2*x*y"));

    Derivation scale_shift = D("x", "1"); // x d/dx + d/dy
    CHECK(apply(scale_shift, P("x^2*y^3")) == P("2*x^2*y^3 + 3*x^2*y^2"));

    CHECK(apply(twist(2), P("1")).is_zero());
    CHECK_THROWS_AS(apply(euler, parse_poly("u", make_ring({"u"}))), RingMismatchError);
}

TEST_CASE("apply_power examples") {
    // Orbit of x under the twist: D(x) = x^n y^n, then zero.
    CHECK(apply_power(twist(1), P("x"), 1) == P("x*y"));
    CHECK(apply_power(twist(1), P("x"), 2) == P("0"));
    // Oracle for D^3(y) by direct iteration of the n=1 twist.
    Poly iter = P("y");
    Derivation d = twist(1);
    for (int i = 0; i < 3; ++i) iter = apply(d, iter);
    CHECK(iter == P("-6*y^4"));
    CHECK(apply_power(d, P("y"), 3) == P("-6*y^4"));
    CHECK(apply_power(d, P("x^2 + y"), 0) == P("x^2 + y"));
}

TEST_CASE("truncated series examples") {
    // Oracle: shifting x^2 by t gives coefficients x^2, 2x, 1.
    Derivation shift = D("1", "0");
    TruncatedSeries s = phi_truncated(shift, P("x^2"), 2);
    CHECK(s.coefficients == std::vector<Poly>{P("x^2"), P("2*x"), P("1")});

    Derivation euler = D("x", "y");
    TruncatedSeries e = phi_truncated(euler, P("x"), 3);
    CHECK(e.coefficients == std::vector<Poly>{P("x"), P("x"), P("1/2*x"), P("1/6*x")});

    TruncatedSeries one = phi_truncated(euler, P("1"), 3);
    CHECK(one.coefficients == std::vector<Poly>{P("1"), P("0"), P("0"), P("0")});
}

TEST_CASE("exponential scalar series") {
    CHECK(exp_truncated(Eigenvalue(Rational(0)), 4).coefficients ==
          std::vector<Rational>{1, 0, 0, 0, 0});
    CHECK(exp_truncated(Eigenvalue(Rational(1)), 3).coefficients ==
          std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6)});
    CHECK(exp_truncated(Eigenvalue(Rational(2)), 2).coefficients ==
          std::vector<Rational>{1, 2, 2});

    auto symbols = std::make_shared<const std::vector<std::string>>(
        std::vector<std::string>{"w1"});
    CHECK_THROWS_AS(exp_truncated(Eigenvalue::symbol(symbols, 0), 2), FormalWeightError);
}

TEST_CASE("Leibniz rule and linearity on samples") {
    PolySampler sampler(21);
    std::vector<Derivation> pool = {D("x", "y"), D("x", "1"), D("0", "y"), D("y", "x")};
    for (int i = 0; i < 30; ++i) {
        const Derivation& d = pool[i % pool.size()];
        Poly p = sampler.poly(xy(), 3, 3);
        Poly q = sampler.poly(xy(), 3, 3);
        CHECK(apply(d, p * q) == p * apply(d, q) + q * apply(d, p));
        Rational a = sampler.coefficient(), b = sampler.coefficient();
        CHECK(apply(d, a * p + b * q) == a * apply(d, p) + b * apply(d, q));
    }
}

TEST_CASE("series map is multiplicative") {
    PolySampler sampler(22);
    Derivation d = D("x", "1");
    for (int i = 0; i < 10; ++i) {
        Poly p = sampler.poly(xy(), 2, 3);
        Poly q = sampler.poly(xy(), 2, 3);
        TruncatedSeries lhs = phi_truncated(d, p * q, 6);
        TruncatedSeries rhs = mul_truncated(phi_truncated(d, p, 6), phi_truncated(d, q, 6));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exponential shift factorization on samples") {
    PolySampler sampler(23);
    std::vector<Derivation> pool = {D("x", "y"), D("x", "1"), D("0", "y"), D("1", "0")};
    std::vector<Rational> lambdas = {0, 1, -1, 2, Rational(1, 2)};
    for (int i = 0; i < 40; ++i) {
        const Derivation& d = pool[i % pool.size()];
        Poly p = sampler.poly(xy(), 3, 3);
        CHECK(check_exp_shift_identity(d, p, lambdas[i % lambdas.size()], 8));
    }
    // Spot cases with frozen inputs.
    CHECK(check_exp_shift_identity(D("x", "1"), P("x*y"), 1, 5));
    CHECK(check_exp_shift_identity(D("x", "y"), P("1"), 0, 3));
    CHECK(check_exp_shift_identity(D("x", "y"), P("x"), 1, 6));
}

TEST_CASE("diagonal derivations agree with their general form") {
    std::vector<Eigenvalue> weights = {Eigenvalue(Rational(2)), Eigenvalue(Rational(-1, 2))};
    Derivation diag = Derivation::diagonal(xy(), weights);
    Derivation gen = diag.to_general();
    REQUIRE(gen.is_general());
    PolySampler sampler(24);
    for (int i = 0; i < 20; ++i) {
        Poly p = sampler.poly(xy(), 4, 4);
        CHECK(apply(diag, p) == apply(gen, p));
    }
}

TEST_CASE("formal weights refuse pointwise application") {
    auto symbols = std::make_shared<const std::vector<std::string>>(
        std::vector<std::string>{"w1", "w2"});
    std::vector<Eigenvalue> weights = {Eigenvalue::symbol(symbols, 0),
                                       Eigenvalue::symbol(symbols, 1)};
    Derivation diag = Derivation::diagonal(xy(), weights, symbols);
    CHECK_THROWS_AS(apply(diag, P("x")), FormalWeightError);
    CHECK_THROWS_AS(diag.to_general(), FormalWeightError);
}

TEST_CASE("derivation construction validates its tables") {
    CHECK_THROWS_AS(Derivation::general(xy(), std::vector<Poly>{P("x")}), DomainError);
    std::map<std::string, Poly> missing = {{"x", P("x")}};
    CHECK_THROWS_AS(Derivation::general(xy(), missing), DomainError);
    std::map<std::string, Poly> extra = {{"x", P("x")}, {"y", P("y")}, {"z", P("1")}};
    CHECK_THROWS_AS(Derivation::general(xy(), extra), UnknownVariableError);
}
