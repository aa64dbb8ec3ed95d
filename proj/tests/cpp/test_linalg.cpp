#include <doctest.h>

#include <random>

#include "algderiv/linalg.hpp"

using namespace algderiv;

namespace {

QMatrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
    std::vector<Rational> entries(v.begin(), v.end());
    return QMatrix(r, c, std::move(entries));
}

// Row space equality via mutual reduction: every row of b must reduce to
// zero against rref(a) and vice versa.
bool same_row_space(const QMatrix& a, const QMatrix& b) {
    auto reduces = [](const QMatrix& basis, const QMatrix& probe) {
        RrefResult r = rref(basis);
        for (std::size_t i = 0; i < probe.rows(); ++i) {
            std::vector<Rational> row(probe.cols());
            for (std::size_t j = 0; j < probe.cols(); ++j) row[j] = probe.at(i, j);
            for (std::size_t k = 0; k < r.pivots.size(); ++k) {
                Rational f = row[r.pivots[k]];
                if (f.is_zero()) continue;
                for (std::size_t j = 0; j < probe.cols(); ++j)
                    row[j] -= f * r.reduced.at(k, j);
            }
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        }
        return true;
    };
    return reduces(a, b) && reduces(b, a);
}

} // namespace

TEST_CASE("rref examples") {
    RrefResult r1 = rref(mat(2, 2, {2, 4, 1, 2}));
    CHECK(r1.reduced == mat(2, 2, {1, 2, 0, 0}));
    CHECK(r1.pivots == std::vector<std::size_t>{0});

    RrefResult r2 = rref(QMatrix::identity(3));
    CHECK(r2.reduced == QMatrix::identity(3));
    CHECK(r2.pivots == std::vector<std::size_t>{0, 1, 2});

    RrefResult r3 = rref(mat(2, 2, {0, 1, 1, 0}));
    CHECK(r3.reduced == QMatrix::identity(2));
}

TEST_CASE("rref satisfies the echelon axioms and preserves the row space") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 20; ++round) {
        std::size_t n = 2 + rng() % 3, m = 2 + rng() % 3;
        QMatrix a(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
        RrefResult r = rref(a);
        // Pivot columns carry unit vectors; rows below are zero.
        for (std::size_t k = 0; k < r.pivots.size(); ++k) {
            for (std::size_t i = 0; i < n; ++i)
                CHECK(r.reduced.at(i, r.pivots[k]) == (i == k ? Rational(1) : Rational(0)));
        }
        for (std::size_t i = r.pivots.size(); i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) CHECK(r.reduced.at(i, j).is_zero());
        CHECK(same_row_space(a, r.reduced));
    }
}

TEST_CASE("characteristic polynomial examples") {
    CHECK(char_poly(mat(2, 2, {0, 0, 1, 0})) == UniPoly{0, 0, 1});            // X^2
    CHECK(char_poly(mat(2, 2, {1, 0, 0, 2})) == UniPoly{2, -3, 1});           // X^2-3X+2
    CHECK(char_poly(mat(1, 1, {5})) == UniPoly{-5, 1});                        // X-5
    CHECK_THROWS_AS(char_poly(mat(1, 2, {1, 2})), DomainError);
}

TEST_CASE("characteristic polynomial of triangular samples") {
    std::mt19937_64 rng(6);
    for (int round = 0; round < 15; ++round) {
        std::size_t n = 1 + rng() % 4;
        QMatrix a(n, n);
        UniPoly expected = UniPoly::constant(1);
        for (std::size_t i = 0; i < n; ++i) {
            Rational d(static_cast<long>(rng() % 9) - 4);
            a.at(i, i) = d;
            expected = expected * UniPoly::linear_root(d);
            for (std::size_t j = i + 1; j < n; ++j)
                a.at(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
        }
        CHECK(char_poly(a) == expected);
    }
}

TEST_CASE("Cayley-Hamilton spot check") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 10; ++round) {
        std::size_t n = 1 + rng() % 5;
        QMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
        CHECK(eval_at(char_poly(a), a) == QMatrix(n, n));
    }
}

TEST_CASE("rational root split examples") {
    RootMultiset s1 = rational_root_split(UniPoly{2, -3, 1});
    CHECK(s1.roots == std::map<Rational, unsigned>{{Rational(1), 1}, {Rational(2), 1}});
    CHECK(s1.residual == UniPoly::constant(1));

    RootMultiset s2 = rational_root_split(UniPoly{0, 0, 0, 1});
    CHECK(s2.roots == std::map<Rational, unsigned>{{Rational(0), 3}});
    CHECK(s2.residual == UniPoly::constant(1));

    RootMultiset s3 = rational_root_split(UniPoly{1, 0, 1});
    CHECK(s3.roots.empty());
    CHECK(s3.residual == UniPoly{1, 0, 1});
}

TEST_CASE("rational root split reconstructs its input") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 20; ++round) {
        // Build a product of random linear factors and a rootless cofactor.
        UniPoly p = UniPoly::constant(1);
        unsigned linear = 1 + rng() % 3;
        for (unsigned i = 0; i < linear; ++i) {
            Rational root(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 2));
            p = p * UniPoly::linear_root(root).pow(1 + rng() % 2);
        }
        if (rng() % 2) p = p * UniPoly{1, 0, 1}; // X^2 + 1 has no rational roots
        RootMultiset s = rational_root_split(p);
        UniPoly rebuilt = s.residual;
        for (const auto& [root, mult] : s.roots)
            rebuilt = rebuilt * UniPoly::linear_root(root).pow(mult);
        CHECK(rebuilt == p);
        CHECK((s.residual.degree() == 0 || rational_root_split(s.residual).roots.empty()));
    }
}

TEST_CASE("extended gcd normalizes and combines") {
    UniPoly a = UniPoly::linear_root(1) * UniPoly::linear_root(2);
    UniPoly b = UniPoly::linear_root(1) * UniPoly::linear_root(3);
    UniExtGcd e = ext_gcd(a, b);
    CHECK(e.g == UniPoly::linear_root(1));
    CHECK(e.u * a + e.v * b == e.g);

    UniExtGcd coprime = ext_gcd(UniPoly::linear_root(0), UniPoly::linear_root(1));
    CHECK(coprime.g == UniPoly::constant(1));
    CHECK(coprime.u * UniPoly::linear_root(0) + coprime.v * UniPoly::linear_root(1) ==
          UniPoly::constant(1));
}

TEST_CASE("divmod is exact") {
    UniPoly a{3, 0, -2, 1};
    UniPoly b{1, 1};
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK_THROWS_AS(divmod(a, UniPoly{}), DomainError);
}
