"""Cross-checks against sympy, an independent exact-arithmetic path."""

import pytest

sympy = pytest.importorskip("sympy")

import algderiv as ad  # noqa: E402


X, Y = sympy.symbols("x y")


def to_sympy(poly):
    return sympy.parse_expr(str(poly).replace("^", "**"))


def d_scale_shift(expr):
    # x d/dx + d/dy
    return sympy.expand(X * sympy.diff(expr, X) + sympy.diff(expr, Y))


@pytest.fixture
def ring():
    return ad.Ring(["x", "y"])


@pytest.fixture
def scale_shift(ring):
    return ad.Derivation.general(ring, {"x": "x", "y": "1"})


def test_decomposition_against_sympy(ring, scale_shift):
    for seed in range(40, 55):
        p = ad.random_poly(seed, ring, max_degree=4, max_terms=4)
        parts = ad.decompose(scale_shift, p)

        total = sympy.Integer(0)
        for part in parts:
            lam = sympy.Rational(part.eigenvalue.constant)
            comp = to_sympy(part.component)
            total += comp

            # (D - lam)^height != 0 and one more application vanishes.
            iterate = comp
            for _ in range(part.height):
                iterate = sympy.expand(d_scale_shift(iterate) - lam * iterate)
            assert sympy.simplify(iterate) != 0
            final = sympy.expand(d_scale_shift(iterate) - lam * iterate)
            assert sympy.simplify(final) == 0

        assert sympy.simplify(total - to_sympy(p)) == 0


def test_apply_against_sympy(ring, scale_shift):
    for seed in range(60, 70):
        p = ad.random_poly(seed, ring, max_degree=5, max_terms=5)
        image = ad.apply(scale_shift, p)
        assert sympy.simplify(to_sympy(image) - d_scale_shift(to_sympy(p))) == 0


def test_char_poly_route_matches_sympy_eigenvalues(ring, scale_shift):
    # The eigenvalues produced by the decomposition must be exactly the
    # x-degrees occurring in the input under this derivation.
    for seed in range(80, 90):
        p = ad.random_poly(seed, ring, max_degree=4, max_terms=4)
        parts = ad.decompose(scale_shift, p)
        got = sorted(sympy.Rational(part.eigenvalue.constant) for part in parts)
        poly = sympy.Poly(to_sympy(p), X, Y)
        expected = sorted({sympy.Integer(m[0]) for m in poly.monoms()})
        assert got == expected
