import numpy as np
import pytest
import sympy

from stacker.exceptions import InvalidModulus, NotAHeadNormalForm
from stacker.groups import head_fsa
from stacker.laurent import (HeadDecomposition, LaurentPoly, check_modulus, divmod_1px, eval_minus1,
                             format_poly, head_of_poly, mul_1px, parse_poly, poly_of_head, polys)
from stacker.words import Alphabet, all_words


def poly(coeffs, p=None):
    return LaurentPoly.from_dict(coeffs, p)


def test_divmod_examples():
    assert divmod_1px(poly({0: 1, 1: 1})) == (poly({0: 1}), 0)
    assert divmod_1px(poly({2: 1})) == (poly({1: 1, 0: -1}), 1)
    assert divmod_1px(LaurentPoly.zero(None)) == (LaurentPoly.zero(None), 0)


@pytest.mark.parametrize("p", [None, 2, 3, 5, 6])
@pytest.mark.parametrize("coeffs", [{-2: 1, 0: 3}, {-1: 2, 1: 1, 4: 3}, {3: 1}, {0: 4}, {-3: 1, -1: 1}])
def test_divmod_identity(p, coeffs):
    f = poly(coeffs, p)
    q, remainder = divmod_1px(f)
    assert mul_1px(q) + LaurentPoly.monomial(0, p, remainder) == f
    assert remainder == eval_minus1(f)


@pytest.mark.parametrize("p", [None, 3, 7])
def test_divmod_agrees_with_sympy(p):
    x = sympy.symbols("x")
    for coeffs in ({0: 1, 2: 1, 5: 2}, {1: 3, 3: 1}, {0: 2, 1: 1, 2: 1, 3: 1}):
        expr = sum(c * x ** d for d, c in coeffs.items())
        if p is None:
            quotient, remainder = sympy.div(sympy.Poly(expr, x), sympy.Poly(x + 1, x))
        else:
            quotient, remainder = sympy.div(sympy.Poly(expr, x, modulus=p), sympy.Poly(x + 1, x, modulus=p))
        expected = poly({monom[0]: int(c) for monom, c in quotient.as_dict().items()}, p)
        q, r = divmod_1px(poly(coeffs, p))
        assert q == expected
        assert r == (int(remainder.as_expr()) if p is None else int(remainder.as_expr()) % p)


def test_eval_minus1():
    assert eval_minus1(poly({0: 1, 1: 1, 2: 1})) == 1
    assert eval_minus1(poly({0: 1, 1: 1})) == 0
    assert eval_minus1(poly({-1: 1, 1: 1}, 2)) == 0


def test_mul_1px():
    assert mul_1px(poly({0: 1})) == poly({0: 1, 1: 1})
    assert mul_1px(LaurentPoly.zero(None)).is_zero()
    assert mul_1px(poly({0: 1, 1: 1}, 2)) == poly({0: 1, 2: 1}, 2)


def test_arithmetic_mod_p():
    f = poly({0: 2, 1: 1}, 3)
    assert f + f == poly({0: 1, 1: 2}, 3)
    assert (f - f).is_zero()
    assert f * poly({0: 1, 1: 1}, 3) == poly({0: 2, 2: 1}, 3)
    assert f.shift(-2) == poly({-2: 2, -1: 1}, 3)
    with pytest.raises(ValueError):
        f + poly({0: 1}, 5)


def test_format_and_parse():
    f = parse_poly("1 + 2x^-1 + x^3", None)
    assert f == poly({0: 1, -1: 2, 3: 1})
    assert format_poly(f) == "2x^-1 + 1 + x^3"
    assert format_poly(LaurentPoly.zero(2)) == "0"
    assert parse_poly("x + -x^2", None) == poly({1: 1, 2: -1})
    assert format_poly(poly({1: 1, 2: -1})) == "x - x^2"
    assert format_poly(poly({-1: -2, 0: 1, 2: -3})) == "-2x^-1 + 1 - 3x^2"
    assert parse_poly("x - x^2", None) == poly({1: 1, 2: -1})
    assert parse_poly("x^+3 - 2x^-1", None) == poly({3: 1, -1: -2})
    assert parse_poly("-1-x", 3) == poly({0: 2, 1: 2}, 3)
    for bad in ("1 + y", "", "x^", "1 + + "):
        with pytest.raises(ValueError):
            parse_poly(bad, None)


def test_poly_of_head():
    assert poly_of_head("a", 2) == HeadDecomposition(poly({0: 1}, 2), 0)
    assert poly_of_head("tt", 2) == HeadDecomposition(LaurentPoly.zero(2), 2)
    assert poly_of_head("Tat", None) == HeadDecomposition(poly({-1: 1}), 0)
    with pytest.raises(NotAHeadNormalForm):
        poly_of_head("tT", None)
    with pytest.raises(NotAHeadNormalForm):
        poly_of_head("aa", 2)


def test_head_of_poly():
    assert head_of_poly(HeadDecomposition(LaurentPoly.zero(None), -3)) == "TTT"
    assert head_of_poly(HeadDecomposition(poly({0: 1}), 0)) == "a"
    assert head_of_poly(HeadDecomposition(poly({1: 1, 2: 1}), 2)) == "tata"
    assert head_of_poly(HeadDecomposition(poly({-1: 2, 1: -1}), -3)) == "TaattATTTT"


@pytest.mark.parametrize("p", [2, 3])
def test_head_bijection(p):
    for f in polys(p, -1, 1, range(p)):
        for m in (-2, 0, 3):
            decomposition = HeadDecomposition(f, m)
            assert poly_of_head(head_of_poly(decomposition), p) == decomposition


def test_check_modulus():
    assert check_modulus(None) is None
    assert check_modulus(5) == 5
    assert check_modulus(4) == 4
    for bad in (1, 0, -3, True, "2"):
        with pytest.raises(InvalidModulus):
            check_modulus(bad)


def _random_poly(rng, p):
    degrees = rng.integers(-6, 7, size=int(rng.integers(0, 7)))
    return poly({int(d): int(rng.integers(-9, 10)) for d in degrees}, p)


@pytest.mark.parametrize("p", [2, 3, 5, None])
def test_divmod_identity_random(p):
    rng = np.random.default_rng(20)
    for _ in range(1000):
        f = _random_poly(rng, p)
        q, remainder = divmod_1px(f)
        assert mul_1px(q) + LaurentPoly.monomial(0, p, remainder) == f, format_poly(f)
        assert remainder == eval_minus1(f)
        assert eval_minus1(mul_1px(q)) == 0
        assert parse_poly(format_poly(f), p) == f


def test_head_bijection_exhaustive_p2():
    heads = head_fsa(2)
    seen = {}
    for word in all_words(Alphabet.from_generators("at"), 10):
        if not heads.accepts(word):
            continue
        decomposition = poly_of_head(word, 2)
        assert head_of_poly(decomposition) == word
        assert decomposition not in seen, (word, seen.get(decomposition))
        seen[decomposition] = word
    for f in polys(2, -4, 4, range(2)):
        for m in range(-10, 11):
            decomposition = HeadDecomposition(f, m)
            word = head_of_poly(decomposition)
            if len(word) <= 10:
                assert seen.get(decomposition) == word
