"""Laurent polynomials over Z_p (p finite, or p = ∞ meaning Z) and the
bijection between head normal forms of G_p and pairs (polynomial, t-exponent).

The modulus is an ``int`` >= 2 or ``None`` for p = ∞. Composite moduli are
allowed: 1 + x is monic, so division with remainder by it is well defined
over any Z_p.
"""
import logging
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, Optional, Tuple

from .exceptions import InvalidModulus, NotAHeadNormalForm
from .utils import warn_once

logger = logging.getLogger(__name__)

Modulus = Optional[int]


def check_modulus(p: Modulus) -> Modulus:
    if p is None:
        return None
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise InvalidModulus(p)
    if any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        warn_once(logger, f"> modulus {p} is composite; Z_{p} is not a field")
    return p


def reduce_coefficient(value: int, p: Modulus) -> int:
    return value if p is None else value % p


def modulus_label(p: Modulus) -> str:
    return "inf" if p is None else str(p)


def sign_of_parity(k: int) -> int:
    """(-1)**k for any integer k."""
    return 1 if k % 2 == 0 else -1


@dataclass(frozen=True)
class LaurentPoly:
    """Element of Z_p[x, 1/x]; ``terms`` holds (degree, coefficient) pairs
    sorted by degree, with no zero coefficient stored."""
    terms: Tuple[Tuple[int, int], ...]
    modulus: Modulus

    @classmethod
    def from_dict(cls, coeffs: Dict[int, int], p: Modulus) -> "LaurentPoly":
        terms = []
        for degree in sorted(coeffs):
            value = reduce_coefficient(coeffs[degree], p)
            if value:
                terms.append((degree, value))
        return cls(tuple(terms), p)

    @classmethod
    def zero(cls, p: Modulus) -> "LaurentPoly":
        return cls((), p)

    @classmethod
    def monomial(cls, degree: int, p: Modulus, coefficient: int = 1) -> "LaurentPoly":
        return cls.from_dict({degree: coefficient}, p)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lowest(self) -> Optional[int]:
        return self.terms[0][0] if self.terms else None

    @property
    def highest(self) -> Optional[int]:
        return self.terms[-1][0] if self.terms else None

    def coefficient(self, degree: int) -> int:
        return self.as_dict().get(degree, 0)

    def _check(self, other: "LaurentPoly") -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"moduli differ: {modulus_label(self.modulus)} and {modulus_label(other.modulus)}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        coeffs = self.as_dict()
        for degree, value in other.terms:
            coeffs[degree] = coeffs.get(degree, 0) + value
        return LaurentPoly.from_dict(coeffs, self.modulus)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly.from_dict({d: -c for d, c in self.terms}, self.modulus)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.from_dict({d: c * other for d, c in self.terms}, self.modulus)
        self._check(other)
        coeffs: Dict[int, int] = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                coeffs[d1 + d2] = coeffs.get(d1 + d2, 0) + c1 * c2
        return LaurentPoly.from_dict(coeffs, self.modulus)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x**k."""
        return LaurentPoly(tuple((d + k, c) for d, c in self.terms), self.modulus)

    def eval_minus1(self) -> int:
        return eval_minus1(self)

    def mul_1px(self) -> "LaurentPoly":
        return mul_1px(self)

    def divmod_1px(self) -> Tuple["LaurentPoly", int]:
        return divmod_1px(self)

    def __str__(self) -> str:
        return format_poly(self)


def eval_minus1(poly: LaurentPoly) -> int:
    total = sum(c * sign_of_parity(d) for d, c in poly.terms)
    return reduce_coefficient(total, poly.modulus)


def mul_1px(poly: LaurentPoly) -> LaurentPoly:
    return poly + poly.shift(1)


def divmod_1px(poly: LaurentPoly) -> Tuple[LaurentPoly, int]:
    """Return (q, R) with q·(1+x) + R = poly and R = poly(-1)."""
    p = poly.modulus
    remainder = eval_minus1(poly)
    rest = poly - LaurentPoly.monomial(0, p, remainder)
    if rest.is_zero():
        return LaurentPoly.zero(p), remainder
    low, high = rest.lowest, rest.highest
    c = rest.as_dict()
    # c_i = q_i + q_{i-1}; run from the top coefficient down
    q: Dict[int, int] = {high - 1: c.get(high, 0)}
    for i in range(high - 1, low, -1):
        q[i - 1] = reduce_coefficient(c.get(i, 0) - q[i], p)
    return LaurentPoly.from_dict(q, p), remainder


_TERM_BREAK = re.compile(r"(?<=[\dx])(?=[+-])")
_TERM = re.compile(r"(?P<signs>[+-]*)(?P<coef>\d*)(?P<x>x(\^(?P<deg>[+-]?\d+))?)?")


def _format_term(degree: int, coef: int) -> str:
    if degree == 0:
        return str(coef)
    head = "" if coef == 1 else ("-" if coef == -1 else str(coef))
    tail = "x" if degree == 1 else f"x^{degree}"
    return head + tail


def format_poly(poly: LaurentPoly) -> str:
    if poly.is_zero():
        return "0"
    (degree, coef), *rest = poly.terms
    text = _format_term(degree, coef)
    for degree, coef in rest:
        text += (" - " if coef < 0 else " + ") + _format_term(degree, abs(coef))
    return text


def parse_poly(text: str, p: Modulus) -> LaurentPoly:
    """Parse the ``format_poly`` notation, e.g. ``"2x^-1 + 1 - x^3"``.

    A sign directly after ``^`` belongs to the exponent, so ``x^+3`` and
    ``x^-3`` are single terms.
    """
    compact = re.sub(r"\s+", "", text)
    if compact == "0":
        return LaurentPoly.zero(p)
    coeffs: Dict[int, int] = {}
    for term in _TERM_BREAK.split(compact):
        match = _TERM.fullmatch(term)
        if not match or (not match.group("coef") and not match.group("x")):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        sign = -1 if match.group("signs").count("-") % 2 else 1
        coef = sign * (int(match.group("coef")) if match.group("coef") else 1)
        if match.group("x"):
            degree = int(match.group("deg")) if match.group("deg") else 1
        else:
            degree = 0
        coeffs[degree] = coeffs.get(degree, 0) + coef
    return LaurentPoly.from_dict(coeffs, p)


@dataclass(frozen=True)
class HeadDecomposition:
    """The pair (p_h, m_h) standing for p_h(x)·t^m_h."""
    poly: LaurentPoly
    m: int

    @property
    def modulus(self) -> Modulus:
        return self.poly.modulus


def _scan_head(head: str, p: Modulus) -> HeadDecomposition:
    level = 0
    coeffs: Dict[int, int] = {}
    for letter in head:
        if letter == "t":
            level += 1
        elif letter == "T":
            level -= 1
        elif letter == "a":
            coeffs[level] = coeffs.get(level, 0) + 1
        elif letter == "A":
            coeffs[level] = coeffs.get(level, 0) - 1
        else:
            raise NotAHeadNormalForm(head)
    return HeadDecomposition(LaurentPoly.from_dict(coeffs, p), level)


def poly_of_head(head: str, p: Modulus) -> HeadDecomposition:
    """Read a head normal form ``t^r a^α_r t ... t a^α_l t^(m-l)`` as (Σ α_i x^i, m)."""
    decomposition = _scan_head(head, p)
    if head_of_poly(decomposition) != head:
        raise NotAHeadNormalForm(head)
    return decomposition


def head_of_poly(decomposition: HeadDecomposition) -> str:
    poly, m = decomposition.poly, decomposition.m
    if poly.is_zero():
        return _t_power(m)
    low, high = poly.lowest, poly.highest
    coeffs = poly.as_dict()
    pieces = [_t_power(low)]
    for degree in range(low, high + 1):
        pieces.append(_a_power(coeffs.get(degree, 0)))
        if degree < high:
            pieces.append("t")
    pieces.append(_t_power(m - high))
    return "".join(pieces)


def _t_power(k: int) -> str:
    return "t" * k if k >= 0 else "T" * (-k)


def _a_power(k: int) -> str:
    return "a" * k if k >= 0 else "A" * (-k)


def polys(p: Modulus, low: int, high: int, coefficients: Iterable[int]) -> Iterable[LaurentPoly]:
    """Every polynomial with support in [low, high] and coefficients drawn from ``coefficients``."""
    span = list(range(low, high + 1))
    for values in product(list(coefficients), repeat=len(span)):
        yield LaurentPoly.from_dict(dict(zip(span, values)), p)
