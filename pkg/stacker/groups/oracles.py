"""Algebraic models used as independent equality oracles.

- ``AffineElement``: BS(1,2) = ⟨a, t | t a t⁻¹ = a²⟩ acting on the dyadic
  rationals by ``x ↦ 2^e·x + m``.
- ``ModuleElement``: G_p as ``M ⋊ Z²`` with ``M = Z_p[x^±1, (1+x)^-1]``, where
  ``t`` acts by ``x`` and ``s`` by ``1 + x``.
- ``oracle_bg``: Britton pinch removal in the Baumslag-Gersten group, with
  subgroup membership decided in the affine model.

No floating point is used anywhere.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

from ..exceptions import UnknownLetter
from ..laurent import LaurentPoly, Modulus, check_modulus, divmod_1px, mul_1px

logger = logging.getLogger(__name__)


def _dyadic(numerator: int, exponent: int) -> Tuple[int, int]:
    """Reduce ``numerator / 2**exponent`` so the numerator is odd when the exponent is positive."""
    if numerator == 0:
        return 0, 0
    if exponent < 0:
        return numerator << (-exponent), 0
    while exponent > 0 and numerator % 2 == 0:
        numerator //= 2
        exponent -= 1
    return numerator, exponent


def _dyadic_add(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
    top = max(x[1], y[1])
    return _dyadic((x[0] << (top - x[1])) + (y[0] << (top - y[1])), top)


@dataclass(frozen=True)
class AffineElement:
    """``x ↦ 2**scale_exp · x + numerator / 2**denom_exp``."""
    scale_exp: int = 0
    numerator: int = 0
    denom_exp: int = 0

    def __post_init__(self):
        if (self.numerator, self.denom_exp) != _dyadic(self.numerator, self.denom_exp):
            raise ValueError(f"offset {self.numerator}/2^{self.denom_exp} is not reduced")

    @classmethod
    def make(cls, scale_exp: int, numerator: int, denom_exp: int = 0) -> "AffineElement":
        return cls(scale_exp, *_dyadic(numerator, denom_exp))

    @property
    def offset(self) -> Tuple[int, int]:
        return self.numerator, self.denom_exp

    def is_identity(self) -> bool:
        return self.scale_exp == 0 and self.numerator == 0

    def in_a_subgroup(self) -> bool:
        """True iff the element is a power of ``a``, i.e. ``(0, n)`` with ``n`` an integer."""
        return self.scale_exp == 0 and self.denom_exp == 0

    def in_t_subgroup(self) -> bool:
        """True iff the element is a power of ``t``, i.e. ``(e, 0)``."""
        return self.numerator == 0

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        shifted = _dyadic(other.numerator, other.denom_exp - self.scale_exp)
        numerator, denom_exp = _dyadic_add(self.offset, shifted)
        return AffineElement(self.scale_exp + other.scale_exp, numerator, denom_exp)

    def __str__(self) -> str:
        offset = str(self.numerator) if self.denom_exp == 0 else f"{self.numerator}/2^{self.denom_exp}"
        return f"({self.scale_exp}, {offset})"


_AFFINE_GENERATORS = {
    "a": AffineElement(0, 1, 0),
    "A": AffineElement(0, -1, 0),
    "t": AffineElement(1, 0, 0),
    "T": AffineElement(-1, 0, 0),
}


def oracle_bs12(word: str) -> AffineElement:
    element = AffineElement()
    for position, letter in enumerate(word):
        if letter not in _AFFINE_GENERATORS:
            raise UnknownLetter(position, letter)
        element = element * _AFFINE_GENERATORS[letter]
    return element


@dataclass(frozen=True)
class ModuleElement:
    """``(numerator / (1+x)**denom_exp, t_exp, s_exp)`` in ``M ⋊ Z²``.

    Canonical form: ``1 + x`` does not divide the numerator when
    ``denom_exp > 0``, and ``denom_exp = 0`` when the numerator is zero.
    """
    numerator: LaurentPoly
    denom_exp: int = 0
    t_exp: int = 0
    s_exp: int = 0

    @classmethod
    def make(cls, numerator: LaurentPoly, denom_exp: int = 0, t_exp: int = 0, s_exp: int = 0) -> "ModuleElement":
        while denom_exp > 0 and not numerator.is_zero():
            quotient, remainder = divmod_1px(numerator)
            if remainder:
                break
            numerator, denom_exp = quotient, denom_exp - 1
        if numerator.is_zero():
            denom_exp = 0
        return cls(numerator, denom_exp, t_exp, s_exp)

    @classmethod
    def identity(cls, p: Modulus) -> "ModuleElement":
        return cls(LaurentPoly.zero(p))

    @property
    def modulus(self) -> Modulus:
        return self.numerator.modulus

    def key(self) -> tuple:
        return (self.numerator.terms, self.denom_exp, self.t_exp, self.s_exp)

    def is_identity(self) -> bool:
        return self.numerator.is_zero() and self.t_exp == 0 and self.s_exp == 0

    def __mul__(self, other: "ModuleElement") -> "ModuleElement":
        # x^i1 (1+x)^j1 · n2 / (1+x)^k2
        acted = other.numerator.shift(self.t_exp)
        acted_denom = other.denom_exp
        if self.s_exp >= 0:
            for _ in range(self.s_exp):
                acted = mul_1px(acted)
        else:
            acted_denom -= self.s_exp
        left = self.numerator
        denom = max(self.denom_exp, acted_denom)
        for _ in range(denom - self.denom_exp):
            left = mul_1px(left)
        for _ in range(denom - acted_denom):
            acted = mul_1px(acted)
        return ModuleElement.make(left + acted, denom, self.t_exp + other.t_exp, self.s_exp + other.s_exp)

    def __str__(self) -> str:
        fraction = str(self.numerator) if self.denom_exp == 0 else f"({self.numerator})/(1+x)^{self.denom_exp}"
        return f"({fraction}, {self.t_exp}, {self.s_exp})"


def _module_generators(p: Modulus) -> dict:
    one = LaurentPoly.monomial(0, p)
    zero = LaurentPoly.zero(p)
    return {
        "a": ModuleElement(one),
        "A": ModuleElement(-one),
        "t": ModuleElement(zero, 0, 1, 0),
        "T": ModuleElement(zero, 0, -1, 0),
        "s": ModuleElement(zero, 0, 0, 1),
        "S": ModuleElement(zero, 0, 0, -1),
    }


def oracle_gp(p: Modulus, word: str) -> ModuleElement:
    p = check_modulus(p)
    generators = _module_generators(p)
    element = ModuleElement.identity(p)
    for position, letter in enumerate(word):
        if letter not in generators:
            raise UnknownLetter(position, letter)
        element = element * generators[letter]
    return element


Syllable = Union[AffineElement, str]


def britton_reduce(word: str) -> List[Syllable]:
    """Reduce ``word`` in the Baumslag-Gersten group to a pinch-free syllable list.

    Base syllables are ``AffineElement`` values and stable letters stay as
    ``"s"`` / ``"S"``. ``s·a^m·s⁻¹`` becomes ``t^m`` and ``s⁻¹·t^k·s``
    becomes ``a^k``.
    """
    stack: List[Syllable] = []

    def push_base(element: AffineElement) -> None:
        if stack and isinstance(stack[-1], AffineElement):
            stack[-1] = stack[-1] * element
        else:
            stack.append(element)

    for position, letter in enumerate(word):
        if letter in _AFFINE_GENERATORS:
            push_base(_AFFINE_GENERATORS[letter])
            continue
        if letter not in ("s", "S"):
            raise UnknownLetter(position, letter)
        opener = letter.swapcase()
        if stack and stack[-1] == opener:
            stack.pop()
            continue
        if len(stack) >= 2 and stack[-2] == opener and isinstance(stack[-1], AffineElement):
            h = stack[-1]
            if opener == "s" and h.in_a_subgroup():
                replacement = AffineElement(h.numerator, 0, 0)
            elif opener == "S" and h.in_t_subgroup():
                replacement = AffineElement(0, h.scale_exp, 0)
            else:
                stack.append(letter)
                continue
            del stack[-2:]
            push_base(replacement)
            continue
        stack.append(letter)
    return [syllable for syllable in stack
            if not (isinstance(syllable, AffineElement) and syllable.is_identity())]


def oracle_bg(w1: str, w2: str) -> bool:
    """Whether ``w1`` and ``w2`` are equal in the Baumslag-Gersten group."""
    inverse = "".join(letter.swapcase() for letter in reversed(w2))
    return not britton_reduce(w1 + inverse)


def bg_bucket(word: str) -> tuple:
    """Stable-letter pattern of the reduced form, or the base element when there is none.

    Equal elements reduce to the same stable-letter sequence, so this is a
    valid bucket for ``oracle_bg``.
    """
    syllables = britton_reduce(word)
    stables = tuple(x for x in syllables if isinstance(x, str))
    if stables:
        return ("hnn", stables)
    return ("base", syllables[0] if syllables else AffineElement())
