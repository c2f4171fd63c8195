"""Stacking structures for G_p, p finite (autostackable) or p = ∞.

The stacking map is evaluated on the head of ``u`` through its Laurent
polynomial ``p_u`` and t-exponent ``m_u``, with ``l_u`` the highest degree of
``p_u``. Letters ``t^±1`` are always tree edges. An ``a^δ`` edge is rewritten
according to ``m_u - l_u`` and, when ``m_u - l_u < -1``, to the residue
``p_u(-1) - δ(-1)^(m_u+1)``. Edges labelled ``s^±1`` move the last head
letter across the stable letter; for p = ∞ an ``s`` edge moves one unit of
``p_u`` instead.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

from ..exceptions import NotCase6, UnsupportedForInfiniteP
from ..hnn import split_tail_head
from ..laurent import HeadDecomposition, Modulus, check_modulus, eval_minus1, modulus_label, poly_of_head, sign_of_parity
from ..rewriting import FsaRecognizer, KeyOracle, StackingStructure, normalize
from ..utils import warn_once
from ..words import inverse_letter, power
from .gp_languages import CASE6_PATTERN, CASE6_PATTERN_INFINITE, GP_ALPHABET, nf_fsa
from .oracles import oracle_gp

logger = logging.getLogger(__name__)

A_SIGN = {"a": 1, "A": -1}


def gp_bound(p: Modulus) -> int:
    return 8 if p is None else max(3 * p, 8)


def head_of(u: str) -> str:
    return split_tail_head(u, "s").head


class GpStackingMap:
    """``φ(u, z)`` for G_p; ``p = None`` stands for p = ∞."""

    def __init__(self, p: Modulus):
        self.p = check_modulus(p)

    def __call__(self, u: str, z: str) -> str:
        if z in ("t", "T"):
            return z
        head = head_of(u)
        if z in A_SIGN:
            return self._a_letter(head, z)
        if z == "S":
            return self._inverse_stable(head)
        if z == "s":
            return self._stable(head)
        raise ValueError(f"letter must be one of {GP_ALPHABET}, got {z!r}")

    def _a_letter(self, head: str, z: str) -> str:
        p = self.p
        delta = A_SIGN[z]
        decomposition = poly_of_head(head, p)
        poly, m = decomposition.poly, decomposition.m
        l = poly.highest
        if poly.is_zero() or m > l:
            if p is None or delta == 1:
                return z
            return "a" * (p - 1)
        if m == l:
            if p is None:
                return z
            if delta == -1:
                return "A"
            return "a" if poly.coefficient(l) < p - 1 else "A" * (p - 1)
        if m - l == -1:
            if p is None:
                epsilon = 1 if poly.coefficient(l) > 0 else -1
                return "t" + power("a", -epsilon) + "T" + z + "t" + power("a", epsilon) + "T"
            return "tAT" + z + "taT"
        residue = case6_residue(decomposition, delta)
        if residue == 0:
            return "t" + power("a", -delta) + "T" + "s" + power("a", delta) + "S"
        eta = sign_of_parity(m + 1)
        if p is None and residue < 0:
            eta = -eta
        return "t" + power("a", -eta) + "T" + z + "t" + power("a", eta) + "T"

    def _inverse_stable(self, head: str) -> str:
        if not head:
            return "S"
        last = head[-1]
        if last in ("t", "T"):
            return inverse_letter(last) + "S" + last
        if self.p is not None:
            return "ASataT"
        delta = A_SIGN[last]
        return power("a", -delta) + "S" + power("a", delta) + "t" + power("a", delta) + "T"

    def _stable(self, head: str) -> str:
        rest = head.rstrip("aA")
        if not rest:
            return "s"
        if self.p is None:
            return self._stable_infinite(head)
        run = head[len(rest):]
        before = rest[-1]
        if not run:
            return inverse_letter(before) + "s" + before
        back, forth = "A" * len(run), "a" * len(run)
        if before == "t":
            return back + "T" + back + "s" + forth + "t"
        return back + "t" + back + "s" + "T" + forth

    def _stable_infinite(self, head: str) -> str:
        """One unit of the Britton move ``h·s = a^β·s·(h - β)/(1+x)`` for p = ∞.

        The top unit goes one degree down while ``l_u > 0`` or ``p_u`` spans
        three or more degrees. Otherwise every degree is at most 0 and the
        lowest unit goes one degree up. Before either push, ``s`` is carried
        along ``t`` to the degree being worked on. Pushes lower ``(l_u, |α_l|)``
        in the first regime and ``(|r_u|, |α_r|)`` in the second.
        """
        decomposition = poly_of_head(head, None)
        poly, m = decomposition.poly, decomposition.m
        if poly.is_zero():
            last = head[-1]
            return inverse_letter(last) + "s" + last
        high, low = poly.highest, poly.lowest
        push_down = high > 0 or high - low >= 2
        level = high if push_down else low
        if m > level:
            return "Tst"
        if m < level:
            return "tsT"
        if high == low == 0:
            return "s"
        delta = 1 if poly.coefficient(level) > 0 else -1
        back, forth = power("a", -delta), power("a", delta)
        if push_down:
            return back + "T" + back + "s" + forth + "t"
        if high == low and abs(poly.coefficient(level)) == 1:
            return back + "t" + back + "s" + "T" + forth
        return back + "t" + back + "T" + "s" + forth


def case6_residue(decomposition: HeadDecomposition, delta: int) -> int:
    """``p_u(-1) - δ(-1)^(m_u+1)``, reduced mod p when p is finite."""
    value = eval_minus1(decomposition.poly) - delta * sign_of_parity(decomposition.m + 1)
    p = decomposition.modulus
    return value if p is None else value % p


@lru_cache(maxsize=None)
def gp_structure(p: Modulus) -> StackingStructure:
    p = check_modulus(p)
    if p is None:
        warn_once(logger, "> G_inf is algorithmically stackable only; termination is checked on swept balls")
    nf = nf_fsa(p)
    name = f"gp{modulus_label(p)}"
    logger.debug(f"> {name}: normal forms have {nf.num_states} states")
    return StackingStructure(
        name,
        GP_ALPHABET,
        FsaRecognizer(nf),
        GpStackingMap(p),
        gp_bound(p),
        nf_fsa=nf,
        oracle=KeyOracle(lambda w: oracle_gp(p, w).key()),
    )


@dataclass(frozen=True, order=True)
class GpMeasure:
    """Lexicographically ordered ``(|m_u - l_u|, residue)`` of a case-6 edge."""
    d1: int
    d2: int


def is_case6(u: str, z: str, p: Modulus) -> bool:
    """Whether ``(u, z)`` is an ``a^±1`` edge with ``p_u ≠ 0`` and ``m_u - l_u < -1``."""
    if z not in A_SIGN:
        return False
    decomposition = poly_of_head(head_of(u), p)
    if decomposition.poly.is_zero():
        return False
    return decomposition.m - decomposition.poly.highest < -1


def is_case6_syntactic(u: str, p: Modulus) -> bool:
    pattern = CASE6_PATTERN_INFINITE if p is None else CASE6_PATTERN
    return re.fullmatch(pattern, u) is not None


def measure_of(u: str, delta: int, p: Modulus) -> GpMeasure:
    if delta not in (1, -1):
        raise ValueError(f"delta must be 1 or -1, got {delta}")
    if p is None:
        raise UnsupportedForInfiniteP("the case-6 measure")
    p = check_modulus(p)
    decomposition = poly_of_head(head_of(u), p)
    if decomposition.poly.is_zero():
        raise NotCase6(u)
    gap = decomposition.m - decomposition.poly.highest
    if gap >= -1:
        raise NotCase6(u)
    return GpMeasure(-gap, case6_residue(decomposition, delta))


def case6_descent_violations(structure: StackingStructure, u: str, z: str, p: int,
                             step_budget: Optional[int] = None) -> List[str]:
    """Check that every case-6 edge met while following ``φ(u, z)`` has a smaller measure.

    Walks ``u_0 = u``, ``u_{i+1} = nf(u_i·c_i)`` along the letters ``c_i`` of
    ``φ(u, z)``.
    """
    if not is_case6(u, z, p):
        raise NotCase6(u)
    measure = measure_of(u, A_SIGN[z], p)
    violations = []
    current = u
    for c in structure.phi(u, z):
        if is_case6(current, c, p):
            inner = measure_of(current, A_SIGN[c], p)
            if not inner < measure:
                violations.append(f"({current!r}, {c!r}) has measure {inner} not below {measure} of ({u!r}, {z!r})")
        current = normalize(structure, current + c, step_budget).word
    return violations
