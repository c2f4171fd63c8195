"""The Baumslag-Gersten group ⟨a, s, t | t a t⁻¹ = a², s a s⁻¹ = t⟩.

It is the HNN extension of BS(1,2) with ``A = ⟨a⟩``, ``B = ⟨t⟩`` and
``φ(a) = t``. Every language involved is regular, so the structure is
autostackable.
"""
import logging
from functools import lru_cache
from typing import Dict, Tuple

from ..automata import Fsa, from_regex, intersection
from ..hnn import HnnData, hnn_stacking
from ..rewriting import PairOracle, StackingStructure
from ..words import power
from .bs12 import BS12_ALPHABET, NH_PATTERN, bs12_structure
from .oracles import bg_bucket, oracle_bg, oracle_bs12

logger = logging.getLogger(__name__)

# coset representatives of ⟨a⟩ and of ⟨t⟩ in BS(1,2)
TRANSVERSAL_A_PATTERN = "(T*|(T*at)?(a?t)*)"
TRANSVERSAL_B_PATTERN = "(a*|A*|TT*(a(aa)*|A(AA)*))"

BG_ISO = {"a": "t", "A": "T"}


def decompose_a(h: str) -> Tuple[str, str]:
    """Split a BS(1,2) normal form into ``N_{H/A}`` part and trailing power of ``a``."""
    cut = len(h.rstrip("aA"))
    return h[:cut], h[cut:]


def decompose_b(h: str) -> Tuple[str, str]:
    """Split ``h`` as ``trans·t^k`` with ``trans`` in ``N_{H/B}``.

    With ``h = (e, n/2^i)`` in the affine model and ``n`` odd, the
    representative is ``a^n`` when ``i = 0`` and ``t^-i a^n`` otherwise.
    """
    element = oracle_bs12(h)
    i = element.denom_exp
    trans = power("t", -i) + power("a", element.numerator)
    return trans, power("t", element.scale_exp + i)


@lru_cache(maxsize=None)
def bg_data() -> HnnData:
    letters = BS12_ALPHABET.letters
    return HnnData(
        base=bs12_structure(),
        stable="s",
        decompose_a=decompose_a,
        decompose_b=decompose_b,
        iso=dict(BG_ISO),
        transversal_a=from_regex(TRANSVERSAL_A_PATTERN, letters),
        transversal_b=from_regex(TRANSVERSAL_B_PATTERN, letters),
        oracle=PairOracle(oracle_bg, bg_bucket),
        name="bg",
    )


@lru_cache(maxsize=None)
def bg_structure() -> StackingStructure:
    return hnn_stacking(bg_data())


@lru_cache(maxsize=None)
def _bg_languages() -> Dict[str, Fsa]:
    letters = BS12_ALPHABET.letters
    nf = from_regex(NH_PATTERN, letters)
    return {
        "a": intersection(nf, from_regex(".*a", letters)).minimize(),
        "A": intersection(nf, from_regex(".*A", letters)).minimize(),
        "t": intersection(nf, from_regex(".*t.*", letters)).minimize(),
        "T": from_regex("TT*((aa)*|(AA)*)", letters),
    }


def bg_languages() -> Dict[str, Fsa]:
    """Heads sorted by the last letter of their subgroup part.

    Keys ``"a"`` and ``"A"`` hold the heads whose ``subg_A`` ends in that
    letter; keys ``"t"`` and ``"T"`` do the same for ``subg_B``.
    """
    return dict(_bg_languages())
