"""BS(1,2) = ⟨a, t | t a t⁻¹ = a²⟩ as a bounded prefix-rewriting system.

The complete rewriting system is free cancellation together with

    a²t → ta,    a⁻¹t → a t a⁻¹,    a^ε t⁻¹ → t⁻¹ a^{2ε}

and its irreducible words are the normal forms ``NH_PATTERN``. Read as a
stacking map, each rule becomes a path that walks back over the left-hand
side's prefix and then along the right-hand side.
"""
import logging
from functools import lru_cache

from ..automata import from_regex
from ..rewriting import FsaRecognizer, KeyOracle, StackingStructure
from ..words import Alphabet
from .oracles import oracle_bs12

logger = logging.getLogger(__name__)

BS12_ALPHABET = Alphabet(("a", "A", "t", "T"))
NH_PATTERN = "(T*|(T*at)?(a?t)*)(a*|A*)"
BS12_BOUND = 4


def bs12_phi(u: str, z: str) -> str:
    if z == "t":
        if u.endswith("aa"):
            return "AAta"
        if u.endswith("A"):
            return "aatA"
    elif z == "T":
        if u.endswith("a"):
            return "ATaa"
        if u.endswith("A"):
            return "aTAA"
    return z


@lru_cache(maxsize=None)
def bs12_structure() -> StackingStructure:
    nf = from_regex(NH_PATTERN, BS12_ALPHABET.letters)
    logger.debug(f"> BS(1,2) normal forms: {nf.num_states} states")
    return StackingStructure(
        "bs12",
        BS12_ALPHABET,
        FsaRecognizer(nf),
        bs12_phi,
        BS12_BOUND,
        nf_fsa=nf,
        oracle=KeyOracle(oracle_bs12),
    )
