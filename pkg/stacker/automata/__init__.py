from .fsa import Fsa
from .ops import (combine, complement, concat, difference, emptiness, intersection,
                  star, union)
from .padded import fixed_suffix_product, is_pad_stable, pad_triple, triple_alphabet, unpad
from .regex import from_regex


def accepts(fsa: Fsa, word) -> bool:
    return fsa.accepts(word)


__all__ = [
    "Fsa", "accepts", "combine", "complement", "concat", "difference", "emptiness",
    "intersection", "star", "union", "from_regex", "pad_triple", "is_pad_stable",
    "triple_alphabet", "unpad", "fixed_suffix_product",
]
