from typing import Optional

from ..laurent import Modulus
from ..rewriting import StackingStructure
from .baumslag_gersten import bg_data, bg_languages, bg_structure, decompose_a, decompose_b
from .bs12 import BS12_ALPHABET, bs12_structure
from .gp import (GpMeasure, GpStackingMap, case6_descent_violations, gp_bound, gp_structure,
                 is_case6, is_case6_syntactic, measure_of)
from .gp_languages import (GP_ALPHABET, PIECES, graph_phi_fsa, graph_phi_piece, graph_phi_pieces,
                           head_fsa, m_eta, n_delta_eta, nf_fsa, ntilde_fsa, ntilde_predicate, tail_fsa)
from .oracles import (AffineElement, ModuleElement, bg_bucket, britton_reduce, oracle_bg, oracle_bs12,
                      oracle_gp)

GROUPS = ("bs12", "bg", "gp")


def get_structure(group: str, p: Optional[Modulus] = None) -> StackingStructure:
    """The shipped structure named ``group``; ``p`` is only read for ``"gp"``."""
    if group == "bs12":
        return bs12_structure()
    if group == "bg":
        return bg_structure()
    if group == "gp":
        return gp_structure(p)
    raise ValueError(f"group must be one of {', '.join(GROUPS)}, got {group!r}")


__all__ = [
    "AffineElement", "BS12_ALPHABET", "GP_ALPHABET", "GROUPS", "GpMeasure", "GpStackingMap",
    "ModuleElement", "PIECES", "bg_bucket", "bg_data", "bg_languages", "bg_structure", "britton_reduce",
    "bs12_structure", "case6_descent_violations", "decompose_a", "decompose_b", "get_structure",
    "gp_bound", "gp_structure", "graph_phi_fsa", "graph_phi_piece", "graph_phi_pieces", "head_fsa",
    "is_case6", "is_case6_syntactic", "m_eta", "measure_of", "n_delta_eta", "nf_fsa", "ntilde_fsa",
    "ntilde_predicate", "oracle_bg", "oracle_bs12", "oracle_gp", "tail_fsa",
]
