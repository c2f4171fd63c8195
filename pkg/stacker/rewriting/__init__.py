from .engine import (Presentation, RewriteEvent, RewriteTrace, extend_generators, flow_apply,
                     normalize, normalize_trace, stacking_presentation, word_problem)
from .handler import RewriteHandler
from .structure import (EdgeKind, EqualityOracle, FsaRecognizer, KeyOracle, PairOracle,
                        PredicateRecognizer, StackingStructure, free_structure)

__all__ = [
    "EdgeKind", "EqualityOracle", "FsaRecognizer", "KeyOracle", "PairOracle",
    "PredicateRecognizer", "Presentation", "RewriteEvent", "RewriteHandler", "RewriteTrace",
    "StackingStructure", "extend_generators", "flow_apply", "free_structure", "normalize",
    "normalize_trace", "stacking_presentation", "word_problem",
]
