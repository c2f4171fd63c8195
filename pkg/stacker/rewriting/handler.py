import logging
from typing import TYPE_CHECKING, List, Sequence, Tuple

from ..words import NormalWord
from .engine import (Presentation, RewriteTrace, extend_generators, flow_apply, normalize,
                     normalize_trace, stacking_presentation, word_problem)
from .structure import StackingStructure

if TYPE_CHECKING:
    from ..manager import StackingManager  # only used for type hints, won't cause import loop

logger = logging.getLogger(__name__)


class RewriteHandler:
    """Rewriting operations on the structure owned by a ``StackingManager``."""

    def __init__(self, manager: 'StackingManager'):
        self.manager = manager

    @property
    def structure(self) -> StackingStructure:
        return self.manager.structure

    def flow_apply(self, u, z: str) -> str:
        return flow_apply(self.structure, u, z)

    def normalize(self, word: str) -> NormalWord:
        return normalize(self.structure, word, self.manager.step_budget)

    def normalize_many(self, words: Sequence[str]) -> List[NormalWord]:
        return [self.normalize(word) for word in words]

    def trace(self, word: str) -> RewriteTrace:
        return normalize_trace(self.structure, word, self.manager.step_budget)

    def word_problem(self, w1: str, w2: str) -> bool:
        return word_problem(self.structure, w1, w2, self.manager.step_budget)

    def stacking_presentation(self, radius: int) -> Presentation:
        return stacking_presentation(self.structure, radius)

    def extend_generators(self, new_generators: Sequence[Tuple[str, str]]) -> StackingStructure:
        """Replace the managed structure by its extension and return it."""
        extended = extend_generators(self.structure, new_generators)
        self.manager.structure = extended
        return extended
