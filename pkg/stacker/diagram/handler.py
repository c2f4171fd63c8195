import logging
from typing import TYPE_CHECKING, List, Optional, Tuple

from ..rewriting import StackingStructure
from .model import (Diagram, DiagramMemo, area, build_diagram, check_diagram, export_diagram,
                    loop_area, parse_diagram)

if TYPE_CHECKING:
    from ..manager import StackingManager  # only used for type hints, won't cause import loop

logger = logging.getLogger(__name__)


class DiagramHandler:
    """Diagram operations on the structure owned by a ``StackingManager``.

    Sub-diagrams are memoised per structure, so repeated builds share work.
    """

    def __init__(self, manager: 'StackingManager'):
        self.manager = manager
        self._memo: DiagramMemo = {}
        self._memo_owner: Optional[str] = None

    @property
    def structure(self) -> StackingStructure:
        return self.manager.structure

    def _shared_memo(self) -> DiagramMemo:
        if self._memo_owner != self.structure.name:
            self._memo = {}
            self._memo_owner = self.structure.name
        return self._memo

    def build(self, u: str, z: str) -> Diagram:
        return build_diagram(self.structure, u, z, memo=self._shared_memo(),
                             node_budget=self.manager.step_budget)

    def check(self, diagram: Diagram, relators: Optional[frozenset] = None) -> Tuple[bool, List[str]]:
        return check_diagram(diagram, self.structure, relators)

    def area(self, diagram: Diagram) -> int:
        return area(diagram)

    def export(self, diagram: Diagram, fmt: str = "json") -> bytes:
        return export_diagram(diagram, fmt)

    def parse(self, text: str) -> Diagram:
        return parse_diagram(text)

    def loop_area(self, word: str) -> int:
        return loop_area(self.structure, word, self.manager.step_budget)
