import logging
from typing import Optional

from stacker.diagram import DiagramHandler
from stacker.export import ExportHandler
from stacker.groups import GROUPS, get_structure
from stacker.laurent import Modulus, check_modulus
from stacker.rewriting import RewriteHandler, StackingStructure
from stacker.utils import resolve_step_budget
from stacker.verify import VerifyHandler

logger = logging.getLogger(__name__)


class StackingManager:
    def __init__(self):
        # The structure and every handler are set up when setup_group or setup_structure is called
        self.group: Optional[str] = None
        self.p: Modulus = None
        self.structure: Optional[StackingStructure] = None
        self.step_budget: Optional[int] = None

        self.rewrite: Optional[RewriteHandler] = None
        self.verify: Optional[VerifyHandler] = None
        self.diagram: Optional[DiagramHandler] = None
        self.export: Optional[ExportHandler] = None

    def setup_group(self, group: str, p: Modulus = None, step_budget: Optional[int] = None):
        """
        Selects one of the shipped groups and initializes the handlers.

        Parameters:
            group (str): One of "bs12", "bg", "gp".
            p (Optional[int]): Modulus for "gp"; an integer >= 2, or None for p = inf. Ignored otherwise.
            step_budget (Optional[int]): Rewrite steps allowed per normalization. Defaults to
                $STACKER_STEP_BUDGET, else 10**6.

        Raises:
            ValueError:
                - If a group is already configured.
                - If group is not one of the shipped groups.
                - If p is not an integer >= 2 or None.
                - If step_budget is not a positive integer.

        Returns:
            None
        """
        if group not in GROUPS:
            raise ValueError(f"group must be one of {', '.join(GROUPS)}, got {group!r}")
        if group == "gp":
            p = check_modulus(p)
        elif p is not None:
            logger.warning(f"> p={p} is ignored for group {group!r}")
            p = None
        self._install(get_structure(group, p), step_budget)
        self.group, self.p = group, p
        logger.info(f"> configured {self.structure.name} (bound {self.structure.bound})")

    def setup_structure(self, structure: StackingStructure, step_budget: Optional[int] = None):
        """
        Initializes the handlers with a structure built elsewhere, e.g. by ``hnn_stacking``.

        Raises:
            ValueError: If a structure is already configured.
        """
        self._install(structure, step_budget)
        self.group = structure.name

    def _install(self, structure: StackingStructure, step_budget: Optional[int]):
        if self.structure is not None:
            raise ValueError(
                f"{self.structure.name} already initialized. "
                "Create a new StackingManager instance or reset `structure` manually."
            )
        self.step_budget = resolve_step_budget(step_budget)
        self.structure = structure
        self.rewrite = RewriteHandler(self)
        self.verify = VerifyHandler(self)
        self.diagram = DiagramHandler(self)
        self.export = ExportHandler(self)
