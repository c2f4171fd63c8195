"""Fully triangular van Kampen diagrams built by the stacking procedure.

The diagram for the edge ``(u, z)`` has boundary ``nf(u)·z·nf(uz)⁻¹``. On a
tree edge it is a degenerate segment. Otherwise it has one isolated cell
with boundary ``φ(u, z)·z⁻¹`` and one child diagram per letter ``c_i`` of
``φ(u, z)``. The children are glued along the normal forms
``u_0 = u, u_{i+1} = nf(u_i·c_i)``.

Diagrams are kept as this recursive tree rather than as a planar complex.
Equal sub-diagrams are shared, and ``area`` counts the unfolded tree.
"""
import json
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from ..exceptions import StepBudgetExceeded, UnsupportedFormat
from ..rewriting import StackingStructure, normalize, normalize_trace
from ..utils import resolve_step_budget
from ..words import canonical_relator, inverse_letter

logger = logging.getLogger(__name__)

DEGENERATE = "degenerate"
MINIMAL = "minimal"
COMPOSITE = "composite"
KINDS = (DEGENERATE, MINIMAL, COMPOSITE)
FORMATS = ("json", "dot")

DiagramMemo = Dict[Tuple[str, str], "Diagram"]


@dataclass(frozen=True)
class Diagram:
    kind: str
    lower: str
    x: str
    upper: str
    path: Optional[str] = None
    cell: Optional[str] = None
    children: Tuple["Diagram", ...] = ()
    area: int = 0

    @classmethod
    def degenerate(cls, lower: str, x: str, upper: str) -> "Diagram":
        return cls(DEGENERATE, lower, x, upper, path=upper)

    @classmethod
    def with_cell(cls, lower: str, x: str, upper: str, cell: str, children) -> "Diagram":
        children = tuple(children)
        kind = MINIMAL if all(child.kind == DEGENERATE for child in children) else COMPOSITE
        area = 1 + sum(child.area for child in children)
        return cls(kind, lower, x, upper, cell=cell, children=children, area=area)

    @property
    def boundary(self) -> Tuple[str, str, str]:
        return self.lower, self.x, self.upper

    def nodes(self) -> Iterator["Diagram"]:
        """Every distinct node once, parents before children."""
        seen = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                continue
            seen.add(id(node))
            yield node
            stack.extend(reversed(node.children))

    def cells(self) -> Iterator[str]:
        for node in self.nodes():
            if node.cell is not None:
                yield node.cell


def build_diagram(structure: StackingStructure, u: str, z: str, memo: Optional[DiagramMemo] = None,
                  node_budget: Optional[int] = None) -> Diagram:
    """Fully triangular diagram for the edge ``(u, z)``.

    The recursion runs on an explicit stack. An edge met again while it is
    still being built means the stacking map is not well founded; it raises
    ``StepBudgetExceeded`` like an exhausted node budget does.
    """
    u = structure.certify(u).word
    structure.check_letter(z)
    budget = resolve_step_budget(node_budget)
    memo = {} if memo is None else memo
    in_progress = set()
    created = 0

    def leaf(lower: str, x: str) -> Optional[Diagram]:
        if lower and lower[-1] == inverse_letter(x):
            return Diagram.degenerate(lower, x, lower[:-1])
        if structure.is_normal_form(lower + x):
            return Diagram.degenerate(lower, x, lower + x)
        return None

    # frame: [lower, x, replacement, position, current normal form, children]
    frames: List[list] = []

    def open_frame(lower: str, x: str) -> None:
        nonlocal created
        created += 1
        if created > budget:
            raise StepBudgetExceeded(budget, lower + x)
        in_progress.add((lower, x))
        frames.append([lower, x, structure.phi(lower, x), 0, lower, []])

    def resolve(lower: str, x: str) -> Optional[Diagram]:
        key = (lower, x)
        if key in memo:
            return memo[key]
        found = leaf(lower, x)
        if found is not None:
            memo[key] = found
            return found
        if key in in_progress:
            logger.debug(f"> edge {key} reached again while being built")
            raise StepBudgetExceeded(budget, lower + x)
        open_frame(lower, x)
        return None

    root = resolve(u, z)
    if root is not None:
        return root

    while frames:
        frame = frames[-1]
        lower, x, replacement, position, current, children = frame
        if position < len(replacement):
            child = resolve(current, replacement[position])
            if child is None:
                continue
            children.append(child)
            frame[3] = position + 1
            frame[4] = child.upper
            continue
        frames.pop()
        in_progress.discard((lower, x))
        node = Diagram.with_cell(lower, x, current, replacement + inverse_letter(x), children)
        memo[(lower, x)] = node
        if frames:
            parent = frames[-1]
            parent[5].append(node)
            parent[3] += 1
            parent[4] = node.upper

    return memo[(u, z)]


def area(diagram: Diagram) -> int:
    return diagram.area


def check_diagram(diagram: Diagram, structure: StackingStructure,
                  relators: Optional[frozenset] = None) -> Tuple[bool, List[str]]:
    """Validate a diagram against ``structure``; returns ``(ok, reasons)``.

    Cell boundaries are checked against ``relators`` (canonical relators, as
    from ``stacking_presentation``) when given, else by rewriting them to the
    empty word.
    """
    reasons: List[str] = []
    for node in diagram.nodes():
        where = f"({node.lower!r}, {node.x!r})"
        if node.kind not in KINDS:
            reasons.append(f"{where}: unknown kind {node.kind!r}")
            continue
        if node.x not in structure.alphabet:
            reasons.append(f"{where}: {node.x!r} is not a letter")
            continue
        for side, word in (("lower", node.lower), ("upper", node.upper)):
            if not structure.is_normal_form(word):
                reasons.append(f"{where}: {side} side {word!r} is not a normal form")
        if node.kind == DEGENERATE:
            if node.children or node.cell is not None:
                reasons.append(f"{where}: degenerate diagram with a cell")
            if node.path != node.upper:
                reasons.append(f"{where}: path {node.path!r} differs from upper side {node.upper!r}")
            if not structure.is_tree_edge(node.lower, node.x):
                reasons.append(f"{where}: degenerate diagram on a non-tree edge")
            elif node.path != (node.lower[:-1] if node.lower.endswith(inverse_letter(node.x)) else node.lower + node.x):
                reasons.append(f"{where}: path {node.path!r} is not the tree path")
            if node.area != 0:
                reasons.append(f"{where}: degenerate diagram with area {node.area}")
            continue
        reasons.extend(_check_cell(node, where, structure, relators))
    return not reasons, reasons


def _check_cell(node: Diagram, where: str, structure: StackingStructure,
                relators: Optional[frozenset]) -> List[str]:
    reasons = []
    cell = node.cell or ""
    if not cell or cell[-1] != inverse_letter(node.x):
        reasons.append(f"{where}: cell {cell!r} does not close with {inverse_letter(node.x)!r}")
    labels = "".join(child.x for child in node.children)
    if labels != cell[:-1]:
        reasons.append(f"{where}: children read {labels!r} but the cell reads {cell[:-1]!r}")
    expected_kind = MINIMAL if all(c.kind == DEGENERATE for c in node.children) else COMPOSITE
    if node.kind != expected_kind:
        reasons.append(f"{where}: kind {node.kind!r} should be {expected_kind!r}")
    current = node.lower
    for child in node.children:
        if child.lower != current:
            reasons.append(f"{where}: child ({child.lower!r}, {child.x!r}) is not glued to {current!r}")
        current = child.upper
    if current != node.upper:
        reasons.append(f"{where}: children end at {current!r}, not at the upper side {node.upper!r}")
    if node.area != 1 + sum(child.area for child in node.children):
        reasons.append(f"{where}: area {node.area} does not add up")
    if relators is not None:
        relator = canonical_relator(cell)
        if relator and relator not in relators:
            reasons.append(f"{where}: cell {cell!r} is not a stacking relator")
    elif cell and all(letter in structure.alphabet for letter in cell):
        if normalize(structure, cell).word != "":
            reasons.append(f"{where}: cell {cell!r} is not a relator")
    return reasons


def loop_area(structure: StackingStructure, word: str, step_budget: Optional[int] = None) -> int:
    """Number of cells in the stacking diagram of a word equal to the identity."""
    trace = normalize_trace(structure, word, step_budget, record=False)
    if trace.result:
        raise ValueError(f"{word!r} is not the identity: its normal form is {trace.result!r}")
    return trace.area


def diagram_to_dict(diagram: Diagram) -> dict:
    record = {
        "kind": diagram.kind,
        "boundary": {"lower": diagram.lower, "x": diagram.x, "upper": diagram.upper},
        "area": diagram.area,
    }
    if diagram.kind == DEGENERATE:
        record["path"] = diagram.path
    else:
        record["cell"] = diagram.cell
    record["children"] = [diagram_to_dict(child) for child in diagram.children]
    return record


def diagram_from_dict(record: dict) -> Diagram:
    kind = record["kind"]
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}")
    boundary = record["boundary"]
    lower, x, upper = boundary["lower"], boundary["x"], boundary["upper"]
    if kind == DEGENERATE:
        return Diagram(DEGENERATE, lower, x, upper, path=record.get("path", upper))
    children = [diagram_from_dict(child) for child in record.get("children", [])]
    node = Diagram.with_cell(lower, x, upper, record["cell"], children)
    if node.kind != kind:
        logger.warning(f"> diagram ({lower!r}, {x!r}) recorded as {kind!r} but its children make it {node.kind!r}")
        node = Diagram(kind, lower, x, upper, cell=node.cell, children=node.children, area=node.area)
    return node


def parse_diagram(text: str) -> Diagram:
    return diagram_from_dict(json.loads(text))


def diagram_to_dot(diagram: Diagram, name: str = "diagram") -> str:
    """Cell-adjacency tree: one node per isolated cell, labelled by its boundary word."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    ids: Dict[int, int] = {}
    for node in diagram.nodes():
        if node.kind == DEGENERATE:
            continue
        ids[id(node)] = len(ids)
        lines.append(f'  c{ids[id(node)]} [label="{node.cell}"];')
    if not ids:
        lines.append(f'  d0 [shape=plaintext, label="{diagram.path or "ε"}"];')
    for node in diagram.nodes():
        if id(node) not in ids:
            continue
        for child in node.children:
            if id(child) in ids:
                lines.append(f'  c{ids[id(node)]} -> c{ids[id(child)]} [label="{child.x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_diagram(diagram: Diagram, fmt: str = "json") -> bytes:
    if fmt == "json":
        return json.dumps(diagram_to_dict(diagram)).encode("utf-8")
    if fmt == "dot":
        return diagram_to_dot(diagram).encode("utf-8")
    raise UnsupportedFormat(fmt, FORMATS)
