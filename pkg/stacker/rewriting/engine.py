"""Prefix rewriting driven by a stacking structure.

``normalize`` keeps a certified prefix ``u`` and a stack of pending letters.
The next pending letter ``z`` either cancels the last letter of ``u``, extends
``u`` along a tree edge, or is replaced by ``φ(u, z)``. Each replacement is a
non-tree event; the number of events on ``u·z`` is the area of the fully
triangular diagram for the edge ``(u, z)``.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from ..exceptions import StepBudgetExceeded
from ..utils import resolve_step_budget
from ..words import NormalWord, canonical_relator, invert, parse_word
from .structure import KeyOracle, PairOracle, StackingStructure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RewriteEvent:
    """One application of the stacking map: ``letter`` read after ``prefix`` became ``replacement``."""
    prefix: str
    letter: str
    replacement: str


@dataclass
class RewriteTrace:
    word: str
    result: str
    steps: int = 0
    area: int = 0
    events: List[RewriteEvent] = field(default_factory=list)


@dataclass(frozen=True)
class Presentation:
    """Relators read off a ball of normal forms.

    ``stabilized`` is True when the last radius increment added nothing; it is
    evidence of finiteness, not a proof.
    """
    relators: frozenset
    radius: int
    stabilized: bool

    def __contains__(self, word: str) -> bool:
        return canonical_relator(word) in self.relators

    def __len__(self) -> int:
        return len(self.relators)


def normalize_trace(structure: StackingStructure, word: str, step_budget: Optional[int] = None,
                    record: bool = True) -> RewriteTrace:
    budget = resolve_step_budget(step_budget)
    parse_word(word, structure.alphabet)
    recognizer = structure.recognizer
    inverse = structure.alphabet.inverse

    prefix: List[str] = []
    states = [recognizer.initial()]
    pending = list(reversed(word))
    trace = RewriteTrace(word, "")

    while pending:
        z = pending.pop()
        trace.steps += 1
        if trace.steps > budget:
            logger.debug(f"> budget of {budget} steps hit on {word!r} with prefix {''.join(prefix)!r}")
            raise StepBudgetExceeded(budget, word)
        if prefix and prefix[-1] == inverse(z):
            prefix.pop()
            states.pop()
            continue
        state = recognizer.advance(states[-1], z)
        if state is not None:
            prefix.append(z)
            states.append(state)
            continue
        u = "".join(prefix)
        replacement = structure.phi(u, z)
        trace.area += 1
        if record:
            trace.events.append(RewriteEvent(u, z, replacement))
        pending.extend(reversed(replacement))

    trace.result = "".join(prefix)
    return trace


def normalize(structure: StackingStructure, word: str, step_budget: Optional[int] = None) -> NormalWord:
    """The normal form of ``word``."""
    trace = normalize_trace(structure, word, step_budget, record=False)
    return NormalWord(trace.result, structure.name)


def flow_apply(structure: StackingStructure, u, z: str) -> str:
    """``φ(u, z)`` for a certified normal form ``u``."""
    u = structure.certify(u)
    structure.check_letter(z)
    return structure.phi(u.word, z)


def word_problem(structure: StackingStructure, w1: str, w2: str, step_budget: Optional[int] = None) -> bool:
    return normalize(structure, w1, step_budget).word == normalize(structure, w2, step_budget).word


def _relators_of(structure: StackingStructure, words: Iterable[str]) -> set:
    relators = set()
    for u in words:
        for z in structure.alphabet.letters:
            if structure.is_tree_edge(u, z):
                continue
            relator = canonical_relator(structure.phi(u, z) + structure.alphabet.inverse(z))
            if relator:
                relators.add(relator)
    return relators


def stacking_presentation(structure: StackingStructure, radius: int) -> Presentation:
    """Relators ``φ(u, z)·z⁻¹`` over the ball of normal forms of the given radius."""
    if radius < 1:
        raise ValueError(f"radius must be a positive integer, got {radius}")
    inner: set = set()
    outer: set = set()
    for u in structure.ball(radius):
        found = _relators_of(structure, [u])
        if len(u) < radius:
            inner |= found
        outer |= found
    stabilized = outer == inner
    logger.debug(f"> {structure.name}: {len(outer)} relators at radius {radius} (stabilized={stabilized})")
    return Presentation(frozenset(outer), radius, stabilized)


def extend_generators(structure: StackingStructure, new_generators: Sequence[Tuple[str, str]]) -> StackingStructure:
    """Add letters ``z`` standing for words ``w_z``; normal forms do not change.

    The stacking map sends every edge labelled ``z`` to ``w_z`` and every edge
    labelled ``z⁻¹`` to ``w_z⁻¹``.
    """
    if not new_generators:
        return structure
    names = [z for z, _ in new_generators]
    alphabet = structure.alphabet.extend(names)
    definitions = {}
    substitution = dict(structure.substitution)
    for z, w_z in new_generators:
        parse_word(w_z, structure.alphabet)
        definitions[z] = w_z
        definitions[alphabet.inverse(z)] = invert(w_z)
        substitution[z] = structure.expand(w_z)
        substitution[alphabet.inverse(z)] = structure.expand(invert(w_z))
    base_phi = structure.phi

    def phi(u: str, z: str) -> str:
        if z in definitions:
            return definitions[z]
        return base_phi(u, z)

    oracle = None
    if structure.oracle is not None:
        base_oracle = structure.oracle

        def expand(word: str) -> str:
            return "".join(substitution.get(letter, letter) for letter in word)

        if isinstance(base_oracle, KeyOracle):
            oracle = KeyOracle(lambda w: base_oracle.key(expand(w)))
        else:
            oracle = PairOracle(lambda w1, w2: base_oracle.equal(expand(w1), expand(w2)),
                                lambda w: base_oracle.bucket(expand(w)))

    bound = max([structure.bound] + [len(w) for w in definitions.values()])
    logger.info(f"> extended {structure.name} by {', '.join(names)} (bound {structure.bound} -> {bound})")
    return StackingStructure(
        f"{structure.name}+{''.join(names)}",
        alphabet,
        structure.recognizer,
        phi,
        bound,
        nf_fsa=structure.nf_fsa,
        oracle=oracle,
        substitution=substitution,
    )
