import logging
from typing import TYPE_CHECKING, Dict, Iterable, Optional, Tuple

from tqdm import tqdm

from ..automata import pad_triple
from ..diagram import build_diagram, check_diagram
from ..groups import (bg_data, bg_languages, case6_descent_violations, graph_phi_fsa, is_case6,
                      is_case6_syntactic, ntilde_fsa, ntilde_predicate)
from ..groups.gp_languages import NTILDE_LETTERS
from ..exceptions import OracleInconsistent, StepBudgetExceeded, UnsupportedForInfiniteP
from ..hnn import decompose_validate, split_tail_head, tail_lemma_applies
from ..rewriting import EqualityOracle, StackingStructure, normalize, normalize_trace
from ..utils import DEFAULT_SEED, random_words, resolve_step_budget, shard, warn_once
from ..words import all_words, free_reduce, invert
from .report import TERMINATION_NOTE, VerificationReport

if TYPE_CHECKING:
    from ..manager import StackingManager  # only used for type hints, won't cause import loop

logger = logging.getLogger(__name__)

Shard = Tuple[int, int]


def edge_label(u: str, z: str) -> str:
    return f"({u}, {z})"


def mutate_structure(structure: StackingStructure) -> StackingStructure:
    """Negative control: a copy whose map rewrites forward tree edges to ``z·z·z⁻¹``.

    Rewriting never consults the map on tree edges, so normalization still
    works while ``verify_flow`` must report the broken edges.
    """
    def phi(u: str, z: str) -> str:
        if structure.is_tree_edge(u, z) and not (u and u[-1] == structure.alphabet.inverse(z)):
            return z + z + structure.alphabet.inverse(z)
        return structure.phi(u, z)

    return StackingStructure(f"{structure.name}~mutated", structure.alphabet, structure.recognizer, phi,
                             structure.bound, nf_fsa=structure.nf_fsa, oracle=structure.oracle,
                             substitution=structure.substitution)


def verify_flow(structure: StackingStructure, radius: int, oracle: Optional[EqualityOracle] = None,
                shard_spec: Shard = (0, 1), step_budget: Optional[int] = None,
                show_progress: bool = False) -> VerificationReport:
    """Check the flow-function axioms on every edge leaving the radius ball.

    F1 compares ``φ(u, z)`` with ``z`` through ``oracle`` (the structure's own
    oracle by default, else by rewriting both from ``u``). F2d requires tree
    edges to be fixed. Boundedness compares ``|φ(u, z)|`` with the declared
    bound. Termination requires ``u·z`` to normalize within the step budget.
    """
    if radius < 1:
        raise ValueError(f"radius must be a positive integer, got {radius}")
    budget = resolve_step_budget(step_budget)
    oracle = oracle if oracle is not None else structure.oracle
    if oracle is None:
        warn_once(logger, f"> {structure.name} has no oracle; F1 is checked by normal-form agreement")
    report = VerificationReport(radius=radius)
    report.ran("flow")
    letters = structure.alphabet.letters
    ball = list(structure.ball(radius))
    for u in tqdm(list(shard(ball, *shard_spec)), desc=f"flow {structure.name}", disable=not show_progress):
        for z in letters:
            label = edge_label(u, z)
            report.edges_checked += 1
            v = structure.phi(u, z)
            report.max_phi_len = max(report.max_phi_len, len(v))
            if len(v) > structure.bound:
                report.fail(label, "bound", f"|{v}| = {len(v)} exceeds the bound {structure.bound}")
            if any(letter not in structure.alphabet for letter in v):
                report.fail(label, "F1", f"{v!r} uses letters outside the alphabet")
                continue
            if structure.is_tree_edge(u, z) and v != z:
                report.fail(label, "F2d", f"tree edge rewritten to {v!r}")
            try:
                trace = normalize_trace(structure, u + z, budget, record=False)
            except StepBudgetExceeded:
                report.fail(label, "F2r", f"no normal form within {budget} steps")
                continue
            report.max_steps = max(report.max_steps, trace.steps)
            if oracle is not None:
                same = oracle.equal(v, z)
            else:
                try:
                    same = normalize(structure, u + v, budget).word == trace.result
                except StepBudgetExceeded:
                    report.fail(label, "F2r", f"rewriting {u + v!r} ran out of steps")
                    continue
            if not same:
                report.fail(label, "F1", f"{v!r} and {z!r} are different elements")
    report.note(TERMINATION_NOTE)
    logger.info(f"> flow check of {structure.name} at radius {radius}: {report.edges_checked} edges, "
                f"{len(report.failures)} failure(s)")
    return report


class VerifyHandler:
    """Verification sweeps for the structure owned by a ``StackingManager``."""

    def __init__(self, manager: 'StackingManager'):
        self.manager = manager

    @property
    def structure(self) -> StackingStructure:
        return self.manager.structure

    def _check_finite(self, what: str) -> int:
        if self.manager.group != "gp":
            raise ValueError(f"{what} is only defined for the gp group, not {self.manager.group!r}")
        if self.manager.p is None:
            raise UnsupportedForInfiniteP(what)
        return self.manager.p

    def verify_flow(self, radius: int, oracle: Optional[EqualityOracle] = None, shard_spec: Shard = (0, 1),
                    show_progress: bool = False) -> VerificationReport:
        report = verify_flow(self.structure, radius, oracle, shard_spec, self.manager.step_budget, show_progress)
        if self.manager.group == "gp" and self.manager.p is None:
            report.note("G_inf is algorithmically stackable; well-foundedness is not certified beyond this sweep")
        return report

    def oracle_sweep(self, words: Iterable[str], label: str = "oracle",
                     show_progress: bool = False) -> VerificationReport:
        """Normalize ``words`` and compare against the independent oracle.

        Every normal form must equal its input in the oracle, be a normal form
        again after rewriting, have only normal-form prefixes, and differ in
        the oracle from every other normal form produced.
        """
        structure = self.structure
        oracle = structure.oracle
        if oracle is None:
            raise ValueError(f"structure {structure.name!r} has no oracle to compare against")
        budget = resolve_step_budget(self.manager.step_budget)
        report = VerificationReport()
        report.ran(label)
        buckets: Dict[object, Dict[str, str]] = {}
        for word in tqdm(words, desc=f"{label} {structure.name}", disable=not show_progress):
            report.edges_checked += 1
            report.radius = max(report.radius, len(word))
            try:
                trace = normalize_trace(structure, word, budget, record=False)
            except StepBudgetExceeded:
                report.fail(word, "F2r", f"no normal form within {budget} steps")
                continue
            report.max_steps = max(report.max_steps, trace.steps)
            nf = trace.result
            if not oracle.equal(word, nf):
                report.fail(word, "oracle", f"normal form {nf!r} is a different element")
            entry = buckets.setdefault(oracle.bucket(nf), {})
            if nf in entry:
                continue
            for other, source in entry.items():
                if oracle.equal(other, nf):
                    report.fail(word, "uniqueness", f"{nf!r} and {other!r} (from {source!r}) are the same element")
            entry[nf] = word
            if not structure.is_normal_form(nf):
                report.fail(word, "normal-form", f"{nf!r} is rejected by the recognizer")
            elif any(not structure.is_normal_form(nf[:i]) for i in range(len(nf))):
                report.fail(word, "prefix-closure", f"a prefix of {nf!r} is not a normal form")
            if normalize(structure, nf, budget).word != nf:
                report.fail(word, "idempotence", f"{nf!r} is rewritten again")
        return report

    def exhaustive_oracle_sweep(self, max_length: int, show_progress: bool = False) -> VerificationReport:
        words = all_words(self.structure.alphabet, max_length)
        return self.oracle_sweep(words, "oracle-exhaustive", show_progress)

    def random_oracle_sweep(self, count: int, max_length: int, seed: int = DEFAULT_SEED,
                            show_progress: bool = False) -> VerificationReport:
        words = random_words(self.structure.alphabet.letters, max_length, count, seed)
        report = self.oracle_sweep(words, "oracle-random", show_progress)
        report.note(f"random oracle sweep: {count} words of length <= {max_length}, seed {seed}")
        return report

    def ntilde_sweep(self, max_length: int = 10, show_progress: bool = False) -> VerificationReport:
        """Compare every Ñ automaton with its defining predicate on all words over ``{a, t, t⁻¹}``."""
        p = self._check_finite("the N~ automata")
        report = VerificationReport(radius=max_length)
        report.ran("ntilde")
        words = list(_plain_words(NTILDE_LETTERS, max_length))
        for delta in (1, -1):
            for eta in (1, -1):
                fsa = ntilde_fsa(p, delta, eta)
                for word in tqdm(words, desc=f"ntilde {delta},{eta}", disable=not show_progress):
                    report.edges_checked += 1
                    if fsa.accepts(word) != ntilde_predicate(word, p, delta, eta):
                        report.fail(word, "ntilde", f"automaton and predicate disagree for delta={delta}, eta={eta}")
        return report

    def graphphi_sweep(self, radius: Optional[int] = None, sample: Optional[int] = None, seed: int = DEFAULT_SEED,
                       show_progress: bool = False) -> VerificationReport:
        """The graph(φ) automaton accepts every ``(u, z, φ(u, z))`` and no single-letter mutation of it.

        Normal forms come from the radius ball, or from ``sample`` random words
        of length ``radius`` when ``sample`` is given.
        """
        p = self._check_finite("graph(phi)")
        structure = self.structure
        radius = 6 if radius is None else radius
        fsa = graph_phi_fsa(p)
        if sample is None:
            normal_forms = list(structure.ball(radius))
        else:
            drawn = random_words(structure.alphabet.letters, radius, sample, seed)
            normal_forms = sorted({normalize(structure, w, self.manager.step_budget).word for w in drawn})
        report = VerificationReport(radius=radius)
        report.ran("graphphi")
        letters = structure.alphabet.letters
        for u in tqdm(normal_forms, desc="graphphi", disable=not show_progress):
            for z in letters:
                report.edges_checked += 1
                v = structure.phi(u, z)
                if not fsa.accepts(pad_triple(u, z, v)):
                    report.fail(edge_label(u, z), "graphphi", f"(u, z, {v!r}) rejected")
                for i in range(len(v)):
                    for c in letters:
                        if c == v[i]:
                            continue
                        mutant = v[:i] + c + v[i + 1:]
                        if fsa.accepts(pad_triple(u, z, mutant)):
                            report.fail(edge_label(u, z), "graphphi", f"mutant {mutant!r} of {v!r} accepted")
        return report

    def tail_lemma_sweep(self, radius: int, show_progress: bool = False) -> VerificationReport:
        """Prepending a tail under the lemma's side conditions keeps a normal form."""
        structure = self.structure
        stable = "s"
        if stable not in structure.alphabet:
            raise ValueError(f"structure {structure.name!r} has no stable letter")
        ball = list(structure.ball(radius))
        tails = [u for u in ball if split_tail_head(u, stable).head == ""]
        report = VerificationReport(radius=radius)
        report.ran("tail-lemma")
        for tau in tqdm(tails, desc="tail lemma", disable=not show_progress):
            for w in ball:
                if not tail_lemma_applies(tau, w, stable):
                    continue
                report.edges_checked += 1
                if not structure.is_normal_form(tau + w):
                    report.fail(f"{tau}|{w}", "tail-lemma", f"{tau + w!r} is not a normal form")
        return report

    def prefix_closure_sweep(self, radius: int) -> VerificationReport:
        """Every prefix of every accepted word of length at most ``radius`` is accepted."""
        structure = self.structure
        if structure.nf_fsa is None:
            raise ValueError(f"structure {structure.name!r} has no normal-form automaton")
        report = VerificationReport(radius=radius)
        report.ran("prefix-closure")
        for symbols in structure.nf_fsa.words(radius):
            word = "".join(symbols)
            report.edges_checked += 1
            for i in range(len(word)):
                if not structure.is_normal_form(word[:i]):
                    report.fail(word, "prefix-closure", f"prefix {word[:i]!r} is not a normal form")
                    break
        return report

    def case6_agreement_sweep(self, radius: int) -> VerificationReport:
        """The suffix pattern for case 6 and the condition ``p_u ≠ 0, m_u - l_u < -1`` agree."""
        if self.manager.group != "gp":
            raise ValueError("case 6 is only defined for the gp group")
        p = self.manager.p
        report = VerificationReport(radius=radius)
        report.ran("case6-agreement")
        for u in self.structure.ball(radius):
            report.edges_checked += 1
            semantic = is_case6(u, "a", p)
            syntactic = is_case6_syntactic(u, p)
            if semantic != syntactic:
                report.fail(u, "case6-agreement", f"semantic {semantic}, syntactic {syntactic}")
        return report

    def case6_descent_sweep(self, radius: int, words: Iterable[str] = (),
                            show_progress: bool = False) -> VerificationReport:
        """Case-6 measures drop strictly along the sub-calls of every case-6 edge.

        Edges come from the radius ball and from the rewriting traces of ``words``.
        """
        p = self._check_finite("the case-6 measure")
        structure = self.structure
        budget = self.manager.step_budget
        edges = set()
        for u in structure.ball(radius):
            for z in ("a", "A"):
                if is_case6(u, z, p):
                    edges.add((u, z))
        for word in words:
            for event in normalize_trace(structure, word, budget).events:
                if is_case6(event.prefix, event.letter, p):
                    edges.add((event.prefix, event.letter))
        report = VerificationReport(radius=radius)
        report.ran("case6-descent")
        for u, z in tqdm(sorted(edges), desc="case-6 descent", disable=not show_progress):
            report.edges_checked += 1
            for violation in case6_descent_violations(structure, u, z, p, budget):
                report.fail(edge_label(u, z), "case6-descent", violation)
        return report

    def diagram_sweep(self, radius: int, show_progress: bool = False) -> VerificationReport:
        """Build and check the diagram of every edge leaving the radius ball.

        Besides ``check_diagram``, each diagram must have the boundary
        ``u·z·nf(uz)⁻¹`` and an area equal to the number of rewrite events on
        ``u·z``. Each cell must read ``φ(lower, x)·x⁻¹``, which puts it in the
        stacking presentation.
        """
        structure = self.structure
        budget = self.manager.step_budget
        memo: dict = {}
        report = VerificationReport(radius=radius)
        report.ran("diagram")
        for u in tqdm(list(structure.ball(radius)), desc="diagrams", disable=not show_progress):
            for z in structure.alphabet.letters:
                label = edge_label(u, z)
                report.edges_checked += 1
                try:
                    diagram = build_diagram(structure, u, z, memo=memo, node_budget=budget)
                    trace = normalize_trace(structure, u + z, budget, record=False)
                except StepBudgetExceeded as error:
                    report.fail(label, "F2r", str(error))
                    continue
                _, reasons = check_diagram(diagram, structure)
                for reason in reasons:
                    report.fail(label, "diagram", reason)
                expected = free_reduce(u + z + invert(trace.result))
                if free_reduce(diagram.lower + diagram.x + invert(diagram.upper)) != expected:
                    report.fail(label, "boundary", f"diagram boundary differs from {expected!r}")
                if diagram.area != trace.area:
                    report.fail(label, "area", f"area {diagram.area} but {trace.area} rewrite events")
                for node in diagram.nodes():
                    if node.cell is not None and node.cell != structure.phi(node.lower, node.x) + invert(node.x):
                        report.fail(label, "relator", f"cell {node.cell!r} is not phi({node.lower!r}, {node.x!r})")
        return report

    def bg_language_sweep(self, radius: int) -> VerificationReport:
        """Decompositions validate, and the heads sorted by last subgroup letter match their languages."""
        if self.manager.group != "bg":
            raise ValueError("the subgroup languages belong to the bg group")
        data = bg_data()
        languages = bg_languages()
        report = VerificationReport(radius=radius)
        report.ran("bg-languages")
        for h in data.base.ball(radius):
            report.edges_checked += 1
            for side, keys in (("a", "aA"), ("b", "tT")):
                try:
                    _, subg = decompose_validate(data, h, side)
                except OracleInconsistent as error:
                    report.fail(h, "decomposition", str(error))
                    continue
                last = subg[-1] if subg else ""
                for key in keys:
                    if languages[key].accepts(h) != (last == key):
                        report.fail(h, "bg-languages", f"language for {key!r} disagrees with subgroup part {subg!r}")
        return report

    def acceptance(self, radius: int, random_count: int = 0, random_length: int = 12, seed: int = DEFAULT_SEED,
                   shard_spec: Shard = (0, 1), show_progress: bool = False) -> VerificationReport:
        """Every sweep that applies to the configured group, merged into one report."""
        group, p = self.manager.group, self.manager.p
        report = self.verify_flow(radius, shard_spec=shard_spec, show_progress=show_progress)
        report = report.merge(self.exhaustive_oracle_sweep(radius, show_progress))
        if random_count:
            report = report.merge(self.random_oracle_sweep(random_count, random_length, seed, show_progress))
        report = report.merge(self.diagram_sweep(min(radius, 5), show_progress))
        if group == "bg":
            report = report.merge(self.bg_language_sweep(radius))
            report = report.merge(self.tail_lemma_sweep(radius, show_progress))
        if group == "gp":
            report = report.merge(self.tail_lemma_sweep(radius, show_progress))
            report = report.merge(self.prefix_closure_sweep(radius))
            report = report.merge(self.case6_agreement_sweep(radius))
            if p is not None:
                report = report.merge(self.ntilde_sweep(min(radius + 4, 10), show_progress))
                report = report.merge(self.graphphi_sweep(radius, show_progress=show_progress))
                report = report.merge(self.case6_descent_sweep(radius, show_progress=show_progress))
        return report


def _plain_words(letters, max_length: int) -> Iterable[str]:
    """All words over ``letters`` up to ``max_length``, free cancellation allowed."""
    layer = [""]
    yield ""
    for _ in range(max_length):
        layer = [w + x for w in layer for x in letters]
        yield from layer
