import pytest

from stacker.exceptions import DuplicateGenerator, NotANormalForm, StepBudgetExceeded, UnknownLetter
from stacker.rewriting import (EdgeKind, extend_generators, flow_apply, free_structure, normalize,
                               normalize_trace, stacking_presentation, word_problem)
from stacker.utils import STEP_BUDGET_ENV
from stacker.words import Alphabet, NormalWord


def test_normalize_bs12_rules(bs12):
    assert normalize(bs12, "aat").word == "ta"
    assert normalize(bs12, "At").word == "atA"
    assert normalize(bs12, "aT").word == "Taa"
    assert normalize(bs12, "tT").word == ""
    assert normalize(bs12, "").word == ""
    assert normalize(bs12, "aat") == NormalWord("ta", "bs12")


def test_normalize_rejects_unknown_letters(bs12):
    with pytest.raises(UnknownLetter):
        normalize(bs12, "aq")


def test_trace_counts_rewrites(bs12):
    trace = normalize_trace(bs12, "aat")
    assert trace.result == "ta"
    assert trace.area == 1
    assert [(e.prefix, e.letter, e.replacement) for e in trace.events] == [("aa", "t", "AAta")]
    assert normalize_trace(bs12, "aat", record=False).events == []


def test_normal_forms_are_fixed(bs12):
    for u in bs12.ball(5):
        trace = normalize_trace(bs12, u)
        assert trace.result == u
        assert trace.area == 0


def test_step_budget(bs12, monkeypatch):
    with pytest.raises(StepBudgetExceeded):
        normalize(bs12, "aat", step_budget=2)
    monkeypatch.setenv(STEP_BUDGET_ENV, "2")
    with pytest.raises(StepBudgetExceeded):
        normalize(bs12, "aat")
    monkeypatch.setenv(STEP_BUDGET_ENV, "zero")
    with pytest.raises(ValueError):
        normalize(bs12, "aat")


def test_flow_apply(bs12, gp2):
    assert flow_apply(bs12, "aa", "t") == "AAta"
    assert flow_apply(bs12, "", "a") == "a"
    assert flow_apply(gp2, "a", "a") == "A"
    assert flow_apply(gp2, "as", "t") == "t"
    with pytest.raises(NotANormalForm):
        flow_apply(bs12, "aat", "t")
    with pytest.raises(UnknownLetter):
        flow_apply(bs12, "a", "s")


def test_word_problem(bs12, gp2):
    assert word_problem(bs12, "taT", "aa")
    assert word_problem(bs12, "aTaT", "aTaT")
    assert not word_problem(bs12, "a", "t")
    assert word_problem(gp2, "aa", "")


def test_edge_kinds(bs12):
    assert bs12.edge_kind("", "a") is EdgeKind.FORWARD
    assert bs12.edge_kind("ta", "A") is EdgeKind.BACKTRACK
    assert bs12.edge_kind("aa", "t") is EdgeKind.NON_TREE
    assert bs12.is_tree_edge("ta", "A")


def test_ball_is_prefix_closed(bs12):
    ball = list(bs12.ball(4))
    assert len(ball) == len(set(ball))
    members = set(ball)
    assert all(u[:-1] in members for u in ball if u)
    assert [len(u) for u in ball] == sorted(len(u) for u in ball)


def test_presentation_bs12(bs12):
    presentation = stacking_presentation(bs12, 4)
    assert "taTAA" in presentation
    assert "AAtaT" in presentation
    assert "" not in presentation.relators
    assert presentation.radius == 4


def test_presentation_gp2(gp2):
    assert "aa" in stacking_presentation(gp2, 4)


def test_presentation_free_group_is_empty():
    free = free_structure(Alphabet.from_generators("ab"))
    presentation = stacking_presentation(free, 3)
    assert len(presentation) == 0
    assert presentation.stabilized
    assert normalize(free, "abBA").word == ""


def test_presentation_rejects_bad_radius(bs12):
    with pytest.raises(ValueError):
        stacking_presentation(bs12, 0)


def test_extend_generators(bs12):
    extended = extend_generators(bs12, [("b", "tat")])
    assert extended.phi("", "b") == "tat"
    assert extended.phi("aTa", "b") == "tat"
    assert extended.phi("", "B") == "TAT"
    assert extended.bound == bs12.bound
    assert normalize(extended, "b").word == normalize(bs12, "tat").word
    assert normalize(extended, "bB").word == ""
    assert extended.oracle.equal("b", "tat")
    assert extended.expand("ab") == "atat"
    assert extend_generators(bs12, []) is bs12


def test_extend_generators_errors(bs12):
    with pytest.raises(DuplicateGenerator):
        extend_generators(bs12, [("a", "t")])
    with pytest.raises(UnknownLetter):
        extend_generators(bs12, [("b", "sq")])
