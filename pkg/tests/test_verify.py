import json

import pytest

from stacker.exceptions import UnsupportedForInfiniteP
from stacker.rewriting import KeyOracle, StackingStructure, normalize
from stacker.verify import (TERMINATION_NOTE, Failure, VerificationReport, edge_label, mutate_structure,
                            verify_flow)


def _axioms(report):
    return {failure.axiom for failure in report.failures}


def test_flow_bs12(bs12):
    report = verify_flow(bs12, 4)
    assert report.ok, report.summary()
    assert report.edges_checked == 4 * len(list(bs12.ball(4)))
    assert report.max_phi_len == 4
    assert TERMINATION_NOTE in report.notes
    assert report.checks == ["flow"]


@pytest.mark.parametrize("fixture, radius", [("gp2", 3), ("gp3", 3), ("gpinf", 4), ("bg", 3)])
def test_flow_other_groups(request, fixture, radius):
    structure = request.getfixturevalue(fixture)
    report = verify_flow(structure, radius)
    assert report.ok, report.summary()
    assert report.max_phi_len <= structure.bound


def test_flow_shards_add_up(bs12):
    whole = verify_flow(bs12, 3)
    parts = verify_flow(bs12, 3, shard_spec=(0, 2)).merge(verify_flow(bs12, 3, shard_spec=(1, 2)))
    assert parts.edges_checked == whole.edges_checked
    assert parts.ok
    with pytest.raises(ValueError):
        verify_flow(bs12, 3, shard_spec=(2, 2))


def test_flow_rejects_bad_radius(bs12):
    with pytest.raises(ValueError):
        verify_flow(bs12, 0)


def test_flow_reports_wrong_elements(bs12):
    report = verify_flow(bs12, 2, oracle=KeyOracle(len))
    assert not report.ok
    assert _axioms(report) == {"F1"}
    assert any(failure.input == edge_label("aa", "t") for failure in report.failures)


def test_flow_reports_non_termination(bs12):
    stuck = StackingStructure("stuck", bs12.alphabet, bs12.recognizer, lambda u, z: z, 4, oracle=bs12.oracle)
    report = verify_flow(stuck, 2, step_budget=50)
    assert _axioms(report) == {"F2r"}


def test_mutated_structure_fails_tree_edges(bs12):
    mutated = mutate_structure(bs12)
    assert mutated.name == "bs12~mutated"
    assert mutated.phi("", "a") == "aaA"
    assert mutated.phi("a", "A") == "A"
    assert normalize(mutated, "aat").word == "ta"
    report = verify_flow(mutated, 2)
    assert _axioms(report) == {"F2d"}


def test_oracle_sweeps(make_manager):
    for group, p, length in (("bs12", None, 4), ("gp", 2, 3), ("gp", None, 6), ("bg", None, 3)):
        report = make_manager(group, p).verify.exhaustive_oracle_sweep(length)
        assert report.ok, report.summary()
        assert report.checks == ["oracle-exhaustive"]


def test_random_oracle_sweep(make_manager):
    report = make_manager("gp", 3).verify.random_oracle_sweep(30, 10, seed=7)
    assert report.ok, report.summary()
    assert report.edges_checked == 30
    assert any("seed 7" in note for note in report.notes)


def test_random_oracle_sweep_infinite_p(make_manager):
    report = make_manager("gp", None).verify.random_oracle_sweep(300, 12, seed=11)
    assert report.ok, report.summary()
    assert report.edges_checked == 300


def test_flow_catches_a_edges_sent_to_t(gp2):
    def phi(u, z):
        if z == "a" and not gp2.is_tree_edge(u, z):
            return "t"
        return gp2.phi(u, z)

    broken = StackingStructure("gp2~a-to-t", gp2.alphabet, gp2.recognizer, phi, gp2.bound, oracle=gp2.oracle)
    report = verify_flow(broken, 2)
    assert "F1" in _axioms(report)
    assert any(failure.input == edge_label("a", "a") for failure in report.failures)


def test_oracle_sweep_catches_wrong_oracle(bs12, make_manager):
    manager = make_manager("bs12")
    wrong = StackingStructure("parity", bs12.alphabet, bs12.recognizer, bs12.phi, bs12.bound,
                              oracle=KeyOracle(lambda w: len(w) % 2))
    manager.structure = wrong
    report = manager.verify.exhaustive_oracle_sweep(3)
    assert {"oracle", "uniqueness"} <= _axioms(report)


def test_ntilde_sweep(make_manager):
    report = make_manager("gp", 2).verify.ntilde_sweep(6)
    assert report.ok, report.summary()
    assert report.edges_checked == 4 * sum(3 ** n for n in range(7))
    with pytest.raises(UnsupportedForInfiniteP):
        make_manager("gp", None).verify.ntilde_sweep(4)
    with pytest.raises(ValueError):
        make_manager("bs12").verify.ntilde_sweep(4)


def test_graphphi_sweep(make_manager):
    verify = make_manager("gp", 2).verify
    report = verify.graphphi_sweep(radius=2)
    assert report.ok, report.summary()
    sampled = verify.graphphi_sweep(radius=5, sample=4, seed=3)
    assert sampled.ok, sampled.summary()


def test_language_sweeps(make_manager):
    gp2 = make_manager("gp", 2).verify
    for report in (gp2.tail_lemma_sweep(3), gp2.prefix_closure_sweep(4), gp2.case6_agreement_sweep(4)):
        assert report.ok, report.summary()
    assert make_manager("gp", None).verify.case6_agreement_sweep(3).ok
    bg = make_manager("bg").verify
    assert bg.tail_lemma_sweep(3).ok
    assert bg.bg_language_sweep(4).ok
    with pytest.raises(ValueError):
        make_manager("bs12").verify.tail_lemma_sweep(2)
    with pytest.raises(ValueError):
        make_manager("bs12").verify.bg_language_sweep(2)


def test_case6_descent_sweep(make_manager):
    report = make_manager("gp", 2).verify.case6_descent_sweep(4, words=["aTTa", "aaTTTA"])
    assert report.ok, report.summary()
    assert report.edges_checked > 0


def test_diagram_sweep(make_manager):
    for group, p, radius in (("bs12", None, 3), ("gp", 2, 2), ("bg", None, 2)):
        report = make_manager(group, p).verify.diagram_sweep(radius)
        assert report.ok, report.summary()


def test_acceptance(make_manager):
    report = make_manager("bs12").verify.acceptance(3, random_count=10)
    assert report.ok, report.summary()
    assert {"flow", "oracle-exhaustive", "oracle-random", "diagram"} <= set(report.checks)
    gp = make_manager("gp", 2).verify.acceptance(2)
    assert gp.ok, gp.summary()
    assert {"ntilde", "graphphi", "case6-descent", "tail-lemma"} <= set(gp.checks)


def test_acceptance_fails_for_mutant(make_manager):
    manager = make_manager("bs12")
    manager.structure = mutate_structure(manager.structure)
    report = manager.verify.acceptance(2)
    assert not report.ok
    assert "F2d" in _axioms(report)


def test_report_roundtrip():
    report = VerificationReport(radius=3, edges_checked=10, max_phi_len=4, max_steps=7)
    report.fail("(a, t)", "F1", "different")
    report.note("note")
    report.ran("flow")
    restored = VerificationReport.from_dict(json.loads(report.to_json()))
    assert restored == report
    assert restored.failures == [Failure("(a, t)", "F1", "different")]
    assert "status: 1 failure(s)" in report.summary()


def test_report_merge():
    left = VerificationReport(radius=2, edges_checked=3, max_steps=5)
    left.note("shared")
    right = VerificationReport(radius=4, edges_checked=4, max_phi_len=2)
    right.note("shared")
    right.fail("x", "bound", "too long")
    merged = left.merge(right)
    assert (merged.radius, merged.edges_checked, merged.max_phi_len, merged.max_steps) == (4, 7, 2, 5)
    assert merged.notes == ["shared"]
    assert not merged.ok
    assert "status: OK" in left.summary()
