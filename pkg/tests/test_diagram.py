import dataclasses
import json

import pytest

from stacker.diagram import (COMPOSITE, DEGENERATE, MINIMAL, Diagram, build_diagram, check_diagram,
                             diagram_to_dict, export_diagram, loop_area, parse_diagram)
from stacker.exceptions import NotANormalForm, UnsupportedFormat
from stacker.rewriting import normalize, normalize_trace


def test_tree_edges_are_degenerate(bs12):
    diagram = build_diagram(bs12, "", "a")
    assert diagram.kind == DEGENERATE
    assert diagram.area == 0
    assert diagram.upper == "a"
    backtrack = build_diagram(bs12, "ta", "A")
    assert backtrack.kind == DEGENERATE
    assert backtrack.upper == "t"


def test_minimal_diagram(bs12):
    diagram = build_diagram(bs12, "aa", "t")
    assert diagram.kind == MINIMAL
    assert diagram.cell == "AAtaT"
    assert diagram.area == 1
    assert diagram.upper == "ta"
    assert [child.x for child in diagram.children] == list("AAta")
    assert check_diagram(diagram, bs12) == (True, [])


def test_gp2_minimal_diagram(gp2):
    diagram = build_diagram(gp2, "aT", "a")
    assert diagram.kind == MINIMAL
    assert diagram.cell == "tATataTA"
    assert diagram.upper == normalize(gp2, "aTa").word
    assert check_diagram(diagram, gp2)[0]


def test_composite_diagrams(bs12):
    inner = build_diagram(bs12, "taa", "T")
    assert inner.kind == COMPOSITE
    assert inner.area == 2
    outer = build_diagram(bs12, "taaa", "T")
    assert outer.kind == COMPOSITE
    assert outer.area == 3
    assert outer.area == normalize_trace(bs12, "taaaT").area
    assert check_diagram(outer, bs12)[0]


def test_memo_is_shared(bs12):
    memo = {}
    first = build_diagram(bs12, "taaa", "T", memo=memo)
    assert ("taa", "T") in memo
    assert build_diagram(bs12, "taaa", "T", memo=memo) is first


def test_build_rejects_non_normal_forms(bs12):
    with pytest.raises(NotANormalForm):
        build_diagram(bs12, "aat", "a")


def test_check_diagram_catches_bad_cells(bs12):
    diagram = build_diagram(bs12, "aa", "t")
    broken = dataclasses.replace(diagram, cell="AAtaA")
    ok, reasons = check_diagram(broken, bs12)
    assert not ok
    assert any("does not close" in reason for reason in reasons)


def test_check_diagram_catches_bad_degenerate(bs12):
    ok, reasons = check_diagram(Diagram.degenerate("aat", "a", "aata"), bs12)
    assert not ok
    assert any("not a normal form" in reason for reason in reasons)
    ok, _ = check_diagram(Diagram.degenerate("aa", "t", "aat"), bs12)
    assert not ok


def test_check_diagram_with_relators(bs12):
    diagram = build_diagram(bs12, "aa", "t")
    assert check_diagram(diagram, bs12, relators=frozenset())[0] is False


def test_json_export(bs12):
    diagram = build_diagram(bs12, "aa", "t")
    record = json.loads(export_diagram(diagram, "json"))
    assert record["kind"] == MINIMAL
    assert record["cell"] == "AAtaT"
    assert record["boundary"] == {"lower": "aa", "x": "t", "upper": "ta"}
    assert record["area"] == 1
    assert len(record["children"]) == 4
    assert record == diagram_to_dict(diagram)
    assert parse_diagram(export_diagram(diagram).decode("utf-8")) == diagram


def test_parse_degenerate():
    diagram = parse_diagram('{"kind": "degenerate", "boundary": {"lower": "", "x": "a", "upper": "a"}, "path": "a"}')
    assert diagram == Diagram.degenerate("", "a", "a")
    with pytest.raises(ValueError):
        parse_diagram('{"kind": "triangle", "boundary": {"lower": "", "x": "a", "upper": "a"}}')


def test_dot_export(bs12):
    dot = export_diagram(build_diagram(bs12, "taa", "T"), "dot").decode("utf-8")
    assert dot.startswith("digraph diagram {")
    assert 'label="ATaat"' in dot
    assert "->" in dot
    degenerate = export_diagram(build_diagram(bs12, "", "a"), "dot").decode("utf-8")
    assert "d0" in degenerate
    with pytest.raises(UnsupportedFormat):
        export_diagram(build_diagram(bs12, "", "a"), "svg")


def test_loop_area(bs12):
    assert loop_area(bs12, "") == 0
    assert loop_area(bs12, "taTAA") == 1
    with pytest.raises(ValueError):
        loop_area(bs12, "a")


def test_diagram_handler(make_manager):
    manager = make_manager("bs12")
    diagram = manager.diagram.build("aa", "t")
    assert manager.diagram.area(diagram) == 1
    assert manager.diagram.check(diagram)[0]
    assert manager.diagram.parse(manager.diagram.export(diagram).decode("utf-8")) == diagram
    assert manager.diagram.loop_area("tATaa") == 1
