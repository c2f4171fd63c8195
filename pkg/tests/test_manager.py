import json

import pytest

from stacker import StackingManager
from stacker.exceptions import InvalidModulus, UnsupportedForInfiniteP, UnsupportedFormat
from stacker.groups import bg_structure
from stacker.verify import VerificationReport


def test_setup_group(make_manager):
    manager = make_manager("gp", 3, step_budget=500)
    assert manager.group == "gp"
    assert manager.p == 3
    assert manager.step_budget == 500
    assert manager.structure.name == "gp3"
    assert manager.rewrite.normalize("aaaa").word == "a"


def test_setup_twice_fails(make_manager):
    manager = make_manager("bs12")
    with pytest.raises(ValueError, match="already initialized"):
        manager.setup_group("bg")


def test_setup_validation():
    with pytest.raises(ValueError):
        StackingManager().setup_group("bs13")
    with pytest.raises(InvalidModulus):
        StackingManager().setup_group("gp", 1)
    with pytest.raises(ValueError):
        StackingManager().setup_group("bs12", step_budget=0)


def test_p_is_ignored_outside_gp(make_manager):
    manager = make_manager("bs12", 5)
    assert manager.p is None
    assert manager.structure.name == "bs12"


def test_setup_structure():
    manager = StackingManager()
    manager.setup_structure(bg_structure())
    assert manager.group == "bg"
    assert manager.rewrite.word_problem("saS", "t")


def test_rewrite_handler(make_manager):
    rewrite = make_manager("bs12").rewrite
    assert [nf.word for nf in rewrite.normalize_many(["aat", "taT"])] == ["ta", "aa"]
    assert rewrite.trace("aat").area == 1
    assert rewrite.flow_apply("aa", "t") == "AAta"
    assert "taTAA" in rewrite.stacking_presentation(2)


def test_export_fsa_lookup(make_manager):
    gp2 = make_manager("gp", 2).export
    assert gp2.fsa("nf").accepts("Sasta")
    assert gp2.fsa("tail").accepts("Sas")
    assert gp2.fsa("head").accepts("taT")
    assert gp2.fsa("meta:1").accepts("t")
    assert gp2.fsa("ntilde:1,1").accepts("aT")
    assert gp2.fsa("ndeltaeta:1,1").accepts("aT")
    assert gp2.fsa("graphphi:L1") is not None
    with pytest.raises(ValueError):
        gp2.fsa("ntilde:1")
    with pytest.raises(ValueError):
        gp2.fsa("ntilde:1,2")
    with pytest.raises(ValueError):
        gp2.fsa("bogus")
    with pytest.raises(UnsupportedForInfiniteP):
        make_manager("gp", None).export.fsa("ntilde:1,1")
    bg = make_manager("bg").export
    assert bg.fsa("lang:T").accepts("Taa")
    with pytest.raises(ValueError):
        bg.fsa("lang:s")
    with pytest.raises(ValueError):
        make_manager("bs12").export.fsa("tail")


def test_render_fsa(make_manager):
    export = make_manager("bs12").export
    fsa = export.fsa("nf")
    assert json.loads(export.render_fsa(fsa, "json"))["start"] == fsa.start
    assert export.render_fsa(fsa, "dot", name="graphphi:L1").startswith("digraph graphphi_L1 {")
    text = export.render_fsa(fsa, "text", name="nf")
    assert text.startswith("nf: ")
    assert "--a-->" in text
    with pytest.raises(UnsupportedFormat):
        export.render_fsa(fsa, "svg")


def test_render_report_and_diagram(make_manager):
    manager = make_manager("bs12")
    report = VerificationReport(radius=2)
    assert json.loads(manager.export.render_report(report))["radius"] == 2
    assert "status: OK" in manager.export.render_report(report, "text")
    with pytest.raises(UnsupportedFormat):
        manager.export.render_report(report, "dot")
    diagram = manager.diagram.build("aa", "t")
    text = manager.export.render_diagram(diagram, "text")
    assert "cell: AAtaT" in text
    assert "area: 1" in text
    assert json.loads(manager.export.render_diagram(diagram))["kind"] == "minimal"


def test_write(make_manager, tmp_path):
    export = make_manager("bs12").export
    target = tmp_path / "out" / "nf.dot"
    export.write(export.render_fsa(export.fsa("nf"), "dot"), str(target))
    assert target.read_text().startswith("digraph")
    export.write(b"{}", str(tmp_path / "raw.json"))
    assert (tmp_path / "raw.json").read_bytes() == b"{}"
