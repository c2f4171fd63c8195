import io
import json

import pytest

from stacker.cli import (EXIT_BUDGET, EXIT_DISTINCT, EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, CliConfig,
                         build_parser, main)


def test_normalize(capsys):
    assert main(["normalize", "--group", "bs12", "aat", "taT"]) == EXIT_OK
    assert capsys.readouterr().out.split() == ["ta", "aa"]


def test_normalize_gp(capsys):
    assert main(["normalize", "--group", "gp", "--p", "2", "aa"]) == EXIT_OK
    assert capsys.readouterr().out == "\n"


def test_normalize_json(capsys):
    assert main(["normalize", "--format", "json", "aat"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"word": "aat", "normal_form": "ta"}


def test_normalize_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("aat\nAt\n"))
    assert main(["normalize"]) == EXIT_OK
    assert capsys.readouterr().out.split() == ["ta", "atA"]


def test_parse_errors(capsys):
    assert main(["normalize", "aq"]) == EXIT_PARSE
    assert "error:" in capsys.readouterr().err
    assert main(["wp", "--group", "gp", "a", "a"]) == EXIT_PARSE
    assert main(["wp", "--group", "gp", "--p", "x", "a", "a"]) == EXIT_PARSE
    assert main(["wp", "--group", "bs12", "--p", "3", "a", "a"]) == EXIT_PARSE
    assert main(["verify", "--shard", "3/2"]) == EXIT_PARSE


def test_unknown_group_is_rejected_by_argparse():
    with pytest.raises(SystemExit):
        main(["normalize", "--group", "bs13", "a"])


def test_wp(capsys):
    assert main(["wp", "--group", "bg", "saS", "t"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "EQUAL"
    assert main(["wp", "--group", "gp", "--p", "3", "a", "aa"]) == EXIT_DISTINCT
    assert capsys.readouterr().out.strip() == "DISTINCT"
    assert main(["wp", "", ""]) == EXIT_OK
    capsys.readouterr()
    assert main(["wp", "--format", "json", "taT", "aa"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["equal"] is True


def test_step_budget(capsys):
    assert main(["normalize", "--step-budget", "2", "aat"]) == EXIT_BUDGET
    assert "error:" in capsys.readouterr().err


def test_fsa(capsys):
    assert main(["fsa", "--group", "gp", "--p", "inf", "graphphi"]) == EXIT_UNSUPPORTED
    assert main(["fsa", "--group", "gp", "--p", "2", "--format", "dot"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("digraph nf {")
    assert main(["fsa", "--group", "bg", "--format", "json", "lang:t"]) == EXIT_OK
    assert "transitions" in json.loads(capsys.readouterr().out)
    assert main(["fsa", "--group", "bs12", "tail"]) == EXIT_PARSE


def test_diagram(capsys):
    assert main(["diagram", "--group", "gp", "--p", "2", "", "a"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["kind"] == "degenerate"
    assert record["area"] == 0
    assert main(["diagram", "aa", "t"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["cell"] == "AAtaT"
    assert main(["diagram", "--group", "bg", "--format", "dot", "t", "s"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("digraph")
    assert main(["diagram", "--format", "text", "aat", "a"]) == EXIT_OK
    assert "kind: degenerate" in capsys.readouterr().out


def test_verify(capsys):
    assert main(["verify", "--radius", "2"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["failures"] == []
    assert "flow" in report["checks"]
    assert main(["verify", "--radius", "2", "--mutate", "--format", "text"]) == EXIT_DISTINCT
    assert "F2d" in capsys.readouterr().out


def test_cli_config_validation():
    with pytest.raises(ValueError):
        CliConfig(radius=0)
    with pytest.raises(ValueError):
        CliConfig(format="svg")
    with pytest.raises(ValueError):
        CliConfig(group="gp", p=1)
    assert CliConfig(group="gp", p=None).manager().structure.name == "gpinf"


def test_parser_defaults():
    args = build_parser().parse_args(["fsa"])
    assert args.which == "nf"
    assert args.group == "bs12"
    assert args.radius == 4
