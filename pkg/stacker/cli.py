"""Command-line front end.

Exit codes: 0 success or EQUAL, 1 DISTINCT or a failed verification, 2 parse
or usage error, 3 step budget exceeded, 4 unsupported for p = inf.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from stacker.exceptions import StepBudgetExceeded, UnsupportedForInfiniteP
from stacker.groups import GROUPS
from stacker.laurent import Modulus, check_modulus
from stacker.manager import StackingManager
from stacker.utils import DEFAULT_SEED, parse_modulus
from stacker.verify import mutate_structure

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISTINCT = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_UNSUPPORTED = 4

FORMATS = ("text", "json", "dot")


@dataclass
class CliConfig:
    group: str = "bs12"
    p: Modulus = None
    radius: int = 4
    step_budget: Optional[int] = None
    format: Optional[str] = None
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValueError(f"group must be one of {', '.join(GROUPS)}, got {self.group!r}")
        if self.group == "gp":
            self.p = check_modulus(self.p)
        elif self.p is not None:
            raise ValueError(f"--p only applies to group 'gp', not {self.group!r}")
        if self.radius < 1:
            raise ValueError(f"radius must be a positive integer, got {self.radius}")
        if self.step_budget is not None and self.step_budget < 1:
            raise ValueError(f"step budget must be a positive integer, got {self.step_budget}")
        if self.format is not None and self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")

    def manager(self) -> StackingManager:
        manager = StackingManager()
        manager.setup_group(self.group, self.p, self.step_budget)
        return manager


def _common_arguments() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--group", type=str, default="bs12", choices=GROUPS, help="Group to work in")
    parent.add_argument("--p", type=str, default=None, help="Modulus for group gp: an integer >= 2 or 'inf'")
    parent.add_argument("--radius", type=int, default=4, help="Radius of the ball swept by verify")
    parent.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for randomized sweeps")
    parent.add_argument("--format", type=str, default=None, choices=FORMATS, help="Output format")
    parent.add_argument("--step-budget", type=int, default=None,
                        help="Rewrite steps per normalization (default $STACKER_STEP_BUDGET or 10**6)")
    parent.add_argument("--verbose", action="store_true", help="Log at DEBUG level to stderr")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _common_arguments()
    parser = argparse.ArgumentParser(prog="stacker", description="Stacking structures for BS(1,2), "
                                     "the Baumslag-Gersten group and the groups G_p")
    commands = parser.add_subparsers(dest="command", required=True)

    normalize = commands.add_parser("normalize", parents=[parent], help="Print normal forms")
    normalize.add_argument("words", nargs="*", help="Words to normalize; read one per line from stdin if omitted")

    wp = commands.add_parser("wp", parents=[parent], help="Decide whether two words are equal")
    wp.add_argument("w1")
    wp.add_argument("w2")

    verify = commands.add_parser("verify", parents=[parent], help="Run the verification sweeps")
    verify.add_argument("--random", type=int, default=0, help="Number of random words for the oracle sweep")
    verify.add_argument("--random-length", type=int, default=12, help="Maximum length of random words")
    verify.add_argument("--shard", type=str, default="0/1", help="Check only shard INDEX/COUNT of the flow sweep")
    verify.add_argument("--progress", action="store_true", help="Show progress bars")
    verify.add_argument("--mutate", action="store_true", help=argparse.SUPPRESS)

    fsa = commands.add_parser("fsa", parents=[parent], help="Export an automaton")
    fsa.add_argument("which", nargs="?", default="nf",
                     help="nf | graphphi[:L<k>] | ntilde:<d>,<e> | ndeltaeta:<d>,<e> | meta:<e> | tail | head | lang:<x>")

    diagram = commands.add_parser("diagram", parents=[parent], help="Export the diagram of an edge (u, z)")
    diagram.add_argument("word")
    diagram.add_argument("letter")
    return parser


def _read_words(words: Sequence[str]) -> List[str]:
    if words:
        return list(words)
    return [line.strip() for line in sys.stdin]


def cmd_normalize(cfg: CliConfig, words: Sequence[str]) -> int:
    manager = cfg.manager()
    for word in _read_words(words):
        nf = manager.rewrite.normalize(word).word
        if cfg.format == "json":
            print(json.dumps({"word": word, "normal_form": nf}))
        else:
            print(nf)
    return EXIT_OK


def cmd_wp(cfg: CliConfig, w1: str, w2: str) -> int:
    equal = cfg.manager().rewrite.word_problem(w1, w2)
    if cfg.format == "json":
        print(json.dumps({"w1": w1, "w2": w2, "equal": equal}))
    else:
        print("EQUAL" if equal else "DISTINCT")
    return EXIT_OK if equal else EXIT_DISTINCT


def cmd_verify(cfg: CliConfig, random_count: int = 0, random_length: int = 12, shard_spec=(0, 1),
               show_progress: bool = False, mutate: bool = False) -> int:
    manager = cfg.manager()
    if mutate:
        manager.structure = mutate_structure(manager.structure)
    report = manager.verify.acceptance(cfg.radius, random_count, random_length, cfg.seed, shard_spec, show_progress)
    sys.stdout.write(manager.export.render_report(report, "text" if cfg.format == "text" else "json"))
    return EXIT_OK if report.ok else EXIT_DISTINCT


def cmd_fsa(cfg: CliConfig, which: str) -> int:
    manager = cfg.manager()
    fsa = manager.export.fsa(which)
    sys.stdout.write(manager.export.render_fsa(fsa, cfg.format or "text", name=which))
    return EXIT_OK


def cmd_diagram(cfg: CliConfig, word: str, letter: str) -> int:
    manager = cfg.manager()
    normal = manager.rewrite.normalize(word)
    if normal.word != word:
        logger.warning(f"> {word!r} is not a normal form; using {normal.word!r}")
    diagram = manager.diagram.build(normal.word, letter)
    sys.stdout.write(manager.export.render_diagram(diagram, cfg.format or "json"))
    return EXIT_OK


def _parse_shard(text: str):
    try:
        index, count = (int(part) for part in text.split("/"))
    except ValueError:
        raise ValueError(f"shard must look like INDEX/COUNT, got {text!r}")
    if count < 1 or not 0 <= index < count:
        raise ValueError(f"shard index must satisfy 0 <= index < count, got {text!r}")
    return index, count


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        if args.group == "gp" and args.p is None:
            raise ValueError("group gp needs --p (an integer >= 2 or 'inf')")
        cfg = CliConfig(
            group=args.group,
            p=parse_modulus(args.p) if args.p is not None else None,
            radius=args.radius,
            step_budget=args.step_budget,
            format=args.format,
            seed=args.seed,
        )
        if args.command == "normalize":
            return cmd_normalize(cfg, args.words)
        if args.command == "wp":
            return cmd_wp(cfg, args.w1, args.w2)
        if args.command == "verify":
            return cmd_verify(cfg, args.random, args.random_length, _parse_shard(args.shard),
                              args.progress, args.mutate)
        if args.command == "fsa":
            return cmd_fsa(cfg, args.which)
        return cmd_diagram(cfg, args.word, args.letter)
    except UnsupportedForInfiniteP as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except StepBudgetExceeded as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
