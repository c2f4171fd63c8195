import logging
import os
from typing import TYPE_CHECKING, Union

from ..automata import Fsa
from ..diagram import Diagram, export_diagram
from .. import groups
from ..exceptions import UnsupportedForInfiniteP, UnsupportedFormat
from ..verify import VerificationReport

if TYPE_CHECKING:
    from ..manager import StackingManager  # only used for type hints, won't cause import loop

logger = logging.getLogger(__name__)

FSA_FORMATS = ("text", "json", "dot")


class ExportHandler:
    def __init__(self, manager: 'StackingManager'):
        self.manager = manager

    def fsa(self, which: str) -> Fsa:
        """
        Look up a named automaton of the configured group.

        Parameters:
            which (str): One of ``nf``, ``graphphi``, ``graphphi:L<k>``, ``ntilde:<delta>,<eta>``,
                ``ndeltaeta:<delta>,<eta>``, ``meta:<eta>``, ``tail``, ``head`` (gp), or
                ``lang:<letter>`` (bg).

        Raises:
            ValueError: If ``which`` does not name an automaton of the configured group.
            UnsupportedForInfiniteP: If the automaton only exists for finite p.

        Returns:
            Fsa: The minimized automaton.
        """
        group, p = self.manager.group, self.manager.p
        name, _, argument = which.partition(":")
        name = name.lower()
        if name == "nf":
            if self.manager.structure.nf_fsa is None:
                raise ValueError(f"structure {self.manager.structure.name!r} has no normal-form automaton")
            return self.manager.structure.nf_fsa
        if group == "bg" and name == "lang":
            languages = groups.bg_languages()
            if argument not in languages:
                raise ValueError(f"lang must be one of {', '.join(languages)}, got {argument!r}")
            return languages[argument]
        if group != "gp":
            raise ValueError(f"automaton {which!r} is not available for group {group!r}")
        if name == "graphphi":
            return groups.graph_phi_piece(p, argument) if argument else groups.graph_phi_fsa(p)
        if name == "tail":
            return groups.tail_fsa(p)
        if name == "head":
            return groups.head_fsa(p)
        if name == "meta":
            return groups.m_eta(p, _parse_signs(argument, 1)[0])
        if name in ("ntilde", "ndeltaeta"):
            delta, eta = _parse_signs(argument, 2)
            if p is None:
                raise UnsupportedForInfiniteP(f"the automaton {which}")
            build = groups.ntilde_fsa if name == "ntilde" else groups.n_delta_eta
            return build(p, delta, eta)
        raise ValueError(f"unknown automaton {which!r}")

    def render_fsa(self, fsa: Fsa, fmt: str = "text", name: str = "fsa") -> str:
        if fmt == "json":
            return fsa.to_json(indent=2) + "\n"
        if fmt == "dot":
            return fsa.to_dot(_dot_name(name))
        if fmt == "text":
            lines = [f"{name}: {fsa!r}", f"start: {fsa.start}",
                     f"accepting: {' '.join(str(s) for s in sorted(fsa.accepting))}"]
            for src, moves in enumerate(fsa.transitions):
                for symbol, dst in moves.items():
                    label = "(" + ",".join(symbol) + ")" if isinstance(symbol, tuple) else symbol
                    lines.append(f"{src} --{label}--> {dst}")
            return "\n".join(lines) + "\n"
        raise UnsupportedFormat(fmt, FSA_FORMATS)

    def render_report(self, report: VerificationReport, fmt: str = "json") -> str:
        if fmt == "json":
            return report.to_json() + "\n"
        if fmt == "text":
            return report.summary() + "\n"
        raise UnsupportedFormat(fmt, ("text", "json"))

    def render_diagram(self, diagram: Diagram, fmt: str = "json") -> str:
        if fmt == "text":
            lines = [f"boundary: {diagram.lower or 'ε'} · {diagram.x} ~ {diagram.upper or 'ε'}",
                     f"kind: {diagram.kind}", f"area: {diagram.area}"]
            lines.extend(f"cell: {cell}" for cell in diagram.cells())
            return "\n".join(lines) + "\n"
        return export_diagram(diagram, fmt).decode("utf-8") + "\n"

    def write(self, payload: Union[str, bytes], output_path: str) -> None:
        """
        Write a rendering to ``output_path``, creating parent directories.

        Parameters:
            payload (Union[str, bytes]): Text or bytes from one of the ``render_*`` methods.
            output_path (str): Destination file.
        """
        directory = os.path.dirname(output_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        data = payload.encode("utf-8") if isinstance(payload, str) else payload
        with open(output_path, "wb") as f:
            f.write(data)
        logger.info(f"> wrote {len(data)} bytes to {output_path}")


def _parse_signs(argument: str, count: int):
    parts = [part.strip() for part in argument.split(",")] if argument else []
    if len(parts) != count:
        raise ValueError(f"expected {count} sign(s) of the form 1 or -1, got {argument!r}")
    signs = []
    for part in parts:
        if part not in ("1", "+1", "-1"):
            raise ValueError(f"signs must be 1 or -1, got {part!r}")
        signs.append(-1 if part == "-1" else 1)
    return signs


def _dot_name(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name) or "fsa"
