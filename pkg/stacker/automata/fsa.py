"""Deterministic finite state automata with an explicit sink state.

Transition tables are sparse: any move not listed goes to ``sink``, which is
absorbing. ``complement`` only flips the accepting set, so the sink may itself
be accepting; every construction below takes that into account.
"""
import json
import logging
from collections import deque
from dataclasses import dataclass
from typing import (Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping,
                    Optional, Sequence, Set, Tuple)

from ..exceptions import SymbolNotInAlphabet

logger = logging.getLogger(__name__)

Symbol = Hashable


@dataclass(frozen=True, eq=False)
class Fsa:
    alphabet: Tuple[Symbol, ...]
    num_states: int
    start: int
    accepting: FrozenSet[int]
    transitions: Tuple[Mapping[Symbol, int], ...]
    sink: int

    def __post_init__(self):
        if not 0 <= self.start < self.num_states:
            raise ValueError(f"start state {self.start} is out of range")
        if not 0 <= self.sink < self.num_states:
            raise ValueError(f"sink state {self.sink} is out of range")
        if not self.accepting <= set(range(self.num_states)):
            raise ValueError("accepting states must be a subset of the states")
        if self.transitions[self.sink]:
            raise ValueError("the sink state must not have explicit transitions")
        object.__setattr__(self, "_symbols", frozenset(self.alphabet))

    # Construction

    @classmethod
    def from_table(cls, alphabet: Sequence[Symbol], start: Hashable,
                   accepting: Callable[[Hashable], bool],
                   follow: Callable[[Hashable], Iterable[Tuple[Symbol, Hashable]]],
                   sink: Hashable = None, sink_accepting: bool = False) -> "Fsa":
        """Crawl the states reachable from ``start`` and number them.

        ``follow(state)`` yields the explicit moves of ``state``; moves to
        ``sink`` may be omitted. States are numbered in breadth-first order with
        the sink last.
        """
        index: Dict[Hashable, int] = {}
        order: List[Hashable] = []
        table: List[Dict[Symbol, Hashable]] = []
        queue = deque()
        if start != sink:
            index[start] = 0
            order.append(start)
            queue.append(start)
        while queue:
            state = queue.popleft()
            moves = {}
            for symbol, target in follow(state):
                if target == sink:
                    continue
                moves[symbol] = target
                if target not in index:
                    index[target] = len(order)
                    order.append(target)
                    queue.append(target)
            table.append(moves)
        sink_id = len(order)
        transitions = tuple({sym: index[t] for sym, t in moves.items()} for moves in table) + ({},)
        accepting_ids = {index[s] for s in order if accepting(s)}
        if sink_accepting:
            accepting_ids.add(sink_id)
        start_id = index.get(start, sink_id)
        return cls(tuple(alphabet), sink_id + 1, start_id, frozenset(accepting_ids), transitions, sink_id)

    @classmethod
    def empty(cls, alphabet: Sequence[Symbol]) -> "Fsa":
        return cls(tuple(alphabet), 1, 0, frozenset(), ({},), 0)

    @classmethod
    def epsilon(cls, alphabet: Sequence[Symbol]) -> "Fsa":
        return cls(tuple(alphabet), 2, 0, frozenset({0}), ({}, {}), 1)

    @classmethod
    def from_words(cls, alphabet: Sequence[Symbol], words: Iterable[Sequence[Symbol]]) -> "Fsa":
        """The finite language ``words`` (a trie)."""
        words = [tuple(w) for w in words]
        ends = set(words)
        prefixes = {w[:i] for w in words for i in range(len(w) + 1)}
        return cls.from_table(
            alphabet, (),
            accepting=lambda s: s in ends,
            follow=lambda s: [(x, s + (x,)) for x in alphabet if s + (x,) in prefixes],
        )

    # Running

    @property
    def symbols(self) -> FrozenSet[Symbol]:
        return self._symbols

    def step(self, state: int, symbol: Symbol) -> int:
        if symbol not in self._symbols:
            raise SymbolNotInAlphabet(symbol)
        return self.transitions[state].get(symbol, self.sink)

    def next_state(self, state: int, symbol: Symbol) -> int:
        """Like ``step`` but routes foreign symbols to the sink."""
        return self.transitions[state].get(symbol, self.sink)

    def run(self, word: Iterable[Symbol], state: Optional[int] = None) -> int:
        state = self.start if state is None else state
        for symbol in word:
            state = self.step(state, symbol)
        return state

    def accepts(self, word: Iterable[Symbol]) -> bool:
        return self.run(word) in self.accepting

    def is_accepting(self, state: int) -> bool:
        return state in self.accepting

    @property
    def sink_accepting(self) -> bool:
        return self.sink in self.accepting

    # Analysis

    def reachable(self) -> Set[int]:
        seen = {self.start}
        queue = deque([self.start])
        full = len(self._symbols)
        while queue:
            state = queue.popleft()
            moves = self.transitions[state]
            targets = list(moves.values())
            if len(moves) < full:
                targets.append(self.sink)
            for target in targets:
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
        return seen

    def is_empty(self) -> bool:
        return not (self.reachable() & self.accepting)

    def minimize(self) -> "Fsa":
        """Merge equivalent states by partition refinement."""
        states = sorted(self.reachable() | {self.sink})
        block = {s: int(s in self.accepting) for s in states}
        count = len(set(block.values()))
        while True:
            signatures = {}
            new_block = {}
            for s in states:
                sink_block = block[self.sink]
                moves = frozenset(
                    (sym, block[t]) for sym, t in self.transitions[s].items() if block[t] != sink_block
                )
                key = (block[s], moves)
                if key not in signatures:
                    signatures[key] = len(signatures)
                new_block[s] = signatures[key]
            block = new_block
            if len(signatures) == count:
                break
            count = len(signatures)
        sink_block = block[self.sink]
        representative = {}
        for s in states:
            representative.setdefault(block[s], s)
        return Fsa.from_table(
            self.alphabet, block[self.start],
            accepting=lambda b: representative[b] in self.accepting,
            follow=lambda b: [(sym, block[t]) for sym, t in self.transitions[representative[b]].items()],
            sink=sink_block,
            sink_accepting=self.sink_accepting,
        )

    def words(self, max_length: int) -> List[Tuple[Symbol, ...]]:
        """Accepted words of length at most ``max_length``, in breadth-first order."""
        found = []
        layer = [((), self.start)]
        for length in range(max_length + 1):
            for word, state in layer:
                if state in self.accepting:
                    found.append(word)
            if length == max_length:
                break
            nxt = []
            for word, state in layer:
                for symbol in self.alphabet:
                    target = self.next_state(state, symbol)
                    if target == self.sink and not self.sink_accepting:
                        continue
                    nxt.append((word + (symbol,), target))
            layer = nxt
        return found

    # Export

    def to_dict(self) -> dict:
        return {
            "alphabet": [_symbol_to_json(s) for s in self.alphabet],
            "states": list(range(self.num_states)),
            "start": self.start,
            "accepting": sorted(self.accepting),
            "sink": self.sink,
            "transitions": [
                {"from": src, "symbol": _symbol_to_json(sym), "to": dst}
                for src, moves in enumerate(self.transitions)
                for sym, dst in moves.items()
            ],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "Fsa":
        num_states = len(data["states"])
        transitions = [dict() for _ in range(num_states)]
        for move in data["transitions"]:
            transitions[move["from"]][_symbol_from_json(move["symbol"])] = move["to"]
        return cls(
            tuple(_symbol_from_json(s) for s in data["alphabet"]),
            num_states,
            data["start"],
            frozenset(data["accepting"]),
            tuple(transitions),
            data["sink"],
        )

    @classmethod
    def from_json(cls, text: str) -> "Fsa":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "fsa") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point];']
        for state in range(self.num_states):
            if state == self.sink:
                continue
            shape = "doublecircle" if state in self.accepting else "circle"
            lines.append(f'  {state} [shape={shape}];')
        lines.append(f"  __start -> {self.start};")
        for src, moves in enumerate(self.transitions):
            for sym, dst in moves.items():
                label = _symbol_label(sym)
                lines.append(f'  {src} -> {dst} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return (f"Fsa(states={self.num_states}, alphabet={len(self.alphabet)}, "
                f"accepting={len(self.accepting)})")


def _symbol_to_json(symbol):
    return list(symbol) if isinstance(symbol, tuple) else symbol


def _symbol_from_json(symbol):
    return tuple(symbol) if isinstance(symbol, list) else symbol


def _symbol_label(symbol) -> str:
    if isinstance(symbol, tuple):
        return "(" + ",".join(symbol) + ")"
    return str(symbol)
