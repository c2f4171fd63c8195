"""Nondeterministic automata with epsilon moves, used internally for regex
compilation, concatenation and star. Only deterministic ``Fsa`` values leave
this package."""
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Set

from .fsa import Fsa, Symbol


class Nfa:
    def __init__(self):
        self.moves: List[Dict[Symbol, Set[int]]] = []
        self.eps: List[Set[int]] = []
        self.start: int = 0
        self.accepting: Set[int] = set()

    def add_state(self) -> int:
        self.moves.append({})
        self.eps.append(set())
        return len(self.moves) - 1

    def add_move(self, src: int, symbol: Symbol, dst: int) -> None:
        self.moves[src].setdefault(symbol, set()).add(dst)

    def add_eps(self, src: int, dst: int) -> None:
        self.eps[src].add(dst)

    def embed(self, fsa: Fsa) -> Dict[int, int]:
        """Copy ``fsa`` into this automaton and return the state mapping.

        A dead sink is dropped; an accepting sink is kept with explicit
        self-loops so the copy needs no implicit moves.
        """
        keep_sink = fsa.sink_accepting
        mapping = {}
        for state in range(fsa.num_states):
            if state == fsa.sink and not keep_sink:
                continue
            mapping[state] = self.add_state()
        for state, moves in enumerate(fsa.transitions):
            if state not in mapping:
                continue
            for symbol, target in moves.items():
                self.add_move(mapping[state], symbol, mapping[target])
            if keep_sink:
                for symbol in fsa.alphabet:
                    if symbol not in moves:
                        self.add_move(mapping[state], symbol, mapping[fsa.sink])
        return mapping

    def closure(self, states: Iterable[int]) -> FrozenSet[int]:
        stack = list(states)
        seen = set(stack)
        while stack:
            state = stack.pop()
            for target in self.eps[state]:
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)

    def determinize(self, alphabet: Sequence[Symbol]) -> Fsa:
        """Subset construction; the empty subset is the sink."""
        symbols = frozenset(alphabet)

        def follow(subset: FrozenSet[int]):
            targets: Dict[Symbol, Set[int]] = {}
            for state in subset:
                for symbol, dsts in self.moves[state].items():
                    if symbol in symbols:
                        targets.setdefault(symbol, set()).update(dsts)
            return [(symbol, self.closure(dsts)) for symbol, dsts in targets.items()]

        return Fsa.from_table(
            alphabet,
            self.closure([self.start]),
            accepting=lambda subset: bool(subset & self.accepting),
            follow=follow,
            sink=frozenset(),
        )
