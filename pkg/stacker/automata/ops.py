"""Boolean and rational operations on ``Fsa`` values.

Union and intersection are product constructions over the union of the
argument alphabets; a symbol missing from one argument's alphabet is rejected
by that argument, even when its sink accepts. Concatenation and star go
through an ``Nfa`` and the subset construction.
"""
import logging
from typing import List, Sequence

from .fsa import Fsa, Symbol
from .nfa import Nfa

logger = logging.getLogger(__name__)

OPERATIONS = ("union", "intersection", "complement", "concat", "star", "difference")


def merge_alphabets(fsas: Sequence[Fsa]) -> tuple:
    merged = []
    seen = set()
    for fsa in fsas:
        for symbol in fsa.alphabet:
            if symbol not in seen:
                seen.add(symbol)
                merged.append(symbol)
    return tuple(merged)


def _widen(fsa: Fsa, alphabet: tuple) -> Fsa:
    """``fsa`` over ``alphabet``, with symbols outside its own alphabet going to a rejecting sink."""
    if all(symbol in fsa.symbols for symbol in alphabet):
        return fsa
    if not fsa.sink_accepting:
        return Fsa(alphabet, fsa.num_states, fsa.start, fsa.accepting, fsa.transitions, fsa.sink)
    # the accepting sink becomes an ordinary state looping on its own alphabet
    dead = fsa.num_states
    transitions = tuple({symbol: moves.get(symbol, fsa.sink) for symbol in fsa.alphabet}
                        for moves in fsa.transitions) + ({},)
    return Fsa(alphabet, dead + 1, fsa.start, fsa.accepting, transitions, dead)


def _product(fsas: Sequence[Fsa], accept) -> Fsa:
    alphabet = merge_alphabets(fsas)
    fsas = [_widen(fsa, alphabet) for fsa in fsas]
    symbols = set(alphabet)
    sink = tuple(f.sink for f in fsas)

    def follow(state):
        candidates = set()
        for fsa, q in zip(fsas, state):
            candidates.update(fsa.transitions[q])
        for symbol in candidates:
            if symbol in symbols:
                yield symbol, tuple(fsa.next_state(q, symbol) for fsa, q in zip(fsas, state))

    return Fsa.from_table(
        alphabet,
        tuple(f.start for f in fsas),
        accepting=lambda state: accept([q in f.accepting for f, q in zip(fsas, state)]),
        follow=follow,
        sink=sink,
        sink_accepting=accept([f.sink_accepting for f in fsas]),
    )


def union(*fsas: Fsa) -> Fsa:
    if not fsas:
        raise ValueError("union needs at least one automaton")
    if len(fsas) == 1:
        return fsas[0]
    return _product(fsas, any)


def intersection(*fsas: Fsa) -> Fsa:
    if not fsas:
        raise ValueError("intersection needs at least one automaton")
    if len(fsas) == 1:
        return fsas[0]
    return _product(fsas, all)


def complement(fsa: Fsa) -> Fsa:
    flipped = frozenset(range(fsa.num_states)) - fsa.accepting
    return Fsa(fsa.alphabet, fsa.num_states, fsa.start, flipped, fsa.transitions, fsa.sink)


def difference(left: Fsa, right: Fsa) -> Fsa:
    return _product([left, right], lambda flags: flags[0] and not flags[1])


def concat(*fsas: Fsa) -> Fsa:
    if not fsas:
        raise ValueError("concat needs at least one automaton")
    if len(fsas) == 1:
        return fsas[0]
    nfa = Nfa()
    maps = [nfa.embed(fsa) for fsa in fsas]
    entries = [m.get(f.start) for m, f in zip(maps, fsas)]
    if any(entry is None for entry in entries):
        # one factor is the empty language
        return Fsa.empty(merge_alphabets(fsas))
    nfa.start = entries[0]
    for i, (fsa, mapping) in enumerate(zip(fsas, maps)):
        finals = [mapping[q] for q in fsa.accepting if q in mapping]
        if i + 1 < len(fsas):
            for q in finals:
                nfa.add_eps(q, entries[i + 1])
        else:
            nfa.accepting.update(finals)
    return nfa.determinize(merge_alphabets(fsas))


def star(fsa: Fsa) -> Fsa:
    nfa = Nfa()
    mapping = nfa.embed(fsa)
    start = nfa.add_state()
    nfa.start = start
    nfa.accepting.add(start)
    if fsa.start in mapping:
        nfa.add_eps(start, mapping[fsa.start])
        for q in fsa.accepting:
            if q in mapping:
                nfa.accepting.add(mapping[q])
                nfa.add_eps(mapping[q], mapping[fsa.start])
    return nfa.determinize(fsa.alphabet)


def combine(op: str, args: List[Fsa]) -> Fsa:
    """Apply a named operation; the result is always deterministic."""
    if op == "union":
        return union(*args)
    if op == "intersection":
        return intersection(*args)
    if op == "complement":
        if len(args) != 1:
            raise ValueError("complement takes exactly one automaton")
        return complement(args[0])
    if op == "difference":
        if len(args) != 2:
            raise ValueError("difference takes exactly two automata")
        return difference(*args)
    if op == "concat":
        return concat(*args)
    if op == "star":
        if len(args) != 1:
            raise ValueError("star takes exactly one automaton")
        return star(args[0])
    raise ValueError(f"op must be one of {', '.join(OPERATIONS)}, got {op!r}")


def emptiness(fsa: Fsa) -> bool:
    return fsa.is_empty()
