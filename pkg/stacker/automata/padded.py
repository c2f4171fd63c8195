"""Padded triples: the synchronous reading of word triples ``(u, z, v)``.

Position ``j`` of ``pad_triple(u, z, v)`` holds the ``j``-th letters of the
three words, with ``$`` standing in once a word has run out.
"""
from itertools import product
from typing import Sequence, Tuple

from ..words import PAD
from .fsa import Fsa

PaddedSymbol = Tuple[str, str, str]


def pad_triple(u: str, z: str, v: str) -> Tuple[PaddedSymbol, ...]:
    length = max(len(u), len(z), len(v))
    return tuple(
        tuple(w[j] if j < len(w) else PAD for w in (u, z, v))
        for j in range(length)
    )


def is_pad_stable(symbols: Sequence[PaddedSymbol]) -> bool:
    """True iff no coordinate shows a letter after it has shown ``$``."""
    ended = [False, False, False]
    for symbol in symbols:
        if symbol == (PAD, PAD, PAD):
            return False
        for i, char in enumerate(symbol):
            if char == PAD:
                ended[i] = True
            elif ended[i]:
                return False
    return True


def triple_alphabet(letters: Sequence[str]) -> Tuple[PaddedSymbol, ...]:
    coords = tuple(letters) + (PAD,)
    return tuple(s for s in product(coords, repeat=3) if s != (PAD, PAD, PAD))


def unpad(symbols: Sequence[PaddedSymbol]) -> Tuple[str, str, str]:
    return tuple("".join(s[i] for s in symbols if s[i] != PAD) for i in range(3))


def fixed_suffix_product(language: Fsa, z: str, v: str, letters: Sequence[str]) -> Fsa:
    """Synchronous automaton for ``language × {z} × {v}``.

    States are ``(q, position, done)``: ``q`` is the state of ``language`` on
    the first coordinate, ``position`` how far into ``z`` and ``v`` we are
    (saturating at the longer of the two) and ``done`` whether the first
    coordinate has already been padded.
    """
    alphabet = triple_alphabet(letters)
    horizon = max(len(z), len(v))

    def coordinate(word: str, position: int) -> str:
        return word[position] if position < len(word) else PAD

    def follow(state):
        q, position, done = state
        second, third = coordinate(z, position), coordinate(v, position)
        nxt = min(position + 1, horizon)
        moves = []
        if not done:
            candidates = language.alphabet if language.sink_accepting else tuple(language.transitions[q])
            for x in candidates:
                if x in letters:
                    moves.append(((x, second, third), (language.next_state(q, x), nxt, False)))
        if (done or q in language.accepting) and (second, third) != (PAD, PAD):
            moves.append(((PAD, second, third), (q, nxt, True)))
        return moves

    return Fsa.from_table(
        alphabet,
        (language.start, 0, False),
        accepting=lambda state: state[0] in language.accepting and state[1] == horizon,
        follow=follow,
    )
