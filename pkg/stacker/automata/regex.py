"""Regular expressions over single-character alphabets.

Supported syntax: literal letters, ``.`` (any letter of the alphabet),
character classes ``[aAt]``, grouping ``( )``, alternation ``|`` (empty
branches allowed, so ``(a|)`` means "a or nothing") and the postfix operators
``*``, ``+`` and ``?``. Patterns are compiled with a Thompson construction and
then determinised.
"""
from functools import lru_cache
from typing import Sequence, Tuple

from ..exceptions import MalformedPattern
from .fsa import Fsa
from .nfa import Nfa

_SPECIAL = set("()|*+?.[]")


class _Parser:
    def __init__(self, pattern: str, alphabet: Tuple[str, ...], nfa: Nfa):
        self.pattern = pattern
        self.alphabet = alphabet
        self.nfa = nfa
        self.pos = 0

    def error(self, reason: str) -> MalformedPattern:
        return MalformedPattern(self.pattern, self.pos, reason)

    def peek(self):
        return self.pattern[self.pos] if self.pos < len(self.pattern) else None

    def parse(self) -> Tuple[int, int]:
        fragment = self.alternation()
        if self.pos != len(self.pattern):
            raise self.error(f"unexpected {self.peek()!r}")
        return fragment

    def alternation(self) -> Tuple[int, int]:
        branches = [self.sequence()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.sequence())
        if len(branches) == 1:
            return branches[0]
        start, end = self.nfa.add_state(), self.nfa.add_state()
        for b_start, b_end in branches:
            self.nfa.add_eps(start, b_start)
            self.nfa.add_eps(b_end, end)
        return start, end

    def sequence(self) -> Tuple[int, int]:
        start = end = self.nfa.add_state()
        while self.peek() is not None and self.peek() not in "|)":
            f_start, f_end = self.repeat()
            self.nfa.add_eps(end, f_start)
            end = f_end
        return start, end

    def repeat(self) -> Tuple[int, int]:
        start, end = self.atom()
        while self.peek() in ("*", "+", "?"):
            op = self.peek()
            self.pos += 1
            new_start, new_end = self.nfa.add_state(), self.nfa.add_state()
            self.nfa.add_eps(new_start, start)
            self.nfa.add_eps(end, new_end)
            if op in "*?":
                self.nfa.add_eps(new_start, new_end)
            if op in "*+":
                self.nfa.add_eps(end, start)
            start, end = new_start, new_end
        return start, end

    def atom(self) -> Tuple[int, int]:
        char = self.peek()
        if char is None:
            raise self.error("unexpected end of pattern")
        if char == "(":
            self.pos += 1
            fragment = self.alternation()
            if self.peek() != ")":
                raise self.error("missing ')'")
            self.pos += 1
            return fragment
        if char == "[":
            self.pos += 1
            letters = []
            while self.peek() not in ("]", None):
                letters.append(self.literal(self.peek()))
                self.pos += 1
            if self.peek() != "]":
                raise self.error("missing ']'")
            if not letters:
                raise self.error("empty character class")
            self.pos += 1
            return self.letters(letters)
        if char == ".":
            self.pos += 1
            return self.letters(self.alphabet)
        if char in _SPECIAL:
            raise self.error(f"unexpected {char!r}")
        letter = self.literal(char)
        self.pos += 1
        return self.letters([letter])

    def literal(self, char: str) -> str:
        if char in _SPECIAL or char not in self.alphabet:
            raise self.error(f"{char!r} is not a letter of the alphabet")
        return char

    def letters(self, letters: Sequence[str]) -> Tuple[int, int]:
        start, end = self.nfa.add_state(), self.nfa.add_state()
        for letter in letters:
            self.nfa.add_move(start, letter, end)
        return start, end


def from_regex(pattern: str, alphabet: Sequence[str]) -> Fsa:
    """Compile ``pattern`` into a minimal deterministic automaton over ``alphabet``."""
    return _compile(pattern, tuple(alphabet))


@lru_cache(maxsize=256)
def _compile(pattern: str, alphabet: Tuple[str, ...]) -> Fsa:
    nfa = Nfa()
    start, end = _Parser(pattern, alphabet, nfa).parse()
    nfa.start = start
    nfa.accepting.add(end)
    return nfa.determinize(alphabet).minimize()
