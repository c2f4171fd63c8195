"""Alphabets, words and free reduction.

A word is a plain ``str``: each character is one letter, a lowercase letter is
a generator and the same uppercase letter is its inverse. This is also the wire
format used by the CLI, so parsing and formatting are the identity on valid
strings.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, Iterator, Tuple

from .exceptions import DuplicateGenerator, UnknownLetter

PAD = "$"


def inverse_letter(letter: str) -> str:
    return letter.swapcase()


@dataclass(frozen=True)
class Alphabet:
    """An inverse-closed generating set.

    ``letters`` lists every letter in order, each generator followed by its
    inverse, e.g. ``('a', 'A', 't', 'T')``.
    """
    letters: Tuple[str, ...]
    _inverse: Dict[str, str] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        seen = set()
        for letter in self.letters:
            if len(letter) != 1 or not letter.isalpha():
                raise ValueError(f"letters must be single ASCII letters, got {letter!r}")
            if letter in seen:
                raise DuplicateGenerator(letter)
            seen.add(letter)
        inverse = {}
        for letter in self.letters:
            partner = inverse_letter(letter)
            if partner not in seen:
                raise ValueError(f"alphabet is not inverse-closed: {letter!r} has no inverse {partner!r}")
            inverse[letter] = partner
        object.__setattr__(self, "_inverse", inverse)

    @classmethod
    def from_generators(cls, generators: Iterable[str]) -> "Alphabet":
        letters = []
        for gen in generators:
            if gen != gen.lower():
                raise ValueError(f"generators are written in lowercase, got {gen!r}")
            if gen in letters:
                raise DuplicateGenerator(gen)
            letters.extend([gen, gen.upper()])
        return cls(tuple(letters))

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(letter for letter in self.letters if letter.islower())

    def inverse(self, letter: str) -> str:
        return self._inverse[letter]

    def extend(self, generators: Iterable[str]) -> "Alphabet":
        letters = list(self.letters)
        for gen in generators:
            if gen in self._inverse or gen.upper() in self._inverse:
                raise DuplicateGenerator(gen)
            letters.extend([gen, gen.upper()])
        return Alphabet(tuple(letters))

    def __contains__(self, letter) -> bool:
        return letter in self._inverse

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)


@dataclass(frozen=True)
class NormalWord:
    """A word certified by the structure named ``structure_id``."""
    word: str
    structure_id: str

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return len(self.word)


def parse_word(text: str, alphabet: Alphabet) -> str:
    for position, char in enumerate(text):
        if char not in alphabet:
            raise UnknownLetter(position, char)
    return text


def format_word(word: str) -> str:
    return word


def free_reduce(word: str) -> str:
    stack = []
    for letter in word:
        if stack and stack[-1] == inverse_letter(letter):
            stack.pop()
        else:
            stack.append(letter)
    return "".join(stack)


def is_freely_reduced(word: str) -> bool:
    return all(word[i] != inverse_letter(word[i + 1]) for i in range(len(word) - 1))


def invert(word: str) -> str:
    return "".join(inverse_letter(letter) for letter in reversed(word))


def power(letter: str, exponent: int) -> str:
    """``letter`` raised to ``exponent``, spelled with the inverse letter when negative."""
    if exponent >= 0:
        return letter * exponent
    return inverse_letter(letter) * (-exponent)


def cyclic_reduce(word: str) -> str:
    word = free_reduce(word)
    start, end = 0, len(word)
    while end - start >= 2 and word[start] == inverse_letter(word[end - 1]):
        start += 1
        end -= 1
    return word[start:end]


def canonical_relator(word: str) -> str:
    """Representative of ``word`` up to free reduction, cyclic permutation and inversion."""
    word = cyclic_reduce(word)
    if not word:
        return ""
    candidates = []
    for w in (word, invert(word)):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates)


def all_words(alphabet: Alphabet, max_length: int, reduced: bool = True) -> Iterator[str]:
    """Every word of length at most ``max_length``, shortest first."""
    yield ""
    if reduced:
        layer = [""]
        for _ in range(max_length):
            layer = [w + x for w in layer for x in alphabet.letters
                     if not w or w[-1] != alphabet.inverse(x)]
            yield from layer
    else:
        for length in range(1, max_length + 1):
            for letters in product(alphabet.letters, repeat=length):
                yield "".join(letters)
