"""Stacking structures: a normal-form recognizer, a stacking map and a bound.

The maximal tree of the Cayley graph is never stored. It is the prefix tree of
the normal-form language, so an edge ``(u, z)`` out of a normal form ``u`` is
a tree edge exactly when ``u·z`` is again a normal form or ``u`` ends in
``z``'s inverse.
"""
import logging
from enum import Enum
from typing import Callable, Dict, Hashable, Iterator, List, Optional, Tuple

from ..automata import Fsa
from ..exceptions import NotANormalForm, UnknownLetter
from ..words import Alphabet, NormalWord, free_reduce

logger = logging.getLogger(__name__)

StackingMap = Callable[[str, str], str]


class FsaRecognizer:
    """Incremental membership through an automaton; a state is an Fsa state."""

    def __init__(self, fsa: Fsa):
        self.fsa = fsa

    def initial(self):
        return self.fsa.start

    def advance(self, state, letter: str):
        if letter not in self.fsa.symbols:
            return None
        target = self.fsa.transitions[state].get(letter, self.fsa.sink)
        return target if target in self.fsa.accepting else None

    def accepts(self, word: str) -> bool:
        if any(letter not in self.fsa.symbols for letter in word):
            return False
        return self.fsa.accepts(word)


class PredicateRecognizer:
    """Membership through a decision procedure; a state is the word read so far."""

    def __init__(self, predicate: Callable[[str], bool]):
        self.predicate = predicate

    def initial(self):
        return ""

    def advance(self, state, letter: str):
        word = state + letter
        return word if self.predicate(word) else None

    def accepts(self, word: str) -> bool:
        return self.predicate(word)


class EqualityOracle:
    """Independent decision procedure for equality in the group."""

    def equal(self, w1: str, w2: str) -> bool:
        raise NotImplementedError

    def key(self, word: str) -> Optional[Hashable]:
        """A canonical invariant of the element, when the oracle has one."""
        return None

    def bucket(self, word: str) -> Hashable:
        """Coarse invariant: equal elements always share a bucket."""
        return None


class KeyOracle(EqualityOracle):
    def __init__(self, key_fn: Callable[[str], Hashable]):
        self.key_fn = key_fn

    def equal(self, w1: str, w2: str) -> bool:
        return self.key_fn(w1) == self.key_fn(w2)

    def key(self, word: str) -> Hashable:
        return self.key_fn(word)

    def bucket(self, word: str) -> Hashable:
        return self.key_fn(word)


class PairOracle(EqualityOracle):
    def __init__(self, equal_fn: Callable[[str, str], bool],
                 bucket_fn: Optional[Callable[[str], Hashable]] = None):
        self.equal_fn = equal_fn
        self.bucket_fn = bucket_fn

    def equal(self, w1: str, w2: str) -> bool:
        return self.equal_fn(w1, w2)

    def bucket(self, word: str) -> Hashable:
        return None if self.bucket_fn is None else self.bucket_fn(word)


class EdgeKind(Enum):
    FORWARD = "forward"
    BACKTRACK = "backtrack"
    NON_TREE = "non-tree"


class StackingStructure:
    def __init__(self, name: str, alphabet: Alphabet, recognizer, phi: StackingMap, bound: int,
                 nf_fsa: Optional[Fsa] = None, oracle: Optional[EqualityOracle] = None,
                 substitution: Optional[Dict[str, str]] = None):
        if bound < 1:
            raise ValueError(f"bound must be a positive integer, got {bound}")
        self.name = name
        self.alphabet = alphabet
        self.recognizer = recognizer
        self.phi = phi
        self.bound = bound
        self.nf_fsa = nf_fsa
        self.oracle = oracle
        # letters defined as words in other letters, from extend_generators
        self.substitution = dict(substitution or {})

    def __repr__(self) -> str:
        return f"StackingStructure(name={self.name!r}, alphabet={str(self.alphabet)!r}, bound={self.bound})"

    def is_normal_form(self, word: str) -> bool:
        return self.recognizer.accepts(word)

    def certify(self, word) -> NormalWord:
        if isinstance(word, NormalWord):
            if word.structure_id == self.name:
                return word
            word = word.word
        if not self.is_normal_form(word):
            raise NotANormalForm(word, self.name)
        return NormalWord(word, self.name)

    def check_letter(self, z: str) -> None:
        if len(z) != 1 or z not in self.alphabet:
            raise UnknownLetter(0, z)

    def edge_kind(self, u: str, z: str) -> EdgeKind:
        if u and u[-1] == self.alphabet.inverse(z):
            return EdgeKind.BACKTRACK
        if self.is_normal_form(u + z):
            return EdgeKind.FORWARD
        return EdgeKind.NON_TREE

    def is_tree_edge(self, u: str, z: str) -> bool:
        return self.edge_kind(u, z) is not EdgeKind.NON_TREE

    def ball(self, radius: int) -> Iterator[str]:
        """All normal forms of length at most ``radius``, shortest first."""
        layer: List[Tuple[str, object]] = [("", self.recognizer.initial())]
        yield ""
        for _ in range(radius):
            nxt = []
            for word, state in layer:
                for letter in self.alphabet.letters:
                    if word and word[-1] == self.alphabet.inverse(letter):
                        continue
                    target = self.recognizer.advance(state, letter)
                    if target is not None:
                        nxt.append((word + letter, target))
            for word, _ in nxt:
                yield word
            layer = nxt

    def expand(self, word: str) -> str:
        """Rewrite letters added by ``extend_generators`` in terms of the original ones."""
        if not self.substitution:
            return word
        return "".join(self.substitution.get(letter, letter) for letter in word)


def free_structure(alphabet: Alphabet, name: str = "free") -> StackingStructure:
    """The free group on ``alphabet``: every edge is a tree edge."""
    return StackingStructure(
        name, alphabet,
        PredicateRecognizer(lambda w: all(x in alphabet for x in w) and free_reduce(w) == w),
        phi=lambda u, z: z,
        bound=1,
        oracle=KeyOracle(free_reduce),
    )
