"""Error types raised across stacker.

Every error also derives from the builtin it refines, so ``except ValueError``
keeps working for input problems and ``except RuntimeError`` for failures that
only show up while running a structure.
"""
from typing import Optional


class StackerError(Exception):
    """Base class for all stacker errors."""


class UnknownLetter(StackerError, ValueError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"unknown letter {char!r} at position {position}")


class DuplicateGenerator(StackerError, ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"generator {name!r} is already part of the alphabet")


class SymbolNotInAlphabet(StackerError, ValueError):
    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__(f"symbol {symbol!r} is not in the automaton alphabet")


class MalformedPattern(StackerError, ValueError):
    def __init__(self, pattern: str, position: int, reason: str):
        self.pattern = pattern
        self.position = position
        super().__init__(f"malformed pattern {pattern!r} at position {position}: {reason}")


class NotANormalForm(StackerError, ValueError):
    def __init__(self, word: str, structure: str):
        self.word = word
        self.structure = structure
        super().__init__(f"{word!r} is not a normal form of structure {structure!r}")


class NotAHeadNormalForm(StackerError, ValueError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"{word!r} is not a head normal form")


class NotBritton(StackerError, ValueError):
    def __init__(self, word: str, reason: str = ""):
        self.word = word
        detail = f": {reason}" if reason else ""
        super().__init__(f"{word!r} is not a Britton normal form{detail}")


class InvalidModulus(StackerError, ValueError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"modulus must be an integer >= 2 or infinite, got {p!r}")


class NotCase6(StackerError, ValueError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"{word!r} does not satisfy p_u != 0 and m_u - l_u < -1")


class UnsupportedFormat(StackerError, ValueError):
    def __init__(self, fmt: str, supported=()):
        self.format = fmt
        options = ", ".join(repr(s) for s in supported)
        super().__init__(f"unsupported format {fmt!r}" + (f"; expected one of {options}" if options else ""))


class UnsupportedForInfiniteP(StackerError, ValueError):
    def __init__(self, what: str):
        super().__init__(f"{what} is only available for finite p (p = inf is algorithmically stackable, not autostackable)")


class StepBudgetExceeded(StackerError, RuntimeError):
    def __init__(self, budget: int, word: Optional[str] = None):
        self.budget = budget
        self.word = word
        where = f" while rewriting {word!r}" if word is not None else ""
        super().__init__(f"step budget of {budget} exceeded{where}")


class OracleInconsistent(StackerError, RuntimeError):
    def __init__(self, word: str, trans: str, subg: str, reason: str):
        self.word = word
        self.trans = trans
        self.subg = subg
        super().__init__(f"decomposition of {word!r} into ({trans!r}, {subg!r}) rejected: {reason}")
