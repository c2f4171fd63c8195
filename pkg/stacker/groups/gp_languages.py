"""Regular languages for G_p = ⟨a, s, t | a^p, [a, a^t], a^s = a^t a, [s, t]⟩.

A normal form is ``tail·head``. The tail is ``s^-k a^β1 s a^β2 s ... a^βn s``,
with no ``s⁻¹s`` factor. The head is the Z_p ≀ Z normal form
``t^r a^α_r t ... t a^α_l t^(m-l)``. For finite ``p`` every exponent lies in
``0..p-1``. For ``p = ∞`` each is any integer.

The graph of the stacking map is a union of fifteen synchronously regular
pieces ``L1 .. L15``; each piece is ``language × {z} × {v}`` for a regular
``language`` of normal forms and fixed words ``z`` and ``v``.
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from ..automata import Fsa, concat, difference, fixed_suffix_product, from_regex, intersection, union
from ..exceptions import UnsupportedForInfiniteP
from ..laurent import Modulus, check_modulus
from ..words import Alphabet, power

logger = logging.getLogger(__name__)

GP_ALPHABET = Alphabet(("a", "A", "s", "S", "t", "T"))
LETTERS = GP_ALPHABET.letters
NTILDE_LETTERS = ("a", "t", "T")

PIECES = tuple(f"L{i}" for i in range(1, 16))

# u has a letter a, then only head letters, then at least two t⁻¹
CASE6_PATTERN = ".*a[aAtT]*TT"
CASE6_PATTERN_INFINITE = ".*[aA][aAtT]*TT"


def coefficient_pattern(p: Modulus) -> str:
    if p is None:
        return "(a*|A*)"
    return "(" + "|".join("a" * k for k in range(p)) + ")"


def _regex(pattern: str) -> Fsa:
    return from_regex(pattern, LETTERS)


@lru_cache(maxsize=None)
def tail_fsa(p: Modulus) -> Fsa:
    p = check_modulus(p)
    tails = _regex(f"S*({coefficient_pattern(p)}s)*")
    return difference(tails, _regex(".*Ss.*")).minimize()


@lru_cache(maxsize=None)
def head_fsa(p: Modulus) -> Fsa:
    p = check_modulus(p)
    coefficient = coefficient_pattern(p)
    heads = _regex(f"(t*|T*)({coefficient}t)*{coefficient}(t*|T*)")
    return difference(heads, _regex(".*(tT|Tt).*")).minimize()


@lru_cache(maxsize=None)
def nf_fsa(p: Modulus) -> Fsa:
    """``N_{G_p} = Tail · Head``."""
    return concat(tail_fsa(p), head_fsa(p)).minimize()


def ntilde_fsa(p: int, delta: int, eta: int) -> Fsa:
    """Words ``a ... t⁻¹`` over ``{a, t, t⁻¹}`` whose coefficients sum to ``δη`` at ``x = -1``.

    A state ``(i, flag, μ, j)`` holds the running value ``i`` of the finished
    coefficients at ``x = -1``, whether the final ``t⁻¹`` has been read, the
    sign ``μ = (-1)^degree`` of the current coefficient and the current
    coefficient ``j``. Every other word goes to the sink ``F``.
    """
    if p is None:
        raise UnsupportedForInfiniteP("the automaton for N~")
    p = check_modulus(p)
    _check_sign("delta", delta)
    _check_sign("eta", eta)
    target = (delta * eta) % p

    def follow(state) -> List[Tuple[str, object]]:
        if state == "I":
            return [("a", (0, "n", 1, 1))]
        i, flag, mu, j = state
        if flag == "y":
            return []
        moves = []
        if j < p - 1:
            moves.append(("a", (i, flag, mu, j + 1)))
        moves.append(("t", ((i + mu * j) % p, "n", -mu, 0)))
        if j != 0:
            moves.append(("T", ((i + mu * j) % p, "y", -mu, 0)))
        return moves

    return Fsa.from_table(
        NTILDE_LETTERS, "I",
        accepting=lambda state: state != "I" and state[0] == target and state[1] == "y" and state[3] == 0,
        follow=follow,
        sink="F",
    )


def ntilde_predicate(word: str, p: int, delta: int, eta: int) -> bool:
    """Direct membership test for ``ntilde_fsa(p, delta, eta)``."""
    if not word or word[0] != "a" or any(x not in NTILDE_LETTERS for x in word):
        return False
    if "a" * p in word or "tT" in word or "Tt" in word:
        return False
    if word.count("T") != 1 or word[-1] != "T":
        return False
    level, value = 0, 0
    for letter in word:
        if letter == "a":
            value += 1 if level % 2 == 0 else -1
        elif letter == "t":
            level += 1
    return (value - delta * eta) % p == 0


def _check_sign(name: str, value: int) -> None:
    if value not in (1, -1):
        raise ValueError(f"{name} must be 1 or -1, got {value}")


def n_delta_eta(p: int, delta: int, eta: int) -> Fsa:
    """Heads ``t^r·w·t^-k`` with ``w`` accepted by Ñ, the sign flipped for odd ``r``."""
    even = concat(from_regex("((tt)*|(TT)*)", NTILDE_LETTERS), ntilde_fsa(p, delta, eta),
                  from_regex("T*", NTILDE_LETTERS))
    odd = concat(from_regex("(t(tt)*|T(TT)*)", NTILDE_LETTERS), ntilde_fsa(p, -delta, eta),
                 from_regex("T*", NTILDE_LETTERS))
    return union(even, odd).minimize()


def m_eta(p: Modulus, eta: int) -> Fsa:
    """Heads whose t-exponent sum is odd (``eta = 1``) or even (``eta = -1``)."""
    _check_sign("eta", eta)
    if eta == 1:
        parity = "[aA]*[tT][aA]*([tT][aA]*[tT][aA]*)*"
    else:
        parity = "[aA]*([tT][aA]*[tT][aA]*)*"
    return intersection(head_fsa(p), _regex(parity)).minimize()


def _piece(language: Fsa, z: str, v: str) -> Fsa:
    return fixed_suffix_product(language.minimize(), z, v, LETTERS)


def _piece_builders(p: int) -> Dict[str, Callable[[], List[Fsa]]]:
    nf = nf_fsa(p)
    tail = tail_fsa(p)
    head = head_fsa(p)
    top = "a" * (p - 1)

    def within(pattern: str) -> Fsa:
        return intersection(nf, _regex(pattern))

    tail_then_inverse_t = concat(tail, _regex("T*"))
    case6 = _regex(CASE6_PATTERN)

    def l7() -> List[Fsa]:
        found = []
        for delta, z in ((1, "a"), (-1, "A")):
            for eta in (1, -1):
                heads = intersection(m_eta(p, eta), n_delta_eta(p, delta, eta))
                language = intersection(case6, concat(tail, heads))
                v = "t" + power("a", -delta) + "T" + "s" + power("a", delta) + "S"
                found.append(_piece(language, z, v))
        return found

    def l8() -> List[Fsa]:
        found = []
        for delta, z in ((1, "a"), (-1, "A")):
            for eta in (1, -1):
                heads = intersection(m_eta(p, eta), difference(head, n_delta_eta(p, delta, eta)))
                language = intersection(case6, concat(tail, heads))
                v = "t" + power("a", -eta) + "T" + z + "t" + power("a", eta) + "T"
                found.append(_piece(language, z, v))
        return found

    def l2() -> List[Fsa]:
        fixed = union(tail_then_inverse_t, _regex(".*t"), difference(_regex(".*a"), _regex(f".*{top}")))
        return [_piece(intersection(nf, fixed), "a", "a")]

    return {
        "L1": lambda: [_piece(nf, "t", "t"), _piece(nf, "T", "T")],
        "L2": l2,
        "L3": lambda: [_piece(within(f".*{top}"), "a", "A" * (p - 1))],
        "L4": lambda: [_piece(within(".*a"), "A", "A")],
        "L5": lambda: [_piece(intersection(nf, union(tail_then_inverse_t, _regex(".*t"))), "A", top)],
        "L6": lambda: [_piece(within(".*aT"), z, "tAT" + z + "taT") for z in ("a", "A")],
        "L7": l7,
        "L8": l8,
        "L9": lambda: [_piece(tail, "S", "S")],
        "L10": lambda: [_piece(within(".*t"), "S", "TSt"), _piece(within(".*T"), "S", "tST")],
        "L11": lambda: [_piece(within(".*a"), "S", "ASataT")],
        "L12": lambda: [_piece(intersection(nf, concat(tail, _regex("a*"))), "s", "s")],
        "L13": lambda: [_piece(within(".*t"), "s", "Tst"),
                        _piece(within(".*T"), "s", "tsT")],
        "L14": lambda: [_piece(within(".*t" + "a" * alpha), "s",
                               "A" * alpha + "T" + "A" * alpha + "s" + "a" * alpha + "t")
                        for alpha in range(1, p)],
        "L15": lambda: [_piece(within(".*T" + "a" * alpha), "s",
                               "A" * alpha + "t" + "A" * alpha + "s" + "T" + "a" * alpha)
                        for alpha in range(1, p)],
    }


@lru_cache(maxsize=None)
def graph_phi_piece(p: Modulus, name: str) -> Fsa:
    """One named piece ``L1 .. L15`` of graph(φ) over padded triples."""
    if p is None:
        raise UnsupportedForInfiniteP("graph(phi)")
    p = check_modulus(p)
    builders = _piece_builders(p)
    if name not in builders:
        raise ValueError(f"piece must be one of {', '.join(PIECES)}, got {name!r}")
    parts = builders[name]()
    fsa = union(*parts).minimize()
    logger.debug(f"> G_{p} piece {name}: {fsa.num_states} states")
    return fsa


def graph_phi_pieces(p: Modulus) -> Dict[str, Fsa]:
    return {name: graph_phi_piece(p, name) for name in PIECES}


@lru_cache(maxsize=None)
def graph_phi_fsa(p: Modulus) -> Fsa:
    """Synchronous automaton accepting ``pad_triple(u, z, φ(u, z))`` for normal forms ``u``."""
    if p is None:
        raise UnsupportedForInfiniteP("graph(phi)")
    pieces = list(graph_phi_pieces(p).values())
    fsa = union(*pieces).minimize()
    logger.info(f"> graph(phi) for G_{p}: {fsa.num_states} states")
    return fsa
