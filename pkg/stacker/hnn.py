"""Britton normal forms and stacking structures for HNN extensions.

For ``G = H*_φ`` with stable letter ``s`` and ``s·a·s⁻¹ = φ(a)`` for ``a`` in
``A``, a normal form is ``tail·head``. The tail alternates coset
representatives and stable letters, using ``N_{H/A}`` before ``s⁻¹`` and
``N_{H/B}`` before ``s``. The head is a normal form of ``H``. A factor
``s^ε s^-ε`` never occurs.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from .automata import Fsa, concat, difference, from_regex, star, union
from .exceptions import NotBritton, OracleInconsistent
from .rewriting import EqualityOracle, FsaRecognizer, StackingStructure, normalize
from .words import Alphabet, inverse_letter

logger = logging.getLogger(__name__)

Decomposition = Callable[[str], Tuple[str, str]]


@dataclass(frozen=True)
class BrittonWord:
    tail: str
    head: str

    @property
    def word(self) -> str:
        return self.tail + self.head

    def __str__(self) -> str:
        return self.word


def split_tail_head(word: str, stable: str = "s", recognizer=None) -> BrittonWord:
    """Cut ``word`` after its last stable letter.

    Pinches ``s^ε s^-ε`` are always rejected; membership in the full Britton
    language is checked only when ``recognizer`` is given.
    """
    stable_inverse = inverse_letter(stable)
    for pinch in (stable + stable_inverse, stable_inverse + stable):
        if pinch in word:
            raise NotBritton(word, f"contains the pinch {pinch!r}")
    if recognizer is not None and not recognizer.accepts(word):
        raise NotBritton(word, "rejected by the normal-form recognizer")
    cut = max(word.rfind(stable), word.rfind(stable_inverse)) + 1
    return BrittonWord(word[:cut], word[cut:])


def tail_lemma_applies(tau: str, word: str, stable: str = "s") -> bool:
    """Side conditions under which ``tau·word`` stays a normal form.

    ``tau`` must be a tail (empty or ending in a stable letter). Then ``word``
    either has no stable letter, does not start with one, or starts with the
    last letter of ``tau``.
    """
    stables = (stable, inverse_letter(stable))
    if tau and tau[-1] not in stables:
        return False
    if not any(letter in stables for letter in word):
        return True
    if word[0] not in stables:
        return True
    return bool(tau) and word[0] == tau[-1]


@dataclass
class HnnData:
    """An HNN extension of ``base`` described by its decompositions.

    ``decompose_a(h)`` returns ``(trans_A(h), subg_A(h))`` with ``trans_A(h)``
    in ``transversal_a`` and ``subg_A(h)`` a shortlex word in ``Z_A``;
    ``decompose_b`` is the same for ``B``. ``iso`` maps ``Z_A`` onto ``Z_B``
    letter by letter.
    """
    base: StackingStructure
    stable: str
    decompose_a: Decomposition
    decompose_b: Decomposition
    iso: Dict[str, str]
    transversal_a: Fsa
    transversal_b: Fsa
    oracle: Optional[EqualityOracle] = None
    name: str = "hnn"
    iso_inverse: Dict[str, str] = field(init=False)

    def __post_init__(self):
        if self.stable in self.base.alphabet or not self.stable.islower():
            raise ValueError(f"stable letter must be a fresh lowercase letter, got {self.stable!r}")
        targets = set(self.iso.values())
        if len(targets) != len(self.iso):
            raise ValueError("iso must be injective on the subgroup generators")
        for source, target in self.iso.items():
            if self.iso.get(inverse_letter(source)) != inverse_letter(target):
                raise ValueError(f"iso must respect inverses: {source!r} -> {target!r}")
        self.iso_inverse = {target: source for source, target in self.iso.items()}


def decompose_validate(data: HnnData, h: str, side: str = "b") -> Tuple[str, str]:
    """Decompose ``h`` over ``A`` (``side="a"``) or ``B`` and check the result.

    The transversal part must lie in the transversal language, the subgroup
    part must use subgroup letters only and ``trans·subg`` must equal ``h``
    in the base group.
    """
    if side == "a":
        trans, subg = data.decompose_a(h)
        transversal, letters = data.transversal_a, set(data.iso)
    elif side == "b":
        trans, subg = data.decompose_b(h)
        transversal, letters = data.transversal_b, set(data.iso_inverse)
    else:
        raise ValueError(f"side must be 'a' or 'b', got {side!r}")
    if not transversal.accepts(trans):
        raise OracleInconsistent(h, trans, subg, f"not in the transversal N_H/{side.upper()}")
    if any(letter not in letters for letter in subg):
        raise OracleInconsistent(h, trans, subg, "subgroup part uses letters outside the subgroup")
    base = data.base
    if normalize(base, trans + subg).word != normalize(base, h).word:
        raise OracleInconsistent(h, trans, subg, "trans·subg differs from h in the base group")
    return trans, subg


def britton_fsa(data: HnnData) -> Fsa:
    """``((N_{H/A})s⁻¹ | (N_{H/B})s)* · N_H`` without pinches."""
    if data.base.nf_fsa is None:
        raise ValueError(f"base structure {data.base.name!r} has no normal-form automaton")
    stable, stable_inverse = data.stable, inverse_letter(data.stable)
    letters = tuple(data.base.alphabet.letters) + (stable, stable_inverse)
    syllables = union(
        concat(data.transversal_a, from_regex(stable_inverse, letters)),
        concat(data.transversal_b, from_regex(stable, letters)),
    )
    language = concat(star(syllables), data.base.nf_fsa)
    pinches = from_regex(f".*({stable}{stable_inverse}|{stable_inverse}{stable}).*", letters)
    return difference(language, pinches).minimize()


def check_decompositions(data: HnnData, radius: int) -> int:
    """Run ``decompose_validate`` on both sides for every base normal form up to ``radius``.

    Returns the number of heads checked; the first bad decomposition raises
    ``OracleInconsistent``.
    """
    checked = 0
    for h in data.base.ball(radius):
        decompose_validate(data, h, "a")
        decompose_validate(data, h, "b")
        checked += 1
    return checked


def hnn_stacking(data: HnnData, check_radius: int = 3) -> StackingStructure:
    """Stacking structure of the HNN extension over ``Y ∪ {s, s⁻¹}``.

    Base letters are rewritten by the base stacking map applied to the head.
    ``s`` is fixed when the head is its own ``B``-transversal, otherwise it
    becomes ``z⁻¹·s·φ⁻¹(z)`` for ``z`` the last letter of ``subg_B(head)``;
    ``s⁻¹`` is symmetric with ``A`` and ``φ``. Both decompositions are checked
    on the base ball of ``check_radius`` up front and on every head the map
    decomposes afterwards; a failure raises ``OracleInconsistent``.
    """
    stable, stable_inverse = data.stable, inverse_letter(data.stable)
    alphabet: Alphabet = data.base.alphabet.extend([stable])
    checked = check_decompositions(data, check_radius)
    logger.debug(f"> {data.name}: decompositions agree on {checked} base normal forms")
    nf = britton_fsa(data)
    base = data.base
    subgroup_parts: Dict[Tuple[str, str], str] = {}

    def subgroup_part(head: str, side: str) -> str:
        key = (head, side)
        if key not in subgroup_parts:
            subgroup_parts[key] = decompose_validate(data, head, side)[1]
        return subgroup_parts[key]

    def phi(u: str, z: str) -> str:
        head = split_tail_head(u, stable).head
        if z == stable:
            subg = subgroup_part(head, "b")
            if not subg:
                return z
            last = subg[-1]
            return inverse_letter(last) + stable + data.iso_inverse[last]
        if z == stable_inverse:
            subg = subgroup_part(head, "a")
            if not subg:
                return z
            last = subg[-1]
            return inverse_letter(last) + stable_inverse + data.iso[last]
        return base.phi(head, z)

    bound = max(base.bound, 3)
    logger.info(f"> built HNN structure {data.name!r} over {base.name!r} ({nf.num_states} states, bound {bound})")
    return StackingStructure(data.name, alphabet, FsaRecognizer(nf), phi, bound,
                             nf_fsa=nf, oracle=data.oracle)
