import logging
import os
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 10 ** 6
STEP_BUDGET_ENV = "STACKER_STEP_BUDGET"
DEFAULT_SEED = 1234


@lru_cache(None)
def warn_once(logger: logging.Logger, msg: str):
    logger.warning(msg)


def resolve_step_budget(budget: Optional[int] = None) -> int:
    """Explicit budget, else ``$STACKER_STEP_BUDGET``, else 10**6."""
    if budget is None:
        raw = os.environ.get(STEP_BUDGET_ENV)
        if raw is None:
            return DEFAULT_STEP_BUDGET
        try:
            budget = int(raw)
        except ValueError:
            raise ValueError(f"{STEP_BUDGET_ENV} must be a positive integer, got {raw!r}")
        logger.debug(f"> step budget {budget} taken from {STEP_BUDGET_ENV}")
    if budget < 1:
        raise ValueError(f"step budget must be a positive integer, got {budget}")
    return budget


def parse_modulus(text: str) -> Optional[int]:
    """``"inf"`` becomes ``None`` (p = ∞); anything else must be an integer."""
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo"):
        return None
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"p must be an integer >= 2 or 'inf', got {text!r}")


def random_words(letters: Sequence[str], max_length: int, count: int, seed: int = DEFAULT_SEED,
                 reduced: bool = True) -> List[str]:
    """``count`` words with lengths uniform in [0, max_length]."""
    rng = np.random.default_rng(seed)
    letters = list(letters)
    words = []
    for _ in range(count):
        length = int(rng.integers(0, max_length + 1))
        word: List[str] = []
        while len(word) < length:
            letter = letters[int(rng.integers(0, len(letters)))]
            if reduced and word and word[-1] == letter.swapcase():
                continue
            word.append(letter)
        words.append("".join(word))
    return words


def shard(items: Sequence, index: int, count: int) -> Iterator:
    """Every ``count``-th item starting at ``index``."""
    if count < 1 or not 0 <= index < count:
        raise ValueError(f"shard index must satisfy 0 <= index < count, got ({index}, {count})")
    for position, item in enumerate(items):
        if position % count == index:
            yield item
