"""Lexicographic enumeration of ordered k-permutations with rank/unrank support.

The search over starting prefixes is dispatched by rank: workers take
contiguous rank ranges, so unranking must be cheap and the enumeration
order must be the plain lexicographic one on tuples of vertex indices.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator

from .errors import KOutOfRange


def perm_count(n: int, k: int) -> int:
    """Number of ordered k-permutations of n items: n!/(n-k)!."""
    _check(n, k)
    return math.perm(n, k)


def k_permutations(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield all ordered k-tuples of distinct indices from range(n), lex order."""
    _check(n, k)
    return iter(itertools.permutations(range(n), k))


def unrank_k_permutation(n: int, k: int, rank: int) -> tuple[int, ...]:
    """Return the k-permutation at the given lexicographic rank.

    Digit i is chosen by dividing out the block size perm(n-1-i, k-1-i),
    then selecting that many steps into the still-unused indices.
    """
    _check(n, k)
    total = math.perm(n, k)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside [0, {total})")
    remaining = list(range(n))
    out = []
    for i in range(k):
        block = math.perm(n - 1 - i, k - 1 - i)
        idx, rank = divmod(rank, block)
        out.append(remaining.pop(idx))
    return tuple(out)


def rank_k_permutation(n: int, tup: tuple[int, ...]) -> int:
    """Inverse of unrank_k_permutation."""
    k = len(tup)
    _check(n, k)
    remaining = list(range(n))
    rank = 0
    for i, v in enumerate(tup):
        idx = remaining.index(v)
        rank += idx * math.perm(n - 1 - i, k - 1 - i)
        remaining.pop(idx)
    return rank


def k_permutation_range(
    n: int, k: int, start: int, stop: int
) -> Iterator[tuple[int, ...]]:
    """Yield the k-permutations with ranks in [start, stop), lex order."""
    _check(n, k)
    total = math.perm(n, k)
    stop = min(stop, total)
    for rank in range(start, stop):
        yield unrank_k_permutation(n, k, rank)


def _check(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not 0 <= k <= n:
        raise KOutOfRange(k, 0, n)
