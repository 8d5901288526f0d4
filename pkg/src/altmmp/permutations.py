"""Permutations in one-line notation and the alternating classes.

Permutations are plain tuples of the values 1..n.  The two alternating
classes are the up-down permutations (first step ascends, steps then
alternate) and the down-up permutations (first step descends).  Length-1
permutations belong to both classes; the empty tuple is accepted only as
the identity element for `reduce`.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator, Sequence


class AlternatingClass(Enum):
    UP_DOWN = "UD"
    DOWN_UP = "DU"

    def descends_into(self, position: int) -> bool:
        """True when the step into 1-based ``position`` must go down.

        >>> [AlternatingClass.UP_DOWN.descends_into(p) for p in (2, 3, 4)]
        [False, True, False]
        >>> [AlternatingClass.DOWN_UP.descends_into(p) for p in (2, 3, 4)]
        [True, False, True]
        """
        if position < 2:
            raise ValueError("steps start at position 2")
        odd = position % 2 == 1
        return odd if self is AlternatingClass.UP_DOWN else not odd


UP_DOWN = AlternatingClass.UP_DOWN
DOWN_UP = AlternatingClass.DOWN_UP


def check_permutation(values: Sequence[int]) -> tuple[int, ...]:
    """Validate one-line notation; returns the values as a tuple."""
    vals = tuple(values)
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")
    return vals


def descent_set(values: Sequence[int]) -> set[int]:
    """1-based positions i with values[i] > values[i+1].

    >>> sorted(descent_set((4, 7, 1, 5, 6, 9, 2, 8, 3)))
    [2, 6, 8]
    """
    return {i for i in range(1, len(values)) if values[i - 1] > values[i]}


def is_alternating(values: Sequence[int], cls: AlternatingClass) -> bool:
    """True when every step rises or falls as the class prescribes.

    >>> is_alternating((1, 3, 2), UP_DOWN)
    True
    >>> is_alternating((2, 1, 5, 3, 4), DOWN_UP)
    True
    """
    for p in range(2, len(values) + 1):
        down = values[p - 2] > values[p - 1]
        if down != cls.descends_into(p):
            return False
    return True


def reverse(values: Sequence[int]) -> tuple[int, ...]:
    """
    >>> reverse((1, 3, 2))
    (2, 3, 1)
    """
    return tuple(reversed(values))


def complement(values: Sequence[int]) -> tuple[int, ...]:
    """
    >>> complement((1, 3, 2))
    (3, 1, 2)
    """
    n = len(values)
    return tuple(n + 1 - v for v in values)


def reverse_complement(values: Sequence[int]) -> tuple[int, ...]:
    """
    >>> reverse_complement((2, 3, 1, 4))
    (1, 4, 2, 3)
    """
    return complement(reverse(values))


def reduce(values: Sequence[int]) -> tuple[int, ...]:
    """Order-isomorphic permutation of 1..k for distinct integers.

    >>> reduce((4, 7, 5))
    (1, 3, 2)
    >>> reduce((9,))
    (1,)
    """
    vals = tuple(values)
    if len(set(vals)) != len(vals):
        raise ValueError(f"entries must be distinct: {vals}")
    rank = {v: r for r, v in enumerate(sorted(vals), start=1)}
    return tuple(rank[v] for v in vals)


def generate_alternating(
    n: int,
    cls: AlternatingClass,
    first_value: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every alternating permutation of length n, lexicographically.

    Builds only valid prefixes, so nothing outside the class is ever
    constructed.  With ``first_value`` set, yields only the permutations
    starting with that value; the strata over all first values partition
    the class, which is what the sharded enumerator relies on.

    >>> list(generate_alternating(4, UP_DOWN))[:2]
    [(1, 3, 2, 4), (1, 4, 2, 3)]
    >>> sum(1 for _ in generate_alternating(7, UP_DOWN))
    272
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    if first_value is not None and not 1 <= first_value <= n:
        return
    starts = range(1, n + 1) if first_value is None else (first_value,)
    prefix = [0] * n
    for start in starts:
        prefix[0] = start
        yield from _extend(prefix, 1, set(range(1, n + 1)) - {start}, cls)


def _extend(
    prefix: list[int],
    filled: int,
    unused: set[int],
    cls: AlternatingClass,
) -> Iterator[tuple[int, ...]]:
    if not unused:
        yield tuple(prefix)
        return
    prev = prefix[filled - 1]
    down = cls.descends_into(filled + 1)
    for v in sorted(unused):
        if (v < prev) if down else (v > prev):
            prefix[filled] = v
            unused.discard(v)
            yield from _extend(prefix, filled + 1, unused, cls)
            unused.add(v)
