"""Integer partitions with bounded part count, hook lengths and Pochhammer symbols.

Everything here is exact integer or rational arithmetic.  Partitions are
stored largest part first, the empty partition is a first-class value, and
all box products over the empty Ferrers diagram are 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integer parts.

    ``Partition(())`` is the empty partition; it has weight 0, length 0 and
    hook product 1.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, part in enumerate(parts):
            if part < 1:
                raise ValueError(f"partition parts must be positive, got {part}")
            if i > 0 and parts[i - 1] < part:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")

    @property
    def weight(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


@lru_cache(maxsize=None)
def _partition_tuples(total: int, max_parts: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    # Reverse-lexicographic order follows from taking first parts largest first.
    if total == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    smallest_first = -(-total // max_parts)  # first part must cover its share
    for first in range(min(total, max_part), smallest_first - 1, -1):
        for rest in _partition_tuples(total - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(p: int, max_parts: int) -> tuple[Partition, ...]:
    """All partitions of ``p`` into at most ``max_parts`` parts.

    Returned in reverse-lexicographic order on the part sequences, so
    ``(4)`` precedes ``(3,1)`` precedes ``(2,2)``.  ``p = 0`` yields the
    singleton empty partition.
    """
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    if max_parts < 1:
        raise ValueError(f"max_parts must be positive, got {max_parts}")
    return tuple(Partition(t) for t in _partition_tuples(p, max_parts, p))


def transpose(lam: Partition) -> Partition:
    """Reflection of the Ferrers diagram about its main diagonal.

    Computed by column counting: column j of the diagram has one box for
    every part of size at least j.
    """
    parts = lam.parts
    if not parts:
        return Partition(())
    cols = tuple(sum(1 for part in parts if part >= j) for j in range(1, parts[0] + 1))
    return Partition(cols)


def hook_product(lam: Partition) -> int:
    """Product of all hook lengths of the Ferrers diagram.

    The hook length of a box is arm + leg + 1, where the arm counts boxes
    strictly to the right and the leg counts boxes strictly below.
    """
    parts = lam.parts
    if not parts:
        return 1
    cols = [sum(1 for part in parts if part >= j) for j in range(1, parts[0] + 1)]
    product = 1
    for i, row in enumerate(parts, start=1):
        for j in range(1, row + 1):
            product *= (row - j) + (cols[j - 1] - i) + 1
    return product


def pochhammer(b: int | Fraction, lam: Partition) -> int | Fraction:
    """Generalized Pochhammer symbol: the product of b + j - i over all boxes.

    Box (i, j) means row i, column j, both 1-based.  The empty partition
    gives 1.  The result is an int for int ``b`` and a Fraction otherwise.
    """
    result: int | Fraction = 1
    for i, row in enumerate(lam.parts, start=1):
        for j in range(1, row + 1):
            result *= b + j - i
    return result
