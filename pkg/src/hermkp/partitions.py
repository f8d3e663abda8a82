"""Integer partitions and the Young-diagram statistics used throughout."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Equality is plain tuple equality, so ``Partition((2, 1)) == (2, 1)``.
    Zero parts are rejected instead of being stripped.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,2,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"invalid partition string {text!r}") from exc
        return cls(parts)

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        return cls(sorted((i for i, m in mult.items() for _ in range(m)), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def is_even_weight(self) -> bool:
        return sum(self) % 2 == 0

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


EMPTY = Partition(())


def _partitions_bounded(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_enumerate_cached(n))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from _enumerate_cached(k)


def z_of(lam: Iterable[int]) -> int:
    """Centralizer order ``prod_i i**m_i * m_i!`` of a permutation of cycle type ``lam``."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def class_size(lam: Partition) -> int:
    return factorial(sum(lam)) // z_of(lam)


class Cell(NamedTuple):
    row: int
    col: int
    content: int
    hook: int


def cell_stats(lam: Partition) -> list[Cell]:
    """Content ``col - row`` and hook length of every cell (1-indexed rows/cols)."""
    conj = Partition(lam).conjugate()
    cells = []
    for i, row_len in enumerate(lam, start=1):
        for j in range(1, row_len + 1):
            arm = row_len - j
            leg = conj[j - 1] - i
            cells.append(Cell(i, j, j - i, arm + leg + 1))
    return cells


def hook_product(lam: Partition) -> int:
    return prod(c.hook for c in cell_stats(lam))


def dimension(lam: Partition) -> int:
    """Dimension of the S_n irrep: ``n! / prod(hooks)``."""
    return factorial(sum(lam)) // hook_product(lam)


def hook_partition(arm: int, leg: int) -> Partition:
    """The hook ``(arm + 1, 1**leg)``, i.e. ``(arm | leg)`` in Frobenius notation."""
    return Partition((arm + 1,) + (1,) * leg)


def partition_number(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence (independent of the enumerator)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
