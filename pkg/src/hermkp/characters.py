"""Irreducible characters of S_n and the Frobenius change of basis."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import CapacityError, WeightMismatchError
from .partitions import Partition, enumerate_partitions, z_of

MAX_CHARACTER_WEIGHT = 24


def _beta_set(lam: tuple[int, ...]) -> list[int]:
    size = len(lam)
    return [p + size - 1 - i for i, p in enumerate(lam)]


def _from_beta(beta: Iterable[int]) -> tuple[int, ...]:
    beads = sorted(beta, reverse=True)
    size = len(beads)
    parts = [b - (size - 1 - i) for i, b in enumerate(beads)]
    return tuple(p for p in parts if p > 0)


class CharTable:
    """Memoized Murnaghan-Nakayama evaluation of chi^lambda_mu.

    Entries are filled lazily and never evicted.  Inserting the same key from
    two threads stores the same integer, so concurrent use needs no lock.
    """

    def __init__(self, max_weight: int = MAX_CHARACTER_WEIGHT):
        self.max_weight = max_weight
        self._table: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}

    def __len__(self) -> int:
        return len(self._table)

    def __call__(self, lam: Iterable[int], mu: Iterable[int]) -> int:
        lam, mu = tuple(lam), tuple(mu)
        n = sum(lam)
        if n != sum(mu):
            raise WeightMismatchError(f"|{lam}| = {n} but |{mu}| = {sum(mu)}")
        if n > self.max_weight:
            raise CapacityError(f"character weight {n} exceeds ceiling {self.max_weight}")
        return self._chi(lam, tuple(sorted(mu, reverse=True)))

    def _chi(self, lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
        if not mu:
            return 1
        key = (lam, mu)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        r, rest = mu[0], mu[1:]
        beta = _beta_set(lam)
        occupied = set(beta)
        total = 0
        for b in beta:
            target = b - r
            if target < 0 or target in occupied:
                continue
            between = sum(1 for c in beta if target < c < b)
            moved = [target if c == b else c for c in beta]
            value = self._chi(_from_beta(moved), rest)
            total += -value if between % 2 else value
        self._table[key] = total
        return total


_default_table = CharTable()


def default_table() -> CharTable:
    return _default_table


def character(lam: Iterable[int], mu: Iterable[int], table: CharTable | None = None) -> int:
    """chi^lambda evaluated on the class of cycle type mu."""
    return (table or _default_table)(lam, mu)


def power_to_schur(mu: Partition, table: CharTable | None = None) -> dict[Partition, int]:
    """Schur expansion ``p_mu = sum_lambda chi^lambda_mu s_lambda`` (nonzero terms)."""
    table = table or _default_table
    out = {}
    for lam in enumerate_partitions(sum(mu)):
        c = table(lam, mu)
        if c:
            out[lam] = c
    return out


def schur_to_power(lam: Partition, table: CharTable | None = None) -> dict[Partition, Fraction]:
    """Power-sum expansion ``s_lambda = sum_mu chi^lambda_mu / z_mu p_mu`` (nonzero terms)."""
    table = table or _default_table
    out = {}
    for mu in enumerate_partitions(sum(lam)):
        c = table(lam, mu)
        if c:
            out[mu] = Fraction(c, z_of(mu))
    return out


def hook_character_even_class(arm: int, leg: int) -> int:
    """Closed form for chi^{(arm+1, 1**leg)} on the class (2**n), arm + leg = 2n - 1."""
    from math import comb

    total = arm + leg + 1
    if total % 2:
        raise ValueError("hook must have even weight")
    n = total // 2
    return (-1) ** ((leg + 1) // 2) * comb(n - 1, leg // 2)
