"""Gaussian correlators by brute-force enumeration of gluings.

A correlator <p_lambda> is computed by fixing one permutation sigma of cycle
type lambda on 2n points and summing N**cycles(sigma o tau) over all
(2n-1)!! fixed-point-free involutions tau.  This is the reference the
character and KP engines are checked against.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import _kernel
from .errors import CapacityError
from .partitions import Partition
from .polyalg import Graded, NPoly, ZERO

MAX_WICK_WEIGHT = 16


@dataclass(frozen=True)
class GluingCensus:
    lam: Partition
    by_faces: dict[int, int]
    connected_by_faces: dict[int, int] = field(default_factory=dict)

    @property
    def gs_exp(self) -> int:
        return gs_exponent(self.lam)

    @property
    def total(self) -> int:
        return sum(self.by_faces.values())

    def genus(self, faces: int) -> int:
        """Genus of the closed surface glued with ``faces`` boundary components."""
        twice = 2 + self.gs_exp - faces
        if twice % 2 or twice < 0:
            raise ValueError(f"{faces} faces is not a valid face count for {self.lam}")
        return twice // 2

    def by_genus(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f, c in self.by_faces.items():
            g = self.genus(f)
            out[g] = out.get(g, 0) + c
        return out

    def polynomial(self, connected: bool = False) -> NPoly:
        hist = self.connected_by_faces if connected else self.by_faces
        return NPoly({f: c for f, c in hist.items()})

    def to_json(self) -> dict[str, int]:
        return {str(f): c for f, c in sorted(self.by_faces.items())}


def gs_exponent(lam: Iterable[int]) -> int:
    lam = tuple(lam)
    return sum(lam) // 2 - len(lam)


def _check_capacity(lam: Partition) -> None:
    if lam.weight > MAX_WICK_WEIGHT:
        raise CapacityError(
            f"|lambda| = {lam.weight} exceeds the enumeration ceiling {MAX_WICK_WEIGHT}")


def _merge(hists: Iterable[tuple[dict[int, int], dict[int, int]]]) -> tuple[dict[int, int], dict[int, int]]:
    full: dict[int, int] = {}
    conn: dict[int, int] = {}
    for h, c in hists:
        for k, v in h.items():
            full[k] = full.get(k, 0) + v
        for k, v in c.items():
            conn[k] = conn.get(k, 0) + v
    return dict(sorted(full.items())), dict(sorted(conn.items()))


def _chunk(args: tuple[tuple[int, ...], int]):
    return _kernel.census_chunk(*args)


def genus_census(lam: Partition, workers: int = 1) -> GluingCensus:
    """Face-count histogram over every gluing of the atoms of ``lam``.

    The involution tree is split by the partner of point 0; chunks are
    independent and their integer histograms are summed, so the result does
    not depend on ``workers``.
    """
    lam = Partition(lam)
    if lam.weight % 2:
        raise ValueError("gluing census needs an even number of half-edges")
    _check_capacity(lam)
    return _census_cached(lam, workers) if workers <= 1 else _census(lam, workers)


@lru_cache(maxsize=None)
def _census_cached(lam: Partition, workers: int) -> GluingCensus:
    return _census(lam, workers)


def _census(lam: Partition, workers: int) -> GluingCensus:
    parts = tuple(lam)
    size = lam.weight
    if size == 0:
        return GluingCensus(lam, {0: 1}, {})
    jobs = [(parts, c) for c in range(1, size)]
    if workers > 1 and size >= 10:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk, jobs))
    else:
        results = [_chunk(j) for j in jobs]
    full, conn = _merge(results)
    return GluingCensus(lam, full, conn)


def wick_correlator(lam: Partition, workers: int = 1) -> Graded:
    """<p_lambda>_N = g_s**(|lambda|/2 - l(lambda)) * sum_tau N**faces."""
    lam = Partition(lam)
    if lam.weight % 2:
        return Graded.zero()
    census = genus_census(lam, workers)
    return Graded(census.polynomial(), census.gs_exp)


def connected_wick_census(lam: Partition, workers: int = 1) -> Graded:
    """Connected correlator counted directly over transitive gluings."""
    lam = Partition(lam)
    if lam.weight % 2:
        return Graded.zero()
    census = genus_census(lam, workers)
    return Graded(census.polynomial(connected=True), census.gs_exp)


def connected_correlator(lam: Partition, workers: int = 1) -> Graded:
    """Cumulant of the trace factors (moment-cumulant Moebius inversion).

    The parts of ``lam`` are distinguishable positions.  Splitting off the
    block that contains the first position gives
    ``m(S) = sum_{B containing first} k(B) m(S minus B)``, which is solved
    for ``k(S)``; values only depend on the multiset of parts, so they are
    memoized on sorted tuples.
    """
    lam = Partition(lam)
    if lam.weight % 2:
        return Graded.zero()
    return Graded(_cumulant(tuple(lam), workers), gs_exponent(lam))


@lru_cache(maxsize=None)
def _moment(parts: tuple[int, ...], workers: int) -> NPoly:
    if sum(parts) % 2:
        return ZERO
    return wick_correlator(Partition(parts), workers).poly


@lru_cache(maxsize=None)
def _cumulant(parts: tuple[int, ...], workers: int) -> NPoly:
    if sum(parts) % 2:
        return ZERO
    total = _moment(parts, workers)
    first, rest = parts[0], parts[1:]
    size = len(rest)
    for mask in range((1 << size) - 1):
        block = (first,) + tuple(rest[i] for i in range(size) if mask >> i & 1)
        other = tuple(rest[i] for i in range(size) if not mask >> i & 1)
        if sum(block) % 2:
            continue
        total = total - _cumulant(_sorted(block), workers) * _moment(_sorted(other), workers)
    return total


def _sorted(parts: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(parts, reverse=True))


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


__all__ = [
    "GluingCensus",
    "MAX_WICK_WEIGHT",
    "connected_correlator",
    "connected_wick_census",
    "double_factorial",
    "genus_census",
    "gs_exponent",
    "wick_correlator",
]
