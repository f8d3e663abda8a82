"""n-point functions from the KP propagator formula.

G^(n)(xi_1..xi_n) = (-1)^(n-1) sum over n-cycles of prod_i Ahat(xi_s(i), xi_s(i+1))
                    - delta_{n,2} / (xi_1 - xi_2)^2

with Ahat(xi_i, xi_j) = i_{xi_min, xi_max} 1/(xi_i - xi_j) + A(xi_i, xi_j) for i != j
and Ahat(xi_i, xi_i) = A(xi_i, xi_i).

All directional expansions are taken in the same region
|xi_1| >> |xi_2| >> ... >> |xi_n|.  Products are carried in the signed lane
of ``polyalg`` with two exact truncations: total inverse degree, and a
weighted degree with weights n, n-1, ..., 1.  Every factor term has positive
weighted degree (the rational part contributes w_i + k (w_i - w_j) > 0), so
no retained coefficient is ever missing a contribution.

``cap`` below is the largest total weight sum(j_i) kept, where a monomial is
written prod xi_i^(-j_i - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

from .correlators import bogoliubov_entry, connected_free_energy
from .errors import CapacityError, EngineDisagreement, InconsistencyError
from .partitions import Partition
from .polyalg import Graded, LaurentSeries, NPoly, ONE, TruncSeries, ZERO
from .wick import gs_exponent

DEFAULT_CAPS = {1: 14, 2: 14, 3: 10, 4: 8}


def default_cap(n: int) -> int:
    return DEFAULT_CAPS.get(n, 8)


def xi_names(n: int) -> tuple[str, ...]:
    return tuple(f"xi{i}" for i in range(1, n + 1))


def a_series(cap: int, vars: Sequence[str] = ("xi", "eta")) -> TruncSeries:
    """A(xi, eta) with all terms of total inverse degree <= cap.

    The coefficient of xi^(-p-1) eta^(-q-1) is A_{q,p}.
    """
    if cap < 2:
        raise ValueError("cap must be at least 2")
    terms = {}
    for total in range(3, cap + 1, 2):
        for p in range(total - 1):
            q = total - 2 - p
            terms[(p + 1, q + 1)] = bogoliubov_entry(q, p)
    return TruncSeries(vars, cap, terms)


def _region_weights(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


class _Frame:
    """Truncation data shared by every factor of one n-point computation."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.vars = xi_names(n)
        self.total_cap = cap + n
        self.weights = _region_weights(n)
        # a surviving term has every exponent >= 1, which bounds its weight
        self.wcap = self.weights[0] * (self.total_cap - n + 1) + sum(self.weights[1:])

    def degree(self, exps: tuple[int, ...]) -> tuple[int, int]:
        return sum(exps), sum(w * e for w, e in zip(self.weights, exps))

    def product(self, a: LaurentSeries, b: LaurentSeries, slack: tuple[int, int]) -> LaurentSeries:
        """a * b keeping only terms that can still reach the caps after factors
        of combined minimal degree ``slack`` are multiplied in."""
        tcap = self.total_cap - slack[0]
        wcap = self.wcap - slack[1]
        weights = self.weights
        acc: dict[tuple[int, ...], NPoly] = {}
        b_items = [(kb, sum(kb), sum(w * e for w, e in zip(weights, kb)), vb)
                   for kb, vb in b.terms.items()]
        for ka, va in a.terms.items():
            ta, wa = self.degree(ka)
            for kb, tb, wb, vb in b_items:
                if ta + tb > tcap or wa + wb > wcap:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                prev = acc.get(k)
                acc[k] = va * vb if prev is None else prev + va * vb
        return self.series({k: v for k, v in acc.items() if not v.is_zero()})

    def min_degree(self, s: LaurentSeries) -> tuple[int, int]:
        degs = [self.degree(k) for k in s.terms]
        return min(d[0] for d in degs), min(d[1] for d in degs)

    def empty(self) -> LaurentSeries:
        return LaurentSeries(self.vars, None, self.total_cap, self.weights, self.wcap)

    def series(self, terms: dict) -> LaurentSeries:
        return LaurentSeries(self.vars, terms, self.total_cap, self.weights, self.wcap)

    def embed(self, i: int, j: int, e_i: int, e_j: int) -> tuple[int, ...]:
        k = [0] * self.n
        k[i] += e_i
        k[j] += e_j
        return tuple(k)

    def fits(self, exps: tuple[int, ...]) -> bool:
        return (sum(exps) <= self.total_cap
                and sum(w * e for w, e in zip(self.weights, exps)) <= self.wcap)

    def rational_part(self, i: int, j: int) -> LaurentSeries:
        """Expansion of 1/(xi_i - xi_j) with the earlier variable large."""
        lo, hi = min(i, j), max(i, j)
        sign = 1 if i < j else -1
        terms = {}
        k = 0
        while True:
            exps = self.embed(lo, hi, 1 + k, -k)
            if not self.fits(exps):
                break
            terms[exps] = NPoly.constant(sign)
            k += 1
        return self.series(terms)

    def a_part(self, i: int, j: int) -> LaurentSeries:
        terms = {}
        for total in range(3, self.total_cap + 1, 2):
            for p in range(total - 1):
                q = total - 2 - p
                exps = self.embed(i, j, p + 1, q + 1)
                if self.fits(exps):
                    terms[exps] = terms.get(exps, ZERO) + bogoliubov_entry(q, p)
        return self.series(terms)

    def propagator(self, i: int, j: int) -> LaurentSeries:
        if i == j:
            return self.a_part(i, i)
        return self.rational_part(i, j) + self.a_part(i, j)

    def double_pole(self) -> LaurentSeries:
        """1/(xi_1 - xi_2)^2 expanded with xi_1 large."""
        terms = {}
        k = 0
        while True:
            exps = self.embed(0, 1, 2 + k, -k)
            if not self.fits(exps):
                break
            terms[exps] = NPoly.constant(k + 1)
            k += 1
        return self.series(terms)


@dataclass(frozen=True)
class Propagator:
    i: int
    j: int
    series: LaurentSeries

    @property
    def includes_rational_part(self) -> bool:
        return self.i != self.j


def propagator(i: int, j: int, n: int, cap: int) -> Propagator:
    """Ahat(xi_i, xi_j) (0-based indices) inside an n-variable frame."""
    frame = _Frame(n, cap)
    return Propagator(i, j, frame.propagator(i, j))


def n_cycles(n: int) -> Iterator[tuple[int, ...]]:
    """Cyclic orders on 0..n-1 starting at 0; (n-1)! of them."""
    if n == 1:
        yield (0,)
        return
    for rest in permutations(range(1, n)):
        yield (0,) + rest


def npoint_signed(n: int, cap: int) -> LaurentSeries:
    """The n-point function before finalization (still in the signed lane)."""
    if n < 1:
        raise ValueError("n must be positive")
    frame = _Frame(n, cap)
    props: dict[tuple[int, int], LaurentSeries] = {}

    def prop(i: int, j: int) -> LaurentSeries:
        if (i, j) not in props:
            props[(i, j)] = frame.propagator(i, j)
        return props[(i, j)]

    total = frame.empty()
    for cycle in n_cycles(n):
        factors = [prop(cycle[a], cycle[(a + 1) % n]) for a in range(n)]
        floors = [frame.min_degree(f) for f in factors]
        term = factors[0]
        for a in range(1, n):
            rest = floors[a + 1:]
            slack = (sum(d[0] for d in rest), sum(d[1] for d in rest))
            term = frame.product(term, factors[a], slack)
        total = total + term
    if (n - 1) % 2:
        total = -total
    if n == 2:
        total = total - frame.double_pole()
    return total


def npoint(n: int, cap: int | None = None) -> TruncSeries:
    """G^(n) as a pure inverse-power series with sum(j_i) <= cap."""
    if cap is None:
        cap = default_cap(n)
    if cap < 1:
        raise ValueError("cap must be positive")
    signed = npoint_signed(n, cap)
    residue = {k: v for k, v in signed.terms.items() if min(k) <= 0}
    if residue:
        first = min(residue)
        raise InconsistencyError(
            f"G^({n}) kept {len(residue)} terms with a non-negative power of some xi, "
            f"first {first} -> {residue[first]}")
    return signed.finalize(cap + n)


def coefficient(series: TruncSeries, js: Sequence[int]) -> NPoly:
    """Coefficient of prod xi_i^(-j_i - 1)."""
    return series.coefficient(tuple(j + 1 for j in js))


def one_point_coefficients(series: TruncSeries) -> dict[int, NPoly]:
    """{inverse power: coefficient} for a one-variable series."""
    return {k[0]: v for k, v in series.items()}


def symmetrized_classes(series: TruncSeries) -> dict[tuple[int, ...], NPoly]:
    """Group monomials into symmetric classes [a, b, c] (exponents sorted descending).

    Raises if two members of one class carry different coefficients.
    """
    out: dict[tuple[int, ...], NPoly] = {}
    for exps, c in series.items():
        key = tuple(sorted(exps, reverse=True))
        if key in out and out[key] != c:
            raise InconsistencyError(f"series is not symmetric at {exps}")
        out[key] = c
    return out


def is_symmetric(series: TruncSeries) -> bool:
    n = len(series.vars)
    for perm in permutations(range(n)):
        if series.permute(perm) != series:
            return False
    return True


# ---------------------------------------------------------------------------
# correlators read off the n-point functions
# ---------------------------------------------------------------------------

# largest |lambda| served for each number of parts (npoint cost grows fast with n)
KP_ENGINE_LIMITS = {1: 40, 2: 24, 3: 14, 4: 8}


def kp_supports(lam: Partition) -> bool:
    lam = Partition(lam)
    return not lam or lam.weight <= KP_ENGINE_LIMITS.get(len(lam), -1)


_engine_series: dict[int, tuple[int, TruncSeries]] = {}


def _series_covering(n: int, weight: int) -> TruncSeries:
    """A cached G^(n) whose cap covers ``weight``; a larger cached cap is reused."""
    cached = _engine_series.get(n)
    if cached is None or cached[0] < weight:
        cached = (weight, npoint(n, weight))
        _engine_series[n] = cached
    return cached[1]


def _kp_cumulant(parts: tuple[int, ...]) -> NPoly:
    if sum(parts) % 2:
        return ZERO
    return coefficient(_series_covering(len(parts), sum(parts)), parts)


def kp_connected_correlator(lam: Partition) -> Graded:
    """<p_lambda>^c as the coefficient of prod xi_i^(-lambda_i - 1) in G^(l(lambda))."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("connected correlator of the empty partition is undefined")
    if not kp_supports(lam):
        raise CapacityError(f"kp engine serves |lambda| <= {KP_ENGINE_LIMITS.get(len(lam), 0)} "
                            f"with {len(lam)} parts")
    if lam.weight % 2:
        return Graded.zero()
    return Graded(_kp_cumulant(tuple(lam)), gs_exponent(lam))


def kp_correlator(lam: Partition) -> Graded:
    """<p_lambda> rebuilt from kp cumulants: m(S) = sum over blocks B containing the first part."""
    lam = Partition(lam)
    if lam.weight % 2:
        return Graded.zero()
    if not kp_supports(lam):
        raise CapacityError(f"kp engine serves |lambda| <= {KP_ENGINE_LIMITS.get(len(lam), 0)} "
                            f"with {len(lam)} parts")
    memo: dict[tuple[int, ...], NPoly] = {(): ONE}

    def moment(parts: tuple[int, ...]) -> NPoly:
        if parts in memo:
            return memo[parts]
        if sum(parts) % 2:
            return ZERO
        first, rest = parts[0], parts[1:]
        total = ZERO
        for mask in range(1 << len(rest)):
            block = (first,) + tuple(rest[i] for i in range(len(rest)) if mask >> i & 1)
            other = tuple(rest[i] for i in range(len(rest)) if not mask >> i & 1)
            if sum(block) % 2:
                continue
            total = total + _kp_cumulant(block) * moment(other)
        memo[parts] = total
        return total

    return Graded(moment(tuple(lam)), gs_exponent(lam))


# ---------------------------------------------------------------------------
# bridge to the free energy
# ---------------------------------------------------------------------------

@dataclass
class BridgeReport:
    n: int
    cap: int
    checked: int
    ok: bool
    first_mismatch: str | None = None

    def summary(self) -> str:
        status = "agree" if self.ok else f"MISMATCH {self.first_mismatch}"
        return f"G^({self.n}) vs free energy, cap {self.cap}: {self.checked} coefficients, {status}"


def _weight_vectors(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    for js in product(range(1, cap + 1), repeat=n):
        if sum(js) <= cap:
            yield js


def npoint_vs_free_energy(n: int, cap: int, raise_on_mismatch: bool = False) -> BridgeReport:
    """Compare G^(n) with derivatives of the wick-derived free energy.

    d/dT_j = j d/dg_j, so the coefficient of prod xi_i^(-j_i-1) must equal
    prod(j_i) * prod(m_k!) * [g_lambda] F with lambda the sorted j-vector.  The
    reverse substitution xi^(-j-1) -> g_j / j, divided by n!, must give back
    the length-n part of F.
    """
    if n * 1 > cap:
        raise ValueError("cap too small for any term")
    g = npoint(n, cap)
    free = connected_free_energy(cap)
    checked = 0
    mismatch = None

    for js in _weight_vectors(n, cap):
        lam = Partition(sorted(js, reverse=True))
        f_coeff = free[lam].poly
        mult = prod(factorial(m) for m in lam.multiplicities().values())
        expected = f_coeff * (prod(js) * mult)
        got = coefficient(g, js)
        checked += 1
        if got != expected:
            mismatch = f"at j={js}: kp {got} vs free energy {expected}"
            break

    if mismatch is None:
        for exps in g.terms:
            if sum(exps) - n > cap or any(e < 2 for e in exps):
                mismatch = f"unexpected monomial {exps} in G^({n})"
                break

    if mismatch is None:
        recovered: dict[Partition, NPoly] = {}
        for exps, c in g.terms.items():
            js = [e - 1 for e in exps]
            lam = Partition(sorted(js, reverse=True))
            recovered[lam] = recovered.get(lam, ZERO) + c * Fraction(1, prod(js))
        for lam in set(recovered) | {l for l in free.coeffs if len(l) == n}:
            lhs = recovered.get(lam, ZERO) / factorial(n)
            rhs = free[lam].poly
            checked += 1
            if lhs != rhs:
                mismatch = f"F^({n}) at g_{lam}: from G {lhs} vs free energy {rhs}"
                break

    report = BridgeReport(n, cap, checked, mismatch is None, mismatch)
    if mismatch and raise_on_mismatch:
        raise EngineDisagreement(f"G^({n}) vs F", mismatch, "")
    return report


__all__ = [
    "BridgeReport",
    "Propagator",
    "a_series",
    "coefficient",
    "default_cap",
    "is_symmetric",
    "KP_ENGINE_LIMITS",
    "kp_connected_correlator",
    "kp_correlator",
    "kp_supports",
    "n_cycles",
    "npoint",
    "npoint_signed",
    "npoint_vs_free_energy",
    "one_point_coefficients",
    "propagator",
    "symmetrized_classes",
    "xi_names",
]

