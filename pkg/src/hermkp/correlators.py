"""Correlators from symmetric-group characters, Schur correlators, and Z_N / F_N.

The character engine evaluates the Burnside count of solutions to
``sigma tau in C_mu`` with sigma of type lambda and tau a fixed-point-free
involution, so it shares no code with the gluing enumeration in ``wick``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Literal

from .characters import MAX_CHARACTER_WEIGHT, character
from .errors import CapacityError
from .partitions import Partition, cell_stats, enumerate_partitions, partitions_up_to, z_of
from .polyalg import Graded, NPoly, ONE, ZERO, rising_product
from .wick import MAX_WICK_WEIGHT, connected_correlator, double_factorial, gs_exponent, wick_correlator

Basis = Literal["power", "schur"]
Engine = Literal["char", "wick"]


def _even_class(n: int) -> Partition:
    return Partition((2,) * n)


def _identity_class(m: int) -> Partition:
    return Partition((1,) * m)


def _check_weight(weight: int, ceiling: int = MAX_CHARACTER_WEIGHT) -> None:
    if weight > ceiling:
        raise CapacityError(f"weight {weight} exceeds the supported ceiling {ceiling}")


@lru_cache(maxsize=None)
def _irrep_kernels(two_n: int) -> dict[Partition, NPoly]:
    """For every nu |- 2n: (2n)!/z_(2^n) * chi^nu_(2^n)/chi^nu_(1^2n) * sum_mu chi^nu_mu N^l(mu)/z_mu."""
    n = two_n // 2
    even = _even_class(n)
    ident = _identity_class(two_n)
    classes = enumerate_partitions(two_n)
    prefactor = Fraction(factorial(two_n), z_of(even))
    out = {}
    for nu in classes:
        chi_even = character(nu, even)
        if not chi_even:
            continue
        content_sum = NPoly({})
        for mu in classes:
            c = character(nu, mu)
            if c:
                content_sum = content_sum + NPoly.monomial(len(mu), Fraction(c, z_of(mu)))
        out[nu] = content_sum * (prefactor * Fraction(chi_even, character(nu, ident)))
    return out


def char_correlator(lam: Partition) -> Graded:
    """<p_lambda>_N as a sum over irreducible characters of S_2n."""
    lam = Partition(lam)
    if lam.weight % 2:
        return Graded.zero()
    _check_weight(lam.weight)
    total = ZERO
    for nu, kernel in _irrep_kernels(lam.weight).items():
        c = character(nu, lam)
        if c:
            total = total + kernel * c
    return Graded(total, gs_exponent(lam))


def connected_from_moments(lam: Partition, moment: Callable[[Partition], Graded]) -> Graded:
    """Cumulant of the trace factors given any moment function.

    Solves m(S) = sum over blocks B containing the first part of k(B) m(S - B).
    """
    lam = Partition(lam)
    if lam.weight % 2:
        return Graded.zero()
    m_memo: dict[tuple[int, ...], NPoly] = {(): ONE}
    k_memo: dict[tuple[int, ...], NPoly] = {}

    def m(parts: tuple[int, ...]) -> NPoly:
        if parts not in m_memo:
            m_memo[parts] = ZERO if sum(parts) % 2 else moment(Partition(parts)).poly
        return m_memo[parts]

    def k(parts: tuple[int, ...]) -> NPoly:
        if parts in k_memo:
            return k_memo[parts]
        if sum(parts) % 2:
            return ZERO
        total = m(parts)
        first, rest = parts[0], parts[1:]
        for mask in range((1 << len(rest)) - 1):
            block = (first,) + tuple(rest[i] for i in range(len(rest)) if mask >> i & 1)
            other = tuple(sorted((rest[i] for i in range(len(rest)) if not mask >> i & 1), reverse=True))
            total = total - k(tuple(sorted(block, reverse=True))) * m(other)
        k_memo[parts] = total
        return total

    return Graded(k(tuple(lam)), gs_exponent(lam))


def char_connected_correlator(lam: Partition) -> Graded:
    return connected_from_moments(lam, char_correlator)


def un_dimension(lam: Partition) -> NPoly:
    """prod over cells (N + content)/hook: dimension of the U(N) irrep of shape lambda."""
    out = ONE
    for cell in cell_stats(Partition(lam)):
        out = out * NPoly({0: Fraction(cell.content, cell.hook), 1: Fraction(1, cell.hook)})
    return out


def content_polynomial(lam: Partition) -> NPoly:
    """prod over cells (N + content)."""
    out = ONE
    for cell in cell_stats(Partition(lam)):
        out = out * NPoly((cell.content, 1))
    return out


def schur_c(lam: Partition) -> Fraction:
    """(2n-1)!! chi^lambda_(2^n) / chi^lambda_(1^2n), the scalar in <s_lambda> = c * dim."""
    lam = Partition(lam)
    if lam.weight % 2:
        return Fraction(0)
    n = lam.weight // 2
    return Fraction(double_factorial(2 * n - 1) * character(lam, _even_class(n)),
                    character(lam, _identity_class(2 * n)))


def schur_correlator(lam: Partition) -> NPoly:
    """<s_lambda>_N, the Schur-basis coefficient of Z_N at g_s = 1."""
    lam = Partition(lam)
    if lam.weight % 2:
        return ZERO
    _check_weight(lam.weight)
    return un_dimension(lam) * schur_c(lam)


def frobenius_schur_correlator(lam: Partition, engine: Engine = "char") -> NPoly:
    """<s_lambda> = sum_eta chi^lambda_eta / z_eta <p_eta>, assembled from power-sum correlators."""
    lam = Partition(lam)
    if lam.weight % 2:
        return ZERO
    corr = char_correlator if engine == "char" else wick_correlator
    total = ZERO
    for eta in enumerate_partitions(lam.weight):
        c = character(lam, eta)
        if c:
            total = total + corr(eta).poly * Fraction(c, z_of(eta))
    return total


def shifted_parts(lam: Partition) -> list[int]:
    """f_i = lambda_i + 2n - i for i = 1..2n, lambda padded with zeros to 2n parts."""
    lam = Partition(lam)
    two_n = lam.weight
    padded = list(lam) + [0] * (two_n - len(lam))
    return [padded[i - 1] + two_n - i for i in range(1, two_n + 1)]


def is_even_partition(lam: Partition) -> bool:
    """Equal numbers of odd and even shifted parts f_i."""
    f = shifted_parts(lam)
    odd = sum(x % 2 for x in f)
    return 2 * odd == len(f)


def dif_itz_c(lam: Partition) -> Fraction:
    """Closed form for c(lambda) from the shifted parts f_i; zero for odd partitions."""
    lam = Partition(lam)
    if lam.weight % 2:
        raise ValueError("c(lambda) is defined for partitions of an even number")
    if lam.weight == 0:
        return Fraction(1)
    if not is_even_partition(lam):
        return Fraction(0)
    n = lam.weight // 2
    f = shifted_parts(lam)
    odd = [x for x in f if x % 2]
    even = [x for x in f if not x % 2]
    num = prod(double_factorial(x) for x in odd) * prod(double_factorial(x - 1) for x in even)
    den = prod(a - b for a in odd for b in even)
    return Fraction((-1) ** (n * (n - 1) // 2) * num, den)


@dataclass
class EvennessReport:
    max_weight: int
    scanned: int = 0
    odd: list[Partition] = field(default_factory=list)

    def summary(self) -> str:
        head = f"scanned {self.scanned} partitions of even weight <= {self.max_weight}: "
        if not self.odd:
            return head + "all even"
        return head + f"{len(self.odd)} odd, first counterexample ({self.odd[0]})"


def evenness_scan(max_weight: int = 16) -> EvennessReport:
    report = EvennessReport(max_weight)
    for two_n in range(2, max_weight + 1, 2):
        for lam in enumerate_partitions(two_n):
            report.scanned += 1
            if not is_even_partition(lam):
                report.odd.append(lam)
    return report


# ---------------------------------------------------------------------------
# fermionic coefficients
# ---------------------------------------------------------------------------

def bogoliubov_entry(q: int, p: int) -> NPoly:
    """A_{q,p}; nonzero only for p + q = 2n - 1."""
    if (p + q) % 2 == 0:
        return ZERO
    n = (p + q + 1) // 2
    sign = (-1) ** (p + (p + 1) // 2)
    scalar = Fraction(sign * double_factorial(2 * n - 1) * comb(n - 1, p // 2), factorial(2 * n))
    return rising_product(-p, q) * scalar


@dataclass
class BogoliubovMatrix:
    n_max: int
    entries: dict[tuple[int, int], NPoly]

    def __getitem__(self, key: tuple[int, int]) -> NPoly:
        return self.entries.get(key, ZERO)


def bogoliubov_matrix(n_max: int) -> BogoliubovMatrix:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    entries = {}
    for n in range(1, n_max + 1):
        for p in range(2 * n):
            q = 2 * n - 1 - p
            entries[(q, p)] = bogoliubov_entry(q, p)
    return BogoliubovMatrix(n_max, entries)


# ---------------------------------------------------------------------------
# partition function and free energy
# ---------------------------------------------------------------------------

@dataclass
class BasisExpansion:
    basis: Basis
    coeffs: dict[Partition, Graded]
    connected: bool = False

    def __getitem__(self, lam) -> Graded:
        return self.coeffs.get(Partition(lam), Graded.zero())

    def to_json(self) -> list[dict]:
        rows = []
        for lam in sorted(self.coeffs, key=lambda p: (p.weight, [-x for x in p])):
            g = self.coeffs[lam]
            rows.append({"lambda": str(lam), "gs": g.gs_exp, "poly": g.poly.to_json()})
        return rows

    @classmethod
    def from_json(cls, basis: Basis, rows: list[dict], connected: bool = False) -> "BasisExpansion":
        return cls(basis, {Partition.parse(r["lambda"]): Graded.from_json(r) for r in rows}, connected)


def _correlator_fn(engine: Engine):
    if engine == "char":
        return char_correlator
    if engine == "wick":
        return wick_correlator
    raise ValueError(f"unknown engine {engine!r}")


def _check_degree(max_degree: int, engine: Engine) -> None:
    ceiling = MAX_WICK_WEIGHT if engine == "wick" else MAX_CHARACTER_WEIGHT
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    _check_weight(max_degree, ceiling)


def partition_function(max_degree: int, basis: Basis = "power", engine: Engine = "char") -> BasisExpansion:
    """Coefficients of Z_N for all |lambda| <= max_degree.

    Power basis: coefficient of g_lambda is <p_lambda>/z_lambda.  Schur basis
    (at g_s = 1): coefficient of s_lambda is <s_lambda>.
    """
    _check_degree(max_degree, engine)
    coeffs: dict[Partition, Graded] = {}
    if basis == "power":
        corr = _correlator_fn(engine)
        for lam in partitions_up_to(max_degree):
            value = corr(lam)
            if not value.is_zero():
                coeffs[lam] = value / z_of(lam)
    elif basis == "schur":
        for lam in partitions_up_to(max_degree):
            if lam.weight % 2:
                continue
            value = schur_correlator(lam) if engine == "char" else frobenius_schur_correlator(lam, "wick")
            if not value.is_zero():
                coeffs[lam] = Graded(value, 0)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return BasisExpansion(basis, coeffs)


def _merge_parts(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


def formal_log(z: dict[Partition, NPoly], max_degree: int) -> dict[Partition, NPoly]:
    """log of a series in g_1, g_2, ... with constant term 1, graded by weight.

    Uses ``w F_w = w Z_w - sum_{k<w} k F_k Z_{w-k}`` (Euler operator applied
    to Z = exp F).
    """
    if z.get(Partition(()), ZERO) != ONE:
        raise ValueError("formal_log needs constant term 1")
    by_weight: dict[int, dict[Partition, NPoly]] = {w: {} for w in range(max_degree + 1)}
    for lam, c in z.items():
        if 0 < lam.weight <= max_degree and not c.is_zero():
            by_weight[lam.weight][lam] = c
    logs: dict[int, dict[Partition, NPoly]] = {}
    for w in range(1, max_degree + 1):
        acc = {lam: c * w for lam, c in by_weight[w].items()}
        for k in range(1, w):
            for a, fa in logs[k].items():
                for b, zb in by_weight[w - k].items():
                    key = _merge_parts(a, b)
                    acc[key] = acc.get(key, ZERO) - fa * zb * k
        logs[w] = {lam: c / w for lam, c in acc.items() if not c.is_zero()}
    out = {}
    for w in range(1, max_degree + 1):
        out.update(logs[w])
    return out


def free_energy(max_degree: int, engine: Engine = "char") -> BasisExpansion:
    """F_N = log Z_N in the power basis; coefficient of g_lambda is <p_lambda>^c / z_lambda."""
    z = partition_function(max_degree, "power", engine)
    series = {lam: g.poly for lam, g in z.coeffs.items()}
    series[Partition(())] = ONE
    logs = formal_log(series, max_degree)
    return BasisExpansion("power", {lam: Graded(c, gs_exponent(lam)) for lam, c in logs.items()}, True)


def connected_free_energy(max_degree: int) -> BasisExpansion:
    """Same as ``free_energy`` but assembled from wick cumulants (no logarithm)."""
    _check_degree(max_degree, "wick")
    coeffs = {}
    for lam in partitions_up_to(max_degree):
        if not lam or lam.weight % 2:
            continue
        value = connected_correlator(lam)
        if not value.is_zero():
            coeffs[lam] = value / z_of(lam)
    return BasisExpansion("power", coeffs, True)


# ---------------------------------------------------------------------------
# 't Hooft coupling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThooftPoly:
    """Polynomial in t and g_s**(+-1): terms[(t_exp, gs_exp)] = coefficient."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def at_gs_one(self) -> NPoly:
        acc: dict[int, Fraction] = {}
        for (t, _), c in self.terms:
            acc[t] = acc.get(t, Fraction(0)) + c
        return NPoly(acc)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (t, e), c in sorted(self.terms):
            body = "" if abs(c) == 1 and (t or e) else str(abs(c))
            if t:
                body += "t" if t == 1 else f"t^{t}"
            if e:
                body += f"·g_s^{e}" if body else f"g_s^{e}"
            out.append(("-" if c < 0 else "+") + body)
        text = "".join(out)
        return text[1:] if text.startswith("+") else text


def thooft_substitute(x: Graded) -> ThooftPoly:
    """Replace N by t / g_s."""
    terms = tuple(((d, x.gs_exp - d), c) for d, c in sorted(x.poly.coeffs.items()))
    return ThooftPoly(terms)
