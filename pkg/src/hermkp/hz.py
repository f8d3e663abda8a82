"""Harer-Zagier numbers and the identities around the one-point function.

c(n, k) is defined by c(0, k) = k, c(n, 0) = 0 and
c(n, k) = c(n, k-1) + c(n-1, k) + c(n-1, k-1); C(n, k) = (2n-1)!! c(n, k)
is the coefficient of xi^(-2n-1) in the one-point function, and
C(n, N) = sum_g eps_g(n) N^(n+1-2g).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from .polyalg import NPoly, ONE, ZERO, N, binomial_poly, rising_product
from .wick import double_factorial

MAX_IDENTITY_N = 10


@lru_cache(maxsize=None)
def hz_c(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("c(n, k) needs n, k >= 0")
    if n == 0:
        return k
    if k == 0:
        return 0
    return hz_c(n, k - 1) + hz_c(n - 1, k) + hz_c(n - 1, k - 1)


def hz_C(n: int, k: int) -> int:
    return double_factorial(2 * n - 1) * hz_c(n, k)


def _sign(p: int) -> int:
    return -1 if (p + (p + 1) // 2) % 2 else 1


@lru_cache(maxsize=None)
def hz_c_poly(n: int) -> NPoly:
    """c(n, N) as a polynomial, from the fermionic coefficient sum.

    c(0, N) = N and c(-1, N) = 1 by convention.
    """
    if n == -1:
        return ONE
    if n == 0:
        return N
    if n < -1:
        raise ValueError("n must be >= -1")
    total = ZERO
    for p in range(2 * n):
        total = total + rising_product(-p, 2 * n - 1 - p) * (_sign(p) * comb(n - 1, p // 2))
    return total / factorial(2 * n)


def hz_c_poly_split(n: int) -> NPoly:
    """Same polynomial, summed over l with p = 2l and p = 2l + 1 paired."""
    total = ZERO
    for l in range(n):
        pair = rising_product(-2 * l, 2 * n - 2 * l - 1) + rising_product(-(2 * l + 1), 2 * n - 2 * l - 2)
        total = total + pair * ((-1) ** l * comb(n - 1, l))
    return total / factorial(2 * n)


def hz_C_poly(n: int) -> NPoly:
    return hz_c_poly(n) * double_factorial(2 * n - 1)


# ---------------------------------------------------------------------------
# genus expansion
# ---------------------------------------------------------------------------

def _exp_half(sign: int, order: int) -> list[Fraction]:
    return [Fraction(sign, 2) ** k / factorial(k) for k in range(order + 1)]


def _series_div(num: list[Fraction], den: list[Fraction], order: int) -> list[Fraction]:
    if den[0] == 0:
        raise ZeroDivisionError("series division needs a nonzero constant term")
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / den[0])
    return out


def _series_pow(s: list[Fraction], e: int, order: int) -> list[Fraction]:
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(e):
        out = [sum((out[i] * s[k - i] for i in range(k + 1)), Fraction(0)) for k in range(order + 1)]
    return out


@lru_cache(maxsize=None)
def half_x_coth_half_x(order: int) -> tuple[Fraction, ...]:
    """Coefficients of (x/2)/tanh(x/2) up to x^order.

    Both (x/2)(e^{x/2} + e^{-x/2}) and e^{x/2} - e^{-x/2} are divisible by x;
    dividing the quotients avoids a zero leading term.
    """
    plus, minus = _exp_half(1, order + 1), _exp_half(-1, order + 1)
    num = [(a + b) / 2 for a, b in zip(plus, minus)]
    den = [plus[k + 1] - minus[k + 1] for k in range(order + 1)]
    return tuple(_series_div(num, den, order))


def epsilon_g(n: int, g: int) -> int:
    """Number of genus-g gluings of a 2n-gon."""
    if n < 1 or g < 0:
        raise ValueError("need n >= 1 and g >= 0")
    if 2 * g > n:
        return 0
    series = _series_pow(list(half_x_coth_half_x(2 * g)), n + 1, 2 * g)
    value = Fraction(factorial(2 * n), factorial(n + 1) * factorial(n - 2 * g)) * series[2 * g]
    if value.denominator != 1:
        raise ArithmeticError(f"eps_{g}({n}) = {value} is not an integer")
    return int(value)


def genus_polynomial(n: int) -> NPoly:
    return NPoly({n + 1 - 2 * g: epsilon_g(n, g) for g in range(n // 2 + 1)})


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

@dataclass
class IdentityResult:
    name: str
    status: str
    first_failure: int | None = None
    detail: str | None = None
    readings: dict[str, "IdentityResult"] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "first_failure": self.first_failure}
        if self.detail:
            out["detail"] = self.detail
        if self.readings:
            out["readings"] = {k: v.to_json() for k, v in sorted(self.readings.items())}
        return out


def _check(name: str, ns, test: Callable[[int], bool]) -> IdentityResult:
    for n in ns:
        if not test(n):
            return IdentityResult(name, "fail", n)
    return IdentityResult(name, "pass")


def _rec_b(n: int) -> bool:
    b, b1 = hz_c_poly(n), hz_c_poly(n - 1)
    return b == b.shift(-1) + b1 + b1.shift(-1)


def _partial_sum_lhs(n: int, j: int) -> int:
    return sum((-1) ** p * (-1) ** ((p + 1) // 2) * comb(n - 1, p // 2) for p in range(j + 1))


def _partial_sum_rhs(n: int, j: int) -> int:
    if j == 0:
        return 1
    if j == 2 * n - 1:
        return 0
    return ((-1) ** (j + (j + 1) // 2) * comb(n - 2, j // 2)
            + (-1) ** (j - 1 + j // 2) * comb(n - 2, (j - 1) // 2))


def _partial_sums(n: int) -> bool:
    return all(_partial_sum_lhs(n, j) == _partial_sum_rhs(n, j) for j in range(2 * n))


def _partial_sums_result(n_max: int) -> IdentityResult:
    # The three cases overlap at n = 1 (j = 1 is both the first nonzero j and 2n - 1),
    # so the identity is checked from n = 2 and the n = 1 value is reported.
    result = _check("partial sums of signed binomials", range(2, n_max + 1), _partial_sums)
    result.detail = f"checked for n >= 2; at n = 1 the sum through j = 1 is {_partial_sum_lhs(1, 1)}"
    return result


def _c_prev_difference(n: int) -> bool:
    total = ZERO
    for l in range(n):
        diff = rising_product(-2 * l, 2 * n - 2 * l - 1) - rising_product(-(2 * l + 1), 2 * n - 2 * l - 2)
        total = total + diff * ((-1) ** l * comb(n - 1, l))
    return total / factorial(2 * n) == hz_c_poly(n - 1)


def _c_simple(n: int) -> bool:
    total = ZERO
    for l in range(n + 1):
        total = total + rising_product(-2 * l, 2 * n - 2 * l) * ((-1) ** l * comb(n, l))
    return total / factorial(2 * n + 1) == hz_c_poly(n)


def _c_prev_simple(lower: Callable[[int], int]) -> Callable[[int], bool]:
    def test(n: int) -> bool:
        total = ZERO
        for l in range(n + 1):
            total = total + rising_product(lower(l), 2 * n - 2 * l - 1) * ((-1) ** l * comb(n, l))
        return N * total / factorial(2 * n) == hz_c_poly(n - 1)
    return test


def _generating(n_max: int) -> Callable[[int], bool]:
    """1 + 2 sum_n c(n,k) x^(n+1) = ((1+x)/(1-x))^k through x^(n_max+1), one k at a time."""
    order = n_max + 1

    def test(k: int) -> bool:
        base = _series_div([Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)], order)
        rhs = _series_pow(base, k, order)
        lhs = [Fraction(1)] + [Fraction(2 * hz_c(m - 1, k)) for m in range(1, order + 1)]
        return lhs == rhs
    return test


def _single_binomial(n: int) -> bool:
    binom_form = ZERO
    rising_form = ZERO
    for j in range(n + 1):
        binom_form = binom_form + binomial_poly(j + 1) * (comb(n, j) * 2 ** j)
        rising_form = rising_form + rising_product(-j, 0) * Fraction(comb(n, j) * 2 ** j, factorial(j + 1))
    return binom_form == hz_c_poly(n) == rising_form


def _two_binomial(n: int) -> bool:
    binom_form = ZERO
    rising_form = ZERO
    for j1 in range(n + 2):
        j2 = n + 1 - j1
        binom_form = binom_form + binomial_poly(j1) * binomial_poly(j2).shift(j2 - 1)
        rising_form = rising_form + rising_product(1 - j1, j2 - 1) * Fraction(1, factorial(j1) * factorial(j2))
    return binom_form / 2 == hz_c_poly(n) == N * rising_form / 2


E_READINGS = {
    "as printed [N]_{-(l-1)}": lambda l: -(l - 1),
    "[N]_{-(2l-1)}": lambda l: -(2 * l - 1),
}


def verify_identities(n_max: int) -> dict[str, IdentityResult]:
    """Check the Harer-Zagier identities (a)-(g) as exact polynomial identities.

    Item (e) is checked under both index readings; it passes when at least one
    holds, and the per-reading outcomes are kept in ``readings``.
    """
    if not 1 <= n_max <= MAX_IDENTITY_N:
        raise ValueError(f"n_max must be between 1 and {MAX_IDENTITY_N}")
    ns = range(1, n_max + 1)
    out = {
        "a": _check("b(n,N) = b(n,N-1) + b(n-1,N) + b(n-1,N-1)", ns, _rec_b),
        "b": _partial_sums_result(n_max),
        "c": _check("c(n-1,N) difference form", ns, _c_prev_difference),
        "d": _check("c(n,N) single-sum form", ns, _c_simple),
    }
    readings = {key: _check(f"c(n-1,N) = N/(2n)! sum ..., {key}", ns, _c_prev_simple(fn))
                for key, fn in E_READINGS.items()}
    holding = sorted(k for k, r in readings.items() if r.passed)
    out["e"] = IdentityResult(
        "c(n-1,N) N-prefactor form", "pass" if holding else "fail",
        None if holding else min(r.first_failure for r in readings.values()),
        detail=f"holds with {', '.join(holding)}" if holding else "no reading holds",
        readings=readings)
    out["f"] = _check("1 + 2 sum c(n,k) x^(n+1) = ((1+x)/(1-x))^k", range(0, 9), _generating(n_max))
    forms = [_check("single binomial sum", ns, _single_binomial),
             _check("sum of binomial products", ns, _two_binomial)]
    failed = [m for m in forms if not m.passed]
    out["g"] = IdentityResult("binomial forms of c(n,N)", "fail" if failed else "pass",
                              failed[0].first_failure if failed else None,
                              readings={"single binomial sum": forms[0], "sum of binomial products": forms[1]})
    return out


def report_json(results: dict[str, IdentityResult]) -> dict:
    return {k: v.to_json() for k, v in sorted(results.items())}


def recursion_matches_poly(n_max: int, k_max: int) -> bool:
    return all(hz_c_poly(n)(k) == hz_c(n, k) for n in range(n_max + 1) for k in range(k_max + 1))


# ---------------------------------------------------------------------------
# bridges to the KP engine
# ---------------------------------------------------------------------------

def one_point_bridge(n_max: int) -> bool:
    """Coefficient of xi^(-2n-1) in G^(1) equals C(n, N) for 1 <= n <= n_max."""
    from .kp import npoint

    g = npoint(1, 2 * n_max)
    return all(g.coefficient((2 * n + 1,)) == hz_C_poly(n) for n in range(1, n_max + 1))


def two_point_marginals(cap: int) -> tuple[bool, bool]:
    """The xi_1^-2 and xi_1^-3 slices of G^(2) against C(n-1, N), up to sum(j) <= cap."""
    from .kp import npoint

    g = npoint(2, cap)
    first = all(
        g.coefficient((2, e)) == (hz_C_poly(e // 2 - 1) * (e - 1) if e % 2 == 0 else ZERO)
        for e in range(2, cap + 1))
    second = all(
        g.coefficient((3, e)) == (hz_C_poly((e + 1) // 2 - 1) * (e - 1) if e % 2 == 1 and e >= 3 else ZERO)
        for e in range(2, cap))
    return first, second


__all__ = [
    "IdentityResult",
    "epsilon_g",
    "genus_polynomial",
    "half_x_coth_half_x",
    "hz_C",
    "hz_C_poly",
    "hz_c",
    "hz_c_poly",
    "hz_c_poly_split",
    "one_point_bridge",
    "recursion_matches_poly",
    "report_json",
    "two_point_marginals",
    "verify_identities",
]
