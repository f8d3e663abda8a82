"""Exact coefficient arithmetic.

``NPoly``      polynomials in the symbol N with rational coefficients
``Graded``     an NPoly times a power of g_s
``TruncSeries`` truncated series in inverse variables xi_i^{-1}
``LaurentSeries`` the same with signed exponents, used while rational
               parts of propagators are still being cancelled

No floating point is used anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InconsistencyError

Rational = int | Fraction


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class NPoly:
    """Polynomial in N with exact rational coefficients.

    Stored as integer numerators ``num[d]`` (coefficient of N**d) over a
    single positive denominator, reduced so that the content of ``num`` is
    coprime to ``den``.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Mapping[int, Rational] | Sequence[Rational] = (), den: int = 1):
        if isinstance(coeffs, Mapping):
            items = [(int(d), Fraction(c)) for d, c in coeffs.items()]
            if any(d < 0 for d, _ in items):
                raise ValueError("negative degree in NPoly")
            size = max((d for d, _ in items), default=-1) + 1
            dense = [Fraction(0)] * size
            for d, c in items:
                dense[d] += c
        else:
            dense = [Fraction(c) for c in coeffs]
        common = 1
        for c in dense:
            common = common * c.denominator // gcd(common, c.denominator)
        num = [int(c * common) for c in dense]
        self._set(num, common * den)

    def _set(self, num: list[int], den: int) -> None:
        _strip(num)
        if den < 0:
            num, den = [-c for c in num], -den
        g = den
        for c in num:
            if g == 1:
                break
            g = gcd(g, c)
        if not num:
            den = 1
        elif g > 1:
            num = [c // g for c in num]
            den //= g
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: list[int], den: int) -> "NPoly":
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def constant(cls, c: Rational) -> "NPoly":
        c = Fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, degree: int, c: Rational = 1) -> "NPoly":
        c = Fraction(c)
        return cls._raw([0] * degree + [c.numerator], c.denominator)

    # -- views ------------------------------------------------------------
    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Nonzero coefficients keyed by degree."""
        return {d: Fraction(c, self._den) for d, c in enumerate(self._num) if c}

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self._num):
            return Fraction(self._num[degree], self._den)
        return Fraction(0)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._num) - 1

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self) -> bool:
        return bool(self._num)

    def is_integral(self) -> bool:
        return self._den == 1

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "NPoly | Rational") -> "NPoly":
        if not isinstance(other, NPoly):
            if isinstance(other, (int, Fraction)):
                other = NPoly.constant(other)
            else:
                return NotImplemented
        a, b = self._num, other._num
        if not b:
            return self
        if not a:
            return other
        da, db = self._den, other._den
        if da == db:
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] += c
            return NPoly._raw(out, da)
        g = gcd(da, db)
        fa, fb = db // g, da // g
        size = max(len(a), len(b))
        out = [0] * size
        for i, c in enumerate(a):
            out[i] = c * fa
        for i, c in enumerate(b):
            out[i] += c * fb
        return NPoly._raw(out, da * fa)

    __radd__ = __add__

    def __neg__(self) -> "NPoly":
        return NPoly._raw([-c for c in self._num], self._den)

    def __sub__(self, other: "NPoly | Rational") -> "NPoly":
        if not isinstance(other, NPoly):
            if isinstance(other, (int, Fraction)):
                other = NPoly.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rational) -> "NPoly":
        return NPoly.constant(other) - self

    def __mul__(self, other: "NPoly | Rational") -> "NPoly":
        if isinstance(other, NPoly):
            a, b = self._num, other._num
            if not a or not b:
                return ZERO
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return NPoly._raw(out, self._den * other._den)
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return NPoly._raw([c * other.numerator for c in self._num], self._den * other.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "NPoly":
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("NPoly division by zero")
        return self * (1 / other)

    def __pow__(self, k: int) -> "NPoly":
        if k < 0:
            raise ValueError("negative power of NPoly")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NPoly):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == NPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    # -- evaluation and substitution --------------------------------------
    def __call__(self, x: Rational) -> Fraction:
        acc = 0
        for c in reversed(self._num):
            acc = acc * x + c
        return Fraction(acc, self._den)

    def shift(self, a: int) -> "NPoly":
        """``P(N + a)``."""
        if a == 0 or len(self._num) <= 1:
            return self
        out = [0] * len(self._num)
        for d, c in enumerate(self._num):
            if not c:
                continue
            for k in range(d + 1):
                out[k] += c * comb(d, k) * a ** (d - k)
        return NPoly._raw(out, self._den)

    def scale_variable(self, s: int) -> "NPoly":
        """``P(s * N)``."""
        return NPoly._raw([c * s**d for d, c in enumerate(self._num)], self._den)

    # -- text ---------------------------------------------------------------
    def to_json(self) -> dict[str, str]:
        return {str(d): str(c) for d, c in sorted(self.coeffs.items(), reverse=True)}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "NPoly":
        return cls({int(d): Fraction(c) for d, c in data.items()})

    def pretty(self, var: str = "N") -> str:
        """Descending powers, integers as integers, rationals as a/b."""
        terms = sorted(self.coeffs.items(), reverse=True)
        if not terms:
            return "0"
        out = []
        for i, (d, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = var if d == 1 else f"{var}^{d}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag}{power}"
                else:
                    body = f"({mag}){power}"
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"NPoly({self.pretty()})"

    __str__ = pretty


ZERO = NPoly()
ONE = NPoly.constant(1)
N = NPoly.monomial(1)


@lru_cache(maxsize=None)
def rising_product(k: int, l: int) -> NPoly:
    """``[N]_k^l = prod_{j=k}^{l} (N + j)``; ``k == l + 1`` is the empty product."""
    if k > l + 1:
        raise ValueError(f"rising_product undefined for k={k} > l+1={l + 1}")
    num = [1]
    for j in range(k, l + 1):
        nxt = [0] * (len(num) + 1)
        for d, c in enumerate(num):
            nxt[d] += c * j
            nxt[d + 1] += c
        num = nxt
    return NPoly._raw(num, 1)


def binomial_poly(k: int) -> NPoly:
    """``binom(N, k)`` as a polynomial in N."""
    from math import factorial

    if k < 0:
        return ZERO
    return rising_product(-(k - 1), 0) / factorial(k) if k else ONE


class Graded:
    """``poly * g_s**gs_exp``."""

    __slots__ = ("poly", "gs_exp")

    def __init__(self, poly: NPoly, gs_exp: int = 0):
        self.poly = poly
        self.gs_exp = 0 if poly.is_zero() else int(gs_exp)

    @classmethod
    def zero(cls) -> "Graded":
        return cls(ZERO, 0)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __add__(self, other: "Graded") -> "Graded":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.gs_exp != other.gs_exp:
            raise ValueError("cannot add Graded values with different g_s exponents")
        return Graded(self.poly + other.poly, self.gs_exp)

    def __sub__(self, other: "Graded") -> "Graded":
        return self + (-other)

    def __neg__(self) -> "Graded":
        return Graded(-self.poly, self.gs_exp)

    def __mul__(self, other: "Graded | NPoly | Rational") -> "Graded":
        if isinstance(other, Graded):
            return Graded(self.poly * other.poly, self.gs_exp + other.gs_exp)
        return Graded(self.poly * other, self.gs_exp)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "Graded":
        return Graded(self.poly / other, self.gs_exp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graded):
            return NotImplemented
        return self.poly == other.poly and self.gs_exp == other.gs_exp

    def __hash__(self) -> int:
        return hash((self.poly, self.gs_exp))

    def at_gs_one(self) -> NPoly:
        return self.poly

    def pretty(self) -> str:
        if self.is_zero():
            return "0"
        body = self.poly.pretty()
        if self.gs_exp == 0:
            return body
        if len(self.poly.coeffs) > 1:
            body = f"({body})"
        return f"{body}·g_s^{self.gs_exp}"

    def to_json(self) -> dict:
        return {"gs": self.gs_exp, "poly": self.poly.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "Graded":
        return cls(NPoly.from_json(data["poly"]), int(data["gs"]))

    def __repr__(self) -> str:
        return f"Graded({self.pretty()})"


# ---------------------------------------------------------------------------
# series in inverse variables
# ---------------------------------------------------------------------------

Exps = tuple[int, ...]


def _add_into(acc: dict[Exps, NPoly], key: Exps, value: NPoly) -> None:
    prev = acc.get(key)
    if prev is None:
        acc[key] = value
    else:
        s = prev + value
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


class LaurentSeries:
    """Series in xi_i^{-1} whose exponents may be negative.

    ``exps[i] = e`` stands for ``xi_i ** (-e)``.  Two truncations are kept,
    both exact under multiplication as long as every factor has positive
    total degree and positive weight on each stored term:

    * ``cap``   bound on the total inverse degree ``sum(e)``;
    * ``wcap``  bound on ``sum(w_i * e_i)`` for strictly positive weights.
    """

    __slots__ = ("vars", "terms", "cap", "weights", "wcap")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exps, NPoly] | None = None,
                 cap: int | None = None, weights: Sequence[int] | None = None,
                 wcap: int | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"repeated variable in {self.vars}")
        self.cap = cap
        self.weights = tuple(weights) if weights is not None else None
        self.wcap = wcap
        if (self.weights is None) != (wcap is None):
            raise ValueError("weights and wcap go together")
        self.terms: dict[Exps, NPoly] = {}
        for k, v in (terms or {}).items():
            k = tuple(k)
            if len(k) != len(self.vars):
                raise ValueError("exponent vector length does not match variables")
            if not v.is_zero() and self._keep(k):
                _add_into(self.terms, k, v)

    def _keep(self, k: Exps) -> bool:
        if self.cap is not None and sum(k) > self.cap:
            return False
        if self.wcap is not None and sum(w * e for w, e in zip(self.weights, k)) > self.wcap:
            return False
        return True

    def _like(self, terms: dict[Exps, NPoly], other: "LaurentSeries | None" = None) -> "LaurentSeries":
        cap, wcap = self.cap, self.wcap
        if other is not None:
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            if other.weights != self.weights and other.weights is not None and self.weights is not None:
                raise ValueError("weight vectors differ")
            cap = _min_cap(cap, other.cap)
            wcap = _min_cap(wcap, other.wcap)
        weights = self.weights if self.weights is not None else (other.weights if other else None)
        cls = type(self) if other is None or type(other) is type(self) else LaurentSeries
        out = cls.__new__(cls)
        LaurentSeries.__init__(out, self.vars, None, cap, weights, wcap)
        out.terms = {k: v for k, v in terms.items() if out._keep(k)}
        return out

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(acc, k, v)
        return self._like(acc, other)

    def __neg__(self) -> "LaurentSeries":
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c: "NPoly | Rational") -> "LaurentSeries":
        scaled = ((k, v * c) for k, v in self.terms.items())
        return self._like({k: v for k, v in scaled if not v.is_zero()})

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        shell = self._like({}, other)
        acc: dict[Exps, NPoly] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                if shell._keep(k):
                    _add_into(acc, k, va * vb)
        shell.terms = acc
        return shell

    def coefficient(self, exps: Sequence[int]) -> NPoly:
        return self.terms.get(tuple(exps), ZERO)

    def items(self) -> Iterator[tuple[Exps, NPoly]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def signed_residue(self) -> dict[Exps, NPoly]:
        """Terms carrying a non-negative power of some variable (exponent <= 0 is a
        positive power, exponent 0 is no inverse power)."""
        return {k: v for k, v in self.terms.items() if any(e < 0 for e in k)}

    def finalize(self, cap: int | None = None) -> "TruncSeries":
        """Convert to a pure inverse-power series; any term with a positive power of a
        variable left over is an internal error."""
        residue = self.signed_residue()
        if residue:
            first = min(residue)
            raise InconsistencyError(
                f"signed-exponent residue survived cancellation: {len(residue)} terms, "
                f"first {first} -> {residue[first]}")
        cap = self.cap if cap is None else cap
        if cap is None:
            raise ValueError("finalize needs a total-degree cap")
        return TruncSeries(self.vars, cap, {k: v for k, v in self.terms.items() if sum(k) <= cap})

    def __repr__(self) -> str:
        return f"{type(self).__name__}(vars={self.vars}, cap={self.cap}, terms={len(self.terms)})"


def _min_cap(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class TruncSeries(LaurentSeries):
    """Series in xi_i^{-1} with non-negative exponents and total degree <= cap."""

    __slots__ = ()

    def __init__(self, vars: Sequence[str], cap: int, terms: Mapping[Exps, NPoly] | None = None):
        if cap is None or cap < 0:
            raise ValueError("TruncSeries needs a non-negative cap")
        for k in (terms or {}):
            if any(e < 0 for e in k):
                raise ValueError(f"negative exponent {k} in TruncSeries")
        super().__init__(vars, terms, cap=cap)

    @classmethod
    def one(cls, vars: Sequence[str], cap: int) -> "TruncSeries":
        return cls(vars, cap, {(0,) * len(vars): ONE})

    @classmethod
    def monomial(cls, vars: Sequence[str], cap: int, exps: Sequence[int], c: "NPoly | Rational" = 1) -> "TruncSeries":
        c = c if isinstance(c, NPoly) else NPoly.constant(c)
        return cls(vars, cap, {tuple(exps): c})

    def permute(self, perm: Sequence[int]) -> "TruncSeries":
        """Rename variable i to variable perm[i] (exponents move accordingly)."""
        terms = {}
        for k, v in self.terms.items():
            new = [0] * len(k)
            for i, e in enumerate(k):
                new[perm[i]] = e
            terms[tuple(new)] = v
        return TruncSeries(self.vars, self.cap, terms)

    def to_json(self) -> list[dict]:
        return [{"exps": list(k), "poly": v.to_json(), "gs": 0} for k, v in self.items()]

    @classmethod
    def from_json(cls, vars: Sequence[str], cap: int, data: Iterable[Mapping]) -> "TruncSeries":
        return cls(vars, cap, {tuple(d["exps"]): NPoly.from_json(d["poly"]) for d in data})


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def series_scale(a: LaurentSeries, c: "NPoly | Rational") -> LaurentSeries:
    return a.scale(c)


def geometric_expand(x: str, y: str, n: int, cap: int) -> LaurentSeries:
    """Expansion of ``1/(x - y)**n`` in the region ``|x| > |y|``.

    Terms ``binom(-n, k) (-1)**k x**(-n-k) y**k`` for ``n + k <= cap``, returned in
    the signed lane over ``(x, y)`` (the y exponent is stored as ``-k``).
    """
    if x == y:
        raise ValueError("directional expansion needs two distinct variables")
    if n < 1:
        raise ValueError("n must be positive")
    if cap < n:
        raise ValueError("cap must be at least n")
    terms = {}
    for k in range(cap - n + 1):
        terms[(n + k, -k)] = NPoly.constant(_binom_neg(n, k) * (-1) ** k)
    return LaurentSeries((x, y), terms)


def _binom_neg(n: int, k: int) -> int:
    """``binom(-n, k) = (-1)**k binom(n + k - 1, k)``."""
    return (-1) ** k * comb(n + k - 1, k)
