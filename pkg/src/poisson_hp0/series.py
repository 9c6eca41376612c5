"""Exact Laurent-coefficient engine for rational functions of the form

    z^shift * P(z) / prod_j (1 - z^{e_j}).

Everything here is integer arithmetic; Python ints are unbounded, so the
coefficient growth never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .fp import lcm
from .poly import WeightSystem


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class CycloRational:
    """``z^shift * numerator(z) / prod (1 - z^e)`` with integer numerator coefficients."""

    shift: int
    numerator: tuple[int, ...]
    denom_exponents: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(int(c) for c in self.numerator))
        den = tuple(sorted(int(e) for e in self.denom_exponents))
        if any(e < 1 for e in den):
            raise ValueError(f"denominator exponents must be positive, got {den}")
        object.__setattr__(self, "denom_exponents", den)

    @classmethod
    def from_factors(
        cls, shift: int = 0, binomials: Iterable[int] = (), denom: Iterable[int] = (), numerator: Sequence[int] = (1,)
    ) -> "CycloRational":
        """``z^shift * numerator * prod (1 - z^b) / prod (1 - z^e)``; ``b`` may be zero or negative."""
        num = list(numerator)
        for b in binomials:
            if b == 0:
                num = []
            elif b > 0:
                num = poly_mul(num, [1] + [0] * (b - 1) + [-1])
            else:
                # 1 - z^b = -z^b (1 - z^{-b})
                shift += b
                num = poly_mul(num, [-1] + [0] * (-b - 1) + [1])
        return cls(shift, tuple(num), tuple(denom))

    def is_zero(self) -> bool:
        return not self.numerator

    def valuation(self) -> int | None:
        for i, c in enumerate(self.numerator):
            if c:
                return self.shift + i
        return None

    def substitute_power(self, k: int) -> "CycloRational":
        """The function ``z -> r(z^k)``."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        num = [0] * ((len(self.numerator) - 1) * k + 1) if self.numerator else []
        for i, c in enumerate(self.numerator):
            num[i * k] = c
        return CycloRational(self.shift * k, tuple(num), tuple(e * k for e in self.denom_exponents))

    def reciprocal(self) -> "CycloRational":
        """The function ``z -> r(1/z)`` rewritten in the same normal form."""
        if not self.numerator:
            return self
        deg = len(self.numerator) - 1
        sign = -1 if len(self.denom_exponents) % 2 else 1
        return CycloRational(
            -self.shift - deg + sum(self.denom_exponents),
            tuple(sign * c for c in reversed(self.numerator)),
            self.denom_exponents,
        )


@dataclass(frozen=True)
class LaurentSlice:
    """Coefficients of z^start, z^{start+1}, ... of a Laurent expansion."""

    start: int
    coefficients: tuple[int, ...]

    @property
    def end(self) -> int:
        """Last degree covered (start - 1 for an empty slice)."""
        return self.start + len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, degree: int) -> int:
        if not self.start <= degree <= self.end:
            raise IndexError(f"degree {degree} outside window [{self.start}, {self.end}]")
        return self.coefficients[degree - self.start]

    def get(self, degree: int, default: int = 0) -> int:
        if self.start <= degree <= self.end:
            return self.coefficients[degree - self.start]
        return default

    def items(self):
        return ((self.start + i, c) for i, c in enumerate(self.coefficients))

    def support(self) -> dict[int, int]:
        return {k: c for k, c in self.items() if c}


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of t^0 .. t^order."""

    coefficients: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def zeros(cls, N: int) -> "TruncatedSeries":
        return cls((0,) * (N + 1))

    @classmethod
    def from_support(cls, support: dict[int, int], N: int) -> "TruncatedSeries":
        c = [0] * (N + 1)
        for k, v in support.items():
            if 0 <= k <= N:
                c[k] += v
        return cls(tuple(c))

    def __getitem__(self, m: int) -> int:
        return self.coefficients[m]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise ValueError("series truncated at different orders")
        return TruncatedSeries(tuple(a + b for a, b in zip(self, other)))

    def support(self) -> dict[int, int]:
        return {m: c for m, c in enumerate(self.coefficients) if c}

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        for m, (a, b) in enumerate(zip(self, other)):
            if a != b:
                return m
        if len(self) != len(other):
            return min(len(self), len(other))
        return None


def _power_series(r: CycloRational, n: int) -> list[int]:
    """Power-series coefficients 0..n of numerator / prod(1 - z^e)."""
    if n < 0:
        return []
    c = [0] * (n + 1)
    for i, x in enumerate(r.numerator[: n + 1]):
        c[i] = x
    for e in r.denom_exponents:
        for i in range(e, n + 1):
            c[i] += c[i - e]
    return c


def expand(r: CycloRational, lo: int, hi: int) -> LaurentSlice:
    """Exact Laurent coefficients of ``r`` at 0 on degrees lo..hi."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    ps = _power_series(r, hi - r.shift)
    out = []
    for k in range(lo, hi + 1):
        i = k - r.shift
        out.append(ps[i] if i >= 0 else 0)
    return LaurentSlice(lo, tuple(out))


def truncate(r: CycloRational, N: int) -> TruncatedSeries:
    """Coefficients 0..N; negative-degree terms must be absent."""
    v = r.valuation()
    if v is not None and v < 0:
        raise ValueError(f"function has a pole of order {-v} at 0; not a power series")
    return TruncatedSeries(expand(r, 0, N).coefficients)


def split_parts(r: CycloRational, depth: int) -> tuple[LaurentSlice, int, LaurentSlice]:
    """(negative part, constant term, positive part up to z^depth)."""
    v = r.valuation()
    if v is not None and v < 0:
        neg = expand(r, v, -1)
    else:
        neg = LaurentSlice(0, ())
    const = expand(r, 0, 0).coefficients[0]
    pos = expand(r, 1, depth) if depth >= 1 else LaurentSlice(1, ())
    return neg, const, pos


# The specific functions attached to a weighted surface ---------------------------


def _abc(w: WeightSystem | Sequence[int]) -> tuple[int, ...]:
    ws = tuple(w.weights if isinstance(w, WeightSystem) else w)
    if len(ws) != 3:
        raise ValueError("surface formulas need exactly three weights")
    return ws


def hilbert_A(w, d: int) -> CycloRational:
    """(1 - z^d) / prod (1 - z^{w_i})."""
    return CycloRational.from_factors(0, [d], _abc(w))


def g_function(w, d: int) -> CycloRational:
    """z^{a+b+c-d} (1 - z^d) / prod (1 - z^{w_i})."""
    ws = _abc(w)
    return CycloRational.from_factors(sum(ws) - d, [d], ws)


def u_function(w, d: int) -> CycloRational:
    """(1 - z^d)(1 - z^{a+b+c-d}) / prod (1 - z^{w_i})."""
    ws = _abc(w)
    return CycloRational.from_factors(0, [d, sum(ws) - d], ws)


def jacobi_function(w, d: int) -> CycloRational:
    """prod (1 - z^{d-w_i}) / prod (1 - z^{w_i}); a polynomial for isolated singularities."""
    ws = _abc(w)
    return CycloRational.from_factors(0, [d - x for x in ws], ws)


def f_series(w, d: int, K: int) -> LaurentSlice:
    """Coefficients f_1..f_K of g - g_- + g_-(1/z) - g_0."""
    ws = _abc(w)
    if gcd(*ws) != 1:
        raise ValueError(f"weights {ws} have common divisor {gcd(*ws)}; rescale first")
    if K < 1:
        raise ValueError("K must be >= 1")
    neg, _, pos = split_parts(g_function(ws, d), K)
    return LaurentSlice(1, tuple(pos[k] + neg.get(-k) for k in range(1, K + 1)))


def u_coefficients(w, d: int, L: int) -> LaurentSlice:
    """Laurent coefficients c_l of u at 0 for -L <= l <= L."""
    return expand(u_function(w, d), -L, L)


def s_coefficients(w, d: int, K: int) -> LaurentSlice:
    """s_1..s_K with sum s_k z^k = g_-(1/z)."""
    neg, _, _ = split_parts(g_function(w, d), 0)
    return LaurentSlice(1, tuple(neg.get(-k) for k in range(1, K + 1)))


@dataclass(frozen=True)
class IdentityReport:
    name: str
    holds: bool
    checked: int
    first_failure: int | None = None
    detail: str = ""


def check_indepp(w, d: int, r: int, K: int) -> IdentityReport:
    """c_{rk} = c_k - s_k + s_{rk} for 1 <= k <= K."""
    ws = _abc(w)
    if gcd(r, lcm(*ws)) != 1:
        raise ValueError(f"r={r} is not coprime to lcm{ws}={lcm(*ws)}")
    c = u_coefficients(ws, d, max(r, 1) * K)
    s = s_coefficients(ws, d, max(r, 1) * K)
    for k in range(1, K + 1):
        lhs = c[r * k]
        rhs = c[k] - s[k] + s[r * k]
        if lhs != rhs:
            return IdentityReport("indepp", False, K, k, f"c_{r * k}={lhs} but c_k - s_k + s_rk = {rhs}")
    return IdentityReport("indepp", True, K)


def check_bk_identity(w, d: int, p: int, K: int) -> IdentityReport:
    """f_k = a_k - c_{pk} and f_k = a_k - c_k + s_k for 1 <= k <= K (gcd-1 weights)."""
    ws = _abc(w)
    f = f_series(ws, d, K)
    a = expand(hilbert_A(ws, d), 0, K)
    c = u_coefficients(ws, d, p * K)
    s = s_coefficients(ws, d, K)
    for k in range(1, K + 1):
        via_p = a[k] - c[p * k]
        via_s = a[k] - c[k] + s[k]
        if not f[k] == via_p == via_s:
            return IdentityReport(
                "b_k", False, K, k, f"f_{k}={f[k]}, a_k-c_pk={via_p}, a_k-c_k+s_k={via_s}"
            )
    return IdentityReport("b_k", True, K)


def check_u_coefficient_antisymmetry(w, d: int, L: int) -> IdentityReport:
    """c_l + c_{-l} = 0 for 0 <= l <= L on the Laurent coefficients of u at 0 (c_0 counted once).

    u is regular at 0 with u(0) = 1, so this coefficientwise reading fails at
    l = 0 for every surface; it is evaluated as stated and reported.
    """
    c = u_coefficients(w, d, L)
    for l in range(0, L + 1):
        total = c[0] if l == 0 else c[l] + c[-l]
        if total != 0:
            lhs = "c_0" if l == 0 else f"c_{l} + c_{-l}"
            return IdentityReport("c_l + c_-l", False, L + 1, l, f"{lhs} = {total}")
    return IdentityReport("c_l + c_-l", True, L + 1)


def check_u_antisymmetry(w, d: int, L: int) -> IdentityReport:
    """[z^l] u(z) + [z^l] u(1/z) = 0 for |l| <= L (Laurent expansions at 0)."""
    u = u_function(w, d)
    c = expand(u, -L, L)
    c_rec = expand(u.reciprocal(), -L, L)
    for l in range(-L, L + 1):
        if c[l] + c_rec[l] != 0:
            return IdentityReport("u-antisymmetry", False, 2 * L + 1, l, f"{c[l]} + {c_rec[l]} != 0")
    return IdentityReport("u-antisymmetry", True, 2 * L + 1)
