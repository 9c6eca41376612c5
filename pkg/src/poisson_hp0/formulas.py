"""Closed-form Hilbert series of HP_0 in characteristic p.

Each evaluator returns a ``TruncatedSeries`` with coefficients of t^0..t^N.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Sequence

from .fp import check_prime
from .presets import ADEPreset
from .series import (
    CycloRational,
    TruncatedSeries,
    expand,
    f_series,
    jacobi_function,
    truncate,
)

log = logging.getLogger(__name__)


def _substitute(series: Sequence[int], g: int, N: int) -> TruncatedSeries:
    out = [0] * (N + 1)
    for k, c in enumerate(series):
        if k * g > N:
            break
        out[k * g] = c
    return TruncatedSeries(tuple(out))


def mainform_series(weights: Sequence[int], d: int, p: int, N: int) -> TruncatedSeries:
    """Jacobi polynomial plus t^{d-a-b-c} f(t^p), after reducing the weights to gcd 1."""
    check_prime(p)
    ws = tuple(weights)
    if len(ws) != 3:
        raise ValueError("mainform needs three weights")
    if d <= max(ws):
        raise ValueError(f"d={d} must exceed every weight {ws}")
    g = gcd(*ws)
    if g > 1:
        if d % g:
            raise ValueError(f"weights {ws} share the factor {g} but d={d} is not divisible by it")
        log.info("rescaling weights %s, d=%d by gcd %d", ws, d, g)
        inner = mainform_series(tuple(x // g for x in ws), d // g, p, N // g)
        return _substitute(inner.coefficients, g, N)
    jac = truncate(jacobi_function(ws, d), N)
    delta = d - sum(ws)
    out = list(jac.coefficients)
    K = (N - delta) // p
    if K >= 1:
        f = f_series(ws, d, K)
        for k, c in f.items():
            m = p * k + delta
            if 0 <= m <= N:
                out[m] += c
            elif m < 0 and c:
                raise ValueError(f"correction term lands in negative degree {m}")
    return TruncatedSeries(tuple(out))


def jacobi_part(weights: Sequence[int], d: int, N: int) -> TruncatedSeries:
    return truncate(jacobi_function(tuple(weights), d), N)


def kleinian_series(preset: ADEPreset, p: int, N: int) -> TruncatedSeries:
    """sum t^{2(m_i-1)} + t^{2p-2} (1 + t^{ph}) / ((1 - t^{pa})(1 - t^{pb}))."""
    check_prime(p)
    if p <= preset.h:
        warnings.warn(f"{preset.label}: p={p} <= h={preset.h}; the formula is only guaranteed for p > h", stacklevel=2)
    out = [0] * (N + 1)
    for e in preset.exponents:
        if 2 * (e - 1) <= N:
            out[2 * (e - 1)] += 1
    tail = CycloRational.from_factors(2 * p - 2, (), (p * preset.a, p * preset.b), [1] + [0] * (p * preset.h - 1) + [1])
    for m, c in enumerate(truncate(tail, N)):
        out[m] += c
    return TruncatedSeries(tuple(out))


@dataclass(frozen=True)
class PlaneCurveSpec:
    """Cone over a smooth plane curve of degree d."""

    d: int
    chi: int = field(init=False)

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("plane curve degree must be >= 3")
        object.__setattr__(self, "chi", (3 - self.d) * self.d)


def plane_curve_series(spec: PlaneCurveSpec, p: int, N: int) -> TruncatedSeries:
    """(1-t^{d-1})^3/(1-t)^3 + t^{d-3} f(t^p), f = (1-z^d)/(1-z)^3 - chi z/(1-z) - 1."""
    check_prime(p)
    d, chi = spec.d, spec.chi
    if d % p == 0:
        raise ValueError(f"p={p} divides d={d}")
    jac = truncate(CycloRational.from_factors(0, (d - 1,) * 3, (1, 1, 1)), N)
    out = list(jac.coefficients)
    K = (N - (d - 3)) // p
    if K >= 1:
        cone = expand(CycloRational.from_factors(0, (d,), (1, 1, 1)), 0, K)
        for k in range(1, K + 1):
            fk = cone[k] - chi  # -chi z/(1-z) contributes -chi for every k >= 1; the -1 only hits k = 0
            out[p * k + d - 3] += fk
    return TruncatedSeries(tuple(out))


@dataclass(frozen=True)
class StratumPair:
    psi: tuple[int, ...]
    eta: CycloRational

    def __post_init__(self):
        psi = tuple(int(c) for c in self.psi)
        if any(c < 0 for c in psi):
            raise ValueError("psi must have nonnegative coefficients")
        object.__setattr__(self, "psi", psi)


@dataclass(frozen=True)
class Stratum:
    dimVK: int
    pairs: tuple[StratumPair, ...]


@dataclass(frozen=True)
class StratumData:
    strata: tuple[Stratum, ...]
    name: str | None = None
    D: int | None = None  # top degree of HP_0 over the strata, for the small-p threshold

    def check_nonnegative(self, depth: int = 60) -> None:
        for s in self.strata:
            for pair in s.pairs:
                if pair.eta.valuation() is not None and pair.eta.valuation() < 0:
                    raise ValueError("eta must be a power series")
                if any(c < 0 for c in truncate(pair.eta, depth)):
                    raise ValueError("eta must expand with nonnegative coefficients")


def quotient_series(strata: StratumData, p: int, N: int) -> TruncatedSeries:
    """sum over strata and pairs of t^{(p-1) dim V^K} psi(t) eta(t^p)."""
    check_prime(p)
    out = [0] * (N + 1)
    for s in strata.strata:
        base = (p - 1) * s.dimVK
        if base > N:
            continue
        for pair in s.pairs:
            eta = truncate(pair.eta.substitute_power(p), N - base)
            for i, c in enumerate(pair.psi):
                if not c or base + i > N:
                    continue
                for j, e in enumerate(eta.coefficients[: N - base - i + 1]):
                    out[base + i + j] += c * e
    return TruncatedSeries(tuple(out))


def kleinian_strata(preset: ADEPreset) -> StratumData:
    """Stratum data of C^2/Gamma: the origin (K = Gamma) and the open stratum (K = 1)."""
    psi = [0] * (max(preset.jacobi_degrees) + 1)
    for k in preset.jacobi_degrees:
        psi[k] += 1
    eta = CycloRational(0, (1,) + (0,) * (preset.h - 1) + (1,), (preset.a, preset.b))
    return StratumData(
        (
            Stratum(0, (StratumPair(tuple(psi), CycloRational(0, (1,))),)),
            Stratum(2, (StratumPair((1,), eta),)),
        ),
        name=f"kleinian-{preset.label}",
        D=2 * (preset.h - 2),
    )


# Euler products --------------------------------------------------------------


def _bivariate_factor(table: list[list[int]], s_pow: int, t_pow: int, mult: int, n: int, N: int) -> None:
    """Multiply ``table`` (indexed [s][t]) in place by (1 - s^s_pow t^t_pow)^{-mult}."""
    if mult == 0 or s_pow > n or t_pow > N:
        return
    if mult < 0:
        raise ValueError("negative Euler-product multiplicity")
    if t_pow == 0:
        raise ValueError("Euler factor with t-exponent 0")
    # (1 - X)^{-mult} = sum_i C(mult+i-1, i) X^i, truncated
    terms = []
    i = 1
    while i * s_pow <= n and i * t_pow <= N:
        terms.append((i * s_pow, i * t_pow, comb(mult + i - 1, i)))
        i += 1
    for si in range(n, -1, -1):
        row = table[si]
        for ds, dt, c in terms:
            if ds > si:
                break
            src = table[si - ds]
            for ti in range(N, dt - 1, -1):
                v = src[ti - dt]
                if v:
                    row[ti] += c * v


def _euler_table(n: int, N: int) -> list[list[int]]:
    table = [[0] * (N + 1) for _ in range(n + 1)]
    table[0][0] = 1
    return table


@dataclass(frozen=True)
class SymPowerSpec:
    """Sym^n of a symplectic space L with dim L = 2d (optionally of a Kleinian L/Gamma)."""

    d: int
    n: int
    preset: ADEPreset | None = None

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise ValueError("d and n must be >= 1")
        if self.preset is not None and self.d != 1:
            raise ValueError("the Kleinian wreath case has dim L = 2 (d = 1)")


def sympower_series(spec: SymPowerSpec, p: int, N: int) -> TruncatedSeries:
    """Coefficient of s^n in prod_{j,k>=0} (1 - s^{j+1} t^{2d(p-1)+kp})^{-C(2d+k-1,k)}."""
    check_prime(p)
    if spec.preset is not None:
        return sym_kleinian_series(spec.preset, spec.n, p, N)
    n, d = spec.n, spec.d
    table = _euler_table(n, N)
    base = 2 * d * (p - 1)
    for j in range(n):
        k = 0
        while base + k * p <= N:
            _bivariate_factor(table, j + 1, base + k * p, comb(2 * d + k - 1, k), n, N)
            k += 1
    return TruncatedSeries(tuple(table[n]))


def sym_kleinian_series(preset: ADEPreset, n: int, p: int, N: int) -> TruncatedSeries:
    """Coefficient of s^n in the Euler product for Sym^n of a Kleinian singularity.

    The multiplicities d_k are the coefficients of (1 + z^h)/((1 - z^a)(1 - z^b)),
    taken from k = 0 (so d_0 = 1).
    """
    check_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    table = _euler_table(n, N)
    base = 2 * (p - 1)
    K = max(0, (N - base) // p)
    dk = expand(CycloRational(0, (1,) + (0,) * (preset.h - 1) + (1,), (preset.a, preset.b)), 0, K)
    for j in range(n):
        for m in preset.exponents:
            tp = 2 * (m - 1 + j * preset.h)
            if tp == 0:
                # ground state factor (1 - s^{j+1})^{-1}
                _shift_s(table, j + 1, n)
            else:
                _bivariate_factor(table, j + 1, tp, 1, n, N)
        for k in range(K + 1):
            if base + k * p <= N:
                _bivariate_factor(table, j + 1, base + k * p, dk[k], n, N)
    return TruncatedSeries(tuple(table[n]))


def _shift_s(table: list[list[int]], s_pow: int, n: int) -> None:
    """Multiply in place by 1/(1 - s^s_pow)."""
    for si in range(s_pow, n + 1):
        row, src = table[si], table[si - s_pow]
        for ti, v in enumerate(src):
            if v:
                row[ti] += v


def frobenius_top_forms(dim: int, p: int, N: int) -> TruncatedSeries:
    """t^{(p-1) dim} / (1 - t^p)^dim, the Hilbert series of top forms on the Frobenius twist."""
    return truncate(CycloRational((p - 1) * dim, (1,), (p,) * dim), N)
