"""Brute-force HP_0 of A = F_p[x,y,z]/(Q) for a weighted-homogeneous Q.

The bracket span {A,A}[m] is computed degree by degree. By the identity
{fg, h} = {f, gh} + {g, fh}, brackets with the three coordinate functions
already span {A,A}, so the default spanning set is

    {x_i, b}   for i in (x, y, z) and b a basis monomial of complementary degree.

``spanning="pairs"`` uses all pairs of basis monomials instead; it is much
slower and serves as a cross-check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .fp import check_prime
from .linalg import matrix_rank
from .poly import (
    GradedPoly,
    Monomial,
    Reducer,
    WeightSystem,
    get_reducer,
    monomials_of_degree,
    partial_derivative,
    surface_bracket,
    weighted_degree,
)
from .series import expand, jacobi_function

log = logging.getLogger(__name__)


class RefusalError(ValueError):
    """A computation was declined because its preconditions on p fail."""


@dataclass(frozen=True)
class SurfaceSpec:
    """A weighted surface Q(x,y,z) = 0 with integer coefficients."""

    weights: WeightSystem
    terms: tuple[tuple[Monomial, int], ...]
    name: str | None = None
    d: int = field(init=False)

    def __post_init__(self):
        w = self.weights if isinstance(self.weights, WeightSystem) else WeightSystem(tuple(self.weights))
        object.__setattr__(self, "weights", w)
        if len(w) != 3:
            raise ValueError("a surface spec needs exactly three weights")
        merged: dict[Monomial, int] = {}
        for mono, c in self.terms:
            mono = tuple(int(e) for e in mono)
            if len(mono) != 3 or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono}")
            merged[mono] = merged.get(mono, 0) + int(c)
        terms = tuple(sorted(((m, c) for m, c in merged.items() if c), reverse=True))
        if not terms:
            raise ValueError("Q must be nonzero")
        degs = {weighted_degree(m, w) for m, _ in terms}
        if len(degs) != 1:
            raise ValueError(f"Q is not quasihomogeneous for weights {w.weights}: term degrees {sorted(degs)}")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "d", degs.pop())

    @property
    def delta(self) -> int:
        """Degree of the bracket: d - a - b - c."""
        return self.d - sum(self.weights)

    @property
    def label(self) -> str:
        return self.name or "surface"

    def poly(self, p: int) -> GradedPoly:
        return GradedPoly(self.terms, p, 3, self.weights, self.d)

    @cached_property
    def jacobi_top_degree(self) -> int:
        return 3 * self.d - 2 * sum(self.weights)

    def certify(self) -> None:
        """Check the isolated-singularity certificate in characteristic 0.

        The Jacobi ring dimensions must equal the coefficients of
        prod(1 - t^{d-w_i}) / prod(1 - t^{w_i}) and vanish above its degree.
        """
        top = self.jacobi_top_degree
        if self.d <= max(self.weights):
            raise ValueError(f"d={self.d} must exceed every weight {self.weights.weights}")
        N = top + max(self.weights)
        dims = jacobi_dims(self, 0, N)
        expected = expand(jacobi_function(self.weights, self.d), 0, N).coefficients
        if tuple(dims) != expected:
            first = next(m for m, (a, b) in enumerate(zip(dims, expected)) if a != b)
            raise ValueError(
                f"{self.label}: not an isolated singularity (Jacobi ring dimension {dims[first]} "
                f"in degree {first}, expected {expected[first]})"
            )


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    dim_A: int
    dim_bracket_span: int
    dim_jacobi_ideal: int | None

    @property
    def hp0_dim(self) -> int:
        return self.dim_A - self.dim_bracket_span


def check_brute_preconditions(spec: SurfaceSpec, p: int) -> None:
    check_prime(p)
    if spec.d % p == 0:
        raise RefusalError(f"p={p} divides d={spec.d}")
    if p <= max(spec.weights):
        raise RefusalError(f"p={p} does not exceed the largest weight {max(spec.weights)}")
    if spec.poly(p).is_zero():
        raise RefusalError(f"Q vanishes mod {p}")


@lru_cache(maxsize=None)
def _basis(weights: WeightSystem, lead: Monomial, m: int) -> tuple[Monomial, ...]:
    return tuple(
        mono for mono in monomials_of_degree(weights, m) if not all(a >= b for a, b in zip(mono, lead))
    )


def basis_of_degree(spec: SurfaceSpec, p: int, m: int, order: str = "wlex") -> list[Monomial]:
    """Monomials of degree m that are normal forms modulo Q."""
    if m < 0:
        return []
    red = get_reducer(spec.poly(p), order)
    return list(_basis(spec.weights, red.lead, m))


class _SurfaceContext:
    """Per-(spec, p, order) caches shared across degrees."""

    def __init__(self, spec: SurfaceSpec, p: int, order: str):
        self.spec = spec
        self.p = p
        self.Q = spec.poly(p)
        self.red: Reducer = get_reducer(self.Q, order)
        self.dQ = [list(partial_derivative(self.Q, k).items()) for k in range(3)]

    def basis(self, m: int) -> tuple[Monomial, ...]:
        if m < 0:
            return ()
        return _basis(self.spec.weights, self.red.lead, m)

    def coords(self, reduced: dict, index: dict[Monomial, int], out: np.ndarray) -> None:
        for mono, c in reduced.items():
            out[index[mono]] = c

    def generator_bracket(self, i: int, beta: Monomial) -> dict:
        """Normal form of {x_i, x^beta} = sum eps_ijk d_j(x^beta) d_k(Q)."""
        j, k = (i + 1) % 3, (i + 2) % 3
        terms = []
        for jj, kk, sign in ((j, k, 1), (k, j, -1)):
            e = beta[jj]
            if not e:
                continue
            base = beta[:jj] + (e - 1,) + beta[jj + 1 :]
            for mono, c in self.dQ[kk]:
                terms.append((tuple(a + b for a, b in zip(base, mono)), sign * e * c))
        return self.red.reduce_terms(terms)

    def jacobi_product(self, k: int, beta: Monomial) -> dict:
        return self.red.reduce_terms((tuple(a + b for a, b in zip(beta, mono)), c) for mono, c in self.dQ[k])


def _bracket_rows(ctx: _SurfaceContext, m: int, index, spanning: str) -> np.ndarray:
    spec, p = ctx.spec, ctx.p
    w = spec.weights
    target = m - spec.delta
    rows = []
    if spanning == "generators":
        for i in range(3):
            for beta in ctx.basis(target - w[i]):
                rows.append(ctx.generator_bracket(i, beta))
    elif spanning == "pairs":
        for j in range(0, target // 2 + 1):
            left = ctx.basis(j)
            right = ctx.basis(target - j)
            for s, u in enumerate(left):
                fu = GradedPoly.monomial(u, p, 1, w)
                for t, v in enumerate(right):
                    if j == target - j and t <= s:
                        continue
                    br = surface_bracket(fu, GradedPoly.monomial(v, p, 1, w), ctx.Q)
                    rows.append(ctx.red.reduce_terms(br.items()))
    else:
        raise ValueError(f"unknown spanning set {spanning!r}")
    A = np.zeros((len(rows), len(index)), dtype=np.int64)
    for r, red in enumerate(rows):
        ctx.coords(red, index, A[r])
    return A


def _jacobi_rows(ctx: _SurfaceContext, m: int, index) -> np.ndarray:
    spec = ctx.spec
    rows = []
    for k in range(3):
        for beta in ctx.basis(m - (spec.d - spec.weights[k])):
            rows.append(ctx.jacobi_product(k, beta))
    A = np.zeros((len(rows), len(index)), dtype=np.int64)
    for r, red in enumerate(rows):
        ctx.coords(red, index, A[r])
    return A


def hp0_dims(
    spec: SurfaceSpec,
    p: int,
    N: int,
    order: str = "wlex",
    spanning: str = "generators",
    jacobi: bool = True,
) -> list[DegreeReport]:
    """Per-degree dimensions of A, {A,A}, the Jacobi ideal and HP_0 for m = 0..N."""
    check_brute_preconditions(spec, p)
    ctx = _SurfaceContext(spec, p, order)
    out = []
    for m in range(N + 1):
        basis = ctx.basis(m)
        index = {mono: i for i, mono in enumerate(basis)}
        br = _bracket_rows(ctx, m, index, spanning)
        rank_br = matrix_rank(br, p) if len(basis) else 0
        rank_jac = None
        if jacobi:
            jac = _jacobi_rows(ctx, m, index)
            rank_jac = matrix_rank(jac, p) if len(basis) else 0
        out.append(DegreeReport(m, len(basis), rank_br, rank_jac))
    log.debug("hp0_dims %s p=%d N=%d done", spec.label, p, N)
    return out


def hp0_series(spec: SurfaceSpec, p: int, N: int, **kw) -> list[int]:
    return [r.hp0_dim for r in hp0_dims(spec, p, N, jacobi=False, **kw)]


def bracket_in_jacobi(spec: SurfaceSpec, p: int, N: int, order: str = "wlex") -> list[int]:
    """Degrees m <= N where the bracket span is NOT contained in the Jacobi ideal (joint-rank test)."""
    check_brute_preconditions(spec, p)
    ctx = _SurfaceContext(spec, p, order)
    bad = []
    for m in range(N + 1):
        basis = ctx.basis(m)
        if not basis:
            continue
        index = {mono: i for i, mono in enumerate(basis)}
        jac = _jacobi_rows(ctx, m, index)
        both = np.vstack([jac, _bracket_rows(ctx, m, index, "generators")])
        if matrix_rank(both, p) != matrix_rank(jac, p):
            bad.append(m)
    return bad


def jacobi_dims(spec: SurfaceSpec, p: int, N: int) -> list[int]:
    """dim of F[x,y,z]/(Q_x,Q_y,Q_z) in degrees 0..N; ``p == 0`` works over Q."""
    Q = spec.poly(p)
    w = spec.weights
    dQ = [list(partial_derivative(Q, k).items()) for k in range(3)]
    out = []
    for m in range(N + 1):
        monos = monomials_of_degree(w, m)
        index = {mono: i for i, mono in enumerate(monos)}
        rows = []
        for k in range(3):
            for beta in monomials_of_degree(w, m - (spec.d - w[k])):
                v = [0] * len(monos)
                for mono, c in dQ[k]:
                    v[index[tuple(a + b for a, b in zip(beta, mono))]] += c
                rows.append(v)
        out.append(len(monos) - (matrix_rank(rows, p) if rows else 0))
    return out


def posch_exceptions(spec: SurfaceSpec, p: int, N: int, reports: list[DegreeReport] | None = None) -> set[int]:
    """Degrees m <= N where the bracket span and the Jacobi ideal differ over F_p."""
    if reports is None:
        reports = hp0_dims(spec, p, N)
    return {r.degree for r in reports if r.dim_bracket_span != r.dim_jacobi_ideal}


def posch_allowed(spec: SurfaceSpec, p: int, m: int) -> bool:
    """Is m of the form pk + d - a - b - c with k >= 1?"""
    k, r = divmod(m - spec.delta, p)
    return r == 0 and k >= 1


def weights_gcd(spec: SurfaceSpec) -> int:
    return gcd(*spec.weights)
