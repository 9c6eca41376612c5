"""Brute-force HP_0 for quotient singularities V/G over F_p.

V has coordinates (u_1, v_1, ..., u_n, v_n) with {u_i, v_j} = delta_ij. A group
element M acts on B = F_p[V] by the substitution x -> M x, so B^G is the ring of
invariants. Invariant bases are Reynolds images of monomials, echelonized.

The bracket span {A,A} is generated (as a vector space) by brackets
{g, b} with g running over algebra generators of A and b over a basis of A;
this follows from {fg, h} = {f, gh} + {g, fh}. The same holds for {A,B}.

When every generator maps u-coordinates to u-coordinates and v to v, the
(u-degree, v-degree) bigrading is preserved by G and by the bracket; the
computation then runs per bidegree, which keeps the matrices small.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct
from math import gcd
from typing import Sequence

import numpy as np

from .fp import check_prime, inv, primitive_roots_of_unity, smallest_primitive_root_of_unity
from .linalg import matrix_rank, matrix_rref
from .poly import GradedPoly, Monomial, WeightSystem, monomials_of_degree
from .surface import RefusalError

Entry = tuple[int, ...]  # coefficients of 1, zeta, zeta^2, ...
Matrix = tuple[tuple[int, ...], ...]

MAX_GROUP_ORDER = 1024
MAX_DIM = 6


@dataclass(frozen=True)
class GroupActionSpec:
    """Generators of G in Sp(V) with entries in Z[zeta_m]."""

    dim: int
    zeta_order: int
    generators: tuple[tuple[tuple[Entry, ...], ...], ...]
    name: str | None = None

    def __post_init__(self):
        if self.dim < 2 or self.dim % 2:
            raise ValueError(f"dim must be a positive even integer, got {self.dim}")
        if self.zeta_order < 1:
            raise ValueError("zeta_order must be >= 1")
        gens = []
        for g in self.generators:
            rows = tuple(tuple(_entry(e) for e in row) for row in g)
            if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
                raise ValueError(f"generator is not a {self.dim}x{self.dim} matrix")
            gens.append(rows)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def n(self) -> int:
        return self.dim // 2

    @property
    def label(self) -> str:
        return self.name or f"G<{len(self.generators)} gens>"


def _entry(e) -> Entry:
    if isinstance(e, int):
        return (e,)
    return tuple(int(c) for c in e)


def embed_generators(spec: GroupActionSpec, p: int, root: int | None = None) -> list[Matrix]:
    """Generator matrices over F_p, with zeta mapped to ``root`` (default: smallest primitive root)."""
    check_prime(p)
    m = spec.zeta_order
    if root is None:
        root = smallest_primitive_root_of_unity(m, p) if m > 1 else 1
    elif root not in primitive_roots_of_unity(m, p):
        raise ValueError(f"{root} is not a primitive {m}-th root of unity mod {p}")
    out = []
    for g in spec.generators:
        out.append(
            tuple(tuple(sum(c * pow(root, i, p) for i, c in enumerate(e)) % p for e in row) for row in g)
        )
    return out


def _matmul(A: Matrix, B: Matrix, p: int) -> Matrix:
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) % p for j in range(n)) for i in range(n))


def _symplectic_form(dim: int) -> Matrix:
    J = [[0] * dim for _ in range(dim)]
    for i in range(0, dim, 2):
        J[i][i + 1] = 1
        J[i + 1][i] = -1
    return tuple(tuple(r) for r in J)


def _transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def close_group(
    spec: GroupActionSpec, p: int, max_order: int = MAX_GROUP_ORDER, root: int | None = None
) -> list[Matrix]:
    """All elements of the group generated by the embedded generators (identity first)."""
    if spec.dim > MAX_DIM:
        raise ValueError(f"dimension {spec.dim} exceeds the cap {MAX_DIM}")
    gens = embed_generators(spec, p, root)
    J = tuple(tuple(x % p for x in r) for r in _symplectic_form(spec.dim))
    for g in gens:
        if _matmul(_matmul(g, J, p), _transpose(g), p) != J:
            raise ValueError(f"{spec.label}: a generator does not preserve the symplectic form mod {p}")
    ident = tuple(tuple(int(i == j) for j in range(spec.dim)) for i in range(spec.dim))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = _matmul(a, g, p)
                if c not in seen:
                    seen.add(c)
                    elems.append(c)
                    nxt.append(c)
                    if len(elems) > max_order:
                        raise ValueError(f"group order exceeds the cap {max_order}")
        frontier = nxt
    if len(elems) % p == 0:
        raise RefusalError(f"p={p} divides |G|={len(elems)}")
    return elems


@dataclass(frozen=True)
class InvariantBasisDegree:
    degree: int
    basis: tuple[GradedPoly, ...]


class _QuotientContext:
    """Group, grading and per-key caches for one (spec, p, root)."""

    def __init__(self, spec: GroupActionSpec, p: int, root: int | None = None, max_order: int = MAX_GROUP_ORDER):
        self.spec = spec
        self.p = p
        self.group = close_group(spec, p, max_order, root)
        self.order = len(self.group)
        self.nvars = spec.dim
        self.bigraded = all(self._splits(g) for g in self.group)
        self.monomial_action = all(self._is_monomial(g) for g in self.group)
        self._inv_cache: dict = {}
        self._mono_cache: dict = {}
        self._pow_cache: dict = {}

    # grading ---------------------------------------------------------------

    def _splits(self, g: Matrix) -> bool:
        return all(
            g[i][j] == 0 for i in range(self.nvars) for j in range(self.nvars) if (i % 2) != (j % 2)
        )

    @staticmethod
    def _is_monomial(g: Matrix) -> bool:
        return all(sum(1 for x in row if x) == 1 for row in g)

    def keys(self, m: int) -> list[tuple[int, ...]]:
        if m < 0:
            return []
        if self.bigraded:
            return [(i, m - i) for i in range(m + 1)]
        return [(m,)]

    @property
    def bracket_shift(self) -> tuple[int, ...]:
        return (1, 1) if self.bigraded else (2,)

    def key_of(self, mono: Monomial) -> tuple[int, ...]:
        if self.bigraded:
            return (sum(mono[0::2]), sum(mono[1::2]))
        return (sum(mono),)

    def monos(self, key: tuple[int, ...]) -> tuple[Monomial, ...]:
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        n = self.spec.n
        if any(k < 0 for k in key):
            out: tuple = ()
        elif self.bigraded:
            us = monomials_of_degree(WeightSystem((1,) * n), key[0])
            vs = monomials_of_degree(WeightSystem((1,) * n), key[1])
            out = tuple(
                tuple(x for pair in zip(a, b) for x in pair) for a, b in iproduct(us, vs)
            )
        else:
            out = monomials_of_degree(WeightSystem((1,) * self.nvars), key[0])
        self._mono_cache[key] = out
        return out

    # action ----------------------------------------------------------------

    def _linear_power(self, g_idx: int, var: int, e: int) -> dict:
        key = (g_idx, var, e)
        hit = self._pow_cache.get(key)
        if hit is not None:
            return hit
        if e == 0:
            res = {(0,) * self.nvars: 1}
        else:
            prev = self._linear_power(g_idx, var, e - 1)
            row = self.group[g_idx][var]
            res = {}
            for j, c in enumerate(row):
                if c:
                    for mono, cc in prev.items():
                        mm = mono[:j] + (mono[j] + 1,) + mono[j + 1 :]
                        res[mm] = (res.get(mm, 0) + c * cc) % self.p
            res = {k: v for k, v in res.items() if v}
        self._pow_cache[key] = res
        return res

    def act(self, g_idx: int, mono: Monomial) -> dict:
        """g . x^alpha = prod_i (sum_j M_ij x_j)^{alpha_i}."""
        p = self.p
        g = self.group[g_idx]
        if self.monomial_action:
            coeff, out = 1, [0] * self.nvars
            for i, e in enumerate(mono):
                if e:
                    j = next(j for j, x in enumerate(g[i]) if x)
                    coeff = coeff * pow(g[i][j], e, p) % p
                    out[j] += e
            return {tuple(out): coeff}
        res = {(0,) * self.nvars: 1}
        for i, e in enumerate(mono):
            if e:
                res = _mul(res, self._linear_power(g_idx, i, e), p)
        return res

    def reynolds_terms(self, terms: dict) -> dict:
        p = self.p
        out: dict = {}
        for mono, c in terms.items():
            for gi in range(self.order):
                for mm, cc in self.act(gi, mono).items():
                    out[mm] = (out.get(mm, 0) + c * cc) % p
        scale = inv(self.order, p)
        return {k: v * scale % p for k, v in out.items() if v}

    # invariants --------------------------------------------------------------

    def invariants(self, key: tuple[int, ...]):
        """(basis rows in monomial coordinates, pivot columns, monomial index)."""
        hit = self._inv_cache.get(key)
        if hit is not None:
            return hit
        monos = self.monos(key)
        index = {m: i for i, m in enumerate(monos)}
        if not monos:
            res = (np.zeros((0, 0), dtype=np.int64), [], index)
        else:
            rows = []
            for mono in monos:
                r = self.reynolds_terms({mono: 1})
                if r:
                    v = np.zeros(len(monos), dtype=np.int64)
                    for mm, c in r.items():
                        v[index[mm]] = c
                    rows.append(v)
            if rows:
                R, piv = matrix_rref(np.array(rows), self.p, len(monos))
            else:
                R, piv = np.zeros((0, len(monos)), dtype=np.int64), []
            res = (R, piv, index)
        self._inv_cache[key] = res
        return res

    def invariant_polys(self, key: tuple[int, ...]) -> list[dict]:
        R, _, index = self.invariants(key)
        monos = self.monos(key)
        return [{monos[j]: int(row[j]) for j in np.flatnonzero(row)} for row in R]

    def dim_A(self, key) -> int:
        return len(self.invariants(key)[1])

    @cached_property
    def generator_bound(self) -> int:
        # Noether's bound, valid when |G| is invertible in the field
        return self.order

    def algebra_generators(self, max_total: int) -> list[tuple[tuple[int, ...], dict]]:
        """Homogeneous algebra generators of A of total degree 1..max_total."""
        gens: list[tuple[tuple[int, ...], dict]] = []
        top = min(max_total, self.generator_bound)
        for t in range(1, top + 1):
            for key in self.keys(t):
                R, piv, index = self.invariants(key)
                if not piv:
                    continue
                rows = []
                for gk, g in gens:
                    src = tuple(a - b for a, b in zip(key, gk))
                    if sum(src) < 1 or any(s < 0 for s in src):
                        continue
                    for b in self.invariant_polys(src):
                        prod = _mul(g, b, self.p)
                        rows.append([prod.get(self.monos(key)[c], 0) for c in piv])
                taken = set()
                if rows:
                    _, dpiv = matrix_rref(np.array(rows, dtype=np.int64), self.p, len(piv))
                    taken = set(dpiv)
                polys = self.invariant_polys(key)
                for i in range(len(piv)):
                    if i not in taken:
                        gens.append((key, polys[i]))
        return gens


def _mul(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = (out.get(m, 0) + c1 * c2) % p
    return {k: v for k, v in out.items() if v}


def poisson_bracket_terms(f: dict, g: dict, nvars: int, p: int) -> dict:
    """Canonical bracket sum_i (d_{u_i} f d_{v_i} g - d_{v_i} f d_{u_i} g) on dict polynomials."""
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            for i in range(0, nvars, 2):
                for a, b, sign in ((i, i + 1, 1), (i + 1, i, -1)):
                    ea, eb = m1[a], m2[b]
                    if ea and eb:
                        m = list(x + y for x, y in zip(m1, m2))
                        m[a] -= 1
                        m[b] -= 1
                        m = tuple(m)
                        out[m] = (out.get(m, 0) + sign * ea * eb * c1 * c2) % p
    return {k: v for k, v in out.items() if v}


def invariant_basis(spec: GroupActionSpec, p: int, m: int, root: int | None = None) -> InvariantBasisDegree:
    """Echelon basis of the degree-m invariants."""
    ctx = _QuotientContext(spec, p, root)
    return _invariant_basis(ctx, m)


def _invariant_basis(ctx: _QuotientContext, m: int) -> InvariantBasisDegree:
    polys = []
    for key in ctx.keys(m):
        for terms in ctx.invariant_polys(key):
            polys.append(GradedPoly(terms, ctx.p, ctx.nvars))
    return InvariantBasisDegree(m, tuple(polys))


def reynolds(spec: GroupActionSpec, p: int, f: GradedPoly, root: int | None = None) -> GradedPoly:
    ctx = _QuotientContext(spec, p, root)
    return GradedPoly(ctx.reynolds_terms(dict(f.items())), p, ctx.nvars)


def _rank_into(ctx: _QuotientContext, key, vectors: list[dict], coords: list[int] | None) -> int:
    """Rank of bracket vectors landing in ``key`` (projected to ``coords`` if given)."""
    if not vectors:
        return 0
    monos = ctx.monos(key)
    cols = [monos[c] for c in coords] if coords is not None else list(monos)
    A = np.zeros((len(vectors), len(cols)), dtype=np.int64)
    for r, vec in enumerate(vectors):
        for j, mono in enumerate(cols):
            c = vec.get(mono)
            if c:
                A[r, j] = c
    return matrix_rank(A, ctx.p)


def hp0_dims_quotient(
    spec: GroupActionSpec, p: int, N: int, root: int | None = None, spanning: str = "generators"
) -> list[int]:
    """dim A[m] - dim {A,A}[m] for m = 0..N, A = F_p[V]^G."""
    ctx = _QuotientContext(spec, p, root)
    shift = ctx.bracket_shift
    gens = ctx.algebra_generators(N + 2) if spanning == "generators" else None
    out = []
    for m in range(N + 1):
        total = 0
        for key in ctx.keys(m):
            _, piv, _ = ctx.invariants(key)
            if not piv:
                continue
            target = tuple(k + s for k, s in zip(key, shift))
            vecs = []
            if spanning == "generators":
                for gk, g in gens:
                    src = tuple(a - b for a, b in zip(target, gk))
                    for b in ctx.invariant_polys(src):
                        vecs.append(poisson_bracket_terms(g, b, ctx.nvars, p))
            elif spanning == "pairs":
                vecs = _pair_brackets(ctx, target)
            else:
                raise ValueError(f"unknown spanning set {spanning!r}")
            # brackets of invariants are invariant: read them off at the pivot columns
            total += len(piv) - _rank_into(ctx, key, vecs, piv)
        out.append(total)
    return out


def _pair_brackets(ctx: _QuotientContext, target) -> list[dict]:
    vecs = []
    seen = set()
    for k1 in _subkeys(ctx, target):
        k2 = tuple(a - b for a, b in zip(target, k1))
        if (k2, k1) in seen:
            continue
        seen.add((k1, k2))
        left, right = ctx.invariant_polys(k1), ctx.invariant_polys(k2)
        for s, f in enumerate(left):
            for t, g in enumerate(right):
                if k1 == k2 and t <= s:
                    continue
                vecs.append(poisson_bracket_terms(f, g, ctx.nvars, ctx.p))
    return vecs


def _subkeys(ctx: _QuotientContext, target):
    if ctx.bigraded:
        return [(i, j) for i in range(target[0] + 1) for j in range(target[1] + 1)]
    return [(i,) for i in range(target[0] + 1)]


def hp0_B_mod_AB(
    spec: GroupActionSpec, p: int, N: int, root: int | None = None, spanning: str = "generators"
) -> list[int]:
    """dim B[m] - dim {A,B}[m] for m = 0..N."""
    ctx = _QuotientContext(spec, p, root)
    shift = ctx.bracket_shift
    gens = ctx.algebra_generators(N + 2) if spanning == "generators" else None
    out = []
    for m in range(N + 1):
        total = 0
        for key in ctx.keys(m):
            monos = ctx.monos(key)
            if not monos:
                continue
            target = tuple(k + s for k, s in zip(key, shift))
            vecs = []
            if spanning == "generators":
                pairs = [(g, gk) for gk, g in gens]
            else:
                pairs = [(f, k1) for k1 in _subkeys(ctx, target) for f in ctx.invariant_polys(k1)]
            for f, fk in pairs:
                src = tuple(a - b for a, b in zip(target, fk))
                for mono in ctx.monos(src):
                    vecs.append(poisson_bracket_terms(f, {mono: 1}, ctx.nvars, p))
            total += len(monos) - _rank_into(ctx, key, vecs, None)
        out.append(total)
    return out


def typeA_oracle(n: int, p: int, N: int) -> list[int]:
    """Graded dimensions of sum_{m<=n-2} F (uv)^m  +  (uv)^{p-1} F[u^{pn}, v^{pn}, (uv)^p].

    Counts distinct monomials u^i v^j, so u^{pn} v^{pn} = (uv)^{pn} is identified automatically.
    """
    check_prime(p)
    if p <= n:
        raise RefusalError(f"type-A decomposition needs p > n (p={p}, n={n})")
    if gcd(p, n) != 1:
        raise RefusalError(f"p={p} divides n={n}")
    seen: set[tuple[int, int]] = set()
    for m in range(n - 1):
        seen.add((m, m))
    base = p - 1
    for i in range(N // (p * n) + 1):
        for j in range(N // (p * n) + 1):
            for k in range(N // (2 * p) + 1):
                eu, ev = base + p * n * i + p * k, base + p * n * j + p * k
                if eu + ev <= N:
                    seen.add((eu, ev))
    out = [0] * (N + 1)
    for eu, ev in seen:
        if eu + ev <= N:
            out[eu + ev] += 1
    return out


# Group presets -------------------------------------------------------------------


def cyclic_sl2(n: int) -> GroupActionSpec:
    """Z_n acting by diag(zeta, zeta^{-1})."""
    z = (0, 1)
    zinv = (0,) * (n - 1) + (1,)
    return GroupActionSpec(2, n, (((z, (0,)), ((0,), zinv)),), name=f"Z{n}")


def z3_rational() -> GroupActionSpec:
    """Z_3 in SL_2(Z), generated by [[0,-1],[1,-1]]; defined over every F_p."""
    return GroupActionSpec(2, 1, ((((0,), (-1,)), ((1,), (-1,))),), name="Z3rat")


def minus_identity(dim: int = 2) -> GroupActionSpec:
    return GroupActionSpec(dim, 1, (tuple(tuple((-1,) if i == j else (0,) for j in range(dim)) for i in range(dim)),), name="Z2")


def trivial_group(dim: int = 2) -> GroupActionSpec:
    return GroupActionSpec(dim, 1, (tuple(tuple((int(i == j),) for j in range(dim)) for i in range(dim)),), name="trivial")


def swap_group() -> GroupActionSpec:
    """S_2 permuting the two copies of L in L + L (dim 4)."""
    perm = [2, 3, 0, 1]
    M = tuple(tuple((int(perm[i] == j),) for j in range(4)) for i in range(4))
    return GroupActionSpec(4, 1, (M,), name="S2")


def quaternion_group() -> GroupActionSpec:
    """Binary dihedral group of order 8 (type D4): diag(i, -i) and [[0,1],[-1,0]]."""
    i_ = (0, 1)
    minus_i = (0, 0, 0, 1)
    return GroupActionSpec(
        2, 4, (((i_, (0,)), ((0,), minus_i)), (((0,), (1,)), ((-1,), (0,)))), name="Q8"
    )


def group_preset(label: str) -> GroupActionSpec:
    key = label.strip()
    table = {
        "Z2": minus_identity,
        "trivial": trivial_group,
        "trivial4": lambda: trivial_group(4),
        "S2": swap_group,
        "Z3rat": z3_rational,
        "Q8": quaternion_group,
    }
    if key in table:
        return table[key]()
    if key.startswith("Z") and key[1:].isdigit():
        return cyclic_sl2(int(key[1:]))
    raise ValueError(f"unknown group preset {label!r}")


GROUP_PRESETS = ("Z2", "Z3", "Z4", "Z3rat", "Q8", "trivial", "trivial4", "S2")
