"""Sparse weighted-graded polynomials over F_p (or Q when ``p == 0``).

A monomial is a plain tuple of exponents. Polynomials are immutable; every
operation returns a new object. Homogeneity is carried as metadata: a
polynomial built with ``degree=`` asserts that all its terms share that
weighted degree, and products/brackets propagate the degree without
re-inspecting the terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .fp import check_prime, inv

Monomial = tuple[int, ...]

ORDERS = ("wlex", "wrevlex")


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer degrees of the variables."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise ValueError("weight system must be nonempty")
        if any(x < 1 for x in w):
            raise ValueError(f"weights must be >= 1, got {w}")
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def degree(self, m: Monomial) -> int:
        return weighted_degree(m, self)


def weighted_degree(m: Monomial, w: WeightSystem | Iterable[int]) -> int:
    ws = w.weights if isinstance(w, WeightSystem) else tuple(w)
    if len(m) != len(ws):
        raise ValueError(f"monomial {m} has {len(m)} exponents but there are {len(ws)} weights")
    return sum(e * x for e, x in zip(m, ws))


@lru_cache(maxsize=None)
def _monomials(weights: tuple[int, ...], m: int) -> tuple[Monomial, ...]:
    if m < 0:
        return ()
    if len(weights) == 1:
        return ((m // weights[0],),) if m % weights[0] == 0 else ()
    w0, rest = weights[0], weights[1:]
    out = []
    for e in range(m // w0, -1, -1):
        for tail in _monomials(rest, m - e * w0):
            out.append((e,) + tail)
    return tuple(out)


def monomials_of_degree(w: WeightSystem, m: int) -> tuple[Monomial, ...]:
    """All monomials of weighted degree ``m``, in decreasing lex order."""
    return _monomials(w.weights, m)


def order_key(order: str):
    """Sort key for monomials of equal weighted degree (larger key = larger monomial)."""
    if order == "wlex":
        return lambda m: m
    if order == "wrevlex":
        return lambda m: m[::-1]
    raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDERS}")


class GradedPoly:
    """Polynomial with coefficients in F_p (``p > 0``) or Q (``p == 0``)."""

    __slots__ = ("p", "nvars", "weights", "degree", "_terms")

    def __init__(
        self,
        terms: Mapping[Monomial, int | Fraction] | Iterable[tuple[Monomial, int | Fraction]],
        p: int,
        nvars: int | None = None,
        weights: WeightSystem | None = None,
        degree: int | None = None,
    ):
        if p != 0:
            check_prime(p)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int | Fraction] = {}
        for mono, c in items:
            mono = tuple(mono)
            c = _norm(c, p)
            if c:
                c = _norm(clean.get(mono, 0) + c, p)
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        if nvars is None:
            if weights is not None:
                nvars = len(weights)
            elif clean:
                nvars = len(next(iter(clean)))
            else:
                raise ValueError("cannot infer the number of variables of a zero polynomial")
        if any(len(m) != nvars for m in clean):
            raise ValueError("monomial length does not match the number of variables")
        if weights is not None and len(weights) != nvars:
            raise ValueError("weight system length does not match the number of variables")
        if degree is not None:
            if weights is None:
                raise ValueError("a homogeneity degree needs a weight system")
            for mono in clean:
                if weighted_degree(mono, weights) != degree:
                    raise ValueError(f"term {mono} is not of weighted degree {degree}")
        self.p = p
        self.nvars = nvars
        self.weights = weights
        self.degree = degree
        self._terms = clean

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p: int, nvars: int, weights: WeightSystem | None = None, degree: int | None = None):
        return cls({}, p, nvars, weights, degree)

    @classmethod
    def monomial(cls, exps: Monomial, p: int, coeff=1, weights: WeightSystem | None = None):
        deg = weighted_degree(exps, weights) if weights is not None else None
        return cls({tuple(exps): coeff}, p, len(exps), weights, deg)

    @classmethod
    def variable(cls, i: int, nvars: int, p: int, weights: WeightSystem | None = None):
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(tuple(e), p, 1, weights)

    # container protocol ---------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int | Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mono: Monomial):
        return self._terms.get(tuple(mono), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPoly):
            return self.p == other.p and self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terms:
            return f"GradedPoly(0, p={self.p})"
        parts = [f"{c}*{m}" for m, c in sorted(self._terms.items(), reverse=True)]
        return f"GradedPoly({' + '.join(parts)}, p={self.p})"

    def with_degree(self, weights: WeightSystem, degree: int | None = None) -> "GradedPoly":
        """Attach homogeneity metadata (computed from the terms if ``degree`` is None)."""
        if degree is None:
            degs = {weighted_degree(m, weights) for m in self._terms}
            if len(degs) > 1:
                raise ValueError(f"polynomial is not homogeneous: degrees {sorted(degs)}")
            degree = degs.pop() if degs else None
        return GradedPoly(self._terms, self.p, self.nvars, weights, degree)

    # arithmetic -----------------------------------------------------------

    def _check(self, other: "GradedPoly"):
        if other.p != self.p or other.nvars != self.nvars:
            raise ValueError("polynomials live in different rings")

    def _sum_meta(self, other: "GradedPoly"):
        weights = self.weights or other.weights
        if not self._terms:
            return weights, other.degree
        if not other._terms:
            return weights, self.degree
        if self.degree is not None and self.degree == other.degree:
            return weights, self.degree
        return weights, None

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        weights, deg = self._sum_meta(other)
        return GradedPoly(out, self.p, self.nvars, weights, deg)

    def __neg__(self) -> "GradedPoly":
        return self.scale(-1)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def scale(self, c) -> "GradedPoly":
        return GradedPoly(
            {m: v * c for m, v in self._terms.items()}, self.p, self.nvars, self.weights, self.degree
        )

    def __mul__(self, other) -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, int | Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        deg = None
        if self.degree is not None and other.degree is not None:
            deg = self.degree + other.degree
        return GradedPoly(out, self.p, self.nvars, self.weights or other.weights, deg)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GradedPoly":
        out = GradedPoly.monomial((0,) * self.nvars, self.p, 1, self.weights)
        for _ in range(k):
            out = out * self
        return out


def _norm(c, p: int):
    if p:
        if isinstance(c, Fraction):
            return c.numerator % p * inv(c.denominator, p) % p
        return int(c) % p
    return Fraction(c)


def partial_derivative(f: GradedPoly, var: int) -> GradedPoly:
    """Formal derivative; exponents divisible by p annihilate their term."""
    if not 0 <= var < f.nvars:
        raise IndexError(f"variable index {var} out of range for {f.nvars} variables")
    out = {}
    for m, c in f.items():
        e = m[var]
        if e:
            out[m[:var] + (e - 1,) + m[var + 1 :]] = c * e
    deg = None
    if f.degree is not None and f.weights is not None:
        deg = f.degree - f.weights[var]
    return GradedPoly(out, f.p, f.nvars, f.weights, deg)


def surface_bracket(f: GradedPoly, g: GradedPoly, Q: GradedPoly) -> GradedPoly:
    """Jacobian determinant det(grad f, grad g, grad Q) in three variables.

    On F[x,y,z]/(Q) this is the bracket with {x,y} = Q_z, {y,z} = Q_x,
    {z,x} = Q_y.
    """
    for h in (f, g, Q):
        if h.nvars != 3:
            raise ValueError("surface bracket needs polynomials in exactly three variables")
    f._check(g)
    f._check(Q)
    fx, fy, fz = (partial_derivative(f, i) for i in range(3))
    gx, gy, gz = (partial_derivative(g, i) for i in range(3))
    qx, qy, qz = (partial_derivative(Q, i) for i in range(3))
    out = fx * (gy * qz - gz * qy) - fy * (gx * qz - gz * qx) + fz * (gx * qy - gy * qx)
    weights = f.weights or g.weights or Q.weights
    deg = None
    if None not in (f.degree, g.degree, Q.degree) and weights is not None:
        deg = f.degree + g.degree + Q.degree - sum(weights)
    return GradedPoly(out.items(), f.p, 3, weights, deg if out else None)


class Reducer:
    """Division by a single polynomial with memoized monomial normal forms.

    A principal ideal's generator is its own Groebner basis, so reducing by
    the leading monomial of ``Q`` until no term is divisible by it yields the
    unique normal form.
    """

    def __init__(self, Q: GradedPoly, order: str = "wlex"):
        if Q.is_zero():
            raise ValueError("cannot reduce modulo the zero polynomial")
        key = order_key(order)
        self.Q = Q
        self.order = order
        self.lead = max((m for m, _ in Q.items()), key=lambda m: (_wdeg(m, Q.weights), key(m)))
        lc = Q.coeff(self.lead)
        inv_lc = inv(lc, Q.p) if Q.p else 1 / Fraction(lc)
        # lead = sum_t (-c_t / lc) t  modulo Q
        self.tail = [(m, _norm(-c * inv_lc, Q.p)) for m, c in Q.items() if m != self.lead]
        self._memo: dict[Monomial, dict[Monomial, int | Fraction]] = {}

    def divisible(self, m: Monomial) -> bool:
        return all(a >= b for a, b in zip(m, self.lead))

    def reduce_monomial(self, m: Monomial) -> dict[Monomial, int | Fraction]:
        """Normal form of a monomial as a plain {monomial: coefficient} dict (do not mutate)."""
        memo = self._memo
        hit = memo.get(m)
        if hit is not None:
            return hit
        if not self.divisible(m):
            res = {m: 1 if self.Q.p else Fraction(1)}
        else:
            p = self.Q.p
            q = tuple(a - b for a, b in zip(m, self.lead))
            res = {}
            for t, c in self.tail:
                sub = self.reduce_monomial(tuple(a + b for a, b in zip(q, t)))
                for mm, cc in sub.items():
                    res[mm] = res.get(mm, 0) + c * cc
            if p:
                res = {mm: cc % p for mm, cc in res.items() if cc % p}
            else:
                res = {mm: cc for mm, cc in res.items() if cc}
        memo[m] = res
        return res

    def reduce_terms(self, terms: Iterable[tuple[Monomial, int | Fraction]]) -> dict[Monomial, int | Fraction]:
        p = self.Q.p
        out: dict[Monomial, int | Fraction] = {}
        for m, c in terms:
            for mm, cc in self.reduce_monomial(m).items():
                out[mm] = out.get(mm, 0) + c * cc
        if p:
            return {mm: cc % p for mm, cc in out.items() if cc % p}
        return {mm: cc for mm, cc in out.items() if cc}

    def __call__(self, f: GradedPoly) -> GradedPoly:
        return GradedPoly(self.reduce_terms(f.items()), f.p, f.nvars, f.weights, f.degree)


def _wdeg(m: Monomial, weights: WeightSystem | None) -> int:
    return weighted_degree(m, weights) if weights is not None else sum(m)


_reducers: dict[tuple, Reducer] = {}


def get_reducer(Q: GradedPoly, order: str = "wlex") -> Reducer:
    key = (Q.p, Q.weights, tuple(sorted(Q.items())), order)
    r = _reducers.get(key)
    if r is None:
        r = _reducers[key] = Reducer(Q, order)
    return r


def normal_form(f: GradedPoly, Q: GradedPoly, order: str = "wlex") -> GradedPoly:
    """Reduce ``f`` modulo the principal ideal (Q).

    ``wlex`` orders by weighted degree, then lexicographically on exponents;
    ``wrevlex`` breaks ties on the reversed exponent tuple instead.
    """
    f._check(Q)
    return get_reducer(Q, order)(f)
