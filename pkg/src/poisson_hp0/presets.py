"""Embedded surface presets: Kleinian (ADE) singularities and Fermat cones.

ADE table (weights of x, y, z; Q; primary invariant degrees a, b; Coxeter
number h; exponents):

    A_{n-1}  (2, n, n)           x^n - yz            a=2, b=n,  h=n      1..n-1
    D_{n+2}  (4, 2n, 2n+2)       x^{n+1} + xy^2 + z^2  a=4, b=2n, h=2n+2   1,3,..,2n+1 and n+1
    E_6      (6, 8, 12)          x^4 + y^3 + z^2     a=6, b=8,  h=12     1,4,5,7,8,11
    E_7      (12, 8, 18)         x^3 + xy^3 + z^2    a=8, b=12, h=18     1,5,7,9,11,13,17
    E_8      (12, 20, 30)        x^5 + y^3 + z^2     a=12, b=20, h=30    1,7,11,13,17,19,23,29

In every case d = 2h and h = a + b - 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import WeightSystem
from .surface import SurfaceSpec


@dataclass(frozen=True)
class ADEPreset:
    label: str
    a: int
    b: int
    h: int
    exponents: tuple[int, ...]
    weights: tuple[int, int, int]
    terms: tuple[tuple[tuple[int, int, int], int], ...]

    def __post_init__(self):
        if self.h != self.a + self.b - 2:
            raise ValueError(f"{self.label}: h={self.h} but a + b - 2 = {self.a + self.b - 2}")

    @property
    def d(self) -> int:
        return 2 * self.h

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def jacobi_degrees(self) -> list[int]:
        return sorted(2 * (m - 1) for m in self.exponents)

    def surface(self) -> SurfaceSpec:
        spec = SurfaceSpec(WeightSystem(self.weights), self.terms, self.label)
        if spec.d != self.d:
            raise AssertionError(f"{self.label}: Q has degree {spec.d}, expected 2h = {self.d}")
        return spec


def type_a(n: int) -> ADEPreset:
    """A_{n-1}: Z_n in SL_2, Q = x^n - yz."""
    if n < 2:
        raise ValueError("A_{n-1} needs n >= 2")
    return ADEPreset(
        f"A{n - 1}", 2, n, n, tuple(range(1, n)), (2, n, n), (((n, 0, 0), 1), ((0, 1, 1), -1))
    )


def type_d(k: int) -> ADEPreset:
    """D_k (k >= 4): binary dihedral group, Q = x^{k-1} + xy^2 + z^2."""
    if k < 4:
        raise ValueError("D_k needs k >= 4")
    n = k - 2
    exps = tuple(sorted(list(range(1, 2 * n + 2, 2)) + [n + 1]))
    return ADEPreset(
        f"D{k}", 4, 2 * n, 2 * n + 2, exps, (4, 2 * n, 2 * n + 2),
        (((n + 1, 0, 0), 1), ((1, 2, 0), 1), ((0, 0, 2), 1)),
    )


_E = {
    6: ADEPreset("E6", 6, 8, 12, (1, 4, 5, 7, 8, 11), (6, 8, 12), (((4, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 2), 1))),
    7: ADEPreset(
        "E7", 8, 12, 18, (1, 5, 7, 9, 11, 13, 17), (12, 8, 18), (((3, 0, 0), 1), ((1, 3, 0), 1), ((0, 0, 2), 1))
    ),
    8: ADEPreset(
        "E8", 12, 20, 30, (1, 7, 11, 13, 17, 19, 23, 29), (12, 20, 30),
        (((5, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 2), 1)),
    ),
}


def ade_preset(label: str) -> ADEPreset:
    """Look up ``A1``, ``A_3``, ``D5``, ``E8`` ... (case-insensitive, underscore optional)."""
    m = re.fullmatch(r"([ADEade])_?(\d+)", label.strip())
    if not m:
        raise ValueError(f"unrecognised ADE label {label!r}")
    kind, r = m.group(1).upper(), int(m.group(2))
    if kind == "A":
        return type_a(r + 1)
    if kind == "D":
        return type_d(r)
    if r not in _E:
        raise ValueError(f"no E_{r} singularity")
    return _E[r]


def fermat(d: int) -> SurfaceSpec:
    """Cone over the Fermat curve x^d + y^d + z^d."""
    if d < 2:
        raise ValueError("Fermat degree must be >= 2")
    return SurfaceSpec(WeightSystem((1, 1, 1)), (((d, 0, 0), 1), ((0, d, 0), 1), ((0, 0, d), 1)), f"fermat{d}")


def surface_preset(label: str) -> SurfaceSpec:
    """ADE labels or ``fermatD``."""
    m = re.fullmatch(r"fermat(\d+)", label.strip().lower())
    if m:
        return fermat(int(m.group(1)))
    return ade_preset(label).surface()


PRESET_LABELS = ("A1", "A2", "A3", "A4", "D4", "D5", "D6", "E6", "E7", "E8", "fermat3", "fermat4", "fermat5")
