"""Brute-force versus closed-form comparisons, small-prime sweeps and cross-oracles."""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass, field
from math import gcd

from .fp import check_prime
from .formulas import kleinian_series, mainform_series
from .presets import ADEPreset, type_a
from .quotient import typeA_oracle
from .series import TruncatedSeries
from .surface import RefusalError, SurfaceSpec, hp0_series


@dataclass(frozen=True)
class ComparisonReport:
    spec: str
    p: int
    N: int
    brute: TruncatedSeries | None
    formula: TruncatedSeries | None
    first_mismatch: int | None
    status: str  # "match", "mismatch" or "skipped"
    reason: str = ""

    @property
    def matched(self) -> bool:
        return self.status == "match"

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "p": self.p,
            "N": self.N,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "reason": self.reason,
            "brute": list(self.brute) if self.brute is not None else None,
            "formula": list(self.formula) if self.formula is not None else None,
        }


def default_N(spec: SurfaceSpec, p: int) -> int:
    a, b, c = spec.weights
    return max(3 * spec.d - 2 * (a + b + c), 2 * p - 2 + p * c) + p


def compare_surface(
    spec: SurfaceSpec, p: int, N: int | None = None, formula: TruncatedSeries | None = None, **brute_kw
) -> ComparisonReport:
    """Brute force against the closed form (the general surface formula unless ``formula`` is given)."""
    check_prime(p)
    if N is None:
        N = default_N(spec, p)
    try:
        brute = TruncatedSeries(tuple(hp0_series(spec, p, N, **brute_kw)))
    except RefusalError as exc:
        return ComparisonReport(spec.label, p, N, None, None, None, "skipped", str(exc))
    if formula is None:
        formula = mainform_series(spec.weights, spec.d, p, N)
    first = brute.first_difference(formula)
    return ComparisonReport(spec.label, p, N, brute, formula, first, "match" if first is None else "mismatch")


@dataclass(frozen=True)
class SweepRow:
    p: int
    N: int
    status: str
    first_mismatch: int | None
    reason: str = ""


@dataclass(frozen=True)
class SweepReport:
    spec: str
    rows: tuple[SweepRow, ...]
    thresholds: dict = field(default_factory=dict)
    governing: str = "2d-a-b-c"

    @property
    def threshold(self) -> int:
        return self.thresholds[self.governing]

    def above_threshold_ok(self) -> bool:
        """Every prime above the governing threshold was computed and matched."""
        return all(r.status == "match" for r in self.rows if r.p > self.threshold)

    def below_threshold(self) -> list[SweepRow]:
        return [r for r in self.rows if r.p <= self.threshold]

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "governing": self.governing,
            "thresholds": dict(sorted(self.thresholds.items())),
            "above_threshold_ok": self.above_threshold_ok(),
            "rows": [asdict(r) for r in self.rows],
        }


def thresholds_for(spec: SurfaceSpec, preset: ADEPreset | None = None) -> dict:
    """Small-prime thresholds: 2d-a-b-c, D/2+1 (D = top degree of the char-0 answer) and h for ADE."""
    a, b, c = spec.weights
    D = spec.jacobi_top_degree
    out = {"2d-a-b-c": 2 * spec.d - a - b - c, "D/2+1": D // 2 + 1 if D % 2 == 0 else D / 2 + 1}
    if preset is not None:
        out["h"] = preset.h
    return out


def sweep(
    spec: SurfaceSpec, primes, N: int | None = None, preset: ADEPreset | None = None
) -> SweepReport:
    """Compare at every prime; refusals are recorded as skipped rows."""
    ps = sorted(set(primes))
    rows = []
    for p in ps:
        formula = None
        if preset is not None:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                formula = kleinian_series(preset, p, N if N is not None else default_N(spec, p))
        rep = compare_surface(spec, p, N, formula)
        rows.append(SweepRow(p, rep.N, rep.status, rep.first_mismatch, rep.reason))
    th = thresholds_for(spec, preset)
    return SweepReport(spec.label, tuple(rows), th, "h" if preset is not None else "2d-a-b-c")


@dataclass(frozen=True)
class CrossOracleReport:
    n: int
    p: int
    N: int
    oracle: TruncatedSeries
    brute: TruncatedSeries
    formula: TruncatedSeries

    @property
    def agree(self) -> bool:
        return self.oracle == self.brute == self.formula

    def first_disagreement(self) -> int | None:
        for m, (x, y, z) in enumerate(zip(self.oracle, self.brute, self.formula)):
            if not x == y == z:
                return m
        return None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "N": self.N,
            "agree": self.agree,
            "first_disagreement": self.first_disagreement(),
            "oracle": list(self.oracle),
            "brute": list(self.brute),
            "formula": list(self.formula),
        }


def cross_oracles(n: int, p: int, N: int) -> CrossOracleReport:
    """typeA_oracle, brute force on x^n - yz and the Kleinian formula for A_{n-1}."""
    check_prime(p)
    if gcd(p, n) != 1:
        raise RefusalError(f"p={p} divides n={n}")
    preset = type_a(n)
    oracle = TruncatedSeries(tuple(typeA_oracle(n, p, N)))
    brute = TruncatedSeries(tuple(hp0_series(preset.surface(), p, N)))
    formula = kleinian_series(preset, p, N)
    return CrossOracleReport(n, p, N, oracle, brute, formula)


def to_json(obj) -> str:
    """Deterministic JSON for reports (sorted keys, fixed separators)."""
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
