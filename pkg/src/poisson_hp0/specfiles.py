"""YAML input formats for surfaces, group actions and stratum data.

Surface::

    name: A2
    weights: [2, 3, 3]
    Q:
      - {c: 1, e: [3, 0, 0]}
      - {c: -1, e: [0, 1, 1]}
    d: 6            # optional; checked when present

Group action (entries are an int or a list of coefficients of 1, zeta, zeta^2, ...)::

    dim: 2
    zeta_order: 3
    generators:
      - [[[0, 1], 0], [0, [0, 0, 1]]]

Strata::

    name: A1
    D: 0
    strata:
      - dimVK: 0
        pairs:
          - {psi: [1], eta: {shift: 0, num: [1], den: []}}
"""

from __future__ import annotations

from pathlib import Path

import yaml

from .formulas import Stratum, StratumData, StratumPair
from .poly import WeightSystem
from .quotient import GroupActionSpec
from .series import CycloRational
from .surface import SurfaceSpec


class SpecError(ValueError):
    """A spec document is malformed."""


def _load(source) -> dict:
    if isinstance(source, dict):
        return source
    text = Path(source).read_text() if isinstance(source, (str, Path)) and Path(source).exists() else None
    if text is None:
        raise SpecError(f"cannot read spec file {source!r}")
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SpecError(f"{source}: not valid YAML ({exc})") from exc
    if not isinstance(doc, dict):
        raise SpecError(f"{source}: expected a mapping at top level")
    return doc


def _require(doc: dict, key: str):
    if key not in doc:
        raise SpecError(f"missing field {key!r}")
    return doc[key]


def surface_from_dict(doc: dict) -> SurfaceSpec:
    weights = _require(doc, "weights")
    terms = []
    for t in _require(doc, "Q"):
        try:
            terms.append((tuple(int(e) for e in t["e"]), int(t["c"])))
        except (KeyError, TypeError) as exc:
            raise SpecError(f"bad Q term {t!r}") from exc
    spec = SurfaceSpec(WeightSystem(tuple(int(w) for w in weights)), tuple(terms), doc.get("name"))
    if "d" in doc and int(doc["d"]) != spec.d:
        raise SpecError(f"declared d={doc['d']} but Q has weighted degree {spec.d}")
    return spec


def surface_to_dict(spec: SurfaceSpec) -> dict:
    doc = {
        "weights": list(spec.weights),
        "Q": [{"c": c, "e": list(m)} for m, c in spec.terms],
        "d": spec.d,
    }
    if spec.name is not None:
        doc["name"] = spec.name
    return doc


def dump_surface(spec: SurfaceSpec) -> str:
    return yaml.safe_dump(surface_to_dict(spec), sort_keys=True, default_flow_style=None)


def load_surface(source) -> SurfaceSpec:
    return surface_from_dict(_load(source))


def group_from_dict(doc: dict) -> GroupActionSpec:
    return GroupActionSpec(
        int(_require(doc, "dim")),
        int(doc.get("zeta_order", 1)),
        tuple(tuple(tuple(row) for row in g) for g in _require(doc, "generators")),
        doc.get("name"),
    )


def group_to_dict(spec: GroupActionSpec) -> dict:
    doc = {
        "dim": spec.dim,
        "zeta_order": spec.zeta_order,
        "generators": [[[list(e) for e in row] for row in g] for g in spec.generators],
    }
    if spec.name is not None:
        doc["name"] = spec.name
    return doc


def load_group(source) -> GroupActionSpec:
    return group_from_dict(_load(source))


def _eta(doc: dict) -> CycloRational:
    return CycloRational(int(doc.get("shift", 0)), tuple(doc.get("num", (1,))), tuple(doc.get("den", ())))


def strata_from_dict(doc: dict) -> StratumData:
    strata = []
    for s in _require(doc, "strata"):
        pairs = tuple(StratumPair(tuple(pr["psi"]), _eta(pr["eta"])) for pr in _require(s, "pairs"))
        strata.append(Stratum(int(_require(s, "dimVK")), pairs))
    D = doc.get("D")
    return StratumData(tuple(strata), doc.get("name"), None if D is None else int(D))


def strata_to_dict(data: StratumData) -> dict:
    doc = {
        "strata": [
            {
                "dimVK": s.dimVK,
                "pairs": [
                    {
                        "psi": list(pr.psi),
                        "eta": {
                            "shift": pr.eta.shift,
                            "num": list(pr.eta.numerator),
                            "den": list(pr.eta.denom_exponents),
                        },
                    }
                    for pr in s.pairs
                ],
            }
            for s in data.strata
        ]
    }
    if data.name is not None:
        doc["name"] = data.name
    if data.D is not None:
        doc["D"] = data.D
    return doc


def load_strata(source) -> StratumData:
    return strata_from_dict(_load(source))
