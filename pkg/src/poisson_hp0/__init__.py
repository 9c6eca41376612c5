"""Zeroth Poisson homology HP_0 = A/{A,A} of graded Poisson algebras over F_p.

Brute-force linear algebra over F_p for weighted surfaces and quotient
singularities, closed-form Hilbert series, and a harness comparing the two.
"""

from .formulas import (
    PlaneCurveSpec,
    StratumData,
    SymPowerSpec,
    kleinian_series,
    mainform_series,
    plane_curve_series,
    quotient_series,
    sym_kleinian_series,
    sympower_series,
)
from .kernels import BACKEND
from .presets import ade_preset, fermat, surface_preset
from .quotient import GroupActionSpec, hp0_B_mod_AB, hp0_dims_quotient, typeA_oracle
from .series import CycloRational, TruncatedSeries, expand, f_series
from .surface import RefusalError, SurfaceSpec, hp0_dims, hp0_series

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CycloRational",
    "GroupActionSpec",
    "PlaneCurveSpec",
    "RefusalError",
    "StratumData",
    "SurfaceSpec",
    "SymPowerSpec",
    "TruncatedSeries",
    "ade_preset",
    "expand",
    "f_series",
    "fermat",
    "hp0_B_mod_AB",
    "hp0_dims",
    "hp0_dims_quotient",
    "hp0_series",
    "kleinian_series",
    "mainform_series",
    "plane_curve_series",
    "quotient_series",
    "surface_preset",
    "sym_kleinian_series",
    "sympower_series",
    "typeA_oracle",
]
