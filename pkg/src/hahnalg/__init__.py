"""Multibasic modules over the Hahn ring of F2 series with rational exponents."""

from .basic import (
    A,
    F,
    IGT0,
    K,
    PHI,
    THETA,
    Kind,
    Multibasic,
    StandardBasic,
    A_mod_I,
    A_mod_Igt,
    Igt0_mod_I,
    Igt0_mod_Igt,
    normalize,
)
from .expr import ParseError, parse, render
from .functors import dual, ext, hom, tensor, tor
from .invariants import decompose_report, eta, f_dim, g_dim, psi_count
from .kernels import BACKEND
from .series import DomainError, FiniteSeries, TruncatedSeries, divide, invert_unit
from .smith import SeriesMatrix, cokernel_class, smith, smith_by_elimination, smith_valuations

__all__ = [
    "A", "F", "IGT0", "K", "PHI", "THETA", "Kind", "Multibasic", "StandardBasic",
    "A_mod_I", "A_mod_Igt", "Igt0_mod_I", "Igt0_mod_Igt", "normalize",
    "ParseError", "parse", "render",
    "dual", "ext", "hom", "tensor", "tor",
    "decompose_report", "eta", "f_dim", "g_dim", "psi_count",
    "BACKEND",
    "DomainError", "FiniteSeries", "TruncatedSeries", "divide", "invert_unit",
    "SeriesMatrix", "cokernel_class", "smith", "smith_by_elimination", "smith_valuations",
]
