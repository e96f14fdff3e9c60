"""Exact HOMFLYPT state sums on Gauss diagrams and Gauss diagram formulas for its Vassiliev coefficients."""

from __future__ import annotations

from .diagram import (
    GaussDiagram,
    ParseError,
    from_pd_code,
    load_diagram,
    parse_gauss_code,
    to_gauss_code,
)
from .exactpoly import HZSeries, IntLaurent2, substitute_exp
from .formulas import (
    FormulaCombo,
    evaluate_combo,
    evaluate_pkl,
    generate_Akl,
    simplified_p12,
    w_kl,
    weight_series,
)
from .statesum import homfly_ascending, homfly_descending, skein_homfly

__all__ = [
    "GaussDiagram",
    "ParseError",
    "from_pd_code",
    "load_diagram",
    "parse_gauss_code",
    "to_gauss_code",
    "HZSeries",
    "IntLaurent2",
    "substitute_exp",
    "FormulaCombo",
    "evaluate_combo",
    "evaluate_pkl",
    "generate_Akl",
    "simplified_p12",
    "w_kl",
    "weight_series",
    "homfly_ascending",
    "homfly_descending",
    "skein_homfly",
]
