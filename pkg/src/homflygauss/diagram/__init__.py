"""Gauss diagrams: data model, codecs, smoothing, enumeration and Reidemeister moves."""

from __future__ import annotations

from .codecs import (
    ParseError,
    code_hex,
    from_pd_code,
    load_diagram,
    parse_gauss_code,
    pd_from_json,
    to_gauss_code,
)
from .core import (
    GaussDiagram,
    Passage,
    State,
    TraceResult,
    canonicalize,
    crossing_flip,
    has_isolated_arrow,
    is_isolated,
    smooth_and_trace,
    smooth_in_order,
    subdiagram,
    subdiagram_mask,
)
from .enumerate import enumerate_arrow_diagrams
from .moves import (
    MoveError,
    R1Delete,
    R1Insert,
    R2Delete,
    R2Insert,
    R3,
    apply_move,
    faces,
    random_move,
)

__all__ = [
    "ParseError",
    "code_hex",
    "from_pd_code",
    "load_diagram",
    "parse_gauss_code",
    "pd_from_json",
    "to_gauss_code",
    "GaussDiagram",
    "Passage",
    "State",
    "TraceResult",
    "canonicalize",
    "crossing_flip",
    "has_isolated_arrow",
    "is_isolated",
    "smooth_and_trace",
    "smooth_in_order",
    "subdiagram",
    "subdiagram_mask",
    "enumerate_arrow_diagrams",
    "MoveError",
    "R1Delete",
    "R1Insert",
    "R2Delete",
    "R2Insert",
    "R3",
    "apply_move",
    "faces",
    "random_move",
]
