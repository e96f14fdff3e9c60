"""Text and PD-code readers/writers for Gauss diagrams.

Gauss-code text has one line per circle in component order. A line lists
tokens from the base point along the orientation; ``O7+`` is the tail
(overpass) of arrow 7 and ``U7+`` its head (underpass), with the sign of the
crossing repeated on both tokens. A blank line is an arrowless circle, so
the unknot is ``"\\n"``.

PD codes use the usual planar-diagram convention: each crossing lists its
four edge labels counterclockwise starting from the incoming under-edge.
"""

from __future__ import annotations

import json
import re
from typing import Any, Mapping, Sequence

from .core import GaussDiagram, canonicalize

__all__ = [
    "ParseError",
    "parse_gauss_code",
    "to_gauss_code",
    "from_pd_code",
    "pd_from_json",
    "code_hex",
    "load_diagram",
]

_TOKEN = re.compile(r"([OU])(\d+)([+-])$")


class ParseError(ValueError):
    """Malformed diagram input. ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def parse_gauss_code(text: str) -> GaussDiagram:
    """Read Gauss-code text. Arrow ids are renumbered ``0..n-1`` in increasing id order."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input")
    seen: dict[int, dict[str, tuple[int, int, int]]] = {}
    raw_circles: list[list[tuple[str, int]]] = []
    for ln, line in enumerate(lines, start=1):
        circle = []
        for m in re.finditer(r"\S+", line):
            tok = m.group(0)
            col = m.start() + 1
            parsed = _TOKEN.match(tok)
            if not parsed:
                raise ParseError(f"bad token {tok!r}", ln, col)
            role, ident, sign = parsed.group(1), int(parsed.group(2)), parsed.group(3)
            ends = seen.setdefault(ident, {})
            if role in ends:
                what = "overpass" if role == "O" else "underpass"
                raise ParseError(f"arrow {ident} appears twice as {what}", ln, col)
            ends[role] = (1 if sign == "+" else -1, ln, col)
            circle.append((role, ident))
        raw_circles.append(circle)
    for ident, ends in seen.items():
        if len(ends) != 2:
            _, ln, col = next(iter(ends.values()))
            raise ParseError(f"arrow {ident} must appear exactly once as O and once as U", ln, col)
        if ends["O"][0] != ends["U"][0]:
            _, ln, col = ends["U"]
            raise ParseError(f"arrow {ident} has inconsistent signs", ln, col)
    ids = sorted(seen)
    index = {ident: i for i, ident in enumerate(ids)}
    circles = [[2 * index[i] + (role == "U") for role, i in c] for c in raw_circles]
    signs = [seen[i]["O"][0] for i in ids]
    return GaussDiagram(circles, signs)


def to_gauss_code(g: GaussDiagram) -> str:
    """Inverse of :func:`parse_gauss_code`; arrow ``a`` is printed with id ``a + 1``."""
    lines = []
    for circle in g.circles:
        toks = []
        for t in circle:
            a = t >> 1
            toks.append(f"{'U' if t & 1 else 'O'}{a + 1}{'+' if g.signs[a] > 0 else '-'}")
        lines.append(" ".join(toks))
    return "".join(line + "\n" for line in lines)


def code_hex(g: GaussDiagram) -> str:
    return canonicalize(g).hex()


def pd_from_json(data: str | Mapping[str, Any]) -> GaussDiagram:
    """Build a diagram from ``{"crossings": [[e1,e2,e3,e4],...], "components": [{"base_edge": e},...]}``."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    try:
        crossings = data["crossings"]
        bases = [c["base_edge"] for c in data["components"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"PD JSON missing field: {exc}") from exc
    return from_pd_code(crossings, bases)


def from_pd_code(crossings: Sequence[Sequence[int]], base_edges: Sequence[int]) -> GaussDiagram:
    """Gauss diagram of a planar diagram.

    Args:
        crossings: 4-tuples of edge labels, counterclockwise from the incoming
            under-edge.
        base_edges: one edge per component, in component order; the base
            point sits on that edge. An edge label that appears in no crossing
            denotes an arrowless circle.

    Over-strand directions are inferred from the under-strands by
    propagation along edges; a closed loop made only of over-passes falls
    back to the label convention (``j -> l`` when ``l`` follows ``j``).
    """
    crossings = [tuple(c) for c in crossings]
    if not base_edges:
        raise ParseError("at least one component is required")
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(crossings):
        if len(x) != 4:
            raise ParseError(f"crossing {ci} does not have 4 edges")
        for slot, e in enumerate(x):
            occurrences.setdefault(e, []).append((ci, slot))
    for e, occ in occurrences.items():
        if len(occ) == 1:
            raise ParseError(f"edge {e} is dangling (used once)")
        if len(occ) > 2:
            raise ParseError(f"edge {e} is used {len(occ)} times")

    # over_in[ci] is the slot (1 or 3) of the incoming over-edge, None while unknown
    over_in: list[int | None] = [None] * len(crossings)

    def edge_role(e: int, ci: int, slot: int) -> str | None:
        """'in' if edge e enters crossing ci at slot, 'out' if it leaves, None if unknown."""
        if slot == 0:
            return "in"
        if slot == 2:
            return "out"
        if over_in[ci] is None:
            return None
        return "in" if over_in[ci] == slot else "out"

    def other_end(e: int, ci: int, slot: int) -> tuple[int, int]:
        a, b = occurrences[e]
        if a == (ci, slot):
            return b
        return a

    def propagate() -> None:
        changed = True
        while changed:
            changed = False
            for ci, x in enumerate(crossings):
                if over_in[ci] is not None:
                    continue
                for slot in (1, 3):
                    e = x[slot]
                    oc, os_ = other_end(e, ci, slot)
                    if oc == ci and os_ in (1, 3) and os_ != slot:
                        continue
                    role = edge_role(e, oc, os_)
                    if role is None:
                        continue
                    over_in[ci] = slot if role == "out" else (4 - slot)
                    changed = True
                    break

    propagate()
    while any(v is None for v in over_in):
        ci = next(i for i, v in enumerate(over_in) if v is None)
        j, l = crossings[ci][1], crossings[ci][3]
        over_in[ci] = 1 if (l - j == 1 or j - l > 1) else 3
        propagate()

    for e, occ in occurrences.items():
        roles = [edge_role(e, ci, slot) for ci, slot in occ]
        if sorted(roles) != ["in", "out"]:
            raise ParseError(f"edge {e} cannot be oriented consistently")

    # sign: over j->l (enters at slot 1) is negative, l->j positive
    signs = [-1 if over_in[ci] == 1 else 1 for ci in range(len(crossings))]

    def head_crossing(e: int) -> tuple[int, int]:
        for ci, slot in occurrences[e]:
            if edge_role(e, ci, slot) == "in":
                return ci, slot
        raise AssertionError

    used: set[int] = set()
    circles: list[list[int]] = []
    for base in base_edges:
        if base not in occurrences:
            if base in used:
                raise ParseError(f"edge {base} is the base of two components")
            used.add(base)
            circles.append([])
            continue
        if base in used:
            raise ParseError(f"edge {base} lies on an earlier component")
        circle: list[int] = []
        e = base
        while True:
            used.add(e)
            ci, slot = head_crossing(e)
            if slot == 0:
                circle.append(2 * ci + 1)
                out_slot = 2
            else:
                circle.append(2 * ci)
                out_slot = 4 - slot
            e = crossings[ci][out_slot]
            if e == base:
                break
            if e in used:
                raise ParseError(f"edge {e} reached twice while tracing a component")
        circles.append(circle)
    missing = set(occurrences) - used
    if missing:
        raise ParseError(f"edges {sorted(missing)} belong to no listed component")
    return GaussDiagram(circles, signs)


def load_diagram(text: str, input_format: str = "auto") -> GaussDiagram:
    """Parse Gauss-code text or PD JSON; ``auto`` picks JSON when the text starts with ``{``."""
    if input_format == "auto":
        input_format = "pd" if text.lstrip().startswith("{") else "gauss"
    if input_format == "pd":
        return pd_from_json(text)
    if input_format == "gauss":
        return parse_gauss_code(text)
    raise ValueError(f"unknown input format {input_format!r}")
