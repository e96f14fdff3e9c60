"""Ordered, based, signed Gauss diagrams and their smoothings.

Endpoints are encoded as integer *tokens*: ``2 * arrow`` is the tail
(overpass preimage) of ``arrow`` and ``2 * arrow + 1`` its head (underpass
preimage). A circle is the tuple of tokens met when walking from its base
point along the orientation. Because base points are part of the data, two
diagrams are equal exactly when their token sequences agree after the arrows
are relabelled by order of first appearance; :meth:`GaussDiagram.key` is that
relabelled form and :func:`canonicalize` its byte encoding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "GaussDiagram",
    "Passage",
    "State",
    "TraceResult",
    "canonicalize",
    "subdiagram",
    "smooth_and_trace",
    "smooth_in_order",
    "crossing_flip",
    "is_isolated",
    "tail",
    "head",
]

CanonicalCode = bytes


def tail(arrow: int) -> int:
    return 2 * arrow


def head(arrow: int) -> int:
    return 2 * arrow + 1


class Passage(enum.Enum):
    """Which side of an arrow's neighbourhood the tracing reaches first."""

    HEAD_FIRST = "H"
    TAIL_FIRST = "T"


class GaussDiagram:
    """An ordered arrow diagram on ``m`` based circles.

    Args:
        circles: one token sequence per circle, read from the base point.
        signs: ``signs[a]`` is the sign (+1 or -1) of arrow ``a``.

    Equality and hashing compare diagrams up to relabelling of arrows, which
    is the same as equality up to orientation preserving diffeomorphisms of
    the circles fixing the base points.
    """

    __slots__ = ("circles", "signs", "_key", "_succ", "_where")

    def __init__(self, circles: Sequence[Sequence[int]], signs: Sequence[int]):
        self.circles = tuple(tuple(int(t) for t in c) for c in circles)
        self.signs = tuple(int(s) for s in signs)
        if not self.circles:
            raise ValueError("a diagram needs at least one circle")
        n = len(self.signs)
        seen = [False] * (2 * n)
        for circle in self.circles:
            for tok in circle:
                if not 0 <= tok < 2 * n:
                    raise ValueError(f"token {tok} refers to a missing arrow")
                if seen[tok]:
                    raise ValueError(f"endpoint {tok} used twice")
                seen[tok] = True
        if not all(seen):
            raise ValueError("every arrow needs both endpoints placed")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        self._key = None
        self._succ = None
        self._where = None

    @property
    def m(self) -> int:
        return len(self.circles)

    @property
    def n(self) -> int:
        return len(self.signs)

    def __len__(self) -> int:
        return len(self.signs)

    def arrows(self) -> range:
        return range(len(self.signs))

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def where(self, token: int) -> tuple[int, int]:
        """``(circle, position)`` of an endpoint token."""
        if self._where is None:
            where = [None] * (2 * self.n)
            for ci, circle in enumerate(self.circles):
                for pos, tok in enumerate(circle):
                    where[tok] = (ci, pos)
            self._where = where
        return self._where[token]

    def succ(self) -> list[int]:
        """Cyclic successor of every token along its circle."""
        if self._succ is None:
            succ = [0] * (2 * self.n)
            for circle in self.circles:
                for pos, tok in enumerate(circle):
                    succ[tok] = circle[(pos + 1) % len(circle)]
            self._succ = succ
        return self._succ

    def key(self) -> tuple:
        """Relabelled slot sequence identifying the diagram.

        Each slot becomes ``4 * label + 2 * is_head + (sign > 0)``, with labels
        assigned by first appearance; ``-1`` separates circles.
        """
        if self._key is None:
            label: dict[int, int] = {}
            out: list[int] = []
            for ci, circle in enumerate(self.circles):
                if ci:
                    out.append(-1)
                for tok in circle:
                    a = tok >> 1
                    if a not in label:
                        label[a] = len(label)
                    out.append(4 * label[a] + 2 * (tok & 1) + (self.signs[a] > 0))
            self._key = tuple(out)
        return self._key

    def code(self) -> CanonicalCode:
        return canonicalize(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        from .codecs import to_gauss_code

        return f"GaussDiagram({to_gauss_code(self).rstrip(chr(10))!r})".replace("\\n", " | ")

    def relabeled(self) -> GaussDiagram:
        """The same diagram with arrows numbered by first appearance."""
        label: dict[int, int] = {}
        for circle in self.circles:
            for tok in circle:
                label.setdefault(tok >> 1, len(label))
        circles = [[2 * label[t >> 1] + (t & 1) for t in c] for c in self.circles]
        signs = [0] * self.n
        for a, new in label.items():
            signs[new] = self.signs[a]
        return GaussDiagram(circles, signs)

    def unsigned(self) -> GaussDiagram:
        """All signs set to +1."""
        return GaussDiagram(self.circles, [1] * self.n)

    def with_signs(self, signs: Sequence[int]) -> GaussDiagram:
        return GaussDiagram(self.circles, signs)

    def sign_product(self) -> int:
        p = 1
        for s in self.signs:
            p *= s
        return p

    def is_descending(self) -> bool:
        """Tails met before heads when tracing circles in order from base points."""
        seen = set()
        for circle in self.circles:
            for tok in circle:
                a = tok >> 1
                if a not in seen:
                    if tok & 1:
                        return False
                    seen.add(a)
        return True

    def is_ascending(self) -> bool:
        seen = set()
        for circle in self.circles:
            for tok in circle:
                a = tok >> 1
                if a not in seen:
                    if not tok & 1:
                        return False
                    seen.add(a)
        return True


def canonicalize(g: GaussDiagram) -> CanonicalCode:
    """Byte string identifying ``g`` up to slot renumbering.

    Circles are written in order, ``|`` separated, each as its slot tokens
    ``T``/``H`` + label + sign, labels assigned by first appearance.
    """
    parts: list[str] = []
    current: list[str] = []
    for v in g.key():
        if v == -1:
            parts.append(" ".join(current))
            current = []
            continue
        label, rest = divmod(v, 4)
        role = "H" if rest & 2 else "T"
        sign = "+" if rest & 1 else "-"
        current.append(f"{role}{label}{sign}")
    parts.append(" ".join(current))
    return "|".join(parts).encode("ascii")


@dataclass(frozen=True)
class State:
    """A subset of the arrows of ``owner``, stored as a bitmask."""

    owner: GaussDiagram
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.owner.n:
            raise ValueError("state refers to arrows outside the diagram")

    @classmethod
    def of(cls, owner: GaussDiagram, arrows: Iterable[int]) -> State:
        mask = 0
        for a in arrows:
            mask |= 1 << a
        return cls(owner, mask)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(a for a in range(self.owner.n) if self.mask >> a & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, arrow: int) -> bool:
        return bool(self.mask >> arrow & 1)


@dataclass(frozen=True)
class TraceResult:
    """Outcome of smoothing a state and tracing the result.

    Attributes:
        c: number of circles of the smoothed diagram.
        first_passage: classification of every arrow of the owner.
        circles: the smoothed circles in induced order, each as the tokens
            visited from its base point. Empty tuples are arrowless circles.
    """

    c: int
    first_passage: tuple[Passage, ...]
    circles: tuple[tuple[int, ...], ...]

    def head_first(self, arrow: int) -> bool:
        return self.first_passage[arrow] is Passage.HEAD_FIRST


def _locate(succ: list[int], order: list[int], start_idx: int, tok: int) -> int:
    """Index in ``order`` (at or after ``start_idx``) of the circle containing ``tok``."""
    for j in range(start_idx, len(order)):
        s = order[j]
        if s < 0:
            continue
        t = s
        while True:
            if t == tok:
                return j
            t = succ[t]
            if t == s:
                break
    raise AssertionError("token not found on any remaining circle")


def _smooth_at(succ: list[int], order: list[int], idx: int, tok: int) -> None:
    """Smooth the arrow whose endpoint ``tok`` is met first, on circle ``order[idx]``.

    Same-circle arrow: the part holding the base point keeps index ``idx``; the
    other part becomes ``idx + 1`` with its base point just after the junction.
    Arrow to a later circle ``j``: circle ``j`` is merged into ``idx``.
    """
    other = tok ^ 1
    j = _locate(succ, order, idx, other)
    nxt = succ[tok]
    succ[tok], succ[other] = succ[other], nxt
    if j == idx:
        order.insert(idx + 1, nxt)
    else:
        del order[j]


def _trace(g: GaussDiagram, mask: int, kill: int = 0):
    """Single pass smoothing of ``mask`` with first-passage bookkeeping.

    ``kill`` is a 4-bit mask over ``2 * in_state + head_first``; when an arrow's
    classification hits a set bit the pass aborts and ``None`` is returned.
    Otherwise returns ``(c, first)`` with ``first[a]`` 1 for head-first.
    """
    succ = list(g.succ())
    order = [c[0] if c else -1 for c in g.circles]
    first = [-1] * g.n
    idx = 0
    while idx < len(order):
        start = order[idx]
        if start >= 0:
            tok = start
            while True:
                a = tok >> 1
                if first[a] < 0:
                    hf = tok & 1
                    first[a] = hf
                    ins = mask >> a & 1
                    if kill >> (2 * ins + hf) & 1:
                        return None
                    if ins:
                        _smooth_at(succ, order, idx, tok)
                tok = succ[tok]
                if tok == start:
                    break
        idx += 1
    return len(order), first


def _walk(succ: list[int], order: list[int]) -> tuple[tuple[int, ...], ...]:
    out = []
    for s in order:
        if s < 0:
            out.append(())
            continue
        seq = [s]
        t = succ[s]
        while t != s:
            seq.append(t)
            t = succ[t]
        out.append(tuple(seq))
    return tuple(out)


def smooth_and_trace(g: GaussDiagram, state: State | int | Iterable[int]) -> TraceResult:
    """Smooth every arrow of ``state`` and trace the result in induced order.

    Smoothing reconnects the strand arriving at the head to the strand
    leaving the tail (and vice versa). Arrows are smoothed one at a time in
    the order the tracing first meets them; the ordering and base points of
    the new circles follow the rules of :func:`_smooth_at`. An arrow is
    head-first when the tracing reaches its head endpoint before its tail
    endpoint, which for a smoothed arrow means entering the junction along
    the strand that came into the head.
    """
    mask = _as_mask(g, state)
    succ = list(g.succ())
    order = [c[0] if c else -1 for c in g.circles]
    first = [-1] * g.n
    idx = 0
    while idx < len(order):
        start = order[idx]
        if start >= 0:
            tok = start
            while True:
                a = tok >> 1
                if first[a] < 0:
                    first[a] = tok & 1
                    if mask >> a & 1:
                        _smooth_at(succ, order, idx, tok)
                tok = succ[tok]
                if tok == start:
                    break
        idx += 1
    passages = tuple(Passage.HEAD_FIRST if f else Passage.TAIL_FIRST for f in first)
    return TraceResult(len(order), passages, _walk(succ, order))


def smooth_in_order(g: GaussDiagram, arrows: Sequence[int]) -> TraceResult:
    """Smooth ``arrows`` one by one in the given order, then trace.

    Each step retraces the current diagram to find which endpoint of the
    next arrow comes first. With ``arrows`` in tracing order this agrees with
    :func:`smooth_and_trace`; other orders exist to probe whether the
    induced ordering depends on the smoothing sequence.
    """
    succ = list(g.succ())
    order = [c[0] if c else -1 for c in g.circles]
    for a in arrows:
        for idx, circle in enumerate(_walk(succ, order)):
            hit = [t for t in circle if t >> 1 == a]
            if hit:
                _smooth_at(succ, order, idx, hit[0])
                break
    circles = _walk(succ, order)
    first = [-1] * g.n
    for circle in circles:
        for tok in circle:
            if first[tok >> 1] < 0:
                first[tok >> 1] = tok & 1
    passages = tuple(Passage.HEAD_FIRST if f else Passage.TAIL_FIRST for f in first)
    return TraceResult(len(circles), passages, circles)


def _as_mask(g: GaussDiagram, state) -> int:
    if isinstance(state, State):
        if state.owner is not g and state.owner != g:
            raise ValueError("state belongs to a different diagram")
        return state.mask
    if isinstance(state, int):
        if state < 0 or state >> g.n:
            raise ValueError("state refers to arrows outside the diagram")
        return state
    return State.of(g, state).mask


def subdiagram(g: GaussDiagram, arrows: Iterable[int]) -> GaussDiagram:
    """Keep the circles and base points of ``g`` and only the listed arrows."""
    keep = sorted(set(arrows))
    if any(not 0 <= a < g.n for a in keep):
        raise ValueError("arrow outside the diagram")
    new = {a: i for i, a in enumerate(keep)}
    circles = [[2 * new[t >> 1] + (t & 1) for t in c if (t >> 1) in new] for c in g.circles]
    return GaussDiagram(circles, [g.signs[a] for a in keep])


def subdiagram_mask(g: GaussDiagram, mask: int) -> GaussDiagram:
    return subdiagram(g, [a for a in range(g.n) if mask >> a & 1])


def crossing_flip(g: GaussDiagram, arrow: int) -> GaussDiagram:
    """Reverse ``arrow`` and negate its sign (a crossing change)."""
    if not 0 <= arrow < g.n:
        raise ValueError(f"no arrow {arrow}")
    circles = [[t ^ 1 if t >> 1 == arrow else t for t in c] for c in g.circles]
    signs = list(g.signs)
    signs[arrow] = -signs[arrow]
    return GaussDiagram(circles, signs)


def is_isolated(g: GaussDiagram, arrow: int) -> bool:
    """True when both ends lie on one circle and no other chord interleaves it."""
    ct, pt = g.where(tail(arrow))
    ch, ph = g.where(head(arrow))
    if ct != ch:
        return False
    lo, hi = sorted((pt, ph))
    inside = g.circles[ct][lo + 1:hi]
    counts: dict[int, int] = {}
    for tok in inside:
        counts[tok >> 1] = counts.get(tok >> 1, 0) + 1
    return all(v == 2 for v in counts.values())


def has_isolated_arrow(g: GaussDiagram) -> bool:
    return any(is_isolated(g, a) for a in g.arrows())
