"""HOMFLYPT polynomial of ordered Gauss diagrams.

Three routes to the same polynomial:

* :func:`homfly_descending`, the state sum over all arrow subsets;
* :func:`homfly_ascending`, the same sum with the mirrored weight table;
* :func:`skein_homfly`, the descending-diagram skein recursion the state sum
  summarises; used as the oracle.

Conventions: ``a P(L+) - a^-1 P(L-) = z P(L0)`` and ``P(unknot) = 1``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .diagram.core import GaussDiagram, Passage, State, _smooth_at, _trace, crossing_flip, smooth_and_trace
from .exactpoly import IntLaurent2, unlink_factor

__all__ = [
    "WeightTable",
    "DESCENDING",
    "ASCENDING",
    "state_weight",
    "state_contribution",
    "states",
    "homfly_descending",
    "homfly_ascending",
    "homfly",
    "is_descending",
    "skein_homfly",
    "smooth_arrow",
]

_ONE = IntLaurent2.one()
_ZERO = IntLaurent2.zero()


@dataclass(frozen=True)
class WeightTable:
    """Local weights indexed by ``(in_state, passage, sign)``."""

    name: str
    entries: dict

    def __call__(self, in_state: bool, passage: Passage, sign: int) -> IntLaurent2:
        return self.entries[(in_state, passage, sign)]

    def __hash__(self) -> int:
        return hash(self.name)

    def kill_mask(self) -> int:
        """Bit ``2 * in_state + head_first`` set where the weight is zero for both signs."""
        mask = 0
        for ins in (False, True):
            for p in Passage:
                if all(self.entries[(ins, p, s)].is_zero() for s in (1, -1)):
                    mask |= 1 << (2 * ins + (p is Passage.HEAD_FIRST))
        return mask


def _lp(c: int, i: int, j: int) -> IntLaurent2:
    return IntLaurent2.monomial(c, i, j)


HF, TF = Passage.HEAD_FIRST, Passage.TAIL_FIRST

DESCENDING = WeightTable(
    "descending",
    {
        (True, HF, 1): _lp(1, -1, 1),
        (True, HF, -1): _lp(-1, 1, 1),
        (True, TF, 1): _ZERO,
        (True, TF, -1): _ZERO,
        (False, HF, 1): _lp(1, -2, 0),
        (False, HF, -1): _lp(1, 2, 0),
        (False, TF, 1): _ONE,
        (False, TF, -1): _ONE,
    },
)

# first two columns and last two columns of the descending table swapped
ASCENDING = WeightTable(
    "ascending",
    {
        (True, HF, 1): _ZERO,
        (True, HF, -1): _ZERO,
        (True, TF, 1): _lp(1, -1, 1),
        (True, TF, -1): _lp(-1, 1, 1),
        (False, HF, 1): _ONE,
        (False, HF, -1): _ONE,
        (False, TF, 1): _lp(1, -2, 0),
        (False, TF, -1): _lp(1, 2, 0),
    },
)


def _mask_of(g: GaussDiagram, state) -> int:
    if isinstance(state, State):
        return state.mask
    if isinstance(state, int):
        return state
    return State.of(g, state).mask


def state_weight(g: GaussDiagram, state, table: WeightTable = DESCENDING) -> IntLaurent2:
    """Product of the local weights of all arrows for one state."""
    mask = _mask_of(g, state)
    tr = smooth_and_trace(g, mask)
    w = _ONE
    for a, p in enumerate(tr.first_passage):
        f = table(bool(mask >> a & 1), p, g.signs[a])
        if f.is_zero():
            return _ZERO
        w = w * f
    return w


def state_contribution(g: GaussDiagram, state, table: WeightTable = DESCENDING) -> IntLaurent2:
    """``state_weight * ((a - a^-1)/z) ** (c(S) - 1)``."""
    mask = _mask_of(g, state)
    w = state_weight(g, mask, table)
    if w.is_zero():
        return w
    return w * unlink_factor() ** (smooth_and_trace(g, mask).c - 1)


def states(n: int) -> Iterator[int]:
    """All subsets of ``n`` arrows, by size and then by bitmask value."""
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        by_size[bin(mask).count("1")].append(mask)
    for group in by_size:
        yield from group


def _state_sum(g: GaussDiagram, table: WeightTable, prune: bool) -> IntLaurent2:
    kill = table.kill_mask() if prune else 0
    entries = table.entries
    signs = g.signs
    # group weights by component count, then multiply once by the unlink power
    by_c: dict[int, IntLaurent2] = {}
    for mask in states(g.n):
        res = _trace(g, mask, kill)
        if res is None:
            continue
        c, first = res
        w = _ONE
        for a in range(g.n):
            f = entries[(bool(mask >> a & 1), HF if first[a] else TF, signs[a])]
            if f.is_zero():
                w = _ZERO
                break
            if f is not _ONE:
                w = w * f
        if w:
            by_c[c] = by_c.get(c, _ZERO) + w
    total = _ZERO
    for c, w in sorted(by_c.items()):
        total = total + w * unlink_factor() ** (c - 1)
    return total


def homfly_descending(g: GaussDiagram, prune: bool = True) -> IntLaurent2:
    """State sum with the descending weight table.

    ``prune=False`` evaluates every state in full; the result is identical.
    """
    return _state_sum(g, DESCENDING, prune)


def homfly_ascending(g: GaussDiagram, prune: bool = True) -> IntLaurent2:
    return _state_sum(g, ASCENDING, prune)


@lru_cache(maxsize=100_000)
def homfly(g: GaussDiagram) -> IntLaurent2:
    """Memoised :func:`homfly_descending`, keyed on the canonical diagram."""
    return homfly_descending(g)


def is_descending(g: GaussDiagram) -> bool:
    """Every arrow is met tail-first when tracing circles in order from base points."""
    return g.is_descending()


def _first_descent_failure(g: GaussDiagram) -> int | None:
    seen = set()
    for circle in g.circles:
        for tok in circle:
            a = tok >> 1
            if a in seen:
                continue
            if tok & 1:
                return a
            seen.add(a)
    return None


def _descending_prefix(g: GaussDiagram) -> int:
    """Number of arrow classifications met before the first failure."""
    seen = 0
    met = set()
    for circle in g.circles:
        for tok in circle:
            a = tok >> 1
            if a in met:
                continue
            if tok & 1:
                return seen
            met.add(a)
            seen += 1
    return seen


def smooth_arrow(g: GaussDiagram, arrow: int) -> GaussDiagram:
    """Smooth one arrow with the induced ordering and base points.

    The circles of the result are read from the smoothing; the remaining
    arrows keep their relative numbering.
    """
    succ = list(g.succ())
    order = [c[0] if c else -1 for c in g.circles]
    done = False
    for idx in range(len(order)):
        start = order[idx]
        if start < 0:
            continue
        tok = start
        while True:
            if tok >> 1 == arrow:
                _smooth_at(succ, order, idx, tok)
                done = True
                break
            tok = succ[tok]
            if tok == start:
                break
        if done:
            break
    if not done:
        raise ValueError(f"no arrow {arrow}")
    circles = []
    for s in order:
        if s < 0:
            circles.append([])
            continue
        seq = [s]
        t = succ[s]
        while t != s:
            seq.append(t)
            t = succ[t]
        circles.append([t for t in seq if t >> 1 != arrow])
    keep = [a for a in g.arrows() if a != arrow]
    new = {a: i for i, a in enumerate(keep)}
    circles = [[2 * new[t >> 1] + (t & 1) for t in c] for c in circles]
    return GaussDiagram(circles, [g.signs[a] for a in keep])


def skein_homfly(g: GaussDiagram) -> IntLaurent2:
    """HOMFLYPT by the skein recursion towards a descending diagram.

    At the first arrow met head-first, with sign ``e``::

        P(G) = a^(-2e) P(flip) + e a^(-e) z P(smooth)

    A descending diagram on ``m`` circles is an unlink. Results are memoised on
    the canonical code.
    """
    memo: dict[tuple, IntLaurent2] = {}
    limit = sys.getrecursionlimit()
    if limit < 10_000:
        sys.setrecursionlimit(10_000)

    def rec(d: GaussDiagram) -> IntLaurent2:
        key = d.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        x = _first_descent_failure(d)
        if x is None:
            val = unlink_factor() ** (d.m - 1)
        else:
            e = d.signs[x]
            flipped = crossing_flip(d, x)
            smoothed = smooth_arrow(d, x)
            # termination: the flip lengthens the descending prefix, the smoothing has fewer arrows
            assert _descending_prefix(flipped) > _descending_prefix(d)
            assert smoothed.n == d.n - 1
            val = _lp(1, -2 * e, 0) * rec(flipped) + _lp(e, -e, 1) * rec(smoothed)
        memo[key] = val
        return val

    return rec(g)
