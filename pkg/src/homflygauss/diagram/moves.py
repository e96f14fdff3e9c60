"""Reidemeister moves on Gauss diagrams.

A *site* is ``(circle, gap)``: gap ``g`` of a circle with ``L`` slots lies
between slot ``g - 1`` and slot ``g``; gap ``0`` is just after the base point
and gap ``L`` just before it. Deletions and the third move are addressed by
the arrows involved.

Moves never touch base points: every pair of endpoints that a move treats
as adjacent must be consecutive in the linear order read from the base
point.

:func:`random_move` picks sites from the faces of the underlying planar
graph so that a classical diagram stays classical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Union

from .core import GaussDiagram, head, tail

__all__ = [
    "MoveError",
    "R1Insert",
    "R1Delete",
    "R2Insert",
    "R2Delete",
    "R3",
    "Move",
    "apply_move",
    "faces",
    "genus",
    "r3_sign_rule",
    "candidate_moves",
    "random_move",
]


class MoveError(ValueError):
    """The diagram does not match the move's pattern at the given sites."""


@dataclass(frozen=True)
class R1Insert:
    """Insert a kink: a new arrow with adjacent endpoints at ``gap``."""

    circle: int
    gap: int
    sign: int
    tail_first: bool = True


@dataclass(frozen=True)
class R1Delete:
    arrow: int


@dataclass(frozen=True)
class R2Insert:
    """Push the strand at ``over`` across the strand at ``under``.

    Two arrows are created, tails at ``over`` and heads at ``under``. The
    arrow whose tail comes first on the over strand gets ``sign``, the other
    ``-sign``. With ``antiparallel`` the heads appear in the reverse order.
    When both sites are the same gap, ``over_first`` puts the tail block first.
    """

    over: tuple[int, int]
    under: tuple[int, int]
    sign: int
    antiparallel: bool = False
    over_first: bool = True


@dataclass(frozen=True)
class R2Delete:
    arrows: tuple[int, int]


@dataclass(frozen=True)
class R3:
    arrows: tuple[int, int, int]


Move = Union[R1Insert, R1Delete, R2Insert, R2Delete, R3]


def _check_site(g: GaussDiagram, site: tuple[int, int]) -> None:
    c, gap = site
    if not 0 <= c < g.m:
        raise MoveError(f"no circle {c}")
    if not 0 <= gap <= len(g.circles[c]):
        raise MoveError(f"gap {gap} outside circle {c}")


def _adjacent(g: GaussDiagram, t1: int, t2: int) -> tuple[int, int] | None:
    """``(circle, lower position)`` if the tokens are consecutive slots, else ``None``."""
    c1, p1 = g.where(t1)
    c2, p2 = g.where(t2)
    if c1 != c2 or abs(p1 - p2) != 1:
        return None
    return c1, min(p1, p2)


def _drop(g: GaussDiagram, arrows: set[int]) -> GaussDiagram:
    keep = [a for a in g.arrows() if a not in arrows]
    new = {a: i for i, a in enumerate(keep)}
    circles = [[2 * new[t >> 1] + (t & 1) for t in c if (t >> 1) in new] for c in g.circles]
    return GaussDiagram(circles, [g.signs[a] for a in keep])


def _r1_insert(g: GaussDiagram, mv: R1Insert) -> GaussDiagram:
    _check_site(g, (mv.circle, mv.gap))
    if mv.sign not in (1, -1):
        raise MoveError("sign must be +1 or -1")
    a = g.n
    pair = [tail(a), head(a)] if mv.tail_first else [head(a), tail(a)]
    circles = [list(c) for c in g.circles]
    circles[mv.circle][mv.gap:mv.gap] = pair
    return GaussDiagram(circles, list(g.signs) + [mv.sign])


def _r1_delete(g: GaussDiagram, mv: R1Delete) -> GaussDiagram:
    a = mv.arrow
    if not 0 <= a < g.n:
        raise MoveError(f"no arrow {a}")
    if _adjacent(g, tail(a), head(a)) is None:
        c1, p1 = g.where(tail(a))
        c2, p2 = g.where(head(a))
        if c1 == c2 and {p1, p2} == {0, len(g.circles[c1]) - 1}:
            raise MoveError(f"base point inside the kink of arrow {a}")
        raise MoveError(f"arrow {a} is not a kink")
    return _drop(g, {a})


def _r2_insert(g: GaussDiagram, mv: R2Insert) -> GaussDiagram:
    _check_site(g, mv.over)
    _check_site(g, mv.under)
    if mv.sign not in (1, -1):
        raise MoveError("sign must be +1 or -1")
    a, b = g.n, g.n + 1
    tails = [tail(a), tail(b)]
    heads = [head(b), head(a)] if mv.antiparallel else [head(a), head(b)]
    circles = [list(c) for c in g.circles]
    (co, go), (cu, gu) = mv.over, mv.under
    if (co, go) == (cu, gu):
        block = tails + heads if mv.over_first else heads + tails
        circles[co][go:go] = block
    else:
        # insert the later gap first so the earlier index stays valid
        inserts = sorted([(co, go, tails), (cu, gu, heads)], key=lambda t: (t[0], t[1]), reverse=True)
        for c, gap, block in inserts:
            circles[c][gap:gap] = block
    return GaussDiagram(circles, list(g.signs) + [mv.sign, -mv.sign])


def _r2_delete(g: GaussDiagram, mv: R2Delete) -> GaussDiagram:
    a, b = mv.arrows
    if a == b or not (0 <= a < g.n and 0 <= b < g.n):
        raise MoveError("need two distinct arrows")
    if g.signs[a] != -g.signs[b]:
        raise MoveError("R2 arrows must have opposite signs")
    if _adjacent(g, tail(a), tail(b)) is None or _adjacent(g, head(a), head(b)) is None:
        raise MoveError("R2 arrows need adjacent tails and adjacent heads")
    return _drop(g, {a, b})


def r3_sign_rule(eps_tm: int, eps_tb: int, eps_mb: int, s_t: int, s_m: int, s_b: int) -> bool:
    """Sign/order compatibility of a third-move triangle.

    ``s_t`` is +1 when the top strand meets the top-middle crossing before
    the top-bottom one; ``s_m`` compares top-middle with middle-bottom on the
    middle strand; ``s_b`` compares top-bottom with middle-bottom on the
    bottom strand. Three oriented lines realise the data exactly when the
    three products agree.
    """
    return eps_tm * s_t * s_m == eps_tb * s_t * s_b == eps_mb * s_m * s_b


def _r3_match(g: GaussDiagram, arrows: tuple[int, int, int]):
    """Return ``(pairs, roles)`` if the arrows form a third-move triangle.

    ``pairs`` are the three adjacent token pairs (ordered by position);
    ``roles`` maps "tm", "tb", "mb" to arrows.
    """
    if len(set(arrows)) != 3 or any(not 0 <= a < g.n for a in arrows):
        raise MoveError("need three distinct arrows")
    x, y, z = arrows
    toks = [tail(x), head(x), tail(y), head(y), tail(z), head(z)]
    for perm in permutations(toks):
        pairs = [perm[0:2], perm[2:4], perm[4:6]]
        if any(p[0] > p[1] for p in pairs) or not (pairs[0] < pairs[1] < pairs[2]):
            continue
        if any(_adjacent(g, *p) is None for p in pairs):
            continue
        if {frozenset((p[0] >> 1, p[1] >> 1)) for p in pairs} != {
            frozenset((x, y)),
            frozenset((x, z)),
            frozenset((y, z)),
        }:
            continue
        top = [p for p in pairs if not (p[0] & 1) and not (p[1] & 1)]
        bottom = [p for p in pairs if p[0] & 1 and p[1] & 1]
        middle = [p for p in pairs if (p[0] & 1) != (p[1] & 1)]
        if len(top) != 1 or len(bottom) != 1 or len(middle) != 1:
            continue
        mid_head = next(t for t in middle[0] if t & 1) >> 1
        mid_tail = next(t for t in middle[0] if not t & 1) >> 1
        tm, mb = mid_head, mid_tail
        tb = ({x, y, z} - {tm, mb}).pop()
        ordered = [tuple(sorted(p, key=lambda t: g.where(t)[1])) for p in pairs]
        return ordered, {"tm": tm, "tb": tb, "mb": mb}
    return None


def _r3(g: GaussDiagram, mv: R3) -> GaussDiagram:
    found = _r3_match(g, tuple(mv.arrows))
    if found is None:
        raise MoveError("arrows do not form a third-move triangle with consecutive endpoints")
    pairs, roles = found
    tm, tb, mb = roles["tm"], roles["tb"], roles["mb"]

    def before(t1: int, t2: int) -> int:
        return 1 if g.where(t1)[1] < g.where(t2)[1] else -1

    s_t = before(tail(tm), tail(tb))
    s_m = before(head(tm), tail(mb))
    s_b = before(head(tb), head(mb))
    if not r3_sign_rule(g.signs[tm], g.signs[tb], g.signs[mb], s_t, s_m, s_b):
        raise MoveError("signs are incompatible with a third move")
    circles = [list(c) for c in g.circles]
    for t1, t2 in pairs:
        c, p = g.where(t1)
        circles[c][p], circles[c][p + 1] = t2, t1
    return GaussDiagram(circles, g.signs)


def apply_move(g: GaussDiagram, move: Move) -> GaussDiagram:
    if isinstance(move, R1Insert):
        return _r1_insert(g, move)
    if isinstance(move, R1Delete):
        return _r1_delete(g, move)
    if isinstance(move, R2Insert):
        return _r2_insert(g, move)
    if isinstance(move, R2Delete):
        return _r2_delete(g, move)
    if isinstance(move, R3):
        return _r3(g, move)
    raise TypeError(f"unknown move {move!r}")


# --- planar structure -------------------------------------------------------

# half-edge kinds at a crossing
_OI, _OO, _UI, _UO = range(4)
# counterclockwise order around a crossing, by sign
_ROTATION = {1: (_OO, _UO, _OI, _UI), -1: (_UO, _OO, _UI, _OI)}


def faces(g: GaussDiagram) -> list[list[tuple[int, int]]]:
    """Faces of the planar graph of ``g`` as cycles of darts.

    A dart ``(u, +1)`` runs along the orientation from endpoint token ``u``
    to the next endpoint; ``(u, -1)`` runs backwards over the same edge.
    Every face keeps itself on the left of its darts. Arrowless circles
    are omitted.
    """
    succ = g.succ()
    pred = [0] * len(succ)
    for u, v in enumerate(succ):
        pred[v] = u

    def in_half(tok: int) -> int:
        return _UI if tok & 1 else _OI

    def out_half(tok: int) -> int:
        return _UO if tok & 1 else _OO

    def token_of(arrow: int, half: int) -> int:
        return head(arrow) if half in (_UI, _UO) else tail(arrow)

    def step(dart: tuple[int, int]) -> tuple[int, int]:
        u, d = dart
        arrive = succ[u] if d > 0 else u
        h = in_half(arrive) if d > 0 else out_half(arrive)
        arrow = arrive >> 1
        rot = _ROTATION[g.signs[arrow]]
        nxt = rot[(rot.index(h) - 1) % 4]
        t = token_of(arrow, nxt)
        if nxt in (_OO, _UO):
            return (t, 1)
        return (pred[t], -1)

    seen = set()
    out = []
    for u in range(len(succ)):
        for d in (1, -1):
            dart = (u, d)
            if dart in seen:
                continue
            cycle = []
            while dart not in seen:
                seen.add(dart)
                cycle.append(dart)
                dart = step(dart)
            out.append(cycle)
    return out


def _arrow_components(g: GaussDiagram) -> list[set[int]]:
    parent = list(range(g.m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in g.arrows():
        c1 = g.where(tail(a))[0]
        c2 = g.where(head(a))[0]
        parent[find(c1)] = find(c2)
    groups: dict[int, set[int]] = {}
    for c in range(g.m):
        groups.setdefault(find(c), set()).add(c)
    return list(groups.values())


def genus(g: GaussDiagram) -> int:
    """Total genus of the ribbon surface; 0 exactly for planar (classical) diagrams."""
    face_list = faces(g)
    total = 0
    for comp in _arrow_components(g):
        arrows = {t >> 1 for c in comp for t in g.circles[c]}
        if not arrows:
            continue
        f = sum(1 for cyc in face_list if g.where(cyc[0][0])[0] in comp)
        v = len(arrows)
        # V - E + F = 2 - 2g with E = 2V
        total += (2 - f + v) // 2
    return total


def _gaps_for_edge(g: GaussDiagram, u: int) -> list[tuple[int, int]]:
    c, p = g.where(u)
    length = len(g.circles[c])
    if p == length - 1:
        return [(c, length), (c, 0)]
    return [(c, p + 1)]


def candidate_moves(g: GaussDiagram) -> dict[str, list[Move]]:
    """Valid deletions and third moves on the planar diagram of ``g``."""
    out: dict[str, list[Move]] = {"R1-delete": [], "R2-delete": [], "R3": []}
    for a in g.arrows():
        if _adjacent(g, tail(a), head(a)) is not None:
            out["R1-delete"].append(R1Delete(a))
    for a in g.arrows():
        for b in range(a + 1, g.n):
            try:
                _r2_delete(g, R2Delete((a, b)))
            except MoveError:
                continue
            out["R2-delete"].append(R2Delete((a, b)))
    succ = g.succ()
    for cyc in faces(g):
        if len(cyc) != 3:
            continue
        arrows = {u >> 1 for u, _ in cyc} | {succ[u] >> 1 for u, _ in cyc}
        if len(arrows) != 3:
            continue
        triple = tuple(sorted(arrows))
        found = _r3_match(g, triple)
        # the triangle's three edges must bound this face
        if found is None or frozenset(p[0] for p in found[0]) != frozenset(u for u, _ in cyc):
            continue
        try:
            _r3(g, R3(triple))
        except MoveError:
            continue
        if R3(triple) not in out["R3"]:
            out["R3"].append(R3(triple))
    return out


def random_move(g: GaussDiagram, rng: random.Random, max_arrows: int | None = None) -> Move:
    """A random move that keeps a classical diagram classical.

    Insertions are skipped when they would exceed ``max_arrows``.
    """
    cands = candidate_moves(g)
    kinds = [k for k, v in cands.items() if v]
    if max_arrows is None or g.n + 1 <= max_arrows:
        kinds.append("R1-insert")
    if (max_arrows is None or g.n + 2 <= max_arrows) and g.n > 0:
        kinds.append("R2-insert")
    if g.n == 0 and (max_arrows is None or max_arrows >= 2):
        kinds.append("R2-insert-loop")
    if not kinds:
        raise MoveError("no move available")
    kind = rng.choice(sorted(kinds))
    if kind in cands:
        return rng.choice(cands[kind])
    if kind == "R1-insert":
        c = rng.randrange(g.m)
        return R1Insert(c, rng.randint(0, len(g.circles[c])), rng.choice((1, -1)), rng.random() < 0.5)
    if kind == "R2-insert-loop":
        loops = [c for c in range(g.m) if not g.circles[c]]
        c = rng.choice(loops)
        d = rng.choice((1, -1))
        return R2Insert((c, 0), (c, 0), sign=d, antiparallel=True, over_first=rng.random() < 0.5)
    # push one boundary edge of a face over or under another
    face_list = [f for f in faces(g)]
    face = rng.choice(face_list)
    d1 = rng.choice(face)
    d2 = rng.choice(face)
    if rng.random() < 0.5:
        d1, d2 = d2, d1
    over_site = rng.choice(_gaps_for_edge(g, d1[0]))
    under_site = rng.choice(_gaps_for_edge(g, d2[0]))
    return R2Insert(
        over_site,
        under_site,
        sign=d2[1],
        antiparallel=d1[1] == d2[1],
        over_first=rng.random() < 0.5,
    )
