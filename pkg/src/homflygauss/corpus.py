"""A small deterministic corpus of classical diagrams.

Named knots and links come from planar-diagram codes; :func:`mutations`
adds seeded random Reidemeister-move sequences applied to them.
"""

from __future__ import annotations

import random
from typing import Iterator

from .diagram import GaussDiagram, apply_move, from_pd_code, parse_gauss_code, random_move

__all__ = ["TREFOIL_CODE", "named_diagrams", "mutations", "corpus", "knots"]

# left trefoil, all crossings negative
TREFOIL_CODE = "O3- U1- O2- U3- O1- U2-\n"

_PD: dict[str, tuple[list[list[int]], list[int]]] = {
    "hopf": ([[4, 1, 3, 2], [2, 3, 1, 4]], [1, 3]),
    "3_1+": ([[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], [1]),
    "4_1": ([[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]], [1]),
    "5_1": ([[2, 8, 3, 7], [4, 10, 5, 9], [6, 2, 7, 1], [8, 4, 9, 3], [10, 6, 1, 5]], [1]),
    "5_2": ([[1, 5, 2, 4], [3, 9, 4, 8], [5, 1, 6, 10], [7, 3, 8, 2], [9, 7, 10, 6]], [1]),
    "6_1": (
        [[1, 7, 2, 6], [3, 10, 4, 11], [5, 3, 6, 2], [7, 1, 8, 12], [9, 4, 10, 5], [11, 9, 12, 8]],
        [1],
    ),
}


def named_diagrams() -> dict[str, GaussDiagram]:
    """Unknot, Hopf link, both trefoils, 4_1, 5_1, 5_2 and 6_1."""
    out = {"unknot": parse_gauss_code("\n"), "3_1": parse_gauss_code(TREFOIL_CODE)}
    for name, (crossings, bases) in _PD.items():
        out[name] = from_pd_code(crossings, bases)
    return out


def mutations(count: int = 200, seed: int = 0, max_arrows: int = 10, max_steps: int = 8) -> Iterator[tuple[str, GaussDiagram]]:
    """``count`` diagrams, each a named diagram after 1..``max_steps`` random moves."""
    rng = random.Random(seed)
    bases = named_diagrams()
    names = sorted(n for n, g in bases.items() if g.n <= max_arrows)
    for i in range(count):
        name = rng.choice(names)
        g = bases[name]
        for _ in range(rng.randint(1, max_steps)):
            g = apply_move(g, random_move(g, rng, max_arrows=max_arrows))
        yield f"{name}~{i}", g


def corpus(count: int = 200, seed: int = 0, max_arrows: int = 10) -> list[tuple[str, GaussDiagram]]:
    """Named diagrams followed by their seeded mutations."""
    return list(named_diagrams().items()) + list(mutations(count, seed, max_arrows))


def knots(entries: list[tuple[str, GaussDiagram]]) -> list[tuple[str, GaussDiagram]]:
    return [(name, g) for name, g in entries if g.m == 1]
