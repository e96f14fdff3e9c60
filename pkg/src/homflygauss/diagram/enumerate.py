"""Enumeration of ordered arrow diagrams with a fixed number of arrows."""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .core import GaussDiagram

__all__ = ["enumerate_arrow_diagrams", "compositions", "perfect_matchings"]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write ``total`` as ``parts`` non-negative summands."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def perfect_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in perfect_matchings(remaining):
            yield [(first, partner)] + tail


def enumerate_arrow_diagrams(n: int, m: int, signed: bool = True) -> Iterator[GaussDiagram]:
    """Every ordered based arrow diagram with ``n`` arrows on ``m`` circles, once each.

    Slots are laid out circle by circle; a diagram is a split of the ``2n``
    slots among the circles, a pairing of the slots, a direction per pair and
    (when ``signed``) a sign per pair. Distinct choices give distinct
    diagrams because circles and base points are fixed. With
    ``signed=False`` every arrow is positive.
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    slots = list(range(2 * n))
    sign_patterns = list(product((1, -1), repeat=n)) if signed else [(1,) * n]
    for sizes in compositions(2 * n, m):
        bounds = []
        start = 0
        for size in sizes:
            bounds.append((start, start + size))
            start += size
        for matching in perfect_matchings(slots):
            for directions in product((0, 1), repeat=n):
                tokens = [0] * (2 * n)
                for a, ((p, q), d) in enumerate(zip(matching, directions)):
                    # d == 0: tail at the earlier slot
                    tokens[p] = 2 * a + d
                    tokens[q] = 2 * a + (1 - d)
                circles = [tokens[lo:hi] for lo, hi in bounds]
                for signs in sign_patterns:
                    yield GaussDiagram(circles, signs)
