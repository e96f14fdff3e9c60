"""Gauss diagram formulas for the coefficients p_{k,l} of HOMFLYPT at a = exp(h).

Each arrow diagram ``A`` carries a weight series ``W(A)``, a state sum over
the ascending states of ``A``. Its coefficient ``w_{k,l}(A)`` at
``h^k z^l`` is the weight of ``A`` in the combination ``A_{k,l}``, and
pairing ``A_{k,l}`` with a Gauss diagram of a link gives ``p_{k,l}``.

Two routes compute ``W(A)``: :func:`weight_series` multiplies the table
entries as truncated series, while :func:`weight_polynomial` evaluates the
same state sum with ``a`` in place of ``exp(h)`` and substitutes at the end.
The second is exact integer arithmetic and is the one used in bulk.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Mapping, Sequence

from .diagram.codecs import parse_gauss_code, to_gauss_code
from .diagram.core import (
    GaussDiagram,
    Passage,
    _trace,
    canonicalize,
    crossing_flip,
    has_isolated_arrow,
    smooth_and_trace,
    subdiagram,
)
from .diagram.enumerate import enumerate_arrow_diagrams
from .exactpoly import HZSeries, IntLaurent2, exp_series, substitute_exp, unlink_factor, unlink_series
from .statesum import homfly

__all__ = [
    "ArrowWeightTable",
    "ARROW_WEIGHTS",
    "FormulaCombo",
    "weight_series",
    "weight_polynomial",
    "w_kl",
    "generate_Akl",
    "pairing",
    "evaluate_combo",
    "evaluate_pkl",
    "pkl_from_polynomial",
    "simplified_p12",
    "SIMPLIFIED_P12",
    "vassiliev_defect",
]

HF, TF = Passage.HEAD_FIRST, Passage.TAIL_FIRST


class ArrowWeightTable:
    """Local weights of arrows in arrow diagrams, as truncated series."""

    def __call__(self, in_state: bool, passage: Passage, sign: int, cutoff: int) -> HZSeries:
        return _arrow_weight(in_state, passage, sign, cutoff)


@lru_cache(maxsize=None)
def _arrow_weight(in_state: bool, passage: Passage, sign: int, cutoff: int) -> HZSeries:
    if passage is TF:
        return HZSeries.zero(cutoff)
    if in_state:
        # sign * exp(-sign h) z
        return HZSeries(cutoff, {(k, 1): sign * c for k, c in enumerate(exp_series(-sign, cutoff))})
    # exp(-2 sign h) - 1
    return HZSeries(cutoff, {(k, 0): c for k, c in enumerate(exp_series(-2 * sign, cutoff)) if k})


ARROW_WEIGHTS = ArrowWeightTable()

# tail-first classification kills a state whether or not the arrow is in it
_KILL_TAIL_FIRST = (1 << 0) | (1 << 2)


def weight_series(a: GaussDiagram, cutoff: int) -> HZSeries:
    """``W(A)`` truncated at ``h**cutoff``, summed state by state from the table."""
    total = HZSeries.zero(cutoff)
    for mask in range(1 << a.n):
        tr = smooth_and_trace(a, mask)
        w = HZSeries.one(cutoff)
        for arrow, p in enumerate(tr.first_passage):
            w = w * ARROW_WEIGHTS(bool(mask >> arrow & 1), p, a.signs[arrow], cutoff)
        if any(p is TF for p in tr.first_passage):
            assert w.is_zero(), "a state with a tail-first arrow must vanish"
            continue
        total = total + w * unlink_series(tr.c, cutoff)
    return total


@lru_cache(maxsize=None)
def _ascending_states(circles: tuple[tuple[int, ...], ...], n: int) -> tuple[tuple[int, int], ...]:
    """``(mask, c)`` for every state whose tracing meets all heads first."""
    shell = GaussDiagram(circles, [1] * n)
    out = []
    for mask in range(1 << n):
        res = _trace(shell, mask, _KILL_TAIL_FIRST)
        if res is not None:
            out.append((mask, res[0]))
    return tuple(out)


def _in_state_weight(sign: int) -> IntLaurent2:
    return IntLaurent2({(-sign, 1): sign})


def _out_state_weight(sign: int) -> IntLaurent2:
    return IntLaurent2({(-2 * sign, 0): 1, (0, 0): -1})


_W_IN = {1: _in_state_weight(1), -1: _in_state_weight(-1)}
_W_OUT = {1: _out_state_weight(1), -1: _out_state_weight(-1)}


@lru_cache(maxsize=None)
def weight_polynomial(a: GaussDiagram) -> IntLaurent2:
    """The state sum behind ``W(A)`` with ``a`` standing for ``exp(h)``.

    ``substitute_exp(weight_polynomial(A), K) == weight_series(A, K)``.
    """
    total = IntLaurent2.zero()
    for mask, c in _ascending_states(a.circles, a.n):
        w = unlink_factor() ** (c - 1)
        for arrow in range(a.n):
            s = a.signs[arrow]
            w = w * (_W_IN[s] if mask >> arrow & 1 else _W_OUT[s])
        total = total + w
    return total


def pkl_from_polynomial(p: IntLaurent2, k: int, l: int) -> Fraction:
    """Coefficient of ``h^k z^l`` in ``p`` at ``a = exp(h)``: ``sum c * i^k / k!``."""
    num = sum(c * i ** k for (i, j), c in p.items() if j == l)
    return Fraction(num, factorial(k))


def w_kl(a: GaussDiagram, k: int, l: int) -> Fraction:
    """``w_{k,l}(A)``; zero when ``A`` has more than ``k + l`` arrows."""
    if a.n > k + l:
        return Fraction(0)
    return pkl_from_polynomial(weight_polynomial(a), k, l)


@dataclass
class FormulaCombo:
    """Rational combination of arrow diagrams keyed by canonical code."""

    k: int
    l: int
    m: int
    terms: dict[bytes, Fraction] = field(default_factory=dict)
    diagrams: dict[bytes, GaussDiagram] = field(default_factory=dict)
    cutoff: int | None = None

    def add(self, d: GaussDiagram, coeff: Fraction | int) -> None:
        code = canonicalize(d)
        value = self.terms.get(code, Fraction(0)) + coeff
        if value:
            self.terms[code] = value
            self.diagrams[code] = d
        else:
            self.terms.pop(code, None)
            self.diagrams.pop(code, None)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormulaCombo):
            return NotImplemented
        return (self.k, self.l, self.m, self.terms) == (other.k, other.l, other.m, other.terms)

    def items(self) -> list[tuple[GaussDiagram, Fraction]]:
        return [(self.diagrams[c], self.terms[c]) for c in sorted(self.terms)]

    def scaled(self, factor: Fraction | int) -> FormulaCombo:
        out = FormulaCombo(self.k, self.l, self.m, cutoff=self.cutoff)
        for d, c in self.items():
            out.add(d, c * factor)
        return out

    def unsigned_classes(self) -> list[dict]:
        """Group signed terms into unsigned classes where the sign pattern allows.

        A class collapses to one unsigned diagram with coefficient ``c`` when
        every signing ``A`` of it carries ``c * sign_product(A)``; other terms
        stay signed.
        """
        groups: dict[tuple, list[bytes]] = defaultdict(list)
        for code, d in self.diagrams.items():
            groups[d.unsigned().key()].append(code)
        out = []
        for codes in groups.values():
            shape = self.diagrams[codes[0]].unsigned()
            n = shape.n
            c = self.terms[codes[0]] * self.diagrams[codes[0]].sign_product()
            collapsible = len(codes) == 1 << n and all(
                self.terms[code] == c * self.diagrams[code].sign_product() for code in codes
            )
            if collapsible:
                out.append({"diagram": shape, "coeff": c, "signed": False})
            else:
                for code in codes:
                    out.append({"diagram": self.diagrams[code], "coeff": self.terms[code], "signed": True})
        out.sort(key=lambda t: (canonicalize(t["diagram"]), t["signed"]))
        return out

    def to_json(self, unsigned: bool = False) -> dict:
        def fmt(c: Fraction, as_int: bool) -> str | int:
            if as_int and c.denominator == 1:
                return c.numerator
            return f"{c.numerator}/{c.denominator}"

        if unsigned:
            terms = [
                {"diagram": to_gauss_code(t["diagram"]), "coeff": fmt(t["coeff"], True), "signed": t["signed"]}
                for t in self.unsigned_classes()
            ]
        else:
            terms = [{"diagram": to_gauss_code(d), "coeff": fmt(c, False)} for d, c in self.items()]
        return {"k": self.k, "l": self.l, "m": self.m, "terms": terms}

    @classmethod
    def from_terms(cls, k: int, l: int, m: int, terms: Iterable[tuple[GaussDiagram, Fraction | int]]) -> FormulaCombo:
        out = cls(k, l, m)
        for d, c in terms:
            out.add(d, c)
        return out


def generate_Akl(k: int, l: int, m: int = 1, skip_isolated: bool = True) -> FormulaCombo:
    """``A_{k,l}`` on ``m`` circles as a combination of signed arrow diagrams.

    Diagrams with an isolated arrow have zero weight and are skipped unless
    ``skip_isolated`` is False.
    """
    if k < 0 or k + l < 0 or m < 1:
        raise ValueError("need k >= 0, k + l >= 0, m >= 1")
    combo = FormulaCombo(k, l, m, cutoff=k)
    for n in range(0, k + l + 1):
        for shape in enumerate_arrow_diagrams(n, m, signed=False):
            if skip_isolated and has_isolated_arrow(shape):
                continue
            if not _ascending_states(shape.circles, n):
                continue
            for signs in _sign_patterns(n):
                d = shape.with_signs(signs)
                w = w_kl(d, k, l)
                if w:
                    combo.add(d, w)
    return combo


@lru_cache(maxsize=None)
def _sign_patterns(n: int) -> tuple[tuple[int, ...], ...]:
    from itertools import product

    return tuple(product((1, -1), repeat=n))


def pairing(a: GaussDiagram, g: GaussDiagram) -> int:
    """Number of arrow subsets of ``g`` whose subdiagram equals ``a``."""
    if a.m != g.m:
        raise ValueError(f"circle count mismatch: {a.m} != {g.m}")
    target = a.key()
    return sum(1 for sub in combinations(range(g.n), a.n) if subdiagram(g, sub).key() == target)


def evaluate_combo(combo: FormulaCombo, g: GaussDiagram) -> Fraction:
    """``sum coeff * pairing(A, g)`` over the combination."""
    if combo.terms and combo.m != g.m:
        raise ValueError(f"circle count mismatch: {combo.m} != {g.m}")
    by_size: dict[int, dict[tuple, Fraction]] = defaultdict(dict)
    for d, c in combo.items():
        by_size[d.n][d.key()] = c
    total = Fraction(0)
    for n, table in by_size.items():
        for sub in combinations(range(g.n), n):
            c = table.get(subdiagram(g, sub).key())
            if c is not None:
                total += c
    return total


def evaluate_pkl(g: GaussDiagram, k: int, l: int) -> Fraction:
    """``p_{k,l}`` of the link of ``g`` as ``sum w_{k,l}(B)`` over arrow subsets ``B``."""
    total = Fraction(0)
    for n in range(0, min(g.n, k + l) + 1):
        for sub in combinations(range(g.n), n):
            total += w_kl(subdiagram(g, sub), k, l)
    return total


# Seven-term formula for p_{1,2}: five unsigned three-arrow classes (expanded
# with coefficient eps(A)) and two signed two-arrow diagrams, all scaled by -2.
_P12_TERMS = (
    ("U1+ U2+ O1+ O3+ O2+ U3+\n", 1),
    ("U1+ U2+ O3+ O1+ O2+ U3+\n", 1),
    ("U1+ U2+ O3+ O2+ O1+ U3+\n", 1),
    ("U1+ O2+ O3+ O1+ U2+ U3+\n", 1),
    ("U1+ O2+ O3+ O1+ U3+ U2+\n", 1),
    ("U1+ O2+ O1+ U2+\n", 1),
    ("U1- O2- O1- U2-\n", -1),
)


def _p12_combo() -> FormulaCombo:
    combo = FormulaCombo(1, 2, 1)
    for text, c in _P12_TERMS:
        d = parse_gauss_code(text)
        if d.n == 3:
            for signs in _sign_patterns(3):
                s = d.with_signs(signs)
                combo.add(s, -2 * c * s.sign_product())
        else:
            combo.add(d, -2 * c)
    return combo


SIMPLIFIED_P12 = _p12_combo()


def simplified_p12(g: GaussDiagram) -> Fraction:
    """``p_{1,2}`` of a classical knot from the seven-term formula."""
    return evaluate_combo(SIMPLIFIED_P12, g)


def vassiliev_defect(g: GaussDiagram, arrows: Sequence[int], k: int, l: int) -> Fraction:
    """Alternating sum of ``p_{k,l}`` over all crossing changes at ``arrows``.

    Needs exactly ``k + l + 1`` distinct arrows; vanishes because ``p_{k,l}``
    has order at most ``k + l``.
    """
    arrows = list(arrows)
    if len(set(arrows)) != len(arrows):
        raise ValueError("arrows must be distinct")
    if len(arrows) != k + l + 1:
        raise ValueError(f"need exactly {k + l + 1} arrows, got {len(arrows)}")
    if g.n < len(arrows) or any(not 0 <= a < g.n for a in arrows):
        raise ValueError("not enough arrows in the diagram")
    total = Fraction(0)
    for r in range(len(arrows) + 1):
        for flips in combinations(arrows, r):
            d = g
            for a in flips:
                d = crossing_flip(d, a)
            total += (-1) ** r * pkl_from_polynomial(homfly(d), k, l)
    return total


def pkl_table(g: GaussDiagram, max_degree: int) -> dict[tuple[int, int], Fraction]:
    """``p_{k,l}`` for all ``k + l <= max_degree`` with ``l >= 1 - m``, via formulas."""
    out = {}
    for total in range(0, max_degree + 1):
        for l in range(1 - g.m, total + 1):
            k = total - l
            if k < 0:
                continue
            out[(k, l)] = evaluate_pkl(g, k, l)
    return out
