"""Exact sparse polynomials in (a, z) and truncated series in (h, z).

Two value types live here:

* :class:`IntLaurent2`, an integer Laurent polynomial in ``a`` and ``z``
  (the codomain of the HOMFLYPT polynomial);
* :class:`HZSeries`, a power series in ``h`` truncated at degree ``K`` whose
  coefficients are Laurent polynomials in ``z`` with rational coefficients.

Both are immutable. All arithmetic is exact: Python integers and
:class:`fractions.Fraction` only.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

__all__ = [
    "IntLaurent2",
    "HZSeries",
    "lp_add",
    "lp_mul",
    "lp_pow",
    "substitute_exp",
    "series_add",
    "series_mul",
    "unlink_series",
    "coeff",
    "exp_series",
]


def _clean(items: Iterable[tuple[tuple[int, int], object]]) -> dict:
    return {key: c for key, c in items if c != 0}


class IntLaurent2:
    """Integer Laurent polynomial in ``a`` and ``z``.

    ``terms`` maps ``(i, j)`` to the coefficient of ``a**i * z**j``. Zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned = {}
        for (i, j), c in (terms or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            if c:
                cleaned[(int(i), int(j))] = c
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> IntLaurent2:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, c: int = 1, i: int = 0, j: int = 0) -> IntLaurent2:
        return cls({(i, j): c})

    @classmethod
    def one(cls) -> IntLaurent2:
        return cls._raw({(0, 0): 1})

    @classmethod
    def zero(cls) -> IntLaurent2:
        return cls._raw({})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._terms.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntLaurent2({(0, 0): other})
        if not isinstance(other, IntLaurent2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> IntLaurent2:
        return IntLaurent2._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other: IntLaurent2 | int) -> IntLaurent2:
        if isinstance(other, int):
            other = IntLaurent2({(0, 0): other})
        if not isinstance(other, IntLaurent2):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return IntLaurent2._raw(out)

    __radd__ = __add__

    def __sub__(self, other: IntLaurent2 | int) -> IntLaurent2:
        if isinstance(other, int):
            other = IntLaurent2({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other: int) -> IntLaurent2:
        return (-self) + other

    def __mul__(self, other: IntLaurent2 | int) -> IntLaurent2:
        if isinstance(other, int):
            if other == 0:
                return IntLaurent2.zero()
            return IntLaurent2._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, IntLaurent2):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return IntLaurent2._raw(_clean(out.items()))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntLaurent2:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = IntLaurent2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate_a(self, a_value: int) -> dict[int, Fraction]:
        """Specialise ``a`` to a nonzero integer; returns ``{j: coefficient of z**j}``."""
        out: dict[int, Fraction] = {}
        for (i, j), c in self._terms.items():
            out[j] = out.get(j, Fraction(0)) + c * Fraction(a_value) ** i
        return {j: c for j, c in out.items() if c}

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for (i, j), c in sorted(self._terms.items())]

    def to_text(self) -> str:
        """Canonical text: ``{sign}{|c|}*a^{i}*z^{j}`` terms, sorted by ``(i, j)``."""
        if not self._terms:
            return "0"
        parts = []
        for i, j, c in self.sorted_terms():
            sign = "+" if c > 0 else "-"
            parts.append(f"{sign}{abs(c)}*a^{i}*z^{j}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [[i, j, c] for i, j, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> IntLaurent2:
        return cls({(int(i), int(j)): int(c) for i, j, c in data["terms"]})

    def min_z_degree(self) -> int | None:
        return min((j for _, j in self._terms), default=None)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"IntLaurent2({self.to_text()!r})"


def lp_add(p: IntLaurent2, q: IntLaurent2) -> IntLaurent2:
    return p + q


def lp_mul(p: IntLaurent2, q: IntLaurent2) -> IntLaurent2:
    return p * q


def lp_pow(p: IntLaurent2, n: int) -> IntLaurent2:
    return p ** n


class HZSeries:
    """Series in ``h`` (degrees ``0..cutoff``) with Laurent-in-``z`` rational coefficients.

    Every operation truncates at the cutoff, so a product read at degree
    ``<= cutoff`` equals the true product there. Combining two series with
    different cutoffs raises ``ValueError``.
    """

    __slots__ = ("cutoff", "_terms")

    def __init__(self, cutoff: int, terms: Mapping[tuple[int, int], Fraction | int] | None = None):
        if cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        self.cutoff = cutoff
        cleaned = {}
        for (k, l), c in (terms or {}).items():
            if k < 0:
                raise ValueError("h-degree must be non-negative")
            if k <= cutoff and c:
                cleaned[(int(k), int(l))] = Fraction(c)
        self._terms = cleaned

    @classmethod
    def _raw(cls, cutoff: int, terms: dict) -> HZSeries:
        obj = cls.__new__(cls)
        obj.cutoff = cutoff
        obj._terms = terms
        return obj

    @classmethod
    def one(cls, cutoff: int) -> HZSeries:
        return cls._raw(cutoff, {(0, 0): Fraction(1)})

    @classmethod
    def zero(cls, cutoff: int) -> HZSeries:
        return cls._raw(cutoff, {})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: HZSeries) -> None:
        if self.cutoff != other.cutoff:
            raise ValueError(f"cutoff mismatch: {self.cutoff} != {other.cutoff}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HZSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.cutoff, frozenset(self._terms.items())))

    def __neg__(self) -> HZSeries:
        return HZSeries._raw(self.cutoff, {k: -c for k, c in self._terms.items()})

    def __add__(self, other: HZSeries) -> HZSeries:
        if not isinstance(other, HZSeries):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return HZSeries._raw(self.cutoff, out)

    def __sub__(self, other: HZSeries) -> HZSeries:
        return self + (-other)

    def __mul__(self, other: HZSeries | int | Fraction) -> HZSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return HZSeries.zero(self.cutoff)
            return HZSeries._raw(self.cutoff, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, HZSeries):
            return NotImplemented
        self._check(other)
        cutoff = self.cutoff
        out: dict[tuple[int, int], Fraction] = {}
        for (k1, l1), c1 in self._terms.items():
            for (k2, l2), c2 in other._terms.items():
                k = k1 + k2
                if k > cutoff:
                    continue
                key = (k, l1 + l2)
                out[key] = out.get(key, 0) + c1 * c2
        return HZSeries._raw(cutoff, _clean(out.items()))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> HZSeries:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = HZSeries.one(self.cutoff)
        for _ in range(n):
            result = result * self
        return result

    def coeff(self, k: int, l: int) -> Fraction:
        if not 0 <= k <= self.cutoff:
            raise ValueError(f"h-degree {k} outside 0..{self.cutoff}")
        return self._terms.get((k, l), Fraction(0))

    def truncate(self, cutoff: int) -> HZSeries:
        if cutoff > self.cutoff:
            raise ValueError("cannot raise the cutoff of a truncated series")
        return HZSeries._raw(cutoff, {key: c for key, c in self._terms.items() if key[0] <= cutoff})

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        return [(k, l, c) for (k, l), c in sorted(self._terms.items())]

    def to_json(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "terms": [[k, l, f"{c.numerator}/{c.denominator}"] for k, l, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> HZSeries:
        return cls(int(data["cutoff"]), {(int(k), int(l)): Fraction(c) for k, l, c in data["terms"]})

    def __repr__(self) -> str:
        body = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*h^{k}*z^{l}" for k, l, c in self.sorted_terms())
        return f"HZSeries(cutoff={self.cutoff}, {body or '0'})"


def exp_series(rate: int, cutoff: int) -> list[Fraction]:
    """Taylor coefficients of ``exp(rate * h)`` up to ``h**cutoff``."""
    return [Fraction(rate ** k, factorial(k)) for k in range(cutoff + 1)]


def substitute_exp(p: IntLaurent2, cutoff: int) -> HZSeries:
    """Put ``a = exp(h)`` into ``p`` and expand in ``h`` up to ``h**cutoff``."""
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in p.items():
        for k, t in enumerate(exp_series(i, cutoff)):
            if t:
                key = (k, j)
                out[key] = out.get(key, 0) + c * t
    return HZSeries._raw(cutoff, _clean(out.items()))


def series_add(s: HZSeries, t: HZSeries) -> HZSeries:
    return s + t


def series_mul(s: HZSeries, t: HZSeries) -> HZSeries:
    return s * t


_UNLINK_FACTOR = IntLaurent2({(1, -1): 1, (-1, -1): -1})


def unlink_factor() -> IntLaurent2:
    """``(a - a**-1) / z``."""
    return _UNLINK_FACTOR


def unlink_series(components: int, cutoff: int) -> HZSeries:
    """``((exp(h) - exp(-h)) / z) ** (components - 1)`` truncated at ``cutoff``."""
    if components < 1:
        raise ValueError("component count must be at least 1")
    return substitute_exp(_UNLINK_FACTOR ** (components - 1), cutoff)


def coeff(s: HZSeries, k: int, l: int) -> Fraction:
    return s.coeff(k, l)
