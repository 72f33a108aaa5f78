"""Exact arithmetic in the field Q(sqrt2, sqrt3, sqrt5).

Every value of the canonical bilinear form for labels 2, 3, 4, 5, 6 and
infinity lives in this field, as do the coordinates of all roots built
from those values.  A :class:`Scalar` is a rational combination of the
eight square roots sqrt(d) for d dividing 30.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Iterable, Sequence, Union

from .graph import INF

Rational = Union[int, Fraction]

_PRIMES = (2, 3, 5)
# bitmask -> radicand; bit 0 is sqrt2, bit 1 sqrt3, bit 2 sqrt5
_RADICAND = tuple(
    math.prod(p for i, p in enumerate(_PRIMES) if m >> i & 1) for m in range(8)
)
_MASK_OF = {r: m for m, r in enumerate(_RADICAND)}
# print order: 1, √2, √3, √5, √6, √10, √15, √30
_PRINT_ORDER = tuple(sorted(range(8), key=lambda m: _RADICAND[m]))

# first interval pass uses 3 decimal digits, then digits double
_START_DIGITS = 3


class UnsupportedLabel(ValueError):
    """A Coxeter label whose form value is outside Q(sqrt2, sqrt3, sqrt5)."""


def _norm(q: Rational) -> Rational:
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


@total_ordering
class Scalar:
    """Immutable element of Q(sqrt2, sqrt3, sqrt5).

    Stored sparsely as ``((mask, coeff), ...)`` sorted by mask, with zero
    coefficients dropped, so equality is structural and exact.
    """

    __slots__ = ("_t", "_h")

    def __init__(self, terms: dict[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, Rational] = {}
        for m, c in items:
            if c:
                acc[m] = acc.get(m, 0) + c
        self._t = tuple(sorted((m, _norm(c)) for m, c in acc.items() if c))
        self._h = None

    @classmethod
    def _raw(cls, t: tuple) -> "Scalar":
        obj = object.__new__(cls)
        obj._t = t
        obj._h = None
        return obj

    @classmethod
    def sqrt(cls, d: int) -> "Scalar":
        """sqrt(d) for d a divisor of 30."""
        if d not in _MASK_OF:
            raise ValueError(f"sqrt({d}) is not a basis element")
        return cls({_MASK_OF[d]: 1})

    @classmethod
    def of(cls, x: "Scalar | Rational") -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._raw(((0, _norm(x)),) if x else ())
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o._t:
            return self
        if not self._t:
            return o
        acc = dict(self._t)
        for m, c in o._t:
            v = acc.get(m, 0) + c
            if v:
                acc[m] = _norm(v)
            else:
                acc.pop(m, None)
        return Scalar._raw(tuple(sorted(acc.items())))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(tuple((m, -c) for m, c in self._t))

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self._t or not o._t:
            return ZERO
        if len(o._t) == 1 and o._t[0][0] == 0:
            k = o._t[0][1]
            return Scalar._raw(tuple((m, _norm(c * k)) for m, c in self._t))
        if len(self._t) == 1 and self._t[0][0] == 0:
            k = self._t[0][1]
            return Scalar._raw(tuple((m, _norm(c * k)) for m, c in o._t))
        acc: dict[int, Rational] = {}
        for m1, c1 in self._t:
            for m2, c2 in o._t:
                m = m1 ^ m2
                v = acc.get(m, 0) + c1 * c2 * _RADICAND[m1 & m2]
                acc[m] = v
        return Scalar(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar._raw(tuple((m, _norm(Fraction(c) / other)) for m, c in self._t))
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            return self / o.rational()
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def conjugate(self, p: int) -> "Scalar":
        """Image under the field automorphism sqrt(p) -> -sqrt(p)."""
        bit = 1 << _PRIMES.index(p)
        return Scalar._raw(tuple((m, -c if m & bit else c) for m, c in self._t))

    def inverse(self) -> "Scalar":
        """1/x, by multiplying through by the Galois conjugates."""
        if not self._t:
            raise ZeroDivisionError("division by zero scalar")
        num = ONE
        x = self
        for p in _PRIMES:
            c = x.conjugate(p)
            num = num * c
            x = x * c  # now fixed by this automorphism
        return num / x.rational()

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        if self._h is None:
            self._h = hash(self._t)
        return self._h

    def __lt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __bool__(self):
        return bool(self._t)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._t

    def is_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and self._t[0][0] == 0)

    def rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._t[0][1] if self._t else 0

    def coords(self) -> tuple[Fraction, ...]:
        """The 8 rational coordinates in the order 1, √2, √3, √5, √6, √10, √15, √30."""
        d = dict(self._t)
        return tuple(Fraction(d.get(m, 0)) for m in _PRINT_ORDER)

    @classmethod
    def from_coords(cls, coords: Sequence[Rational]) -> "Scalar":
        if len(coords) != 8:
            raise ValueError("expected 8 coordinates")
        return cls({m: Fraction(c) for m, c in zip(_PRINT_ORDER, coords)})

    def sign(self) -> int:
        """Exact sign: -1, 0 or 1.

        Zero is decided structurally.  Otherwise each surd is enclosed in
        a rational interval from an integer square root and the enclosure
        of the whole sum is refined (digits doubling) until it excludes 0.
        """
        if not self._t:
            return 0
        if len(self._t) == 1:
            return 1 if self._t[0][1] > 0 else -1
        digits = _START_DIGITS
        while True:
            lo, hi = self._enclose(digits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2

    def _enclose(self, digits: int) -> tuple[Fraction, Fraction]:
        scale = 10 ** digits
        lo = hi = Fraction(0)
        for m, c in self._t:
            r = _RADICAND[m]
            if r == 1:
                lo += c
                hi += c
                continue
            f = isqrt(r * scale * scale)
            a, b = Fraction(f, scale), Fraction(f + 1, scale)
            if c > 0:
                lo += c * a
                hi += c * b
            else:
                lo += c * b
                hi += c * a
        return lo, hi

    def __float__(self):
        return float(sum(float(c) * math.sqrt(_RADICAND[m]) for m, c in self._t))

    def __str__(self):
        if not self._t:
            return "0"
        d = dict(self._t)
        parts = []
        for m in _PRINT_ORDER:
            if m not in d:
                continue
            c = Fraction(d[m])
            neg = c < 0
            a = -c if neg else c
            if m == 0:
                body = str(a)
            elif a == 1:
                body = f"√{_RADICAND[m]}"
            else:
                body = f"{a}√{_RADICAND[m]}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _coerce(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._raw(((0, _norm(x)),) if x else ())
    return None


ZERO = Scalar()
ONE = Scalar.of(1)
SQRT2 = Scalar.sqrt(2)
SQRT3 = Scalar.sqrt(3)
SQRT5 = Scalar.sqrt(5)

_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(?:(?:√|sqrt)\(?(\d+)\)?)?\s*")


def parse_scalar(text: str) -> Scalar:
    """Inverse of ``str(Scalar)``; accepts ``√d`` or ``sqrt(d)`` surds."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    pos = 0
    acc: dict[int, Fraction] = {}
    first = True
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if mt is None or mt.end() == pos:
            raise ValueError(f"bad scalar {text!r} at {pos}")
        sgn, num, rad = mt.groups()
        if num is None and rad is None:
            raise ValueError(f"bad scalar {text!r} at {pos}")
        if sgn is None and not first:
            raise ValueError(f"missing operator in {text!r} at {pos}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sgn == "-":
            c = -c
        r = int(rad) if rad is not None else 1
        if r not in _MASK_OF:
            raise ValueError(f"√{r} is outside the field")
        m = _MASK_OF[r]
        acc[m] = acc.get(m, Fraction(0)) + c
        pos = mt.end()
        first = False
    return Scalar(acc)


# -2 cos(pi/m) for the supported labels
_FORM = {
    1: Scalar.of(2),
    2: ZERO,
    3: Scalar.of(-1),
    4: -SQRT2,
    5: Scalar({0: Fraction(-1, 2), _MASK_OF[5]: Fraction(-1, 2)}),
    6: -SQRT3,
}
# cos^2(pi/m) for the finite labels the folded-order fast path recognizes
COS_SQUARED = {
    2: ZERO,
    3: Scalar.of(Fraction(1, 4)),
    4: Scalar.of(Fraction(1, 2)),
    5: Scalar({0: Fraction(3, 8), _MASK_OF[5]: Fraction(1, 8)}),
    6: Scalar.of(Fraction(3, 4)),
}


def form_value(label) -> Scalar:
    """The canonical form value <a_s, a_t> = -2 cos(pi/m) for label m."""
    if label == INF:
        return Scalar.of(-2)
    try:
        return _FORM[label]
    except (KeyError, TypeError):
        raise UnsupportedLabel(f"label {label} has no exact form value here") from None


def sign(x: Scalar) -> int:
    return Scalar.of(x).sign()


class FormMatrix:
    """The canonical bilinear form of a Coxeter graph, indexed by vertex position."""

    __slots__ = ("graph", "entries", "_rows")

    def __init__(self, graph):
        self.graph = graph
        verts = graph.vertices
        self.entries = tuple(
            tuple(form_value(graph.label(s, t)) for t in verts) for s in verts
        )
        # sparse rows: only nonzero entries
        self._rows = tuple(
            tuple((j, v) for j, v in enumerate(row) if v) for row in self.entries
        )

    def __len__(self):
        return len(self.entries)

    def row(self, i: int):
        return self._rows[i]

    def __call__(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        return bilinear(self, x, y)


def canonical_form(graph) -> FormMatrix:
    return FormMatrix(graph)


def bilinear(form: FormMatrix, x: Sequence, y: Sequence) -> Scalar:
    """x^T B y, computed exactly."""
    n = len(form)
    if len(x) != n or len(y) != n:
        raise ValueError(f"dimension mismatch: form {n}, vectors {len(x)} and {len(y)}")
    total = ZERO
    for i, xi in enumerate(x):
        if not xi:
            continue
        acc = ZERO
        for j, v in form.row(i):
            if y[j]:
                acc = acc + v * y[j]
        if acc:
            total = total + xi * acc
    return total
