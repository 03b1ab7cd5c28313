"""Exact numbers a + b*sqrt(d) over the rationals, and the two arithmetic fields.

Everything geometric in the package is written against a ``Field`` object so the
same code runs on exact ``Scalar`` values or on plain floats (with a tolerance).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering

RADICANDS = (2, 3, 5)


class FieldMismatch(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {x!r}")


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@total_ordering
class Scalar:
    """The exact real number ``a + b*sqrt(d)`` with rational ``a`` and ``b``.

    ``d`` is ``None`` exactly when ``b == 0``; that is the rational kind.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int | None = None):
        a = _frac(a)
        b = _frac(b)
        if b == 0:
            d = None
        elif d not in RADICANDS:
            raise ValueError(f"unsupported radicand {d!r}")
        self.a = a
        self.b = b
        self.d = d

    @property
    def kind(self) -> str:
        return "rational" if self.d is None else "quadratic"

    @classmethod
    def sqrt(cls, d: int) -> Scalar:
        return cls(0, 1, d)

    @staticmethod
    def _lift(x) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        raise TypeError(f"cannot combine Scalar with {type(x).__name__}")

    def _common_d(self, other: Scalar) -> int | None:
        if self.d is None:
            return other.d
        if other.d is None or other.d == self.d:
            return self.d
        raise FieldMismatch(f"sqrt({self.d}) and sqrt({other.d}) do not share a field")

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(other)
        return Scalar(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(other)
        return Scalar(self.a - other.a, self.b - other.b, d)

    def __rsub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(other)
        if d is None:
            return Scalar(self.a * other.a)
        return Scalar(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.d is None:
            if self.a == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar(1 / self.a)
        norm = self.a * self.a - self.b * self.b * self.d
        # norm vanishes only for 0 since sqrt(d) is irrational
        return Scalar(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def sign(self) -> int:
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sb == 0:
            return sa
        if sa >= 0 and sb > 0:
            return 1
        if sa <= 0 and sb < 0:
            return -1
        # opposite signs: the larger square wins
        if self.a * self.a > self.b * self.b * self.d:
            return sa
        return sb

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b and (self.b == 0 or self.d == other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __lt__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        if self.b == 0:
            return float(self.a)
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        b = "" if self.b == 1 else ("-" if self.b == -1 else str(self.b))
        if self.a == 0:
            return f"{b}√{self.d}"
        sign = "" if self.b < 0 else "+"
        return f"{self.a}{sign}{b}√{self.d}"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Inverse of ``str``: accepts ``"3/2"``, ``"-1/2+1/2√5"``, ``"√3"``, ``"2*sqrt(5)"``."""
        t = text.strip().replace(" ", "").replace("sqrt(", "√").replace("*", "")
        q = r"\d+(?:/\d+)?"
        # a bare multiple of √d first, so "2√2" is not read as 2 + √2
        m = re.fullmatch(rf"()([+-]?)({q})?√\(?(\d)\)?", t) or \
            re.fullmatch(rf"([+-]?{q})(?:([+-])({q})?√\(?(\d)\)?)?", t)
        if not t or m is None:
            raise ValueError(f"not a scalar: {text!r}")
        ra, sb, rb, d = m.groups()
        a = Fraction(ra) if ra else Fraction(0)
        if d is None:
            return cls(a)
        b = Fraction(rb) if rb else Fraction(1)
        if sb == "-":
            b = -b
        return cls(a, b, int(d))


class ExactField:
    """Arithmetic in Q or Q(sqrt d); comparisons are exact."""

    exact = True
    tol = 0.0

    def __init__(self, d: int | None = None):
        if d is not None and d not in RADICANDS:
            raise ValueError(f"unsupported radicand {d!r}")
        self.d = d

    def __repr__(self):
        return f"ExactField(d={self.d})"

    def __eq__(self, other):
        return isinstance(other, ExactField) and other.d == self.d

    def __hash__(self):
        return hash(("exact", self.d))

    def coerce(self, x) -> Scalar:
        if isinstance(x, Scalar):
            if x.d is not None and self.d is not None and x.d != self.d:
                raise FieldMismatch(f"{x} is not in Q(√{self.d})")
            if x.d is not None and self.d is None:
                raise FieldMismatch(f"{x} is not rational")
            return x
        if isinstance(x, float):
            raise TypeError("floats are not exact scalars")
        return Scalar(x)

    def sqrt(self, d: int) -> Scalar:
        if d != self.d:
            raise FieldMismatch(f"√{d} is not in {self!r}")
        return Scalar.sqrt(d)

    def sign(self, x) -> int:
        return x.sign() if isinstance(x, Scalar) else _sgn(Fraction(x))

    def is_zero(self, x) -> bool:
        return not x

    def eq(self, x, y) -> bool:
        return x == y

    def vec_key(self, v):
        return tuple(v)

    def to_json(self):
        return {"d": self.d}

    def fmt(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        return self.coerce(Scalar.parse(text))


class FloatField:
    """Double precision with an absolute tolerance; results are flagged inexact."""

    exact = False

    def __init__(self, tol: float = 1e-9):
        self.tol = tol
        self.d = None

    def __repr__(self):
        return f"FloatField(tol={self.tol})"

    def __eq__(self, other):
        return isinstance(other, FloatField) and other.tol == self.tol

    def __hash__(self):
        return hash(("float", self.tol))

    def coerce(self, x) -> float:
        return float(x)

    def sqrt(self, d: int) -> float:
        return math.sqrt(d)

    def sign(self, x) -> int:
        if x > self.tol:
            return 1
        if x < -self.tol:
            return -1
        return 0

    def is_zero(self, x) -> bool:
        return abs(x) <= self.tol

    def eq(self, x, y) -> bool:
        return abs(x - y) <= self.tol

    def vec_key(self, v):
        # coarse key; callers confirm with eq() when it matters
        return tuple(round(x, 6) + 0.0 for x in v)

    def to_json(self):
        return {"float": True, "tol": self.tol}

    def fmt(self, x) -> str:
        return repr(float(x))

    def parse(self, text: str):
        try:
            return float(text)
        except ValueError:
            return float(Scalar.parse(text))


def vec_eq(field, u, v) -> bool:
    return len(u) == len(v) and all(field.eq(x, y) for x, y in zip(u, v))


class PointIndex:
    """Lookup table from vectors to ids that respects the field's notion of equality."""

    def __init__(self, field):
        self.field = field
        self._exact: dict = {}
        self._items: list = []

    def add(self, v, value):
        v = tuple(v)
        if self.field.exact:
            self._exact.setdefault(v, value)
        else:
            if self.get(v) is None:
                self._items.append((v, value))

    def get(self, v, default=None):
        v = tuple(v)
        if self.field.exact:
            return self._exact.get(v, default)
        for w, value in self._items:
            if vec_eq(self.field, v, w):
                return value
        return default

    def __len__(self):
        return len(self._exact) if self.field.exact else len(self._items)
