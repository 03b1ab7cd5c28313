"""Group descriptors, Euclidean contexts and root systems of the supported types.

Supported: ``A<n>`` (n >= 1), ``B<n>`` (n >= 2), ``I2:<m>`` (m >= 2), ``H3`` and
``x``-joined products of these.  Types A and B live in ambient R^(n+1) / R^n with
the standard inner product; I2(m) and H3 live in R^2 / R^3.  I2(5) has no
orthonormal coordinates in Q(√5), so it is written in the simple-root basis with
its Gram matrix as bilinear form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg
from .scalar import ExactField, FloatField, PointIndex, Scalar

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class GroupSpecError(ValueError):
    """Malformed or unsupported group descriptor."""


class UnsupportedExactField(ValueError):
    """Exact arithmetic was requested for a group that needs irrationals beyond Q(√d)."""


class PreconditionError(ValueError):
    """An operation's mathematical precondition does not hold (e.g. non-generic point)."""


class InvariantViolation(RuntimeError):
    """A structural invariant that the theory guarantees failed to hold."""


@dataclass(frozen=True)
class GroupType:
    family: str  # "A", "B", "I2", "H3"
    n: int  # rank for A/B, m for I2, 3 for H3

    def __str__(self):
        if self.family == "I2":
            return f"I2:{self.n}"
        if self.family == "H3":
            return "H3"
        return f"{self.family}{self.n}"

    @property
    def rank(self) -> int:
        return 2 if self.family == "I2" else self.n

    def exact_radicand(self):
        """``None`` for Q, an int d for Q(√d), or ``"float"`` when no exact field is available."""
        if self.family in ("A", "B"):
            return None
        if self.family == "H3":
            return 5
        return {2: None, 3: 3, 4: None, 5: 5, 6: 3}.get(self.n, "float")


def parse_group(text: str) -> tuple[GroupType, ...]:
    """Parse ``"A3"``, ``"B3"``, ``"I2:4"``, ``"H3"`` or products like ``"I2:4xI2:2"``."""
    factors = []
    for part in text.strip().split("x"):
        m = re.fullmatch(r"([AB])(\d+)|I2:(\d+)|H3", part.strip())
        if m is None:
            raise GroupSpecError(f"invalid group descriptor {text!r}")
        if m.group(1):
            fam, n = m.group(1), int(m.group(2))
            if (fam == "A" and n < 1) or (fam == "B" and n < 2):
                raise GroupSpecError(f"{part}: rank too small")
            factors.append(GroupType(fam, n))
        elif m.group(3):
            mm = int(m.group(3))
            if mm < 2:
                raise GroupSpecError(f"{part}: I2(m) needs m >= 2")
            factors.append(GroupType("I2", mm))
        else:
            factors.append(GroupType("H3", 3))
    return tuple(factors)


def group_name(types) -> str:
    return "x".join(str(t) for t in types)


@dataclass(frozen=True)
class VectorSpaceContext:
    dim: int
    gram: tuple  # symmetric positive definite matrix of field elements
    basis: str  # "ambient-orthonormal" or "simple-root-basis"
    field: object

    def inner(self, u, v):
        if self.basis == "ambient-orthonormal":
            return sum((x * y for x, y in zip(u, v)), self.field.coerce(0))
        G = self.gram
        total = self.field.coerce(0)
        for i, x in enumerate(u):
            if x:
                row = G[i]
                for j, y in enumerate(v):
                    if y and row[j]:
                        total = total + x * row[j] * y
        return total

    def zero(self):
        z = self.field.coerce(0)
        return (z,) * self.dim

    def float_frame(self):
        """Matrix L^T with G = L L^T, so ``L^T x`` are orthonormal float coordinates."""
        import numpy as np

        G = np.array([[float(x) for x in row] for row in self.gram])
        return np.linalg.cholesky(G).T


def vadd(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vsub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vscale(c, v):
    return tuple(c * x for x in v)


@dataclass
class RootSystem:
    """Roots are stored positives first: root ``i`` and ``i + npos`` are negatives of each other."""

    types: tuple
    ctx: VectorSpaceContext
    roots: list  # tuples of field elements in ctx coordinates
    simple: list  # indices of the simple roots, in generator order
    npos: int
    coeffs: list  # simple-root coordinates of every root
    names: list  # ascii generator names
    unames: list  # display generator names
    index: PointIndex = dc_field(repr=False)

    @property
    def field(self):
        return self.ctx.field

    @property
    def exact(self) -> bool:
        return self.field.exact

    @property
    def rank(self) -> int:
        return len(self.simple)

    @property
    def name(self) -> str:
        return group_name(self.types)

    @property
    def positive(self) -> list:
        return list(range(self.npos))

    def neg(self, i: int) -> int:
        return i + self.npos if i < self.npos else i - self.npos

    def is_positive(self, i: int) -> bool:
        return i < self.npos

    def simple_root(self, k: int):
        return self.roots[self.simple[k]]

    @property
    def almost_positive(self) -> list:
        """Root indices of -Δ followed by Φ⁺."""
        return [self.neg(i) for i in self.simple] + self.positive

    def root_index(self, v) -> int:
        i = self.index.get(v)
        if i is None:
            raise InvariantViolation(f"{v} is not a root")
        return i

    def gram_simple(self):
        return [[self.ctx.inner(self.simple_root(i), self.simple_root(j)) for j in range(self.rank)]
                for i in range(self.rank)]

    def delta_coordinates(self, x):
        """Coordinates in the simple-root basis of the orthogonal projection of ``x`` to span(Δ)."""
        rhs = [self.ctx.inner(x, self.simple_root(i)) for i in range(self.rank)]
        return tuple(linalg.solve(self.field, self.gram_simple(), rhs))

    def from_delta(self, coords):
        v = self.ctx.zero()
        for c, k in zip(coords, range(self.rank)):
            v = vadd(v, vscale(self.field.coerce(c), self.simple_root(k)))
        return v

    def fundamental_weights(self):
        """Vectors ω_k in span(Δ) with ⟨ω_k, α_j⟩ = δ_kj."""
        Ginv = linalg.inverse(self.field, self.gram_simple())
        return [self.from_delta(Ginv[k]) for k in range(self.rank)]

    def fmt_root(self, i: int) -> str:
        """Render a root as a combination of simple roots, e.g. ``a1+2a2`` or ``-a3``."""
        parts = []
        for k, c in enumerate(self.coeffs[i]):
            if self.field.is_zero(c):
                continue
            if self.exact:
                neg = c.sign() < 0
                mag = -c if neg else c
                if mag == 1:
                    coef = ""
                elif mag.b == 0:
                    coef = str(mag)
                else:
                    coef = f"({mag})"
            else:
                neg = c < 0
                mag = abs(c)
                coef = "" if abs(mag - 1) < 1e-9 else f"{mag:.6g}"
            parts.append(("-" if neg else "+") + coef + f"a{k + 1}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def is_crystallographic(self) -> bool:
        if not self.exact:
            return False
        for b in self.roots:
            for a in self.roots:
                lam = 2 * self.ctx.inner(b, a) / self.ctx.inner(a, a)
                if not lam.is_integer():
                    return False
        return True

    def to_json(self):
        fmt = self.field.fmt
        return {
            "type": self.name,
            "field": self.field.to_json(),
            "basis": self.ctx.basis,
            "simple_roots": [[fmt(x) for x in self.simple_root(k)] for k in range(self.rank)],
            "positive_roots": [[fmt(x) for x in self.roots[i]] for i in self.positive],
        }


def reflect(ctx: VectorSpaceContext, alpha, v):
    """s_α(v) = v - 2 ⟨v, α⟩ / ⟨α, α⟩ α."""
    if len(alpha) != len(v) or len(v) != ctx.dim:
        raise ValueError("dimension mismatch")
    k = 2 * ctx.inner(v, alpha) / ctx.inner(alpha, alpha)
    return tuple(x - k * y for x, y in zip(v, alpha))


def choose_field(types, mode: str = "auto"):
    """Pick the arithmetic for a product of types; ``mode`` is auto, exact or float."""
    if mode not in ("auto", "exact", "float"):
        raise ValueError(f"unknown arithmetic mode {mode!r}")
    if mode == "float":
        return FloatField()
    ds = {t.exact_radicand() for t in types} - {None}
    if "float" in ds or len(ds) > 1:
        if mode == "exact":
            raise UnsupportedExactField(
                f"{group_name(types)} has no exact realization over Q or a single Q(√d)")
        return FloatField()
    return ExactField(ds.pop() if ds else None)


def _factor_data(t: GroupType, F):
    """(ambient dim, gram or None for orthonormal, simple roots, ascii names, display names)."""
    c = F.coerce
    if t.family == "A":
        n = t.n
        simple = []
        for i in range(n):
            v = [c(0)] * (n + 1)
            v[i], v[i + 1] = c(-1), c(1)
            simple.append(tuple(v))
        names = [f"t{i + 1}" for i in range(n)]
        return n + 1, None, simple, names, [f"τ{i + 1}".translate(_SUB) for i in range(n)]
    if t.family == "B":
        n = t.n
        simple = [tuple([c(1)] + [c(0)] * (n - 1))]
        for i in range(n - 1):
            v = [c(0)] * n
            v[i], v[i + 1] = c(-1), c(1)
            simple.append(tuple(v))
        names = ["s0"] + [f"t{i + 1}" for i in range(n - 1)]
        return n, None, simple, names, ["s₀"] + [f"τ{i + 1}".translate(_SUB) for i in range(n - 1)]
    if t.family == "H3":
        r5 = F.sqrt(5)
        half = Fraction(1, 2) if F.exact else 0.5
        simple = [
            (c(2), c(0), c(0)),
            (c(-half) - half * r5, c(-half) + half * r5, c(-1)),
            (c(0), c(0), c(2)),
        ]
        return 3, None, simple, ["s1", "s2", "s3"], ["s₁", "s₂", "s₃"]
    m = t.n
    st = ["s", "t"]
    if not F.exact:
        simple = [(1.0, 0.0), (-math.cos(math.pi / m), math.sin(math.pi / m))]
        return 2, None, simple, st, st
    if m == 2:
        return 2, None, [(c(1), c(0)), (c(0), c(1))], st, st
    if m == 3:
        r3 = F.sqrt(3)
        return 2, None, [(r3, c(1)), (-r3, c(1))], st, st
    if m == 4:
        return 2, None, [(c(1), c(0)), (c(-1), c(1))], st, st
    if m == 6:
        r3 = F.sqrt(3)
        return 2, None, [(c(1), c(0)), (c(Fraction(-3, 2)), Fraction(1, 2) * r3)], st, st
    if m == 5:
        cos36 = c(Fraction(1, 4)) + Fraction(1, 4) * F.sqrt(5)
        gram = ((c(1), -cos36), (-cos36, c(1)))
        return 2, gram, [(c(1), c(0)), (c(0), c(1))], st, st
    raise UnsupportedExactField(f"I2:{m} has no exact realization here")


def build_root_system(types, mode: str = "auto") -> RootSystem:
    if isinstance(types, str):
        types = parse_group(types)
    types = tuple(types)
    F = choose_field(types, mode)
    zero, one = F.coerce(0), F.coerce(1)

    blocks = [_factor_data(t, F) for t in types]
    dim = sum(b[0] for b in blocks)
    gram = [[zero] * dim for _ in range(dim)]
    simple_vecs, names, unames = [], [], []
    off = 0
    for k, (bd, bg, bsimple, bnames, bunames) in enumerate(blocks):
        for i in range(bd):
            for j in range(bd):
                gram[off + i][off + j] = bg[i][j] if bg is not None else (one if i == j else zero)
        for v in bsimple:
            simple_vecs.append(tuple([zero] * off + list(v) + [zero] * (dim - off - bd)))
        names.extend(bnames)
        unames.extend(bunames)
        off += bd
    if len(types) > 1:
        names = [f"g{i + 1}" for i in range(len(simple_vecs))]
        unames = [f"g{i + 1}".translate(_SUB) for i in range(len(simple_vecs))]
    orthonormal = all(gram[i][j] == (one if i == j else zero) for i in range(dim) for j in range(dim))
    ctx = VectorSpaceContext(dim, tuple(tuple(r) for r in gram),
                             "ambient-orthonormal" if orthonormal else "simple-root-basis", F)
    if not linalg.leading_minors_positive(F, gram):
        raise InvariantViolation("bilinear form is not positive definite")

    # orbit of ±Δ under the simple reflections
    found = PointIndex(F)
    order = []
    frontier = list(simple_vecs) + [tuple(-x for x in v) for v in simple_vecs]
    for v in frontier:
        if found.get(v) is None:
            found.add(v, len(order))
            order.append(v)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple_vecs:
                w = reflect(ctx, a, v)
                if found.get(w) is None:
                    found.add(w, len(order))
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
        if len(order) > 10_000:
            raise InvariantViolation("root system does not close up")

    G = [[ctx.inner(a, b) for b in simple_vecs] for a in simple_vecs]
    pos, coeff_of = [], {}
    for idx, v in enumerate(order):
        co = tuple(linalg.solve(F, G, [ctx.inner(v, a) for a in simple_vecs]))
        coeff_of[idx] = co
        signs = {F.sign(x) for x in co} - {0}
        if len(signs) != 1:
            raise InvariantViolation(f"root {v} is neither positive nor negative")
        if signs == {1}:
            pos.append(idx)

    def height_key(idx):
        co = coeff_of[idx]
        return (float(sum(co, zero)), tuple(-float(x) for x in co))

    simple_idx_in_order = list(range(len(simple_vecs)))
    rest = sorted((i for i in pos if i not in simple_idx_in_order), key=height_key)
    pos_sorted = simple_idx_in_order + rest
    roots = [order[i] for i in pos_sorted] + [tuple(-x for x in order[i]) for i in pos_sorted]
    coeffs = [coeff_of[i] for i in pos_sorted] + [tuple(-x for x in coeff_of[i]) for i in pos_sorted]
    if 2 * len(pos_sorted) != len(order):
        raise InvariantViolation("positive roots are not half of the roots")
    index = PointIndex(F)
    for i, v in enumerate(roots):
        index.add(v, i)
    return RootSystem(types, ctx, roots, list(range(len(simple_vecs))), len(pos_sorted),
                      coeffs, names, unames, index)


def default_basepoint(rs: RootSystem):
    """The point a in span(Δ) with ⟨a, α⟩ = 1 for every simple root α."""
    try:
        return rs.from_delta(linalg.solve(rs.field, rs.gram_simple(), [rs.field.coerce(1)] * rs.rank))
    except linalg.SingularMatrix as exc:  # pragma: no cover - impossible for a valid system
        raise InvariantViolation("singular Gram matrix of simple roots") from exc


def check_generic(rs: RootSystem, a):
    """Return ``(True, None)`` if no reflection fixes ``a``, else ``(False, index of a root β with ⟨a,β⟩=0)``."""
    for i in rs.positive:
        if rs.field.is_zero(rs.ctx.inner(a, rs.roots[i])):
            return False, i
    return True, None


def is_dominant(rs: RootSystem, a) -> bool:
    return all(rs.field.sign(rs.ctx.inner(a, rs.simple_root(k))) > 0 for k in range(rs.rank))


def is_balanced(rs: RootSystem, a) -> bool:
    vals = [rs.ctx.inner(a, rs.simple_root(k)) for k in range(rs.rank)]
    return all(rs.field.eq(v, vals[0]) for v in vals)
