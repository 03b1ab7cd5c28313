"""H-polytopes: vertex enumeration, incidence, faces, normal cones, centroids.

Polytopes live in an affine subspace ``origin + span(basis)`` of the ambient
space; all solving happens in the ``len(basis)`` hull coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .roots import VectorSpaceContext, vadd, vscale


@dataclass(frozen=True)
class HalfSpace:
    """Points x with ⟨normal, x⟩ <= offset."""

    normal: tuple
    offset: object
    label: object = None


@dataclass(frozen=True)
class Vertex:
    coords: tuple
    facets: frozenset  # indices of halfspaces whose boundary contains the vertex


@dataclass
class Polytope:
    ctx: VectorSpaceContext
    halfspaces: list
    vertices: list
    dim: int
    origin: tuple
    basis: list
    hull_coords: list = dc_field(default_factory=list, repr=False)

    @property
    def field(self):
        return self.ctx.field

    @property
    def exact(self) -> bool:
        return self.field.exact

    @property
    def empty(self) -> bool:
        return not self.vertices

    def vertex_set(self) -> set:
        return {self.field.vec_key(v.coords) for v in self.vertices}

    def is_simple(self) -> bool:
        return all(len(v.facets) == self.dim for v in self.vertices)

    def facet_vertices(self, h: int) -> list:
        return [i for i, v in enumerate(self.vertices) if h in v.facets]

    def facets(self) -> list:
        """Indices of the halfspaces whose boundary meets the polytope in a (dim-1)-face."""
        out = []
        for h in range(len(self.halfspaces)):
            pts = [self.hull_coords[i] for i in self.facet_vertices(h)]
            if len(pts) >= self.dim and _affine_rank(self.field, pts) == self.dim - 1:
                out.append(h)
        return out

    def edges(self) -> list:
        """Vertex pairs (i, j), i < j, spanning a 1-dimensional face."""
        out = []
        n = len(self.vertices)
        if self.is_simple():
            for i in range(n):
                fi = self.vertices[i].facets
                for j in range(i + 1, n):
                    if len(fi & self.vertices[j].facets) == self.dim - 1:
                        out.append((i, j))
            return out
        for i in range(n):
            fi = self.vertices[i].facets
            for j in range(i + 1, n):
                common = fi & self.vertices[j].facets
                if len(common) < self.dim - 1:
                    continue
                on_face = [k for k in range(n) if common <= self.vertices[k].facets]
                if len(on_face) == 2 and _affine_rank(self.field, [self.hull_coords[k] for k in on_face]) == 1:
                    out.append((i, j))
        return out

    def float_vertices(self):
        return np.array([[float(x) for x in v.coords] for v in self.vertices])


def _affine_rank(field, pts) -> int:
    if not pts:
        return -1
    base = pts[0]
    rows = [[x - y for x, y in zip(p, base)] for p in pts[1:]]
    return _rank(field, rows)


def _rank(field, rows) -> int:
    M = [list(r) for r in rows]
    if not M:
        return 0
    ncol = len(M[0])
    rank = 0
    for col in range(ncol):
        if field.exact:
            piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        else:
            cand = [r for r in range(rank, len(M)) if not field.is_zero(M[r][col])]
            piv = max(cand, key=lambda r: abs(M[r][col])) if cand else None
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][col]
        for r in range(len(M)):
            if r != rank and not field.is_zero(M[r][col]):
                f = M[r][col] * inv
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def _reduce(ctx, halfspaces, origin, basis):
    rows, rhs = [], []
    for h in halfspaces:
        rows.append([ctx.inner(h.normal, b) for b in basis])
        rhs.append(h.offset - ctx.inner(h.normal, origin))
    return rows, rhs


def _screen(rows, rhs, dim, tol=1e-7):
    """Float pass over every dim-subset: subsets whose solution is feasible to ``tol``."""
    R = np.array([[float(x) for x in r] for r in rows])
    r = np.array([float(x) for x in rhs])
    combos = np.array(list(itertools.combinations(range(len(rows)), dim)), dtype=np.intp)
    if combos.size == 0:
        return []
    A = R[combos]
    b = r[combos]
    scale = np.prod(np.linalg.norm(A, axis=2), axis=1)
    dets = np.linalg.det(A)
    ok = np.abs(dets) > 1e-10 * np.maximum(scale, 1e-300)
    if not ok.any():
        return []
    Y = np.linalg.solve(A[ok], b[ok][..., None])[..., 0]
    slack = Y @ R.T - r[None, :]
    feasible = (slack <= tol * (1 + np.abs(r))[None, :]).all(axis=1)
    return [(tuple(int(i) for i in c), y) for c, y in zip(combos[ok][feasible], Y[feasible])]


def enumerate_vertices(ctx: VectorSpaceContext, halfspaces, origin, basis, screen: bool = True) -> Polytope:
    """Vertices of the intersection of ``halfspaces`` within ``origin + span(basis)``.

    Every ``dim``-subset of halfspaces whose boundaries meet in one point is
    solved; the point is kept when it satisfies every other constraint.  With
    ``screen=True`` an exact field first runs a vectorised float pass over all
    subsets and then solves and checks only the surviving subsets exactly, so
    the result is still exact.  ``screen=False`` does every subset exactly.
    """
    F = ctx.field
    dim = len(basis)
    rows, rhs = _reduce(ctx, halfspaces, origin, basis)
    nh = len(halfspaces)

    def feasible(y):
        return all(F.sign(sum((a * x for a, x in zip(row, y)), F.coerce(0)) - b) <= 0
                   for row, b in zip(rows, rhs))

    found = []
    if F.exact:
        seen = set()
        if screen:
            subsets = [c for c, _ in _screen(rows, rhs, dim)]
        else:
            subsets = itertools.combinations(range(nh), dim)
        for sub in subsets:
            try:
                y = tuple(linalg.solve(F, [rows[i] for i in sub], [rhs[i] for i in sub]))
            except linalg.SingularMatrix:
                continue
            if y in seen:
                continue
            if feasible(y):
                seen.add(y)
                found.append(y)
    else:
        for sub, yf in _screen(rows, rhs, dim, tol=F.tol * 10):
            y = tuple(float(t) for t in yf)
            if not any(all(abs(p - q) <= F.tol * 100 for p, q in zip(y, z)) for z in found):
                found.append(y)

    vertices = []
    for y in found:
        x = tuple(origin)
        for c, b in zip(y, basis):
            x = vadd(x, vscale(c, b))
        inc = frozenset(
            h for h in range(nh)
            if F.is_zero(sum((a * t for a, t in zip(rows[h], y)), F.coerce(0)) - rhs[h])
        )
        vertices.append((x, inc, y))
    if F.exact:
        vertices.sort(key=lambda t: t[0])
    else:
        vertices.sort(key=lambda t: tuple(round(c, 7) for c in t[0]))
    return Polytope(ctx, list(halfspaces), [Vertex(x, inc) for x, inc, _ in vertices], dim,
                    tuple(origin), list(basis), [y for _, _, y in vertices])


def f_vector(p: Polytope) -> list:
    """(f_0, ..., f_{dim-1}) of a simple polytope from vertex-facet incidence."""
    if not p.is_simple():
        raise ValueError("f_vector needs a simple polytope")
    fv = [len(p.vertices)]
    for k in range(1, p.dim):
        faces = set()
        for v in p.vertices:
            for sub in itertools.combinations(sorted(v.facets), p.dim - k):
                s = frozenset(sub)
                faces.add(frozenset(i for i, w in enumerate(p.vertices) if s <= w.facets))
        fv.append(len(faces))
    return fv


def contains_point(p: Polytope, x) -> bool:
    F = p.field
    return all(F.sign(p.ctx.inner(h.normal, x) - h.offset) <= 0 for h in p.halfspaces)


@dataclass
class NormalFan:
    cones: list  # per vertex: tuple of generating outward normals


def normal_fan(p: Polytope) -> NormalFan:
    if not p.is_simple():
        raise ValueError("normal_fan needs a simple polytope")
    return NormalFan([tuple(p.halfspaces[h].normal for h in sorted(v.facets)) for v in p.vertices])


def cone_contains(ctx: VectorSpaceContext, gens, v) -> bool:
    """Whether ``v`` lies in the simplicial cone spanned by linearly independent ``gens``."""
    F = ctx.field
    G = [[ctx.inner(g, h) for h in gens] for g in gens]
    coeffs = linalg.solve(F, G, [ctx.inner(g, v) for g in gens])
    if any(F.sign(c) < 0 for c in coeffs):
        return False
    back = tuple(sum((c * g[i] for c, g in zip(coeffs, gens)), F.coerce(0)) for i in range(ctx.dim))
    return all(F.eq(a, b) for a, b in zip(back, v))


def centroid(field, points):
    if not points:
        raise ValueError("centroid of no points")
    n = len(points)
    total = tuple(sum((p[i] for p in points), field.coerce(0)) for i in range(len(points[0])))
    inv = field.coerce(1) / field.coerce(n)
    return tuple(t * inv for t in total)
