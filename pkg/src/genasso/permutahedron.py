"""The W-permutahedron as an orbit hull and as an intersection of halfspaces."""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem, GroupElement, coset_min
from .polytope import HalfSpace, Polytope, enumerate_vertices
from .roots import (InvariantViolation, PreconditionError, check_generic,
                    default_basepoint, is_dominant)
from .scalar import PointIndex


def validate_basepoint(cs: CoxeterSystem, a):
    rs = cs.roots
    if a is None:
        return default_basepoint(rs)
    a = tuple(rs.field.coerce(x) for x in a)
    if len(a) != rs.ctx.dim:
        raise PreconditionError(f"basepoint has {len(a)} coordinates, expected {rs.ctx.dim}")
    ok, witness = check_generic(rs, a)
    if not ok:
        raise PreconditionError(f"basepoint is fixed by the reflection in {rs.fmt_root(witness)}")
    if not is_dominant(rs, a):
        raise PreconditionError("basepoint is not in the fundamental chamber (⟨a,α⟩ <= 0 for some simple α)")
    return a


def wall_halfspace(cs: CoxeterSystem, w: GroupElement, k: int, a, weights) -> HalfSpace:
    """w(H_a(α_k)) as ⟨w(ω_k), x⟩ <= ⟨ω_k, a⟩, labelled (w, k)."""
    return HalfSpace(cs.act(w, weights[k]), cs.roots.ctx.inner(weights[k], a), (w, k))


@dataclass
class Permutahedron:
    system: CoxeterSystem
    basepoint: tuple
    polytope: Polytope
    vertex_element: list  # vertex index -> group element
    facet_cosets: list  # halfspace index -> (minimal coset representative, simple index k)

    def vertex_of(self, w: GroupElement) -> int:
        return self._vertex_index[w.perm]

    def __post_init__(self):
        self._vertex_index = {w.perm: i for i, w in enumerate(self.vertex_element)}


def orbit(cs: CoxeterSystem, a) -> list:
    return [cs.act(w, a) for w in cs.elements]


def build_permutahedron(cs: CoxeterSystem, a=None, screen: bool = True) -> Permutahedron:
    """Intersect the halfspaces w(H_a(α)) and match the vertices against the orbit of ``a``."""
    a = validate_basepoint(cs, a)
    rs = cs.roots
    weights = rs.fundamental_weights()
    halfspaces, cosets = [], []
    for k in range(rs.rank):
        rest = [j for j in range(rs.rank) if j != k]
        reps = sorted({coset_min(cs, w, rest).perm for w in cs.elements},
                      key=lambda p: cs.element(p).sort_key())
        for p in reps:
            w = cs.element(p)
            halfspaces.append(wall_halfspace(cs, w, k, a, weights))
            cosets.append((w, k))
    basis = [rs.simple_root(k) for k in range(rs.rank)]
    poly = enumerate_vertices(rs.ctx, halfspaces, a, basis, screen=screen)

    idx = PointIndex(rs.field)
    for w in cs.elements:
        idx.add(cs.act(w, a), w)
    if len(poly.vertices) != cs.order:
        raise InvariantViolation(f"{len(poly.vertices)} vertices found, |W| = {cs.order}")
    vertex_element = []
    for v in poly.vertices:
        w = idx.get(v.coords)
        if w is None:
            raise InvariantViolation(f"vertex {v.coords} is not in the orbit of a")
        vertex_element.append(w)
    if len({w.perm for w in vertex_element}) != cs.order:
        raise InvariantViolation("orbit points are not distinct vertices")
    return Permutahedron(cs, a, poly, vertex_element, cosets)


def face_of_coset(perm: Permutahedron, w: GroupElement, I) -> frozenset:
    """Vertex indices of the face w(F_I), i.e. the points g(a) for g in wW_I."""
    cs = perm.system
    members = {w}
    stack = [w]
    gens = [cs.s(k) for k in I]
    while stack:
        x = stack.pop()
        for g in gens:
            y = x * g
            if y not in members:
                members.add(y)
                stack.append(y)
    return frozenset(perm.vertex_of(g) for g in members)


def face_from_facets(perm: Permutahedron, w: GroupElement, I) -> frozenset:
    """The same face computed geometrically: vertices on every facet through w(a) of type α ∉ I."""
    p = perm.polytope
    v = p.vertices[perm.vertex_of(w)]
    chosen = [h for h in v.facets if perm.facet_cosets[h][1] not in set(I)]
    return frozenset(i for i, u in enumerate(p.vertices) if set(chosen) <= u.facets)


def oriented_skeleton(perm: Permutahedron) -> list:
    """Polytope edges oriented from the shorter to the longer element, as element pairs."""
    out = []
    for i, j in perm.polytope.edges():
        u, v = perm.vertex_element[i], perm.vertex_element[j]
        out.append((u, v) if u.length < v.length else (v, u))
    return sorted(out, key=lambda e: (e[0].sort_key(), e[1].sort_key()))
