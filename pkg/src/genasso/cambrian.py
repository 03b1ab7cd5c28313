"""Everything that depends on a Coxeter element c.

Coxeter elements, c-sorting words, c-sortable elements, c-singletons (through
the heap of the c-word of w_o), the generalized associahedron, facet labels by
almost positive roots, the cluster map and the Cambrian lattice, plus the
isometry, integer-coordinate and centroid checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .coxeter import CoxeterSystem, GroupElement, WeakOrderLattice
from .permutahedron import Permutahedron, build_permutahedron, validate_basepoint, wall_halfspace
from .polytope import Polytope, centroid, enumerate_vertices
from .roots import InvariantViolation, PreconditionError, default_basepoint, is_balanced


# -- Coxeter elements -------------------------------------------------------

@dataclass(frozen=True)
class CoxeterElement:
    element: GroupElement
    word: tuple
    orientation: frozenset  # (s, t) for each Coxeter-graph edge with s left of t

    def __str__(self):
        return self.element.system.format_word(self.word)

    def inverse(self) -> CoxeterElement:
        return make_coxeter_element(self.element.system, tuple(reversed(self.word)))


def make_coxeter_element(cs: CoxeterSystem, word) -> CoxeterElement:
    word = tuple(word)
    if sorted(word) != list(range(cs.rank)):
        raise ValueError("a Coxeter element uses every simple reflection exactly once")
    pos = {s: i for i, s in enumerate(word)}
    orient = frozenset((s, t) for s in word for t in word
                       if pos[s] < pos[t] and not cs.commute(s, t))
    return CoxeterElement(cs.from_word(word), word, orient)


def parse_coxeter(cs: CoxeterSystem, text: str) -> CoxeterElement:
    return make_coxeter_element(cs, cs.parse_word(text))


def coxeter_elements(cs: CoxeterSystem) -> list:
    """One representative word per distinct Coxeter element, in lexicographic word order."""
    out, seen = [], set()
    for word in itertools.permutations(range(cs.rank)):
        c = make_coxeter_element(cs, word)
        if c.element.perm not in seen:
            seen.add(c.element.perm)
            out.append(c)
    return out


# -- sorting words ----------------------------------------------------------

@dataclass(frozen=True)
class SortingWord:
    element: GroupElement
    letters: tuple
    blocks: tuple  # letters taken in each pass through c, in c order

    def supports(self) -> list:
        return [frozenset(b) for b in self.blocks]

    def format(self, unicode: bool = True) -> str:
        cs = self.element.system
        if not self.blocks:
            return "e"
        return ".".join(cs.format_word(b, unicode=unicode) for b in self.blocks)


def c_sorting_word(cs: CoxeterSystem, w: GroupElement, c: CoxeterElement) -> SortingWord:
    """Leftmost reduced subword of c c c ... spelling ``w``."""
    target = w.length
    u = cs.identity
    letters, blocks = [], []
    while u != w:
        block = []
        for s in c.word:
            us = u * cs.s(s)
            if us.length == u.length + 1 and us.length + (us.inverse() * w).length == target:
                u = us
                block.append(s)
        if not block:
            raise InvariantViolation("c-sorting made no progress")
        letters.extend(block)
        blocks.append(tuple(block))
    return SortingWord(w, tuple(letters), tuple(blocks))


def is_c_sortable(cs: CoxeterSystem, w: GroupElement, c: CoxeterElement) -> bool:
    sup = c_sorting_word(cs, w, c).supports()
    return all(b <= a for a, b in zip(sup, sup[1:]))


def c_sortables(cs: CoxeterSystem, c: CoxeterElement) -> list:
    return [w for w in cs.elements if is_c_sortable(cs, w, c)]


# -- heaps and singletons ---------------------------------------------------

@dataclass
class Heap:
    letters: tuple
    below: list  # below[j] = set of positions i < j with i ≺ j (transitively closed)

    def order_ideals(self) -> list:
        """All order ideals, as sorted position tuples, breadth first by size."""
        n = len(self.letters)
        level = {()}
        out = [()]
        for _ in range(n):
            nxt = set()
            for ideal in level:
                have = set(ideal)
                for j in range(n):
                    if j not in have and self.below[j] <= have:
                        nxt.add(tuple(sorted(have | {j})))
            out.extend(sorted(nxt))
            level = nxt
        return out


def heap_of(cs: CoxeterSystem, word) -> Heap:
    word = tuple(word)
    below = []
    for j, t in enumerate(word):
        b = set()
        for i in range(j):
            # equal letters never commute (m(s, s) = 1)
            if not cs.commute(word[i], t):
                b.add(i)
                b |= below[i]
        below.append(b)
    return Heap(word, below)


def singleton_words(cs: CoxeterSystem, c: CoxeterElement) -> dict:
    """c-singleton -> its c-word, from the order ideals of the heap of w_o(c)."""
    wo_word = c_sorting_word(cs, cs.longest, c).letters
    heap = heap_of(cs, wo_word)
    out = {}
    for ideal in heap.order_ideals():
        word = tuple(wo_word[i] for i in ideal)
        u = cs.from_word(word)
        if u.length != len(word):
            raise InvariantViolation("heap prefix is not reduced")
        out.setdefault(u, word)
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def c_singletons(cs: CoxeterSystem, c: CoxeterElement) -> list:
    return list(singleton_words(cs, c))


# -- last roots and clusters ------------------------------------------------

def last_root(cs: CoxeterSystem, word, k: int) -> int:
    """lr_α for α = α_k given a c-word: -α if s_k is absent, else u₁(α) for word = u₁ s_k u₂."""
    rs = cs.roots
    alpha = rs.simple[k]
    word = tuple(word)
    if k not in word:
        return rs.neg(alpha)
    last = max(i for i, s in enumerate(word) if s == k)
    u1 = cs.from_word(word[:last])
    root = u1.perm[alpha]
    if not rs.is_positive(root):
        raise InvariantViolation("last root is negative")
    return root


def cluster_map(cs: CoxeterSystem, w: GroupElement, c: CoxeterElement) -> frozenset:
    sw = c_sorting_word(cs, w, c)
    sup = sw.supports()
    if not all(b <= a for a, b in zip(sup, sup[1:])):
        raise ValueError(f"{w!r} is not c-sortable for c = {c}")
    return frozenset(last_root(cs, sw.letters, k) for k in range(cs.rank))


def format_cluster(cs: CoxeterSystem, cluster) -> str:
    rs = cs.roots
    order = {r: i for i, r in enumerate(rs.almost_positive)}
    return "{" + ", ".join(rs.fmt_root(r) for r in sorted(cluster, key=order.__getitem__)) + "}"


# -- the associahedron ------------------------------------------------------

_PERM_CACHE: dict = {}


def permutahedron_for(cs: CoxeterSystem, a) -> Permutahedron:
    key = (id(cs), tuple(cs.field.vec_key(a)))
    hit = _PERM_CACHE.get(key)
    if hit is None or hit[0] is not cs:
        hit = (cs, build_permutahedron(cs, a))
        _PERM_CACHE[key] = hit
    return hit[1]


@dataclass
class Associahedron:
    system: CoxeterSystem
    coxeter: CoxeterElement
    basepoint: tuple
    polytope: Polytope
    singletons: dict  # singleton -> c-word
    provenance: list  # halfspace index -> list of (singleton, simple index)
    facet_label: list  # halfspace index -> root index in Φ≥−1
    vertex_cluster: list  # vertex index -> frozenset of root indices
    singleton_vertex: dict = dc_field(default_factory=dict)  # singleton -> vertex index

    def label_to_facet(self) -> dict:
        return {r: h for h, r in enumerate(self.facet_label)}


def build_associahedron(cs: CoxeterSystem, c: CoxeterElement, a=None,
                        check: bool = True, screen: bool = True) -> Associahedron:
    """Intersect u(H_a(α)) over c-singletons u and simple α, then label facets by last roots."""
    a = validate_basepoint(cs, a)
    rs = cs.roots
    weights = rs.fundamental_weights()
    singles = singleton_words(cs, c)
    halfspaces, prov, keys = [], [], {}
    for u in singles:
        for k in range(rs.rank):
            hs = wall_halfspace(cs, u, k, a, weights)
            key = (k, rs.field.vec_key(hs.normal))
            if key not in keys:
                keys[key] = len(halfspaces)
                halfspaces.append(hs)
                prov.append([])
            prov[keys[key]].append((u, k))
    basis = [rs.simple_root(k) for k in range(rs.rank)]
    poly = enumerate_vertices(rs.ctx, halfspaces, a, basis, screen=screen)

    labels = []
    for pairs in prov:
        found = {last_root(cs, singles[u], k) for u, k in pairs}
        if len(found) != 1:
            raise InvariantViolation(f"facet has provenance-dependent labels {sorted(found)}")
        labels.append(found.pop())
    clusters = [frozenset(labels[h] for h in v.facets) for v in poly.vertices]

    pos = {rs.field.vec_key(v.coords): i for i, v in enumerate(poly.vertices)}
    sv = {}
    for u in singles:
        i = pos.get(rs.field.vec_key(cs.act(u, a)))
        if i is not None:
            sv[u] = i
    asso = Associahedron(cs, c, a, poly, singles, prov, labels, clusters, sv)
    if check:
        problems = associahedron_problems(asso)
        if problems:
            raise InvariantViolation("; ".join(problems))
    return asso


def associahedron_problems(asso: Associahedron) -> list:
    """Structural failures of the built polytope (empty list when all hold)."""
    cs = asso.system
    rs = cs.roots
    p = asso.polytope
    out = []
    if p.empty:
        return ["no vertices"]
    nf = rs.rank + rs.npos
    if len(p.halfspaces) != nf:
        out.append(f"{len(p.halfspaces)} admissible halfspaces, expected {nf}")
    facets = p.facets()
    if len(facets) != len(p.halfspaces):
        out.append(f"{len(p.halfspaces) - len(facets)} admissible halfspaces are not facets")
    if not p.is_simple():
        out.append("not simple")
    if sorted(asso.facet_label) != sorted(rs.almost_positive):
        out.append("facet labels are not a bijection onto the almost positive roots")
    if any(len(cl) != rs.rank for cl in asso.vertex_cluster):
        out.append("a vertex cluster has the wrong size")
    return out


def facet_labels(asso: Associahedron) -> dict:
    """Almost positive root index -> halfspace index; raises unless it is a bijection."""
    rs = asso.system.roots
    inv = {}
    for h, r in enumerate(asso.facet_label):
        if r in inv:
            raise InvariantViolation(f"label {rs.fmt_root(r)} used by two facets")
        inv[r] = h
    if set(inv) != set(rs.almost_positive):
        raise InvariantViolation("facet labels miss some almost positive root")
    return inv


def singleton_intersection(asso: Associahedron, perm: Permutahedron) -> tuple:
    """(vert(Asso) ∩ vert(Perm), {u(a) : u singleton}) as sets of coordinate keys."""
    F = asso.system.field
    common = asso.polytope.vertex_set() & perm.polytope.vertex_set()
    expected = {F.vec_key(asso.system.act(u, asso.basepoint)) for u in asso.singletons}
    return common, expected


def sublattice_report(wl: WeakOrderLattice, members) -> dict:
    """Closure of ``members`` under weak-order join/meet and distributivity of the induced lattice."""
    cs = wl.system
    ids = sorted(cs.index[u.perm] for u in members)
    s = set(ids)
    closed = True
    J, M = {}, {}
    for i in ids:
        for j in ids:
            J[i, j] = wl.join(i, j)
            M[i, j] = wl.meet(i, j)
            if J[i, j] not in s or M[i, j] not in s:
                closed = False
    distributive = closed
    if closed:
        for x in ids:
            for y in ids:
                for z in ids:
                    if M[x, J[y, z]] != J[M[x, y], M[x, z]]:
                        distributive = False
                        break
                if not distributive:
                    break
            if not distributive:
                break
    return {"closed": closed, "distributive": distributive, "size": len(ids)}


# -- Cambrian lattice -------------------------------------------------------

@dataclass
class CambrianLattice:
    clusters: list  # node -> cluster (frozenset of root indices)
    sortables: list  # node -> c-sortable element with that cluster
    vertex: list  # node -> associahedron vertex index
    edges: list  # (i, j): node i below node j, one per associahedron edge
    singleton_edges_agree: bool

    def sources(self) -> list:
        tgt = {j for _, j in self.edges}
        return [i for i in range(len(self.clusters)) if i not in tgt]

    def sinks(self) -> list:
        src = {i for i, _ in self.edges}
        return [i for i in range(len(self.clusters)) if i not in src]

    def is_acyclic(self) -> bool:
        import networkx as nx

        g = nx.DiGraph(self.edges)
        g.add_nodes_from(range(len(self.clusters)))
        return nx.is_directed_acyclic_graph(g)


def cambrian_lattice(asso: Associahedron, wl: WeakOrderLattice | None = None) -> CambrianLattice:
    """Orient each associahedron edge by comparing cl_c⁻¹ of its endpoint clusters in the weak order."""
    cs = asso.system
    c = asso.coxeter
    wl = wl or WeakOrderLattice(cs)
    sortable_of = {}
    for w in c_sortables(cs, c):
        cl = cluster_map(cs, w, c)
        if cl in sortable_of:
            raise InvariantViolation("cluster map is not injective on c-sortables")
        sortable_of[cl] = w
    vertex_clusters = asso.vertex_cluster
    if set(vertex_clusters) != set(sortable_of) or len(set(vertex_clusters)) != len(vertex_clusters):
        raise InvariantViolation("vertex clusters differ from the images of c-sortables")
    order = sorted(range(len(vertex_clusters)), key=lambda v: sortable_of[vertex_clusters[v]].sort_key())
    node_of_vertex = {v: n for n, v in enumerate(order)}
    clusters = [vertex_clusters[v] for v in order]
    sortables = [sortable_of[cl] for cl in clusters]
    idx = cs.index
    singleton_at = {v: u for u, v in asso.singleton_vertex.items()}
    edges, agree = [], True
    for vi, vj in asso.polytope.edges():
        i, j = node_of_vertex[vi], node_of_vertex[vj]
        a, b = idx[sortables[i].perm], idx[sortables[j].perm]
        if wl.leq(a, b):
            e = (i, j)
        elif wl.leq(b, a):
            e = (j, i)
        else:
            raise InvariantViolation("adjacent clusters have incomparable sortable elements")
        if vi in singleton_at and vj in singleton_at:
            u, v = singleton_at[vi], singleton_at[vj]
            lo = (i, j) if cs.leq(u, v) else (j, i)
            agree = agree and lo == e
        edges.append(e)
    return CambrianLattice(clusters, sortables, order, sorted(edges), agree)


# -- isometry classes -------------------------------------------------------

def apply_automorphism(cs: CoxeterSystem, mu, word) -> GroupElement:
    return cs.from_word(tuple(mu[s] for s in word))


def isometry_equivalent(cs: CoxeterSystem, c1: CoxeterElement, c2: CoxeterElement, a=None):
    """Whether some diagram automorphism μ has μ(c₂) = c₁ or μ(c₂) = c₁⁻¹; returns (bool, witness)."""
    a = default_basepoint(cs.roots) if a is None else a
    if not is_balanced(cs.roots, a):
        raise PreconditionError("isometry classification needs ⟨a,α⟩ equal for all simple roots")
    inv1 = c1.element.inverse()
    for mu in cs.automorphisms():
        img = apply_automorphism(cs, mu, c2.word)
        if img == c1.element:
            return True, {"mu": list(mu), "branch": "equal"}
        if img == inv1:
            return True, {"mu": list(mu), "branch": "inverse"}
    return False, None


def _orthonormal_points(cs: CoxeterSystem, points):
    frame = cs.roots.ctx.float_frame()
    return np.array([[float(x) for x in p] for p in points]) @ frame.T


def isometry_crosscheck(asso1: Associahedron, asso2: Associahedron, witness) -> float:
    """Fit an orthogonal map on matched singleton vertices; return the worst vertex mismatch."""
    from scipy.linalg import orthogonal_procrustes

    cs = asso1.system
    mu = witness["mu"]
    a = asso1.basepoint
    X, Y = [], []
    for u, word in asso2.singletons.items():
        img = apply_automorphism(cs, mu, word)
        if witness["branch"] == "inverse":
            # x -> -x sends u(a) to u w_o(a) when a is balanced
            img = img * cs.longest
        if img not in asso1.singletons:
            return float("inf")
        X.append(cs.act(u, a))
        Y.append(cs.act(img, a))
    Xf, Yf = _orthonormal_points(cs, X), _orthonormal_points(cs, Y)
    R, _ = orthogonal_procrustes(Xf, Yf)
    V2 = _orthonormal_points(cs, [v.coords for v in asso2.polytope.vertices]) @ R
    V1 = _orthonormal_points(cs, [v.coords for v in asso1.polytope.vertices])
    if len(V1) != len(V2):
        return float("inf")
    dist = np.linalg.norm(V2[:, None, :] - V1[None, :, :], axis=2)
    worst = float(dist.min(axis=1).max())
    if len(set(dist.argmin(axis=1))) != len(V1):
        return float("inf")
    return max(worst, float(np.abs(Xf @ R - Yf).max()))


# -- integer coordinates and centroids ---------------------------------------

def integral_basepoint(cs: CoxeterSystem):
    """Smallest positive integer multiple of the default basepoint with integer Δ-coordinates."""
    rs = cs.roots
    a = default_basepoint(rs)
    co = rs.delta_coordinates(a)
    k = 1
    while not all((k * x).is_integer() for x in co):
        k += 1
    return tuple(k * x for x in a)


def check_integer_coordinates(cs: CoxeterSystem, c: CoxeterElement, a=None) -> dict:
    rs = cs.roots
    if not rs.is_crystallographic():
        raise PreconditionError(f"{cs.name} is not crystallographic")
    a = integral_basepoint(cs) if a is None else tuple(rs.field.coerce(x) for x in a)
    co = rs.delta_coordinates(a)
    if rs.from_delta(co) != a or not all(x.is_integer() for x in co):
        raise PreconditionError("basepoint must lie in span(Δ) with integer Δ-coordinates")
    perm = permutahedron_for(cs, a)
    asso = build_associahedron(cs, c, a)
    bad = []
    for name, poly in (("permutahedron", perm.polytope), ("associahedron", asso.polytope)):
        for v in poly.vertices:
            y = rs.delta_coordinates(v.coords)
            if not all(x.is_integer() for x in y):
                bad.append({"polytope": name, "delta_coords": [str(x) for x in y]})
    return {
        "basepoint_delta": [str(x) for x in co],
        "perm_vertices": len(perm.polytope.vertices),
        "asso_vertices": len(asso.polytope.vertices),
        "violations": bad,
        "integral": not bad,
    }


def compare_centroids(cs: CoxeterSystem, c: CoxeterElement, a=None) -> dict:
    """Centroids of the vertex sets of Perm and Asso; an empirical check, never an invariant."""
    rs = cs.roots
    a = default_basepoint(rs) if a is None else tuple(rs.field.coerce(x) for x in a)
    if not is_balanced(rs, a):
        return {"status": "not-applicable", "reason": "basepoint is not balanced"}
    perm = permutahedron_for(cs, a)
    asso = build_associahedron(cs, c, a)
    F = rs.field
    cp = centroid(F, [v.coords for v in perm.polytope.vertices])
    ca = centroid(F, [v.coords for v in asso.polytope.vertices])
    dev = max(abs(float(x) - float(y)) for x, y in zip(cp, ca))
    equal = all(x == y for x, y in zip(cp, ca)) if F.exact else dev <= 1e-9
    return {
        "status": "equal" if equal else "different",
        "exact": F.exact,
        "perm_centroid": [F.fmt(x) for x in cp],
        "asso_centroid": [F.fmt(x) for x in ca],
        "max_deviation": dev,
    }
