"""Serializers: JSON with exact scalar strings, OFF for 2- and 3-polytopes, DOT for posets."""

from __future__ import annotations

import json

import numpy as np

from .cambrian import Associahedron, CambrianLattice, format_cluster
from .coxeter import CoxeterSystem, WeakOrderLattice
from .permutahedron import Permutahedron, oriented_skeleton
from .polytope import Polytope
from .roots import RootSystem


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _word(cs: CoxeterSystem, w) -> str:
    return cs.format_word(w.word)


def _coords(field, v) -> list:
    return [field.fmt(x) for x in v]


# -- JSON -------------------------------------------------------------------

def root_system_json(rs: RootSystem) -> dict:
    return rs.to_json()


def weak_order_json(wl: WeakOrderLattice) -> dict:
    cs = wl.system
    return {
        "group": cs.name,
        "elements": [{"id": i, "word": _word(cs, w)} for i, w in enumerate(wl.elements)],
        "covers": [list(e) for e in wl.covers],
    }


def permutahedron_json(perm: Permutahedron) -> dict:
    cs = perm.system
    F = cs.field
    p = perm.polytope
    return {
        "group": cs.name,
        "field": F.to_json(),
        "basepoint": _coords(F, perm.basepoint),
        "vertices": [{"element": _word(cs, w), "coords": _coords(F, v.coords)}
                     for w, v in zip(perm.vertex_element, p.vertices)],
        "facets": [{"coset_min": _word(cs, w), "alpha": k} for w, k in perm.facet_cosets],
    }


def associahedron_json(asso: Associahedron) -> dict:
    cs = asso.system
    rs = cs.roots
    F = cs.field
    p = asso.polytope
    vertex_singleton = {v: u for u, v in asso.singleton_vertex.items()}
    vertices = []
    for i, v in enumerate(p.vertices):
        entry = {"coords": _coords(F, v.coords), "cluster": format_cluster(cs, asso.vertex_cluster[i])}
        if i in vertex_singleton:
            entry["singleton"] = cs.format_word(asso.singletons[vertex_singleton[i]])
        vertices.append(entry)
    facets = []
    for h, hs in enumerate(p.halfspaces):
        facets.append({
            "label": rs.fmt_root(asso.facet_label[h]),
            "normal": _coords(F, hs.normal),
            "offset": F.fmt(hs.offset),
            "singletons": [{"element": _word(cs, u), "alpha": k} for u, k in asso.provenance[h]],
        })
    return {
        "group": cs.name,
        "coxeter": str(asso.coxeter),
        "field": F.to_json(),
        "basepoint": _coords(F, asso.basepoint),
        "singletons": [cs.format_word(word) for word in asso.singletons.values()],
        "vertices": vertices,
        "facets": facets,
    }


def cambrian_json(lat: CambrianLattice, cs: CoxeterSystem) -> dict:
    return {
        "group": cs.name,
        "nodes": [{"id": i, "cluster": format_cluster(cs, cl), "sortable": _word(cs, w)}
                  for i, (cl, w) in enumerate(zip(lat.clusters, lat.sortables))],
        "covers": [list(e) for e in lat.edges],
    }


# -- OFF --------------------------------------------------------------------

def _frame_coordinates(p: Polytope) -> np.ndarray:
    """Vertex coordinates in an orthonormal frame of the polytope's affine hull."""
    frame = p.ctx.float_frame()
    X = np.array([[float(x) for x in v.coords] for v in p.vertices]) @ frame.T
    B = np.array([[float(x) for x in b] for b in p.basis]) @ frame.T
    o = np.array([float(x) for x in p.origin]) @ frame.T
    if B.shape[0] == B.shape[1] and p.ctx.basis == "ambient-orthonormal":
        return X
    Q, _ = np.linalg.qr(B.T)
    return (X - o) @ Q + o @ Q


def _cyclic(points: np.ndarray, idx: list, outward: np.ndarray) -> list:
    """``idx`` sorted by angle about the face centre, counter-clockwise seen along ``outward``."""
    c = points[idx].mean(axis=0)
    u = points[idx[0]] - c
    u /= np.linalg.norm(u)
    v = np.cross(outward, u)
    ang = [np.arctan2(np.dot(points[i] - c, v), np.dot(points[i] - c, u)) for i in idx]
    return [i for _, i in sorted(zip(ang, idx))]


def to_off(p: Polytope) -> str:
    """OFF text: 17 significant digits, one face per facet in halfspace order, counter-clockwise from outside."""
    if p.dim not in (2, 3):
        raise ValueError(f"OFF export needs a 2- or 3-dimensional polytope, got dimension {p.dim}")
    X = _frame_coordinates(p)
    if p.dim == 2:
        X = np.hstack([X, np.zeros((len(X), 1))])
        n = len(p.vertices)
        inc = {i: p.vertices[i].facets for i in range(n)}
        # walk the polygon boundary along shared facets
        order = [0]
        while len(order) < n:
            last = order[-1]
            nxt = next(j for j in range(n) if j not in order and len(inc[last] & inc[j]) == 1)
            order.append(nxt)
        e1, e2 = X[order[1]] - X[order[0]], X[order[2]] - X[order[1]]
        faces = [order if np.cross(e1, e2)[2] > 0 else order[::-1]]
    else:
        centre = X.mean(axis=0)
        faces = []
        for h in p.facets():
            idx = p.facet_vertices(h)
            pts = X[idx]
            _, _, vt = np.linalg.svd(pts - pts.mean(axis=0))
            nrm = vt[-1]
            if np.dot(nrm, pts.mean(axis=0) - centre) < 0:
                nrm = -nrm
            faces.append(_cyclic(X, idx, nrm))
    lines = ["OFF", f"{len(X)} {len(faces)} 0"]
    for row in X:
        lines.append(" ".join("%.17g" % (x + 0.0) for x in row))
    for f in faces:
        lines.append(" ".join(str(k) for k in [len(f)] + list(f)))
    return "\n".join(lines) + "\n"


def parse_off(text: str):
    """(vertices, faces) from OFF text; the inverse of :func:`to_off` up to float rendering."""
    toks = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if toks[0].strip() != "OFF":
        raise ValueError("not an OFF file")
    nv, nf, _ = (int(x) for x in toks[1].split())
    verts = [tuple(float(x) for x in toks[2 + i].split()) for i in range(nv)]
    faces = []
    for i in range(nf):
        parts = [int(x) for x in toks[2 + nv + i].split()]
        faces.append(parts[1:1 + parts[0]])
    return verts, faces


# -- DOT --------------------------------------------------------------------

def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _dot(name: str, labels: list, edges: list) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        text = "\\n".join(_dot_escape(part) for part in lab.split("\n"))
        lines.append(f'  n{i} [label="{text}"];')
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def weak_order_dot(wl: WeakOrderLattice) -> str:
    cs = wl.system
    return _dot("weak_order", [_word(cs, w) for w in wl.elements], wl.covers)


def skeleton_dot(perm: Permutahedron) -> str:
    cs = perm.system
    idx = cs.index
    edges = sorted((idx[u.perm], idx[v.perm]) for u, v in oriented_skeleton(perm))
    return _dot("permutahedron", [_word(cs, w) for w in cs.elements], edges)


def cambrian_dot(lat: CambrianLattice, cs: CoxeterSystem) -> str:
    labels = [f"{format_cluster(cs, cl)}\n{_word(cs, w)}" for cl, w in zip(lat.clusters, lat.sortables)]
    return _dot("cambrian", labels, lat.edges)
