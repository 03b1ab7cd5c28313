from __future__ import annotations

import json

import numpy as np
import pytest

from genasso import export
from genasso.cambrian import cambrian_lattice, parse_coxeter

from conftest import context, system


def _asso(name, word):
    ctx = context(name)
    return ctx.asso(parse_coxeter(ctx.cs, word))


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_off_permutahedron(name):
    p = context(name).perm.polytope
    verts, faces = export.parse_off(export.to_off(p))
    assert len(verts) == len(p.vertices)
    assert len(faces) == len(p.facets())
    edges = {frozenset((f[i], f[(i + 1) % len(f)])) for f in faces for i in range(len(f))}
    assert {frozenset(e) for e in p.edges()} == edges
    assert len(verts) - len(edges) + len(faces) == 2


def test_off_faces_are_outward_and_planar():
    p = _asso("A3", "t1t2t3").polytope
    verts, faces = export.parse_off(export.to_off(p))
    V = np.array(verts)
    centre = V.mean(axis=0)
    for f in faces:
        pts = V[f]
        n = np.cross(pts[1] - pts[0], pts[2] - pts[1])
        assert np.dot(n, pts.mean(axis=0) - centre) > 0
        assert np.allclose((pts - pts[0]) @ n, 0, atol=1e-9)


def test_off_preserves_distances():
    # the orthonormal frame of V0 must not distort the A3 permutahedron (edge length √2 · scale)
    p = context("A3").perm.polytope
    V = np.array(export.parse_off(export.to_off(p))[0])
    lengths = {round(float(np.linalg.norm(V[i] - V[j])), 9) for i, j in p.edges()}
    assert len(lengths) == 1


def test_off_polygon_and_precision():
    text = export.to_off(_asso("I2:5", "ts").polytope)
    verts, faces = export.parse_off(text)
    assert len(verts) == 7 and len(faces) == 1 and sorted(faces[0]) == list(range(7))
    assert all(v[2] == 0 for v in verts)
    row = text.splitlines()[2].split()
    assert max(len(x.lstrip("-").replace(".", "").lstrip("0")) for x in row) <= 17


def test_json_permutahedron_schema():
    d = json.loads(export.dumps(export.permutahedron_json(context("I2:4").perm)))
    assert set(d) >= {"group", "basepoint", "vertices", "facets"}
    assert {"element": "e", "coords": d["basepoint"]} in d["vertices"]
    assert {f["alpha"] for f in d["facets"]} == {0, 1}
    assert len(d["facets"]) == 8


def test_json_associahedron_hexagon():
    d = export.associahedron_json(_asso("I2:4", "ts"))
    assert len(d["vertices"]) == 6 and len(d["facets"]) == 6
    assert d["singletons"] == ["e", "t", "ts", "tst", "tsts"]
    assert sum(1 for v in d["vertices"] if "singleton" in v) == 5
    assert sorted(f["label"] for f in d["facets"]) == sorted(["-a1", "-a2", "a1", "a2", "a1+a2", "2a1+a2"])


def test_dot_exports():
    cs = system("A3")
    ctx = context("A3")
    lat = cambrian_lattice(_asso("A3", "t1t2t3"), ctx.wl)
    dot = export.cambrian_dot(lat, cs)
    assert dot.count("label=") == 14 and dot.count("->") == 21
    assert '"{-a1, -a2, -a3}\\ne"' in dot
    assert export.weak_order_dot(ctx.wl).count("->") == 36
    assert export.skeleton_dot(ctx.perm).count("->") == 36


def test_root_system_json_roundtrip():
    from genasso.scalar import Scalar

    d = export.root_system_json(system("H3").roots)
    back = [[Scalar.parse(x) for x in r] for r in d["simple_roots"]]
    assert tuple(back[1]) == system("H3").roots.simple_root(1)
