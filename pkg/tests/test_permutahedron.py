from __future__ import annotations

import pytest

from genasso.coxeter import parabolic_cosets
from genasso.permutahedron import (build_permutahedron, face_from_facets, face_of_coset,
                                   oriented_skeleton, validate_basepoint)
from genasso.polytope import f_vector
from genasso.roots import PreconditionError

from conftest import context, system


@pytest.mark.parametrize("name,fv", [("I2:4", [8, 8]), ("A3", [24, 36, 14]), ("B3", [48, 72, 26]),
                                     ("H3", [120, 180, 62]), ("I2:7", [14, 14]), ("A2xA1", [12, 18, 8])])
def test_f_vectors(name, fv):
    assert f_vector(context(name).perm.polytope) == fv


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_faces_are_parabolic_cosets(name):
    perm = context(name).perm
    cs = perm.system
    for I in ([0], [1], [0, 1], [1, 2], [0, 2]):
        for rep, members in parabolic_cosets(cs, I):
            face = face_of_coset(perm, rep, I)
            assert len(face) == len(members)
            assert face == face_from_facets(perm, rep, I)


def test_facet_count_is_coset_count():
    perm = context("B3").perm
    assert len(perm.polytope.facets()) == 48 // 6 + 48 // 4 + 48 // 8


def test_vertex_element_matches_orbit():
    perm = context("H3").perm
    cs = perm.system
    for w, v in zip(perm.vertex_element, perm.polytope.vertices):
        assert cs.act(w, perm.basepoint) == v.coords


def test_skeleton_orientation_by_length(a3):
    for u, v in oriented_skeleton(context("A3").perm):
        assert v.length == u.length + 1


def test_other_basepoint():
    cs = system("A3")
    a = cs.roots.from_delta([2, 3, 3])
    perm = build_permutahedron(cs, a)
    assert len(perm.polytope.vertices) == 24
    assert perm.polytope.is_simple()


def test_basepoint_preconditions():
    cs = system("A3")
    with pytest.raises(PreconditionError, match="a2"):
        validate_basepoint(cs, cs.roots.from_delta([1, 1, 1]))
    with pytest.raises(PreconditionError):
        validate_basepoint(cs, (1, 2, 3))
    with pytest.raises(PreconditionError):
        # generic but outside the fundamental chamber
        validate_basepoint(cs, cs.roots.from_delta([-3, -4, -3]))
