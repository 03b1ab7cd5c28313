from __future__ import annotations

import networkx as nx
import pytest

from genasso.tamari import binary_trees, left_comb, right_rotations, tamari_digraph, tamari_lattice

CATALAN = [1, 1, 2, 5, 14, 42]


@pytest.mark.parametrize("n", range(6))
def test_rotation_closure_reaches_every_tree(n):
    trees, _ = tamari_lattice(n)
    assert len(trees) == CATALAN[n]
    assert set(trees) == set(binary_trees(n))


def test_tamari_4():
    g = tamari_digraph(4)
    assert g.number_of_nodes() == 14 and g.number_of_edges() == 21
    assert nx.is_directed_acyclic_graph(g)
    assert [v for v in g if g.in_degree(v) == 0] == [0]
    assert len([v for v in g if g.out_degree(v) == 0]) == 1


def test_rotation_preserves_size():
    t = left_comb(3)
    for u in right_rotations(t):
        assert len(str(u)) == len(str(t))
