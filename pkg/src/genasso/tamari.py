"""Tamari lattice on binary trees, built from right rotations alone.

Used as ground truth for the Cambrian lattice of the linear Coxeter element in
type A; nothing here touches Coxeter groups.
"""

from __future__ import annotations

LEAF = None


def binary_trees(n: int) -> list:
    """All binary trees with ``n`` internal nodes as nested pairs (leaf = None)."""
    if n == 0:
        return [LEAF]
    out = []
    for k in range(n):
        for left in binary_trees(k):
            for right in binary_trees(n - 1 - k):
                out.append((left, right))
    return out


def right_rotations(t) -> list:
    """Trees obtained by one right rotation ((A, B), C) -> (A, (B, C)) anywhere in ``t``."""
    if t is LEAF:
        return []
    left, right = t
    out = []
    if left is not LEAF:
        a, b = left
        out.append((a, (b, right)))
    out.extend((l2, right) for l2 in right_rotations(left))
    out.extend((left, r2) for r2 in right_rotations(right))
    return out


def left_comb(n: int):
    t = LEAF
    for _ in range(n):
        t = (t, LEAF)
    return t


def tamari_lattice(n: int):
    """(trees, covers) of the Tamari lattice on ``n`` internal nodes, explored from the left comb."""
    start = left_comb(n)
    trees = [start]
    seen = {start: 0}
    covers = set()
    i = 0
    while i < len(trees):
        t = trees[i]
        for u in right_rotations(t):
            if u not in seen:
                seen[u] = len(trees)
                trees.append(u)
            covers.add((seen[t], seen[u]))
        i += 1
    return trees, sorted(covers)


def tamari_digraph(n: int):
    import networkx as nx

    trees, covers = tamari_lattice(n)
    g = nx.DiGraph()
    g.add_nodes_from(range(len(trees)))
    g.add_edges_from(covers)
    return g
