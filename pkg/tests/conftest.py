from __future__ import annotations

from functools import lru_cache

import numpy as np
import pytest

from genasso import verify
from genasso.coxeter import build_system

# every supported type of rank at most 3 that the suite sweeps
RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "H3", "I2:2", "I2:3", "I2:4", "I2:5", "I2:6",
             "I2:7", "I2:8", "A1xA1", "A1xA1xA1", "A2xA1", "I2:4xA1", "I2:5xA1"]

ACCEPTANCE_LINES: list = []


@lru_cache(maxsize=None)
def system(name: str, mode: str = "auto"):
    return build_system(name, mode)


@lru_cache(maxsize=None)
def context(name: str) -> verify.Context:
    return verify.Context(system(name))


@lru_cache(maxsize=None)
def claim(name: str, cid: str) -> dict:
    return verify.run_claim(cid, context(name))


def float_bfs_order(cs) -> int:
    """|W| from a Cayley-graph BFS over float reflection matrices in an orthonormal frame."""
    rs = cs.roots
    L = rs.ctx.float_frame()
    gens = []
    for k in range(rs.rank):
        a = L @ np.array([float(x) for x in rs.simple_root(k)])
        gens.append(np.eye(len(a)) - 2 * np.outer(a, a) / (a @ a))
    key = lambda M: tuple(np.round(M, 6).ravel() + 0.0)
    start = np.eye(gens[0].shape[0])
    seen = {key(start)}
    frontier = [start]
    while frontier:
        nxt = []
        for M in frontier:
            for g in gens:
                N = M @ g
                k = key(N)
                if k not in seen:
                    seen.add(k)
                    nxt.append(N)
        frontier = nxt
    return len(seen)


@pytest.fixture
def a3():
    return system("A3")


@pytest.fixture
def i24():
    return system("I2:4")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
