"""Finite Coxeter groups as permutations of their root systems.

A group element is stored as the permutation it induces on the root indices.
Composition is ``(u * v)(β) = u(v(β))`` and words act on the right, so
``u -> u * s`` is a cover of the right weak order when it increases length.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import cached_property

from . import linalg
from .roots import (InvariantViolation, RootSystem, build_root_system, parse_group,
                    reflect)


class GroupTooLarge(RuntimeError):
    pass


class GroupElement:
    __slots__ = ("perm", "system")

    def __init__(self, perm, system: CoxeterSystem):
        self.perm = perm
        self.system = system

    def __mul__(self, other: GroupElement) -> GroupElement:
        p = self.perm
        return self.system.element(tuple(p[i] for i in other.perm))

    def inverse(self) -> GroupElement:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return self.system.element(tuple(inv))

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    @property
    def length(self) -> int:
        return self.system.length(self)

    @property
    def word(self) -> tuple:
        return self.system.reduced_word(self)

    def sort_key(self):
        return (self.length, self.word)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"<{self.system.format_word(self.word)}>"

    def __call__(self, v):
        return self.system.act(self, v)


class CoxeterSystem:
    def __init__(self, roots: RootSystem, bound: int = 10_000):
        self.roots = roots
        self.bound = bound
        self.rank = roots.rank
        self._elements: dict = {}
        self._length: dict = {}
        self._word: dict = {}
        self._matrix: dict = {}
        ctx = roots.ctx
        self.simple_reflections = []
        for k in range(self.rank):
            a = roots.simple_root(k)
            perm = tuple(roots.root_index(reflect(ctx, a, b)) for b in roots.roots)
            self.simple_reflections.append(self.element(perm))
        n = len(roots.roots)
        self.identity = self.element(tuple(range(n)))
        one, zero = roots.field.coerce(1), roots.field.coerce(0)
        dim = ctx.dim
        self._matrix[self.identity.perm] = tuple(
            tuple(one if i == j else zero for j in range(dim)) for i in range(dim))
        for k, s in enumerate(self.simple_reflections):
            a = roots.simple_root(k)
            cols = [reflect(ctx, a, tuple(one if i == j else zero for i in range(dim))) for j in range(dim)]
            self._matrix[s.perm] = tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))
        self.coxeter_matrix = [[self._order(self.simple_reflections[i] * self.simple_reflections[j])
                                for j in range(self.rank)] for i in range(self.rank)]

    # -- construction helpers ------------------------------------------------

    def element(self, perm) -> GroupElement:
        el = self._elements.get(perm)
        if el is None:
            el = GroupElement(perm, self)
            self._elements[perm] = el
        return el

    def _order(self, g: GroupElement) -> int:
        k, x = 1, g
        while x != self.identity:
            x = x * g
            k += 1
            if k > 1000:
                raise InvariantViolation("element of unbounded order")
        return k

    @property
    def name(self) -> str:
        return self.roots.name

    @property
    def field(self):
        return self.roots.field

    @property
    def names(self):
        return self.roots.names

    def s(self, k: int) -> GroupElement:
        return self.simple_reflections[k]

    # -- basic invariants ----------------------------------------------------

    def length(self, w: GroupElement) -> int:
        n = self._length.get(w.perm)
        if n is None:
            npos = self.roots.npos
            n = sum(1 for i in range(npos) if w.perm[i] >= npos)
            self._length[w.perm] = n
        return n

    def inversion_mask(self, w: GroupElement) -> int:
        """Bitmask of positive roots β with w⁻¹(β) negative (left inversions)."""
        npos = self.roots.npos
        winv = w.inverse().perm
        mask = 0
        for i in range(npos):
            if winv[i] >= npos:
                mask |= 1 << i
        return mask

    def is_left_descent(self, w: GroupElement, k: int) -> bool:
        return w.inverse().perm[self.roots.simple[k]] >= self.roots.npos

    def is_right_descent(self, w: GroupElement, k: int) -> bool:
        return w.perm[self.roots.simple[k]] >= self.roots.npos

    def reduced_word(self, w: GroupElement) -> tuple:
        """Lexicographically least reduced word, found by stripping the least left descent."""
        word = self._word.get(w.perm)
        if word is None:
            letters = []
            x = w
            while x != self.identity:
                k = next(k for k in range(self.rank) if self.is_left_descent(x, k))
                letters.append(k)
                x = self.simple_reflections[k] * x
            word = tuple(letters)
            self._word[w.perm] = word
        return word

    def from_word(self, word) -> GroupElement:
        x = self.identity
        for k in word:
            x = x * self.simple_reflections[k]
        return x

    def matrix(self, w: GroupElement):
        M = self._matrix.get(w.perm)
        if M is None:
            word = self.reduced_word(w)
            M = self._matrix[self.identity.perm]
            for k in word:
                M = linalg.matmul(M, self._matrix[self.simple_reflections[k].perm])
            self._matrix[w.perm] = M
        return M

    def act(self, w: GroupElement, v):
        if len(v) != self.roots.ctx.dim:
            raise ValueError("dimension mismatch")
        return linalg.matvec(self.matrix(w), v)

    def act_by_word(self, word, v):
        """Apply the reflections of ``word`` right to left, one at a time."""
        ctx = self.roots.ctx
        for k in reversed(word):
            v = reflect(ctx, self.roots.simple_root(k), v)
        return v

    # -- words ---------------------------------------------------------------

    def format_word(self, word, unicode: bool = False, empty: str = "e") -> str:
        if not word:
            return empty
        names = self.roots.unames if unicode else self.roots.names
        return "".join(names[k] for k in word)

    def parse_word(self, text: str) -> tuple:
        """Split a concatenation of generator names (``"t1t2t3"``, ``"ts"``, ``"s0t1t2"``)."""
        t = text.replace(" ", "").replace(",", "").replace(".", "").replace("*", "")
        if t in ("", "e"):
            return ()
        table = {}
        for k, (a, u) in enumerate(zip(self.roots.names, self.roots.unames)):
            table[a] = k
            table[u] = k
        keys = sorted(table, key=len, reverse=True)
        out, pos = [], 0
        while pos < len(t):
            for key in keys:
                if t.startswith(key, pos):
                    out.append(table[key])
                    pos += len(key)
                    break
            else:
                raise ValueError(f"cannot parse {text!r} as a word in {', '.join(self.roots.names)}")
        return tuple(out)

    # -- the whole group -----------------------------------------------------

    @cached_property
    def elements(self) -> list:
        """All elements, sorted by (length, lex-least reduced word); Cayley-graph BFS."""
        seen = {self.identity.perm}
        order = [self.identity]
        queue = deque([self.identity])
        while queue:
            u = queue.popleft()
            for s in self.simple_reflections:
                v = u * s
                if v.perm not in seen:
                    seen.add(v.perm)
                    order.append(v)
                    queue.append(v)
                    if len(order) > self.bound:
                        raise GroupTooLarge(f"|W| exceeds the bound {self.bound}")
        return sorted(order, key=GroupElement.sort_key)

    @cached_property
    def index(self) -> dict:
        return {w.perm: i for i, w in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def longest(self) -> GroupElement:
        els = self.elements
        top = [w for w in els if w.length == els[-1].length]
        if len(top) != 1:
            raise InvariantViolation("no unique longest element")
        return top[0]

    def leq(self, u: GroupElement, v: GroupElement) -> bool:
        """Right weak order: u <= v iff a reduced word of u is a prefix of one for v."""
        a = self.inversion_mask(u)
        return a & self.inversion_mask(v) == a

    def commute(self, i: int, j: int) -> bool:
        return self.coxeter_matrix[i][j] == 2

    def automorphisms(self) -> list:
        """Bijections μ of S with m(μs, μt) = m(s, t), identity first."""
        m = self.coxeter_matrix
        out = []
        for p in itertools.permutations(range(self.rank)):
            if all(m[p[i]][p[j]] == m[i][j] for i in range(self.rank) for j in range(self.rank)):
                out.append(p)
        return out


def build_system(group, mode: str = "auto", bound: int = 10_000) -> CoxeterSystem:
    types = parse_group(group) if isinstance(group, str) else group
    return CoxeterSystem(build_root_system(types, mode), bound)


def enumerate_group(cs: CoxeterSystem) -> list:
    return list(cs.elements)


def length(w: GroupElement) -> int:
    return w.length


def longest_element(cs: CoxeterSystem) -> GroupElement:
    return cs.longest


class WeakOrderLattice:
    def __init__(self, cs: CoxeterSystem):
        self.system = cs
        self.elements = cs.elements
        self._masks = [cs.inversion_mask(w) for w in self.elements]
        self._by_mask = {m: i for i, m in enumerate(self._masks)}
        idx = cs.index
        covers = []
        for i, u in enumerate(self.elements):
            for s in cs.simple_reflections:
                v = u * s
                if v.length == u.length + 1:
                    covers.append((i, idx[v.perm]))
        self.covers = sorted(covers)

    def leq(self, i: int, j: int) -> bool:
        return self._masks[i] & self._masks[j] == self._masks[i]

    def join(self, i: int, j: int) -> int:
        need = self._masks[i] | self._masks[j]
        ups = [k for k, m in enumerate(self._masks) if m & need == need]
        best = min(ups, key=lambda k: self.elements[k].length)
        if any(not self.leq(best, k) for k in ups):
            raise InvariantViolation("weak order join is not unique")
        return best

    def meet(self, i: int, j: int) -> int:
        have = self._masks[i] & self._masks[j]
        downs = [k for k, m in enumerate(self._masks) if m & have == m]
        best = max(downs, key=lambda k: self.elements[k].length)
        if any(not self.leq(k, best) for k in downs):
            raise InvariantViolation("weak order meet is not unique")
        return best


def weak_order(cs: CoxeterSystem) -> WeakOrderLattice:
    return WeakOrderLattice(cs)


def parabolic_cosets(cs: CoxeterSystem, I) -> list:
    """Partition W into left cosets wW_I; each coset is (minimal representative, frozenset of elements)."""
    I = sorted(set(I))
    gens = [cs.s(k) for k in I]
    done = set()
    out = []
    for w in cs.elements:
        if w.perm in done:
            continue
        members = {w}
        stack = [w]
        while stack:
            x = stack.pop()
            for g in gens:
                y = x * g
                if y not in members:
                    members.add(y)
                    stack.append(y)
        done.update(x.perm for x in members)
        out.append((min(members, key=GroupElement.sort_key), frozenset(members)))
    return out


def coset_min(cs: CoxeterSystem, w: GroupElement, I) -> GroupElement:
    """Minimal-length representative of wW_I, by stripping right descents in I."""
    x = w
    changed = True
    while changed:
        changed = False
        for k in I:
            if cs.is_right_descent(x, k):
                x = x * cs.s(k)
                changed = True
    return x
