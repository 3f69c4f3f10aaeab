"""Index set I_{n,d}, the graph Gamma_{n,d} and the orders used to enumerate it.

A multi-index is a plain tuple ``(i0, i1, ..., in)`` with ``1 <= i0 <= 2`` and
``1 <= i_nu <= 3d - 1``.  The order ``prec_0`` is lexicographic with the
reversed order in each coordinate; ``prec_kappa`` (kappa >= 1) sorts by
coordinate kappa ascending and breaks ties with ``prec_0``.
"""
from __future__ import annotations

import functools
import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MultiIndex = tuple  # tuple[int, ...] of length n + 1

LESS, EQUAL, GREATER = -1, 0, 1


class DomainError(ValueError):
    """Raised for parameters outside the domain of an operation."""


def _check_nd(n: int, d: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"d must be a positive integer, got {d!r}")


def _check_kappa(n: int, kappa: int) -> None:
    if not 0 <= kappa <= n:
        raise DomainError(f"order index kappa={kappa} out of range 0..{n}")


def index_count(n: int, d: int) -> int:
    """|I_{n,d}| = 2(3d-1)^n."""
    _check_nd(n, d)
    return 2 * (3 * d - 1) ** n


def is_multi_index(a: Sequence[int], n: int, d: int) -> bool:
    if len(a) != n + 1:
        return False
    if not 1 <= a[0] <= 2:
        return False
    return all(1 <= a_nu <= 3 * d - 1 for a_nu in a[1:])


def _prec0_key(a: Sequence[int]) -> tuple:
    # reversed order in each coordinate
    return tuple(-x for x in a)


def compare(kappa: int, a: Sequence[int], b: Sequence[int]) -> int:
    """Compare two multi-indices under ``prec_kappa``.

    Returns ``LESS``, ``EQUAL`` or ``GREATER`` (-1, 0, 1).
    """
    if len(a) != len(b):
        raise DomainError(f"multi-indices of different length: {a!r}, {b!r}")
    if not 0 <= kappa < len(a):
        raise DomainError(f"order index kappa={kappa} out of range for {a!r}")
    if kappa > 0 and a[kappa] != b[kappa]:
        return LESS if a[kappa] < b[kappa] else GREATER
    ka, kb = _prec0_key(a), _prec0_key(b)
    if ka == kb:
        return EQUAL
    return LESS if ka < kb else GREATER


def build_index_set(n: int, d: int) -> list[MultiIndex]:
    """All of I_{n,d}, ascending in ``prec_0``."""
    _check_nd(n, d)
    ranges = [range(2, 0, -1)] + [range(3 * d - 1, 0, -1)] * n
    # product over descending ranges is already prec_0-ascending
    return [tuple(t) for t in itertools.product(*ranges)]


def enumerate_order(n: int, d: int, kappa: int) -> list[MultiIndex]:
    """The enumeration i_kappa: the prec_kappa-ascending listing of I_{n,d}."""
    _check_nd(n, d)
    _check_kappa(n, kappa)
    return sorted(build_index_set(n, d), key=functools.cmp_to_key(functools.partial(compare, kappa)))


def _dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x - y in (0, 1) for x, y in zip(a, b))


def is_edge(a: Sequence[int], b: Sequence[int]) -> bool:
    """Edge predicate of Gamma_{n,d}, symmetrized over the ordered pair."""
    if len(a) != len(b):
        raise DomainError(f"multi-indices of different length: {a!r}, {b!r}")
    if tuple(a) == tuple(b):
        return False
    return _dominates(a, b) or _dominates(b, a)


@dataclass
class LatticeGraph:
    n: int
    d: int
    vertices: list = field(default_factory=list)
    edges: set = field(default_factory=set)  # frozensets {a, b}

    def neighbours(self, v) -> list:
        return [w for w in self.vertices if frozenset((v, w)) in self.edges]

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def sorted_edges(self) -> list[tuple]:
        """Edges as (i, j) pairs with i prec_0 j, in prec_0 order."""
        pos = {v: k for k, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (pos[p[0]], pos[p[1]]))

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "d": self.d,
            "vertices": [list(v) for v in self.vertices],
            "edges": [[list(a), list(b)] for a, b in self.sorted_edges()],
        })

    def to_dot(self) -> str:
        lines = [f"graph Gamma_{self.n}_{self.d} {{"]
        for v in self.vertices:
            lines.append(f'  "{vertex_label(v)}";')
        for a, b in self.sorted_edges():
            lines.append(f'  "{vertex_label(a)}" -- "{vertex_label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def vertex_label(v: Sequence[int]) -> str:
    return ".".join(str(x) for x in v)


def build_graph(n: int, d: int) -> LatticeGraph:
    vertices = build_index_set(n, d)
    edges = set()
    # neighbours differ by a 0/1 vector, so only scan the shifted copies
    present = set(vertices)
    for v in vertices:
        for shift in itertools.product((0, 1), repeat=n + 1):
            if not any(shift):
                continue
            w = tuple(x + s for x, s in zip(v, shift))
            if w in present:
                edges.add(frozenset((v, w)))
    return LatticeGraph(n=n, d=d, vertices=vertices, edges=edges)


def triangles(g: LatticeGraph) -> list[tuple]:
    """Every prec_0-ordered triple (i, j, k) whose three pairs are edges."""
    adj = {v: set(ws) for v, ws in g.adjacency().items()}
    pos = {v: k for k, v in enumerate(g.vertices)}
    out = []
    for i in g.vertices:
        later = sorted((w for w in adj[i] if pos[w] > pos[i]), key=pos.__getitem__)
        for j, k in itertools.combinations(later, 2):
            if k in adj[j]:
                out.append((i, j, k))
    return sorted(out, key=lambda t: tuple(pos[v] for v in t))


def is_connected(g: LatticeGraph) -> bool:
    if not g.vertices:
        return True
    adj = g.adjacency()
    start = tuple([1] * (g.n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def graph_stats(g: LatticeGraph) -> tuple[int, int, bool]:
    return len(g.vertices), len(g.edges), is_connected(g)


def non_edges(g: LatticeGraph) -> list[tuple]:
    """Unordered non-adjacent pairs (i, j), i prec_0 j."""
    out = []
    for a, b in itertools.combinations(g.vertices, 2):
        if frozenset((a, b)) not in g.edges:
            out.append((a, b))
    return out


def permute_positions(v: Sequence[int], perm: Iterable[int]) -> MultiIndex:
    """Apply a permutation of positions 1..n (``perm`` lists the new order)."""
    perm = list(perm)
    return (v[0],) + tuple(v[p] for p in perm)
