"""Independent oracles for finite presentations.

Smith normal form and abelianization, evaluation of relators on integer
matrix images, breadth-first closure of matrix groups mod m, and an HLT
coset enumerator with a hard capacity bound.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .presentation import Presentation
from .words import Word, cyclic_reduce, exponent_sums


class DimensionError(ValueError):
    pass


class CapExceeded(RuntimeError):
    """Raised when a closure computation grows past its cap."""


# -- integer matrices -------------------------------------------------------

IntegerMatrix = tuple  # tuple of row tuples of Python ints


def matrix(rows: Sequence[Sequence[int]]) -> IntegerMatrix:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionError("ragged matrix")
    return rows


def identity(k: int) -> IntegerMatrix:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


def mat_mul(a: IntegerMatrix, b: IntegerMatrix, modulus: int | None = None) -> IntegerMatrix:
    if len(a[0]) != len(b):
        raise DimensionError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = list(zip(*b))
    out = []
    for r in a:
        row = [sum(x * y for x, y in zip(r, c)) for c in cols]
        if modulus:
            row = [x % modulus for x in row]
        out.append(tuple(row))
    return tuple(out)


def reduce_mod(a: IntegerMatrix, modulus: int | None) -> IntegerMatrix:
    if not modulus:
        return a
    return tuple(tuple(x % modulus for x in r) for r in a)


def _rational_inverse(a: IntegerMatrix) -> tuple[list[list[Fraction]], Fraction]:
    k = len(a)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(a)]
    det = Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(k):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[k:] for row in m], det


def mat_inverse(a: IntegerMatrix, modulus: int | None = None) -> IntegerMatrix:
    """Exact inverse over the integers, or over Z/modulus."""
    inv, det = _rational_inverse(a)
    if modulus:
        # adjugate = det * inverse is integral
        adj = [[int(x * det) for x in r] for r in inv]
        dinv = pow(int(det) % modulus, -1, modulus)
        return tuple(tuple((x * dinv) % modulus for x in r) for r in adj)
    if any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in r) for r in inv)


def evaluate_word(w: Word, images: Sequence[IntegerMatrix], modulus: int | None = None) -> IntegerMatrix:
    k = len(images[0])
    inverses = {}
    out = identity(k)
    for g, s in w:
        if s == 1:
            m = images[g]
        else:
            if g not in inverses:
                inverses[g] = mat_inverse(images[g], modulus)
            m = inverses[g]
        out = mat_mul(out, m, modulus)
    return reduce_mod(out, modulus)


# -- Smith normal form ------------------------------------------------------

def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Diagonal of the Smith normal form and the rank.

    Returns ``min(rows, cols)`` nonnegative entries d1 | d2 | ... (trailing zeros
    for rank deficiency).  Pivots are chosen of minimal absolute value.
    """
    a = [list(map(int, r)) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    size = min(rows, cols)
    t = 0
    while t < size:
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for r in a:
                        r[t], r[j] = r[j], r[t]
                continue
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        a[t][t] = abs(a[t][t])
        t += 1
    diag = [a[i][i] for i in range(size)]
    return diag, sum(1 for x in diag if x)


@dataclass
class AbelianInvariants:
    """Invariant factors; 0 stands for an infinite cyclic factor."""
    factors: list

    @property
    def free_rank(self) -> int:
        return self.factors.count(0)

    @property
    def torsion(self) -> list:
        return [f for f in self.factors if f]

    def is_trivial(self) -> bool:
        return not self.factors

    def to_json(self) -> str:
        return json.dumps({"factors": self.factors, "free_rank": self.free_rank})


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [exponent_sums(r, p.ngens) for r in p.relators()]


def abelianization(p: Presentation) -> AbelianInvariants:
    rows = relation_matrix(p)
    if rows:
        diag, rank = smith_normal_form(rows)
    else:
        diag, rank = [], 0
    torsion = [x for x in diag if x > 1]
    return AbelianInvariants(torsion + [0] * (p.ngens - rank))


# -- matrix representations ------------------------------------------------

@dataclass
class RepresentationReport:
    results: list = field(default_factory=list)  # (index, kind, passed)
    modulus: int | None = None

    @property
    def ok(self) -> bool:
        return all(passed for _, _, passed in self.results)

    def to_json(self) -> str:
        return json.dumps({
            "modulus": self.modulus,
            "ok": self.ok,
            "relations": [{"index": i, "kind": k, "pass": ok} for i, k, ok in self.results],
        })


def _images_list(p: Presentation, images) -> list:
    if isinstance(images, dict):
        return [matrix(images[g]) for g in p.generators]
    return [matrix(m) for m in images]


def check_representation(p: Presentation, images, modulus: int | None = None) -> RepresentationReport:
    """Evaluate every relator on the given matrix images."""
    mats = _images_list(p, images)
    if len(mats) != p.ngens:
        raise DimensionError(f"{len(mats)} images for {p.ngens} generators")
    k = len(mats[0])
    if any(len(m) != k or any(len(r) != k for r in m) for m in mats):
        raise DimensionError("images must be square matrices of one size")
    report = RepresentationReport(modulus=modulus)
    for i, r in enumerate(p.relations):
        lhs = evaluate_word(r.lhs, mats, modulus)
        rhs = evaluate_word(r.rhs, mats, modulus)
        report.results.append((i, r.kind, lhs == rhs))
    return report


def matrix_group_closure(generators: Sequence, modulus: int, cap: int = 200_000) -> int:
    """Order of the subgroup of GL_k(Z/modulus) generated by the matrices."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    gens = [reduce_mod(matrix(g), modulus) for g in generators]
    if not gens:
        return 1
    one = reduce_mod(identity(len(gens[0])), modulus)
    seen = {one}
    queue = deque([one])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = mat_mul(a, g, modulus)
            if b not in seen:
                seen.add(b)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeded cap of {cap} elements")
                queue.append(b)
    return len(seen)


# -- coset enumeration ------------------------------------------------------

class _Overflow(Exception):
    pass


@dataclass
class CosetEnumeration:
    index: int | None
    cosets_defined: int
    max_cosets: int
    table: list | None = None  # standardized table of live cosets when closed

    @property
    def exceeded(self) -> bool:
        return self.index is None

    def to_json(self) -> str:
        return json.dumps({"index": self.index, "exceeded": self.exceeded,
                           "cosets_defined": self.cosets_defined, "max_cosets": self.max_cosets})


class _HLT:
    """Hazelgrove-Leech-Trotter enumeration; columns 2g and 2g+1 are g and g^-1."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max = max_cosets
        self.table = []
        self.parent = []
        self.new_coset()

    def new_coset(self) -> int:
        if len(self.table) >= self.max:
            raise _Overflow
        self.table.append([None] * self.ncols)
        self.parent.append(len(self.parent))
        return len(self.table) - 1

    def live(self, a: int) -> bool:
        return self.parent[a] == a

    def rep(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def define(self, a: int, x: int) -> None:
        b = self.new_coset()
        self.table[a][x] = b
        self.table[b][x ^ 1] = a

    def merge(self, k: int, l: int, queue: list) -> None:
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = min(k, l), max(k, l)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncols):
                h = self.table[g][x]
                if h is None:
                    continue
                if self.table[h][x ^ 1] == g:
                    self.table[h][x ^ 1] = None
                f1, h1 = self.rep(g), self.rep(h)
                if self.table[f1][x] is not None:
                    self.merge(h1, self.table[f1][x], queue)
                elif self.table[h1][x ^ 1] is not None:
                    self.merge(f1, self.table[h1][x ^ 1], queue)
                else:
                    self.table[f1][x] = h1
                    self.table[h1][x ^ 1] = f1

    def scan_and_fill(self, a: int, w: list) -> None:
        t = self.table
        f, b = a, a
        i, j = 0, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] is not None:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != a:
                    self.coincidence(f, a)
                return
            while j >= i and t[b][w[j] ^ 1] is not None:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])


def _columns(w: Word) -> list:
    return [2 * g + (0 if s == 1 else 1) for g, s in w]


def todd_coxeter(p: Presentation, subgroup_words: Sequence[Word] = (),
                 max_cosets: int = 100_000) -> CosetEnumeration:
    """Index of the subgroup generated by ``subgroup_words``, if it closes in bound."""
    relators = [_columns(cyclic_reduce(r)) for r in p.relators()]
    relators = [r for r in relators if r]
    hlt = _HLT(p.ngens, max_cosets)
    try:
        for w in subgroup_words:
            cols = _columns(w)
            if cols:
                hlt.scan_and_fill(0, cols)
        a = 0
        while a < len(hlt.table):
            for r in relators:
                if not hlt.live(a):
                    break
                hlt.scan_and_fill(a, r)
            if hlt.live(a):
                for x in range(hlt.ncols):
                    if hlt.table[a][x] is None:
                        hlt.define(a, x)
            a += 1
    except _Overflow:
        return CosetEnumeration(None, len(hlt.table), max_cosets)
    live = [c for c in range(len(hlt.table)) if hlt.live(c)]
    pos = {c: k for k, c in enumerate(live)}
    table = [[pos[hlt.rep(hlt.table[c][x])] for x in range(hlt.ncols)] for c in live]
    return CosetEnumeration(len(live), len(hlt.table), max_cosets, table)


def permutation_images(enum: CosetEnumeration) -> list[tuple]:
    """Generator actions on cosets from a closed enumeration."""
    if enum.table is None:
        raise ValueError("enumeration did not close")
    ncols = len(enum.table[0]) if enum.table else 0
    return [tuple(row[2 * g] for row in enum.table) for g in range(ncols // 2)]
