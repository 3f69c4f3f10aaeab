"""Free-group words as tuples of ``(generator id, sign)`` letters."""
from __future__ import annotations

from typing import Iterable, Sequence

Letter = tuple  # (gid, +1 | -1)
Word = tuple  # tuple[Letter, ...]


def word(*letters: Iterable) -> Word:
    """Build a word from ``(gid, sign)`` pairs or bare ids (sign +1)."""
    out = []
    for x in letters:
        if isinstance(x, tuple):
            gid, s = x
        else:
            gid, s = x, 1
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s!r}")
        out.append((int(gid), s))
    return tuple(out)


def gens(ids: Iterable[int]) -> Word:
    return tuple((int(g), 1) for g in ids)


def free_reduce(w: Sequence) -> Word:
    stack = []
    for g, s in w:
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


def invert(w: Sequence) -> Word:
    return tuple((g, -s) for g, s in reversed(w))


def concat(*ws: Sequence) -> Word:
    out = []
    for w in ws:
        out.extend(w)
    return tuple(out)


def power(w: Sequence, k: int) -> Word:
    if k < 0:
        return tuple(invert(w)) * (-k)
    return tuple(w) * k


def cyclic_reduce(w: Sequence) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return w[i:j + 1]


def rotations(w: Sequence) -> list[Word]:
    w = tuple(w)
    return [w[k:] + w[:k] for k in range(max(len(w), 1))]


def cyclic_conjugate(u: Sequence, v: Sequence) -> bool:
    """True iff u and v are conjugate in the free group."""
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    return cv in rotations(cu)


def exponent_sums(w: Sequence, ngens: int) -> list[int]:
    row = [0] * ngens
    for g, s in w:
        row[g] += s
    return row


def relabel(w: Sequence, mapping) -> Word:
    return tuple((mapping[g], s) for g, s in w)
