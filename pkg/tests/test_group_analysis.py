import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpi import group_analysis as ga
from wpi.presentation import Presentation, Relation, build_elliptic
from wpi.words import gens, power, word

SIGMA1 = ((1, 1), (0, 1))
SIGMA2 = ((1, 0), (-1, 1))


def det(m):
    # Leibniz over Fractions; fine for the small sizes used here
    k = len(m)
    total = 0
    for perm in itertools.permutations(range(k)):
        sign = (-1) ** sum(perm[i] > perm[j] for i in range(k) for j in range(i + 1, k))
        total += sign * math.prod(m[i][perm[i]] for i in range(k))
    return total


def determinantal_divisors(m):
    r, c = len(m), len(m[0])
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = math.gcd(g, det([[m[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150)
@given(matrices)
def test_snf_matches_minor_gcds(m):
    diag, rank = ga.smith_normal_form(m)
    dk = determinantal_divisors(m)
    prods = [math.prod(diag[:k + 1]) for k in range(len(diag))]
    assert prods == dk
    assert rank == sum(1 for x in diag if x)
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(x >= 0 for x in diag)


@given(matrices, st.randoms())
def test_snf_invariant_under_permutation_and_transpose(m, rnd):
    base = ga.smith_normal_form(m)
    rows = list(m)
    rnd.shuffle(rows)
    cols = list(range(len(m[0])))
    rnd.shuffle(cols)
    shuffled = [[r[j] for j in cols] for r in rows]
    assert ga.smith_normal_form(shuffled) == base
    assert ga.smith_normal_form([list(c) for c in zip(*m)]) == base


def test_snf_known():
    assert ga.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == ([2, 6, 12], 3)
    assert ga.smith_normal_form([[0, 0], [0, 0]]) == ([0, 0], 0)


def test_abelianization_elliptic():
    inv = ga.abelianization(build_elliptic())
    assert inv.factors == (12,) or list(inv.factors) == [12]
    assert inv.free_rank == 0


def test_free_group_abelianization():
    p = Presentation(["a", "b"], [])
    inv = ga.abelianization(p)
    assert inv.free_rank == 2 and list(inv.factors) == [0, 0]


def test_sl2z_representation():
    rep = ga.check_representation(build_elliptic(), [SIGMA1, SIGMA2])
    assert rep.ok
    bad = ga.check_representation(build_elliptic(), [SIGMA1, SIGMA1])
    assert not bad.ok
    # equal images satisfy the braid relation trivially
    assert [r[2] for r in bad.results] == [True, False]


def test_representation_mod():
    rep = ga.check_representation(build_elliptic(), {"s_1": SIGMA1, "s_2": SIGMA2}, modulus=5)
    assert rep.ok and rep.modulus == 5


def test_shape_mismatch():
    with pytest.raises(ga.DimensionError):
        ga.mat_mul(((1, 2),), ((1, 2),))


def test_mat_inverse():
    a = ((2, 1), (1, 1))
    assert ga.mat_mul(a, ga.mat_inverse(a)) == ga.identity(2)
    b = ((2, 1), (0, 2))
    assert ga.mat_mul(b, ga.mat_inverse(b, 5), 5) == ga.identity(2)
    with pytest.raises(ValueError):
        ga.mat_inverse(((2, 0), (0, 4)))


def sl2_count(m):
    return sum(1 for a, b, c, d in itertools.product(range(m), repeat=4) if (a * d - b * c) % m == 1 % m)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_closure_matches_enumeration(m):
    assert ga.matrix_group_closure([SIGMA1, SIGMA2], m) == sl2_count(m)


def test_closure_cap():
    with pytest.raises(ga.CapExceeded):
        ga.matrix_group_closure([SIGMA1, SIGMA2], 7, cap=10)


# -- Todd-Coxeter against permutation closure ----------------------------------

def perm_mul(p, q):
    # apply p then q
    return tuple(q[p[i]] for i in range(len(p)))


def perm_closure(gens_):
    ident = tuple(range(len(gens_[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens_:
                x = perm_mul(g, h)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return len(seen)


def perm_word(w, images):
    res = tuple(range(len(images[0])))
    for g, s in w:
        p = images[g]
        if s < 0:
            inv = [0] * len(p)
            for i, j in enumerate(p):
                inv[j] = i
            p = tuple(inv)
        res = perm_mul(res, p)
    return res


def pres(ngens, relators):
    return Presentation([f"g{k}" for k in range(ngens)], [Relation(r) for r in relators])


a, b = 0, 1
A, B = gens([a]), gens([b])


def quaternion_perms():
    # units 1,i,j,k with sign; element = (sign, unit) indexed 0..7
    table = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
             (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
             (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}
    elems = [(s, u) for s in (1, -1) for u in range(4)]
    ix = {e: k for k, e in enumerate(elems)}

    def right(g):
        out = []
        for s, u in elems:
            t, v = table[(u, g[1])]
            out.append(ix[(s * g[0] * t, v)])
        return tuple(out)

    return [right((1, 1)), right((1, 2))]


GROUPS = [
    ("S3", pres(2, [power(A, 2), power(B, 2), power(A + B, 3)]), [(1, 0, 2), (0, 2, 1)]),
    ("C5", pres(1, [power(A, 5)]), [(1, 2, 3, 4, 0)]),
    ("D4", pres(2, [power(A, 4), power(B, 2), power(A + B, 2)]), [(1, 2, 3, 0), (0, 3, 2, 1)]),
    ("Q8", pres(2, [power(A, 4), power(A, 2) + power(B, -2), word((b, -1), (a, 1), (b, 1), (a, 1))]),
     quaternion_perms()),
    ("A4", pres(2, [power(A, 2), power(B, 3), power(A + B, 3)]), [(1, 0, 3, 2), (0, 2, 3, 1)]),
    ("S4", pres(2, [power(A, 2), power(B, 4), power(A + B, 3)]), [(1, 0, 2, 3), (1, 2, 3, 0)]),
]


@pytest.mark.parametrize("name,p,perms", GROUPS, ids=[g[0] for g in GROUPS])
def test_todd_coxeter_vs_permutations(name, p, perms):
    ident = tuple(range(len(perms[0])))
    assert all(perm_word(r, perms) == ident for r in p.relators())
    enum = ga.todd_coxeter(p)
    assert enum.index == perm_closure(perms)
    # the enumerated coset action is itself a faithful regular action
    images = ga.permutation_images(enum)
    assert all(perm_word(r, images) == tuple(range(enum.index)) for r in p.relators())
    assert perm_closure(images) == enum.index


def test_todd_coxeter_subgroup():
    p = GROUPS[0][1]
    assert ga.todd_coxeter(p, [A]).index == 3


@pytest.mark.parametrize("m,order", [(2, 6), (3, 24)])
def test_elliptic_quotients(m, order):
    p = build_elliptic()
    p = Presentation(p.generators, p.relations + [Relation(power(gens([0]), m))])
    assert ga.todd_coxeter(p).index == order == ga.matrix_group_closure([SIGMA1, SIGMA2], m)


def test_todd_coxeter_capacity():
    enum = ga.todd_coxeter(build_elliptic(), max_cosets=2000)
    assert enum.exceeded and enum.index is None
