"""Acceptance criteria, one test each.  Each prints a PASS/FAIL line, also
collected into the terminal summary."""
import itertools
import random
import time

from wpi import group_analysis as ga
from wpi import hl, lattice, numerology, polyalg
from wpi.presentation import (
    Presentation,
    Relation,
    build_elliptic,
    build_presentation,
    build_zariski,
    delta_word,
    special_fixture,
)
from wpi.suites import RUNNERS, SuiteOptions, sample_g_params
from wpi.words import cyclic_conjugate, free_reduce, gens, invert, power, relabel

RESULTS = []


def report(num, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_sl2z_oracle():
    t = time.perf_counter()
    s1, s2 = ((1, 1), (0, 1)), ((1, 0), (-1, 1))
    rep = ga.check_representation(build_elliptic(), [s1, s2])
    s12 = ga.mat_mul(s1, s2)
    cube = ga.mat_mul(ga.mat_mul(s12, s12), s12)
    sixth = ga.mat_mul(cube, cube)
    dt = time.perf_counter() - t
    ok = rep.ok and cube == ((-1, 0), (0, -1)) and sixth == ((1, 0), (0, 1)) and dt < 1
    report(1, "SL2(Z) images satisfy the elliptic relations", ok, f"{dt:.3f}s")


def test_2_abelianizations():
    t = time.perf_counter()
    cases = {
        "elliptic": (build_elliptic(), [12]),
        "zariski(3)": (build_zariski(3), [4]),
        "disc(1,1)": (build_presentation(1, 1, "discriminant"), [0]),
        "disc(1,2)": (build_presentation(1, 2, "discriminant"), [0]),
        "disc(2,1)": (build_presentation(2, 1, "discriminant"), [0]),
        "moduli(1,2)": (build_presentation(1, 2, "moduli"), [60]),
    }
    got = {k: list(ga.abelianization(p).factors) for k, (p, _) in cases.items()}
    dt = time.perf_counter() - t
    ok = all(got[k] == exp for k, (_, exp) in cases.items()) and dt < 5
    report(2, "abelianizations via Smith normal form", ok, f"{got}, {dt:.2f}s")


def test_3_combinatorial_fixtures():
    sizes = all(len(lattice.build_index_set(n, d)) == 2 * (3 * d - 1) ** n
                for n in range(1, 4) for d in range(1, 4))
    g = lattice.build_graph(1, 1)
    small = len(g.edges) == 5 and len(lattice.triangles(g)) == 2
    connected = all(lattice.is_connected(lattice.build_graph(n, d))
                    for n, d in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
    verts = lattice.build_index_set(1, 2)
    rule = all(lattice.is_edge(a, b) == (abs(a[1] - b[1]) <= 1 and (a[0] - b[0]) * (a[1] - b[1]) >= 0)
               for a, b in itertools.permutations(verts, 2))
    report(3, "index set sizes, Gamma_(1,1), connectivity, (1,2) edge rule",
           sizes and small and connected and rule, f"sizes={sizes} small={small} conn={connected} rule={rule}")


def test_4_delta_word_fixtures():
    ok1 = True
    for d in (1, 2):
        pos = {v: k for k, v in enumerate(lattice.build_index_set(1, d))}
        expected = tuple((pos[(i0, i1)], 1) for i1 in range(1, 3 * d) for i0 in (2, 1))
        ok1 &= delta_word(1, d, 1) == expected
    ok0 = all(delta_word(n, d, 0) == tuple((pos, 1) for pos in range(len(lattice.build_index_set(n, d))))
              for n, d in [(1, 1), (1, 2), (2, 1), (2, 2)])
    gen = build_presentation(1, 1, "discriminant")
    fix = special_fixture("n1d1")
    mapping = {gen.gid(l): fix.gid(l) for l in gen.generators}
    built = {gen.generators[r.lhs[0][0]]: free_reduce(relabel(r.relator, mapping)) for r in gen.of_kind("iv")}
    conj = []
    for rel, label in zip(fix.of_kind("iv"), ("t_1_1", "t_2_2")):
        a, b = free_reduce(rel.relator), built[label]
        conj.append(cyclic_conjugate(a, b) or cyclic_conjugate(a, invert(b)))
    report(4, "delta words and type-iv relators for (1,1)", ok1 and ok0 and all(conj),
           f"delta_1={ok1} delta_0={ok0} iv-conjugate={conj}")


def test_5_critical_value_system():
    t = time.perf_counter()
    detail = []
    ok = True
    for n, d in [(1, 1), (1, 2), (2, 1)]:
        p = hl.HLParams.canonical(n, d)
        m = hl.verify_hl_match(p, 1e-9)
        r = hl.verify_root_of_unity_invariance(p, 1e-9)
        c = hl.verify_circles(p, 1e-9)
        ok &= m and r and c
        detail.append(f"({n},{d}) match={m} roots={r} circles={c}")
    dt = time.perf_counter() - t
    report(5, "closed-form vs brute-force critical values", ok and dt < 10, "; ".join(detail) + f"; {dt:.2f}s")


def test_6_numerology():
    t = time.perf_counter()
    rep = numerology.verify_balance(6, 6)
    lead = all(numerology.degrees(n, d).deg_p - numerology.degrees(n, d).deg_z_p
               == (3 * d - 1) * numerology.degrees(n - 1, d).deg_p
               for n in range(2, 7) for d in range(1, 7))
    dt = time.perf_counter() - t
    report(6, "degree balance identities, 1 <= n, d <= 6", not rep["violations"] and lead and dt < 1,
           f"{rep['checked']} checks, {len(rep['violations'])} violations, {dt:.3f}s")


def test_7_slice_experiment():
    t = time.perf_counter()
    degs = [polyalg.weierstrass_slice_zdegree(2, seed).z_degree for seed in range(10)]
    dt = time.perf_counter() - t
    hits = sum(x == 10 for x in degs)
    ok = hits >= 9 and all(x is not None and x <= 10 for x in degs) and dt < 300
    report(7, "slice discriminant z-degree for d=2 over 10 seeds", ok, f"degrees={degs}, {dt:.1f}s")


def test_8_family_g():
    t = time.perf_counter()
    rng = random.Random(2024)
    detail, ok = [], True
    for k in range(5):
        g = sample_g_params(rng, 1 + k % 2)
        lam = 0.5 * hl.lambda_crit(g)
        pts = hl.continue_critical_points(g, lam)
        cont = all(p.ok for p in pts) and hl.points_distinct(pts)
        ident = max(abs(p.value - hl.value_formula(g, p.point)) for p in pts)
        big = hl.verify_largest(g, lam)
        ok &= cont and ident < 1e-8 and big
        detail.append(f"n={g.n}:{cont}/{ident:.1e}/{big}")
    dt = time.perf_counter() - t
    report(8, "family G continuation, value identity, largest value", ok and dt < 60,
           " ".join(detail) + f", {dt:.2f}s")


def test_9_todd_coxeter_sanity():
    a, b = gens([0]), gens([1])
    s3 = Presentation(["a", "b"], [Relation(power(a, 2)), Relation(power(b, 2)), Relation(power(a + b, 3))])
    idx = ga.todd_coxeter(s3).index
    # brute-force oracle: closure of the transpositions (0 1), (1 2)
    perms, frontier = {(0, 1, 2)}, [(0, 1, 2)]
    while frontier:
        p = frontier.pop()
        for g in [(1, 0, 2), (0, 2, 1)]:
            q = tuple(g[i] for i in p)
            if q not in perms:
                perms.add(q)
                frontier.append(q)
    s1, s2 = ((1, 1), (0, 1)), ((1, 0), (-1, 1))
    orders = [ga.matrix_group_closure([s1, s2], m) for m in (2, 3)]
    brute = [sum(1 for w, x, y, z in itertools.product(range(m), repeat=4) if (w * z - x * y) % m == 1)
             for m in (2, 3)]
    ok = idx == len(perms) == 6 and orders == brute == [6, 24]
    report(9, "coset enumeration and SL2 closure", ok, f"index={idx} perms={len(perms)} orders={orders}")


def test_10_full_results_rest_on_oracles():
    # the geometric statements are not recomputed; they stand on the oracle suites
    suites = [s for s in RUNNERS if s != "slice"]
    failed = [s for s in suites if not all(c["ok"] for c in RUNNERS[s](SuiteOptions()))]
    report(10, "fundamental-group statements taken as given; oracle suites green", not failed,
           f"suites={suites} failed={failed}")
