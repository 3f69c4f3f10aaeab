"""Verification suites behind ``wpi verify``.

Each suite returns a list of check records ``{"check", "ok", ...detail}``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import group_analysis as ga
from . import hl, lattice, numerology, polyalg
from .presentation import (
    build_elliptic,
    build_presentation,
    build_zariski,
    delta_word,
    special_fixture,
)
from .words import cyclic_conjugate, free_reduce, invert, power, relabel

SUITES = ("sl2z", "abelian", "hl", "numerology", "slice", "fixtures", "family-g")

SIGMA1 = ((1, 1), (0, 1))
SIGMA2 = ((1, 0), (-1, 1))


@dataclass
class SuiteOptions:
    n: int | None = None
    d: int | None = None
    n_max: int = 6
    d_max: int = 6
    seed: int = 0
    seeds: int = 10
    samples: int = 5
    tol: float = 1e-9
    max_cosets: int = 100_000


def _rec(name, ok, **detail):
    return {"check": name, "ok": bool(ok), **detail}


def suite_sl2z(opt: SuiteOptions) -> list:
    p = build_elliptic()
    rep = ga.check_representation(p, [SIGMA1, SIGMA2])
    s12 = ga.mat_mul(SIGMA1, SIGMA2)
    cube = ga.mat_mul(ga.mat_mul(s12, s12), s12)
    out = [_rec("relations", rep.ok, results=rep.results),
           _rec("(s1 s2)^3 = -I", cube == ((-1, 0), (0, -1))),
           _rec("(s1 s2)^6 = I", ga.mat_mul(cube, cube) == ga.identity(2))]
    for m, order in ((2, 6), (3, 24)):
        got = ga.matrix_group_closure([SIGMA1, SIGMA2], m)
        out.append(_rec(f"|SL2(Z/{m})|", got == order, got=got, expected=order))
    return out


ABELIAN_CASES = [
    ("elliptic", build_elliptic, [12]),
    ("zariski l=3", lambda: build_zariski(3), [4]),
    ("discriminant (1,1)", lambda: build_presentation(1, 1, "discriminant"), [0]),
    ("discriminant (1,2)", lambda: build_presentation(1, 2, "discriminant"), [0]),
    ("discriminant (2,1)", lambda: build_presentation(2, 1, "discriminant"), [0]),
    ("moduli (1,2)", lambda: build_presentation(1, 2, "moduli"), [60]),
]


def suite_abelian(opt: SuiteOptions) -> list:
    out = []
    for name, build, expected in ABELIAN_CASES:
        got = ga.abelianization(build()).factors
        out.append(_rec(name, list(got) == expected, got=list(got), expected=expected))
    return out


def suite_hl(opt: SuiteOptions) -> list:
    cases = [(opt.n, opt.d)] if opt.n is not None and opt.d is not None else [(1, 1), (1, 2), (2, 1)]
    out = []
    for n, d in cases:
        p = hl.HLParams.canonical(n, d)
        ok, dist = hl.match_multisets(hl.closed_form_values(p).values(), hl.brute_force_values(p), opt.tol)
        out.append(_rec(f"match ({n},{d})", ok, max_distance=dist))
        out.append(_rec(f"root-of-unity ({n},{d})", hl.verify_root_of_unity_invariance(p, opt.tol)))
        out.append(_rec(f"circles ({n},{d})", hl.verify_circles(p, opt.tol),
                        max_residual=hl.circle_residuals(p)[0]))
    return out


def suite_numerology(opt: SuiteOptions) -> list:
    rep = numerology.verify_balance(opt.n_max, opt.d_max)
    return [_rec("balance identities", not rep["violations"], checked=rep["checked"],
                 violations=rep["violations"])]


def suite_slice(opt: SuiteOptions) -> list:
    out, hits = [], 0
    for s in range(opt.seed, opt.seed + opt.seeds):
        r = polyalg.weierstrass_slice_zdegree(2, s)
        hits += r.z_degree == r.expected
        out.append(_rec(f"seed {s}", r.z_degree is not None and r.z_degree <= r.expected, **r.to_dict()))
    need = opt.seeds - opt.seeds // 10
    out.append(_rec("degree attained", hits >= need, hits=hits, needed=need))
    return out


def suite_fixtures(opt: SuiteOptions) -> list:
    out = []
    for n in range(1, 4):
        for d in range(1, 4):
            size = len(lattice.build_index_set(n, d))
            out.append(_rec(f"|I_({n},{d})|", size == 2 * (3 * d - 1) ** n, got=size))
    g11 = lattice.build_graph(1, 1)
    out.append(_rec("Gamma_(1,1) edges", len(g11.edges) == 5, got=len(g11.edges)))
    out.append(_rec("Gamma_(1,1) triangles", len(lattice.triangles(g11)) == 2))
    for n, d in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]:
        out.append(_rec(f"Gamma_({n},{d}) connected", lattice.is_connected(lattice.build_graph(n, d))))
    verts = lattice.build_index_set(1, 2)
    agree = all(lattice.is_edge(a, b) == (abs(a[1] - b[1]) <= 1 and (a[0] - b[0]) * (a[1] - b[1]) >= 0)
                for a in verts for b in verts if a != b)
    out.append(_rec("(1,2) edge rule", agree))

    for d in (1, 2):
        verts = lattice.build_index_set(1, d)
        pos = {v: k for k, v in enumerate(verts)}
        expected = tuple((pos[(i0, i1)], 1) for i1 in range(1, 3 * d) for i0 in (2, 1))
        out.append(_rec(f"delta_1 (1,{d})", delta_word(1, d, 1) == expected))
    for n, d in [(1, 1), (1, 2), (2, 1)]:
        expected = tuple((k, 1) for k in range(len(lattice.build_index_set(n, d))))
        out.append(_rec(f"delta_0 ({n},{d})", delta_word(n, d, 0) == expected))

    gen = build_presentation(1, 1, "discriminant")
    fix = special_fixture("n1d1")
    mapping = {gen.gid(lbl): fix.gid(lbl) for lbl in gen.generators}
    built = {gen.generators[r.lhs[0][0]]: free_reduce(relabel(r.relator, mapping))
             for r in gen.of_kind("iv")}
    # the fixture lists the type-iv relation at t_1_1 and t_2_2 only
    for rel, lbl in zip(fix.of_kind("iv"), ("t_1_1", "t_2_2")):
        a, b = free_reduce(rel.relator), built[lbl]
        out.append(_rec(f"iv at {lbl}", cyclic_conjugate(a, b) or cyclic_conjugate(a, invert(b))))
    return out


def sample_g_params(rng: random.Random, n: int, d: int = 1) -> hl.GParams:
    return hl.GParams(n, d, lam0=rng.uniform(0.5, 2.0), lam_n=rng.uniform(0.5, 2.0),
                      lam_np=rng.uniform(0.1, 1.0),
                      lam_i=tuple(rng.uniform(0.5, 2.0) for _ in range(n - 1)))


def suite_family_g(opt: SuiteOptions) -> list:
    rng = random.Random(opt.seed)
    out = []
    for k in range(opt.samples):
        g = sample_g_params(rng, 1 + k % 2)
        lam = 0.5 * hl.lambda_crit(g)
        pts = hl.continue_critical_points(g, lam)
        ident = max(abs(p.value - hl.value_formula(g, p.point)) for p in pts)
        rep = hl.largest_report(g, lam)
        out.append(_rec(f"sample {k}", all(p.ok for p in pts) and ident < 1e-8 and rep.ok,
                        params=g.to_dict(), lam=lam, points=len(pts),
                        identity_residual=ident, largest=rep.ok))
    return out


RUNNERS = {
    "sl2z": suite_sl2z,
    "abelian": suite_abelian,
    "hl": suite_hl,
    "numerology": suite_numerology,
    "slice": suite_slice,
    "fixtures": suite_fixtures,
    "family-g": suite_family_g,
}


def run_suite(name: str, opt: SuiteOptions | None = None) -> list:
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return RUNNERS[name](opt or SuiteOptions())
