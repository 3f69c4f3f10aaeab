import itertools

import pytest

from wpi import lattice
from wpi.lattice import DomainError
from wpi.presentation import (
    build_elliptic,
    build_presentation,
    build_zariski,
    delta_word,
    from_json,
    serialize,
    special_fixture,
    to_json,
)


def expected_counts(n, d):
    verts = lattice.build_index_set(n, d)
    pairs = list(itertools.combinations(verts, 2))
    edges = sum(lattice.is_edge(a, b) for a, b in pairs)
    tri = sum(all(lattice.is_edge(*p) for p in itertools.combinations(t, 2))
              for t in itertools.combinations(verts, 3))
    return len(pairs) - edges, edges, tri, len(verts)


@pytest.mark.parametrize("n,d", [(1, 1), (1, 2), (2, 1)])
def test_relation_counts(n, d):
    comm, braid, tri, N = expected_counts(n, d)
    p = build_presentation(n, d, "moduli", allow_odd_d=True)
    got = {k: len(p.of_kind(k)) for k in ("i", "ii", "iii", "iv", "v", "vi")}
    assert got == {"i": comm, "ii": braid, "iii": tri, "iv": N, "v": 1, "vi": 1}
    assert len(build_presentation(n, d, "singularity").relations) == comm + braid + tri
    assert len(build_presentation(n, d, "discriminant").relations) == comm + braid + tri + N


def test_small_counts():
    assert len(build_presentation(1, 1).relations) == 12
    assert build_presentation(1, 1).generators == ["t_2_2", "t_2_1", "t_1_2", "t_1_1"]


def test_moduli_needs_even_d():
    with pytest.raises(DomainError):
        build_presentation(1, 1, "moduli")
    p = build_presentation(1, 2, "moduli")
    assert p.ngens == 10 and p.meta["pact_exponent"] == 6
    assert build_presentation(1, 2, "moduli", pact_exponent=4).meta["pact_exponent"] == 4


def test_delta_words():
    pos = {v: k for k, v in enumerate(lattice.build_index_set(1, 1))}
    names = [(2, 1), (1, 1), (2, 2), (1, 2)]
    assert delta_word(1, 1, 1) == tuple((pos[v], 1) for v in names)
    assert delta_word(2, 1, 0) == tuple((k, 1) for k in range(8))


def test_zariski_and_elliptic():
    z = build_zariski(4)
    assert z.ngens == 3
    assert [r.kind for r in z.relations] == ["far", "braid", "braid", "sphere"]
    e = build_elliptic()
    assert e.ngens == 2 and len(e.relations) == 2
    with pytest.raises(DomainError):
        build_zariski(1)


def test_fixtures():
    assert len(special_fixture("n1d1").relations) == 9
    assert len(special_fixture("n1d1_projective").relations) == 10
    p = special_fixture("n1d2")
    assert p.ngens == 10
    assert len(p.of_kind("iv")) == 10
    with pytest.raises(DomainError):
        special_fixture("n2d2")


def test_fixture_n1d2_condition_matches_graph():
    p = special_fixture("n1d2")
    g = build_presentation(1, 2)
    assert len(p.of_kind("ii")) == len(g.of_kind("ii"))
    assert len(p.of_kind("i")) == len(g.of_kind("i"))


@pytest.mark.parametrize("build", [build_elliptic, lambda: build_presentation(2, 1, "moduli", allow_odd_d=True),
                                   lambda: special_fixture("n1d2")])
def test_json_roundtrip(build):
    p = build()
    q = from_json(to_json(p))
    assert q.generators == p.generators
    assert q.relations == p.relations
    assert to_json(q) == to_json(p)


def test_text_formats():
    p = build_elliptic()
    gap = serialize(p, "gap")
    assert "FreeGroup(\"s_1\", \"s_2\")" in gap and "F / [" in gap
    assert "quo< F |" in serialize(p, "magma")
    text = serialize(build_presentation(1, 1), "text")
    assert "t_{2,2} t_{2,1} t_{2,2} = t_{2,1} t_{2,2} t_{2,1}" in text
    with pytest.raises(DomainError):
        serialize(p, "yaml")
