"""Generators-and-relations builders for the discriminant-complement groups.

Generators t_i are indexed by I_{n,d} in prec_0 order.  Relations are kept as
``lhs = rhs`` pairs of words exactly as built; ``Relation.relator`` and
``Relation.canonical`` give the relator and its cyclically reduced form.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import lattice
from .lattice import DomainError
from .words import (
    Word,
    concat,
    cyclic_reduce,
    free_reduce,
    gens,
    invert,
    power,
)

VARIANTS = ("singularity", "discriminant", "moduli", "zariski", "elliptic", "fixture")
FIXTURES = ("n1d1", "n1d1_projective", "n1d2")


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word = ()
    kind: str = ""

    @property
    def relator(self) -> Word:
        return concat(self.lhs, invert(self.rhs))

    @property
    def canonical(self) -> Word:
        return cyclic_reduce(self.relator)


@dataclass
class Presentation:
    generators: list
    relations: list
    meta: dict = field(default_factory=dict)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def gid(self, label: str) -> int:
        return self.generators.index(label)

    def relators(self) -> list:
        return [r.relator for r in self.relations]

    def of_kind(self, kind: str) -> list:
        return [r for r in self.relations if r.kind == kind]

    def validate(self) -> None:
        for r in self.relations:
            for g, s in r.lhs + r.rhs:
                if not 0 <= g < self.ngens or s not in (1, -1):
                    raise ValueError(f"bad letter {(g, s)!r} in relation {r!r}")


def t_label(v) -> str:
    return "t_" + "_".join(str(x) for x in v)


def _index_map(n: int, d: int) -> tuple[list, dict]:
    verts = lattice.build_index_set(n, d)
    return verts, {v: k for k, v in enumerate(verts)}


def delta_word(n: int, d: int, kappa: int) -> Word:
    """Product of all t_i along the prec_kappa enumeration, ids in prec_0 order."""
    _, pos = _index_map(n, d)
    return gens(pos[v] for v in lattice.enumerate_order(n, d, kappa))


def _commutation(a: int, b: int) -> Relation:
    return Relation(gens([a, b]), gens([b, a]), "i")


def _braid(a: int, b: int, kind: str = "ii") -> Relation:
    return Relation(gens([a, b, a]), gens([b, a, b]), kind)


def _triangle(i: int, j: int, k: int) -> Relation:
    return Relation(gens([i, j, k, i]), gens([j, k, i, j]), "iii")


def _asymptote(i: int, delta0: Word, exponent: int) -> Relation:
    ti = gens([i])
    base = power(concat(invert(ti), delta0), exponent)
    return Relation(concat(ti, base), concat(base, ti), "iv")


def build_presentation(n: int, d: int, variant: str = "discriminant",
                       pact_exponent: int | None = None,
                       allow_odd_d: bool = False) -> Presentation:
    """Presentation for the singularity, discriminant or moduli variant.

    singularity emits relations i-iii, discriminant i-iv, moduli i-vi.
    """
    if variant not in ("singularity", "discriminant", "moduli"):
        raise DomainError(f"build_presentation does not handle variant {variant!r}")
    if n < 1:
        raise DomainError("n must be >= 1 (use build_elliptic for n = 0)")
    lattice._check_nd(n, d)
    if variant == "moduli" and d % 2 and not allow_odd_d:
        raise DomainError(f"moduli variant requires even d, got d={d}")

    g = lattice.build_graph(n, d)
    pos = {v: k for k, v in enumerate(g.vertices)}
    rels = []
    for a, b in lattice.non_edges(g):
        rels.append(_commutation(pos[a], pos[b]))
    for a, b in g.sorted_edges():
        rels.append(_braid(pos[a], pos[b]))
    for a, b, c in lattice.triangles(g):
        rels.append(_triangle(pos[a], pos[b], pos[c]))

    meta = {"n": n, "d": d, "variant": variant, "pact_exponent": None}
    if variant in ("discriminant", "moduli"):
        delta0 = delta_word(n, d, 0)
        for k in range(len(g.vertices)):
            rels.append(_asymptote(k, delta0, 3 * d - 1))
    if variant == "moduli":
        e = 3 * d if pact_exponent is None else int(pact_exponent)
        meta["pact_exponent"] = e
        cact = concat(*(power(delta_word(n, d, k), 6) for k in range(n + 1)))
        rels.append(Relation(cact, (), "v"))
        rels.append(Relation(power(delta_word(n, d, 0), e), (), "vi"))

    p = Presentation([t_label(v) for v in g.vertices], rels, meta)
    p.validate()
    return p


def build_zariski(l: int) -> Presentation:
    """Braid-type presentation of the discriminant complement of degree l on P^1."""
    if l < 2:
        raise DomainError(f"l must be >= 2, got {l}")
    m = l - 1
    rels = []
    for i in range(m):
        for j in range(i + 2, m):
            rels.append(Relation(gens([i, j]), gens([j, i]), "far"))
    for i in range(m - 1):
        rels.append(_braid(i, i + 1, "braid"))
    rels.append(Relation(gens(list(range(m)) + list(range(m - 1, -1, -1))), (), "sphere"))
    return Presentation([f"s_{i + 1}" for i in range(m)], rels,
                        {"n": None, "d": None, "variant": "zariski", "pact_exponent": None, "l": l})


def build_elliptic() -> Presentation:
    """<s1, s2 | s1 s2 s1 = s2 s1 s2, (s1 s2)^6 = 1>."""
    rels = [_braid(0, 1, "braid"), Relation(power(gens([0, 1]), 6), (), "vi")]
    return Presentation(["s_1", "s_2"], rels,
                        {"n": 0, "d": None, "variant": "elliptic", "pact_exponent": 6})


def _fixture_n1d1(projective: bool) -> Presentation:
    # t1 = (1,1), t2 = (1,2), t3 = (2,1), t4 = (2,2); ids are t-number minus one
    labels = ["t_1_1", "t_1_2", "t_2_1", "t_2_2"]

    def w(*ts):
        return gens(t - 1 for t in ts)

    rels = [Relation(w(2, 3), w(3, 2), "i")]
    for i, j in [(1, 2), (1, 3), (2, 4), (3, 4)]:
        rels.append(Relation(w(i, j, i), w(j, i, j), "ii"))
    for i, j, k in [(1, 2, 4), (1, 3, 4)]:
        rels.append(Relation(w(i, j, k, i), w(j, k, i, j), "iii"))
    rels.append(Relation(w(4, 3, 2, 4, 3, 2, 1), w(1, 4, 3, 2, 4, 3, 2), "iv"))
    rels.append(Relation(w(3, 2, 1, 3, 2, 1, 4), w(4, 3, 2, 1, 3, 2, 1), "iv"))
    if projective:
        rels.append(Relation(w(4, 3, 2, 1, 2, 1, 4, 3, 3, 1, 4, 2), (), "proj"))
    case = "n1d1_projective" if projective else "n1d1"
    return Presentation(labels, rels, {"n": 1, "d": 1, "variant": "fixture",
                                       "pact_exponent": None, "case": case})


def _fixture_n1d2() -> Presentation:
    verts = [(i0, i1) for i0 in (1, 2) for i1 in range(1, 6)]
    ix = {v: k for k, v in enumerate(verts)}

    def w(*vs):
        return gens(ix[v] for v in vs)

    rels = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            (i0, i1), (j0, j1) = verts[a], verts[b]
            if abs(i1 - j1) <= 1 and (i0 - j0) * (i1 - j1) >= 0:
                rels.append(Relation(w(verts[a], verts[b], verts[a]),
                                     w(verts[b], verts[a], verts[b]), "ii"))
            else:
                rels.append(Relation(w(verts[a], verts[b]), w(verts[b], verts[a]), "i"))
    for i in range(1, 5):
        rels.append(Relation(w((1, i), (2, i + 1), (1, i + 1), (1, i)),
                             w((1, i + 1), (1, i), (2, i + 1), (1, i + 1)), "iii"))
        rels.append(Relation(w((1, i), (2, i + 1), (2, i), (1, i)),
                             w((2, i), (1, i), (2, i + 1), (2, i)), "iii"))
    delta = {k: w(*lattice.enumerate_order(1, 2, k)) for k in (0, 1)}
    for v in verts:
        ti = w(v)
        rels.append(Relation(power(concat(invert(ti), delta[0]), 5),
                             power(concat(delta[0], invert(ti)), 5), "iv"))
    rels.append(Relation(power(delta[0], 6), (), "vi"))
    rels.append(Relation(power(delta[1], 6), (), "v"))
    return Presentation([t_label(v) for v in verts], rels,
                        {"n": 1, "d": 2, "variant": "fixture", "pact_exponent": 6, "case": "n1d2"})


def special_fixture(case: str) -> Presentation:
    """The small-invariant presentations transcribed literally."""
    if case == "n1d1":
        return _fixture_n1d1(False)
    if case == "n1d1_projective":
        return _fixture_n1d1(True)
    if case == "n1d2":
        return _fixture_n1d2()
    raise DomainError(f"unknown fixture {case!r}; known: {', '.join(FIXTURES)}")


# -- serialization ---------------------------------------------------------

def _word_json(w: Word) -> list:
    return [[g, s] for g, s in w]


def to_json(p: Presentation) -> str:
    return json.dumps({
        "meta": p.meta,
        "generators": list(p.generators),
        "relations": [{"lhs": _word_json(r.lhs), "rhs": _word_json(r.rhs), "kind": r.kind}
                      for r in p.relations],
    })


def from_json(text: str) -> Presentation:
    data = json.loads(text)
    rels = [Relation(tuple((int(g), int(s)) for g, s in r["lhs"]),
                     tuple((int(g), int(s)) for g, s in r.get("rhs", [])),
                     r.get("kind", ""))
            for r in data["relations"]]
    p = Presentation(list(data["generators"]), rels, dict(data.get("meta", {})))
    p.validate()
    return p


def _pretty(label: str) -> str:
    head, _, rest = label.partition("_")
    return f"{head}_{{{rest.replace('_', ',')}}}" if rest else head


def _word_text(p: Presentation, w: Word) -> str:
    if not w:
        return "1"
    return " ".join(_pretty(p.generators[g]) + ("" if s == 1 else "^-1") for g, s in w)


def _word_cas(p: Presentation, w: Word, one: str) -> str:
    if not w:
        return one
    return "*".join(p.generators[g] + ("" if s == 1 else "^-1") for g, s in w)


def to_text(p: Presentation) -> str:
    lines = [f"# generators: {', '.join(_pretty(g) for g in p.generators)}"]
    for r in p.relations:
        lines.append(f"{_word_text(p, r.lhs)} = {_word_text(p, r.rhs)}")
    return "\n".join(lines) + "\n"


def to_gap(p: Presentation) -> str:
    names = ", ".join(f'"{g}"' for g in p.generators)
    lines = [f"F := FreeGroup({names});;"]
    for k, g in enumerate(p.generators, 1):
        lines.append(f"{g} := F.{k};;")
    rels = ",\n  ".join(_word_cas(p, r.relator, "One(F)") for r in p.relations)
    lines.append(f"G := F / [\n  {rels}\n];;")
    return "\n".join(lines) + "\n"


def to_magma(p: Presentation) -> str:
    names = ",".join(p.generators)
    rels = ",\n  ".join(_word_cas(p, r.relator, "Id(F)") for r in p.relations)
    return f"F<{names}> := FreeGroup({p.ngens});\nG := quo< F |\n  {rels}\n>;\n"


def serialize(p: Presentation, fmt: str = "json") -> str:
    writers = {"json": to_json, "gap": to_gap, "magma": to_magma, "text": to_text}
    if fmt not in writers:
        raise DomainError(f"unknown format {fmt!r}")
    return writers[fmt](p)


def reduced_relators(p: Presentation) -> list[Word]:
    return [free_reduce(r.relator) for r in p.relations]
