"""Exact sparse multivariate polynomials over the integers.

Resultants are Sylvester determinants computed by fraction-free (Bareiss)
elimination, so every intermediate quantity stays an integer polynomial.
No floating point is used anywhere in this module.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class InexactDivision(ArithmeticError):
    pass


class SparsePoly:
    """Polynomial as a map from exponent vectors to nonzero integers."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        self.variables = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            c = int(c)
            if c:
                exp = tuple(int(e) for e in exp)
                if len(exp) != len(self.variables):
                    raise ValueError(f"exponent {exp} does not match variables {self.variables}")
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- construction ------------------------------------------------------
    @classmethod
    def const(cls, variables: Sequence[str], c: int) -> "SparsePoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str, power: int = 1) -> "SparsePoly":
        variables = tuple(variables)
        exp = tuple(power if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exp: 1})

    @classmethod
    def from_univariate(cls, variables: Sequence[str], name: str, coeffs: Sequence) -> "SparsePoly":
        """sum coeffs[k] * name**k; coefficients may be ints or SparsePolys."""
        out = cls(variables)
        x = cls.var(variables, name)
        for k, c in enumerate(coeffs):
            if isinstance(c, SparsePoly):
                out = out + c.embed(variables) * x ** k
            elif c:
                out = out + cls.const(variables, c) * x ** k
        return out

    def embed(self, variables: Sequence[str]) -> "SparsePoly":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        idx = [variables.index(v) for v in self.variables]
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(variables)
            for i, e in zip(idx, exp):
                new[i] = e
            terms[tuple(new)] = c
        return SparsePoly(variables, terms)

    def _coerce(self, other) -> tuple["SparsePoly", "SparsePoly"]:
        if isinstance(other, int):
            return self, SparsePoly.const(self.variables, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented, NotImplemented
        if other.variables == self.variables:
            return self, other
        merged = list(self.variables) + [v for v in other.variables if v not in self.variables]
        return self.embed(merged), other.embed(merged)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePoly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = SparsePoly.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(self.variables, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    # -- structure ---------------------------------------------------------
    def _vi(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def degree(self, name: str | None = None) -> int | None:
        """Degree in one variable, or total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        if name is None:
            return max(sum(e) for e in self.terms)
        if name not in self.variables:
            return 0
        i = self._vi(name)
        return max(e[i] for e in self.terms)

    def coeff(self, name: str, k: int) -> "SparsePoly":
        i = self._vi(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == k:
                terms[e[:i] + (0,) + e[i + 1:]] = c
        return SparsePoly(self.variables, terms)

    def coefficients(self, name: str) -> list["SparsePoly"]:
        deg = self.degree(name)
        if deg is None:
            return []
        return [self.coeff(name, k) for k in range(deg + 1)]

    def leading_coeff(self, name: str) -> "SparsePoly":
        deg = self.degree(name)
        if deg is None:
            return SparsePoly(self.variables)
        return self.coeff(name, deg)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "SparsePoly":
        g = self.content()
        if g == 0:
            return self
        lead = self.terms[max(self.terms)]
        if lead < 0:
            g = -g
        return SparsePoly(self.variables, {e: c // g for e, c in self.terms.items()})

    def derivative(self, name: str) -> "SparsePoly":
        i = self._vi(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return SparsePoly(self.variables, terms)

    def evaluate(self, values: Mapping[str, int] | None = None, **kw):
        """Substitute integers for some variables; returns int if none remain."""
        values = dict(values or {}, **kw)
        idx = {self._vi(k): int(v) for k, v in values.items() if k in self.variables}
        keep = [i for i in range(len(self.variables)) if i not in idx]
        terms = {}
        for e, c in self.terms.items():
            for i, v in idx.items():
                c *= v ** e[i]
            key = tuple(e[i] for i in keep)
            terms[key] = terms.get(key, 0) + c
        out = SparsePoly([self.variables[i] for i in keep], terms)
        if not keep:
            return out.terms.get((), 0)
        return out

    def exact_div(self, other: "SparsePoly | int") -> "SparsePoly":
        """Quotient; raises InexactDivision unless ``other`` divides exactly."""
        a, b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(a.terms)
        lt = max(b.terms)
        lc = b.terms[lt]
        quot = {}
        while rem:
            e = max(rem)
            c = rem[e]
            shift = tuple(x - y for x, y in zip(e, lt))
            if any(s < 0 for s in shift) or c % lc:
                raise InexactDivision("polynomial division is not exact")
            q = c // lc
            quot[shift] = q
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(eb, shift))
                v = rem.get(key, 0) - q * cb
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return SparsePoly(a.variables, quot)

    def divides(self, other: "SparsePoly") -> bool:
        try:
            other.exact_div(self)
        except InexactDivision:
            return False
        return True

    # -- output ------------------------------------------------------------
    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_json(self) -> str:
        return json.dumps({"variables": list(self.variables),
                           "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()]})

    @classmethod
    def from_json(cls, text: str) -> "SparsePoly":
        data = json.loads(text)
        return cls(data["variables"], {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.variables, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def polys(names: str | Sequence[str]) -> tuple[SparsePoly, ...]:
    """Generator polynomials sharing one variable list: ``x, y = polys("x y")``."""
    if isinstance(names, str):
        names = names.split()
    return tuple(SparsePoly.var(names, n) for n in names)


# -- determinants and resultants ---------------------------------------------

def bareiss_det(m: list[list[SparsePoly]]) -> SparsePoly:
    """Determinant by fraction-free Gaussian elimination."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    variables = m[0][0].variables
    a = [list(r) for r in m]
    sign = 1
    prev = SparsePoly.const(variables, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return SparsePoly(variables)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = SparsePoly(variables)
        prev = piv
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: SparsePoly, g: SparsePoly, var: str) -> list[list[SparsePoly]]:
    f, g = f._coerce(g)
    m, n = f.degree(var), g.degree(var)
    fc = list(reversed(f.coefficients(var)))
    gc = list(reversed(g.coefficients(var)))
    zero = SparsePoly(f.variables)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - n - 1))
    return rows


def sylvester_resultant(f: SparsePoly, g: SparsePoly, var: str) -> SparsePoly:
    """Res_var(f, g) as the Sylvester determinant (rows of f first)."""
    f, g = f._coerce(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    m, n = f.degree(var), g.degree(var)
    if m == 0 and n == 0:
        return SparsePoly.const(f.variables, 1)
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    return bareiss_det(sylvester_matrix(f, g, var))


def discriminant(f: SparsePoly, var: str) -> SparsePoly:
    """(-1)^(m(m-1)/2) Res(f, f') / lc(f), m = deg f."""
    m = f.degree(var)
    if m is None or m < 1:
        raise ValueError(f"discriminant needs positive degree in {var}")
    if m == 1:
        return SparsePoly.const(f.variables, 1)
    res = sylvester_resultant(f, f.derivative(var), var)
    out = res.exact_div(f.leading_coeff(var))
    return -out if (m * (m - 1) // 2) % 2 else out


# -- univariate helpers (other variables specialized) -------------------------

def _trim(c: list) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _prem(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        a = [x * lb for x in a]
        for k in range(db + 1):
            a[da - db + k] -= la * b[k]
        a = _trim(a)
    return a


def _prim(c: list) -> list:
    c = _trim(c)
    if not c:
        return c
    g = 0
    for x in c:
        g = math.gcd(g, x)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def univariate_gcd(a: list, b: list) -> list:
    """Primitive gcd of integer coefficient lists (index = degree)."""
    a, b = _prim(a), _prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _prim(_prem(a, b))
    return _prim(a) if a else []


def _as_int_list(f: SparsePoly, var: str) -> list:
    extra = [v for v in f.variables if v != var and f.degree(v)]
    if extra:
        raise ValueError(f"expected a univariate polynomial in {var}, found {extra}")
    return [c.constant_value() if not c.is_zero() else 0 for c in f.coefficients(var)]


def squarefree_part(f: SparsePoly, var: str) -> SparsePoly:
    """f / gcd(f, f') made primitive."""
    c = _as_int_list(f, var)
    if len(_trim(c)) <= 1:
        return f.primitive()
    dc = [k * c[k] for k in range(1, len(c))]
    g = univariate_gcd(c, dc)
    fp = SparsePoly.from_univariate(f.variables, var, c)
    gp = SparsePoly.from_univariate(f.variables, var, g)
    return fp.exact_div(gp).primitive()


def multiplicity(factor: SparsePoly, f: SparsePoly) -> tuple[int, SparsePoly]:
    """Largest k with factor^k | f, and the cofactor."""
    if factor.is_constant() or f.is_zero():
        return 0, f
    k = 0
    while True:
        try:
            f2 = f.exact_div(factor)
        except InexactDivision:
            return k, f
        f, k = f2, k + 1


# -- Weierstrass slice experiment --------------------------------------------

@dataclass
class SliceReport:
    d: int
    seed: int | None
    b: list
    c: list
    raw_degree: int | None
    cusp_degree: int | None
    cusp_multiplicity: int
    z_degree: int | None
    squarefree_degree: int | None
    expected: int
    p0: int
    lead_ratio: str | None = None
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "d": self.d, "seed": self.seed, "B": self.b, "C": self.c,
            "raw_degree": self.raw_degree, "cusp_degree": self.cusp_degree,
            "cusp_multiplicity": self.cusp_multiplicity, "z_degree": self.z_degree,
            "squarefree_degree": self.squarefree_degree, "expected": self.expected,
            "p0": self.p0, "lead_ratio": self.lead_ratio,
        }


def sample_slice(d: int, seed: int, bound: int = 9) -> tuple[list, list]:
    """Seeded integer coefficients of B (degree 2d) and C (degree 3d), lowest first."""
    rng = random.Random(seed)

    def draw(deg):
        c = [rng.randint(-bound, bound) for _ in range(deg)]
        top = 0
        while top == 0:
            top = rng.randint(-bound, bound)
        return c + [top]

    return draw(2 * d), draw(3 * d)


def slice_discriminant(b: Sequence[int], c: Sequence[int], d: int) -> tuple[SparsePoly, SparsePoly]:
    """disc_x(4B^3 + 27(C + z x^{3d})^2) and Res_x(B, C + z x^{3d})."""
    V = ("x", "z")
    x, z = polys(V)
    B = SparsePoly.from_univariate(V, "x", b)
    C = SparsePoly.from_univariate(V, "x", c) + z * x ** (3 * d)
    delta = 4 * B ** 3 + 27 * C ** 2
    disc = discriminant(delta, "x") if delta.degree("x") else SparsePoly(V)
    if B.is_zero():
        cusp = SparsePoly(V)
    else:
        cusp = sylvester_resultant(B, C, "x") if C.degree("x") else C ** (B.degree("x") or 0)
    return disc.evaluate(x=0) if not disc.is_zero() else SparsePoly(("z",)), cusp


def weierstrass_slice_zdegree(d: int, seed: int | None = None, b=None, c=None,
                              allow_large: bool = False) -> SliceReport:
    """z-degree of the slice discriminant along the pencil z*x^{3d}.

    disc_x(4B^3 + 27(C + z x^{3d})^2) always contains Res_x(B, C + z x^{3d})
    (common roots of B and C give cusps); that factor is divided out and
    ``z_degree`` is the degree of the remaining discriminant component.
    ``raw_degree`` and ``squarefree_degree`` describe the undivided polynomial.
    """
    if d % 2:
        raise ValueError(f"Weierstrass slice needs even d, got {d}")
    if d > 2 and not allow_large:
        raise ValueError("d > 2 is long-running; pass allow_large=True")
    if b is None or c is None:
        b, c = sample_slice(d, 0 if seed is None else seed)
    b, c = list(b), list(c)
    disc, cusp = slice_discriminant(b, c, d)
    expected = 2 * (3 * d - 1)
    b0 = b[0] if b else 0
    c0 = c[0] if c else 0
    p0 = 4 * b0 ** 3 + 27 * c0 ** 2
    if disc.is_zero():
        return SliceReport(d, seed, b, c, None, None, 0, None, None, expected, p0)
    cusp = cusp.evaluate(x=0) if "x" in cusp.variables else cusp
    cusp = cusp.embed(disc.variables) if not cusp.is_zero() else cusp
    if cusp.is_zero() or cusp.is_constant():
        k, rest = 0, disc
    else:
        k, rest = multiplicity(cusp, disc)
    sqf = squarefree_part(disc, "z")
    ratio = None
    if p0:
        ratio = str(Fraction(rest.leading_coeff("z").constant_value(), p0 ** (3 * d - 1)))
    return SliceReport(d, seed, b, c, disc.degree("z"),
                       cusp.degree("z") if not cusp.is_zero() else None,
                       k, rest.degree("z"), sqf.degree("z"), expected, p0, ratio)


# -- critical value identity by rewriting -------------------------------------

@dataclass
class RewriteResult:
    verified: bool
    steps: int
    residue: SparsePoly

    @property
    def status(self) -> str:
        return "Verified" if self.verified else "Unresolved"


def _gfamily_ring(n: int, d: int):
    inner = [f"x{i}" for i in range(1, n)]
    lams = [f"lam{i}" for i in range(1, n)]
    coords = ["y"] + inner + ["xn"]
    params = ["lam", "lam0"] + lams + ["lamn", "lamnp"]
    return coords, inner, lams, coords + params


def critical_value_expression(n: int, d: int, y_coefficient: int = 2) -> tuple[SparsePoly, list]:
    """(3d-1)(f - value) for the family G, and the rewriting rules.

    Returns the polynomial and a list of (variable, power, replacement)
    rules y^2 -> ..., x_i^{3d-1} -> ..., x_n^{3d-1} -> ...
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    m = 3 * d - 1
    coords, inner, lams, V = _gfamily_ring(n, d)
    P = {v: SparsePoly.var(V, v) for v in V}
    y, xn, lam, lam0, lamn, lamnp = (P[k] for k in ("y", "xn", "lam", "lam0", "lamn", "lamnp"))
    xs = [P[v] for v in inner]
    ls = [P[v] for v in lams]
    one = SparsePoly.const(V, 1)

    # m * f, clearing the denominator of the lamnp term
    mf = m * (y ** 3 - 3 * lam0 * y
              + sum((xi ** (3 * d) - 3 * d * li * xi for xi, li in zip(xs, ls)), SparsePoly(V))
              + xn ** (3 * d) - 3 * d * lamn * xn
              - 3 * lam * (lam0 * y * xn ** (2 * d)
                           + d * sum((li * xi * xn ** m for xi, li in zip(xs, ls)), SparsePoly(V))))
    mf = mf - 3 * d * lamnp * xn ** m
    # m * (-value), with the y coefficient exposed for negative controls
    mvalue = m * (y_coefficient * lam0 * y + m * lamn * xn
                  + m * sum((li * xi for xi, li in zip(xs, ls)), SparsePoly(V))) + lamnp * xn ** m
    expr = mf + mvalue

    rules = [("y", 2, lam0 * (one + lam * xn ** (2 * d)))]
    for v, li in zip(inner, ls):
        rules.append((v, m, li * (one + lam * xn ** m)))
    rules.append(("xn", m, lamn + lamnp * xn ** (m - 1)
                  + lam * (2 * lam0 * y * xn ** (2 * d - 1)
                           + m * sum((li * xi * xn ** (m - 1) for xi, li in zip(xs, ls)),
                                     SparsePoly(V)))))
    return expr, rules


def rewrite(expr: SparsePoly, rules: list, coords: Sequence[str], max_steps: int) -> RewriteResult:
    """Replace reducible monomials one at a time, largest first.

    Monomials are ranked by total degree in ``coords``, then by the largest
    exponent of a single coordinate (pure powers go first), then
    lexicographically with later coordinates more significant.  A monomial
    matching several rules uses the rule of its highest-exponent variable.
    """
    V = expr.variables
    ci = [V.index(c) for c in coords]
    ridx = [(V.index(v), k, rhs.embed(V)) for v, k, rhs in rules]

    def rank(e):
        return (sum(e[i] for i in ci), max(e[i] for i in ci), tuple(e[i] for i in reversed(ci)))

    terms = dict(expr.terms)
    steps = 0
    while terms:
        candidates = [e for e in terms if any(e[i] >= k for i, k, _ in ridx)]
        if not candidates or steps >= max_steps:
            break
        e = max(candidates, key=rank)
        c = terms.pop(e)
        i, k, rhs = max((r for r in ridx if e[r[0]] >= r[1]), key=lambda r: e[r[0]])
        rest = list(e)
        rest[i] -= k
        for er, cr in rhs.terms.items():
            key = tuple(a + b for a, b in zip(rest, er))
            v = terms.get(key, 0) + c * cr
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        steps += 1
    residue = SparsePoly(V, terms)
    return RewriteResult(residue.is_zero(), steps, residue)


def critical_value_ideal_check(n: int, d: int, max_steps: int = 10_000,
                               y_coefficient: int = 2) -> RewriteResult:
    """Reduce (3d-1)(f - value) modulo the critical-point equations."""
    expr, rules = critical_value_expression(n, d, y_coefficient)
    coords, *_ = _gfamily_ring(n, d)
    return rewrite(expr, rules, coords, max_steps)
