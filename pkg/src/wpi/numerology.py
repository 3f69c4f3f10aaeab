"""Euler numbers and the degree formulas for p_{n,d} and q_{n,d}.

The degree formulas are closed forms; ``verify_balance`` recomputes them from
the Euler numbers through the stratification identities, which is a separate
code path.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction


def e_proj(n: int) -> Fraction:
    return Fraction(n + 1)


def e_hyp(n: int, d: int) -> Fraction:
    """Smooth degree-d hypersurface in P^n."""
    return n + 1 + Fraction((1 - d) ** (n + 1) - 1, d)


def e_ci(n: int, d: int) -> Fraction:
    """Smooth complete intersection of two degree-d hypersurfaces in P^n."""
    return n + 1 + (n - 1) * Fraction((1 - d) ** n) + 2 * Fraction((1 - d) ** n - 1, d)


def e_H(n: int, d: int) -> Fraction:
    return 3 * e_proj(n) - 2 * e_hyp(n, 3 * d)


def e_HH(n: int, d: int) -> Fraction:
    return 3 * e_hyp(n, 3 * d) - 2 * e_ci(n, 3 * d)


_EULER = {
    "pn": lambda n, d: e_proj(n),
    "hyp": e_hyp,
    "ci": e_ci,
    "H": e_H,
    "HH": e_HH,
}


def euler(kind: str, n: int, d: int = 1) -> Fraction:
    """Euler number by kind.  For hyp/ci, d is the hypersurface degree; for H/HH
    it is the fibration parameter (hypersurfaces of degree 3d)."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    try:
        return _EULER[kind](n, d)
    except KeyError:
        raise ValueError(f"unknown Euler kind {kind!r}") from None


@dataclass(frozen=True)
class DegreeReport:
    n: int
    d: int
    deg_p: int
    deg_z_p: int
    deg_q: int
    wdeg_p: int
    wdeg_q: int
    deg_v_q: int
    deg_c: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _deg_p(n: int, d: int) -> int:
    return 2 * (n + 1) * (3 * d - 1) ** n


def degrees(n: int, d: int) -> DegreeReport:
    if n < 1:
        raise ValueError("degree formulas are asserted for n >= 1 only")
    if d < 1:
        raise ValueError("need d >= 1")
    m = 3 * d - 1
    M = m ** n
    return DegreeReport(
        n=n, d=d,
        deg_p=_deg_p(n, d),
        deg_z_p=2 * M,
        deg_q=(2 * n + 1) * 2 * M * (2 * M - 1),
        wdeg_p=2 * 3 * d * M,
        wdeg_q=2 * 3 * d * M * (2 * M - 1),
        deg_v_q=2 * 3 * d * m ** (n - 1) * (2 * M - 1),
        deg_c=(2 * n * m - 1) * 2 * m ** (n - 1) * (2 * M - 1),
    )


def verify_balance(n_max: int, d_max: int) -> dict:
    """Check every identity for 1 <= n <= n_max, 1 <= d <= d_max.

    Returns ``{"checked": k, "violations": [...]}``.
    """
    if n_max < 1 or d_max < 1:
        raise ValueError("bounds must be >= 1")
    violations = []
    checked = 0

    def check(name, n, d, lhs, rhs):
        nonlocal checked
        checked += 1
        if lhs != rhs:
            violations.append({"identity": name, "n": n, "d": d, "lhs": str(lhs), "rhs": str(rhs)})

    for n in range(1, n_max + 1):
        for d in range(1, d_max + 1):
            r = degrees(n, d)
            sign = (-1) ** n
            en, en1 = e_proj(n), e_proj(n - 1)
            eh, eh1, ec = e_hyp(n, 3 * d), e_hyp(n - 1, 3 * d), e_ci(n, 3 * d)
            check("deg_p", n, d, sign * (2 * en - 4 * eh + 2 * ec), r.deg_p)
            check("deg_z_p", n, d, sign * (2 * en - 2 * en1 - 2 * eh + 2 * eh1), r.deg_z_p)
            # the three strata of a generic pencil add up to e(O(d)) = n + 1
            strata_p = eh - r.deg_p * sign + (e_H(n, d) - e_HH(n, d))
            check("strata_p", n, d, strata_p, n + 1)
            strata_z = en1 - r.deg_z_p * sign + (e_H(n, d) - (3 * en1 - 2 * eh1))
            check("strata_z", n, d, strata_z, n + 1)
            check("deg_q", n, d, (r.deg_z_p - 1) * (2 * r.deg_p - r.deg_z_p), r.deg_q)
            check("wdeg_q", n, d, r.wdeg_p * (r.deg_z_p - 1), r.wdeg_q)
            check("deg_c", n, d, r.deg_q - r.deg_v_q, r.deg_c)
            check("leading_coeff", n, d, r.deg_p - r.deg_z_p, (3 * d - 1) * _deg_p(n - 1, d))
    return {"checked": checked, "violations": violations}


def formula_table(n_range, d_range) -> list[DegreeReport]:
    return [degrees(n, d) for n in n_range for d in d_range]
