"""Critical values of the linearly perturbed Brieskorn-Pham polynomial.

Two independent routes to the discriminant points of the pencil f + z for

    f = y^3 - 3 v0 y + sum_k (x_k^{3d} - 3d v_k x_k)

are compared: the closed form indexed by I_{n,d} and a brute-force evaluation
of f at its critical points.  A discriminant point is z = -f(p) at a critical
point p.

The second half handles the family G (parameters lam, lam0, lam_i, lam_n,
lam_n'): seeding its critical points at lam = 0 and Newton-continuing them in
lam.
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .lattice import build_index_set

CANONICAL_RATIO = 0.01


class ContinuationError(RuntimeError):
    pass


@dataclass(frozen=True)
class HLParams:
    n: int
    d: int
    v: tuple  # v0..vn

    def __post_init__(self):
        if len(self.v) != self.n + 1:
            raise ValueError(f"need {self.n + 1} parameters v0..vn, got {len(self.v)}")

    @classmethod
    def canonical(cls, n: int, d: int, v0: float = 1.0, ratio: float = CANONICAL_RATIO) -> "HLParams":
        return cls(n, d, tuple(v0 * ratio ** k for k in range(n + 1)))

    def is_canonical(self) -> bool:
        vs = [complex(x) for x in self.v]
        if any(abs(x.imag) > 0 or x.real <= 0 for x in vs):
            return False
        return all(vs[k + 1].real <= CANONICAL_RATIO * vs[k].real * (1 + 1e-12)
                   for k in range(self.n))

    def truncated(self) -> "HLParams":
        return HLParams(self.n - 1, self.d, self.v[:-1])


def _require_canonical(p: HLParams) -> None:
    if not p.is_canonical():
        raise ValueError(f"parameters {p.v} are not canonical (positive real, ratio <= {CANONICAL_RATIO})")


def closed_form_values(p: HLParams) -> dict:
    """Map multi-index -> discriminant point from the product formula."""
    _require_canonical(p)
    m = 3 * p.d - 1
    eta = cmath.exp(2j * math.pi / m)
    v = [float(x.real if isinstance(x, complex) else x) for x in p.v]
    lin = [vk ** (3 * p.d / m) for vk in v[1:]]
    table = {}
    for idx in build_index_set(p.n, p.d):
        z = 2 * (-1) ** idx[0] * v[0] ** 1.5
        z += m * sum(eta ** ik * lk for ik, lk in zip(idx[1:], lin))
        table[idx] = complex(z)
    return table


def _x_roots(vk: complex, d: int) -> list:
    """Critical points of x^{3d} - 3d v x: roots of x^{3d-1} = v, Newton-polished."""
    m = 3 * d - 1
    coeffs = [1] + [0] * (m - 1) + [-vk]
    roots = []
    for r in np.roots(coeffs):
        r = complex(r)
        for _ in range(3):
            if r == 0:
                break
            r -= (r ** m - vk) / (m * r ** (m - 1))
        roots.append(r)
    return roots


def critical_points(p: HLParams) -> list:
    """All critical points (y, x1..xn) of the separated polynomial."""
    v0 = complex(p.v[0])
    s = cmath.sqrt(v0)
    ys = [s, -s]
    xs = [_x_roots(complex(vk), p.d) for vk in p.v[1:]]
    pts = [[y] for y in ys]
    for roots in xs:
        pts = [pt + [r] for pt in pts for r in roots]
    return pts


def f_separated(p: HLParams, pt) -> complex:
    y, *xs = pt
    val = y ** 3 - 3 * p.v[0] * y
    for xk, vk in zip(xs, p.v[1:]):
        val += xk ** (3 * p.d) - 3 * p.d * vk * xk
    return complex(val)


def critical_values(p: HLParams) -> list:
    return [f_separated(p, pt) for pt in critical_points(p)]


def brute_force_values(p: HLParams) -> list:
    """Discriminant points z = -f(p) over all critical points."""
    return [-c for c in critical_values(p)]


def match_multisets(a, b, tol: float) -> tuple[bool, float]:
    """Greedy nearest-neighbour matching; (injective and within tol, max distance)."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False, math.inf
    free = list(range(len(b)))
    worst = 0.0
    for x in a:
        k = min(free, key=lambda j: abs(x - b[j]))
        worst = max(worst, abs(x - b[k]))
        free.remove(k)
    return worst < tol, worst


def verify_hl_match(p: HLParams, tol: float = 1e-9) -> bool:
    ok, _ = match_multisets(closed_form_values(p).values(), brute_force_values(p), tol)
    return ok


def verify_root_of_unity_invariance(p: HLParams, tol: float = 1e-9) -> bool:
    """v0 -> w v0 (w^3 = 1) and v_k -> xi v_k (xi^{3d} = 1) keep the value multiset."""
    base = brute_force_values(p)
    k3 = 3 * p.d
    for kappa in range(p.n + 1):
        order = 3 if kappa == 0 else k3
        for j in range(1, order):
            root = cmath.exp(2j * math.pi * j / order)
            v = list(p.v)
            v[kappa] = root * v[kappa]
            moved = brute_force_values(HLParams(p.n, p.d, tuple(v)))
            if not match_multisets(base, moved, tol)[0]:
                return False
    return True


def circle_residuals(p: HLParams) -> tuple[float, dict]:
    """Max | |z - c| - r | with c the nearest truncated value, and per-centre counts."""
    if p.n < 1:
        raise ValueError("circle structure needs n >= 1")
    m = 3 * p.d - 1
    r = m * abs(complex(p.v[-1])) ** (3 * p.d / m)
    centres = brute_force_values(p.truncated())
    counts = {k: 0 for k in range(len(centres))}
    worst = 0.0
    for z in brute_force_values(p):
        k = min(range(len(centres)), key=lambda j: abs(z - centres[j]))
        counts[k] += 1
        worst = max(worst, abs(abs(z - centres[k]) - r))
    return worst, counts


def verify_circles(p: HLParams, tol: float = 1e-9) -> bool:
    worst, counts = circle_residuals(p)
    return worst < tol and all(c == 3 * p.d - 1 for c in counts.values())


# -- the family G ------------------------------------------------------------

@dataclass(frozen=True)
class GParams:
    n: int
    d: int
    lam0: float
    lam_n: float
    lam_np: float = 0.0
    lam_i: tuple = ()  # lam_1 .. lam_{n-1}
    lam: float = 0.0

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        if len(self.lam_i) != self.n - 1:
            raise ValueError(f"need {self.n - 1} inner parameters lam_i, got {len(self.lam_i)}")

    @property
    def m(self) -> int:
        return 3 * self.d - 1

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "lam": self.lam, "lam0": self.lam0,
                "lam_i": list(self.lam_i), "lam_n": self.lam_n, "lam_np": self.lam_np}


def lambda_crit(g: GParams, rtol: float = 1e-12) -> float:
    """Smallest positive root of 1 - 2 lam^{3/2} lam0^{3/2} - m lam^{3d/m} sum lam_i^{3d/m}."""
    a = abs(g.lam0) ** 1.5
    e = 3 * g.d / g.m
    b = g.m * sum(abs(li) ** e for li in g.lam_i)

    def h(t):
        return 1 - 2 * t ** 1.5 * a - b * t ** e

    lo, hi = 0.0, 1.0
    for _ in range(200):
        if h(hi) < 0:
            break
        lo, hi = hi, hi * 2
    else:
        raise ValueError("no sign change: parameters outside the regime with a critical lam")
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if h(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gradient_system(g: GParams, lam: float, u: np.ndarray) -> np.ndarray:
    """Scaled gradient (df/dy / 3, df/dx_i / 3d, df/dx_n / 3d)."""
    d, m = g.d, g.m
    y, xs, xn = u[0], u[1:-1], u[-1]
    out = np.empty(len(u), dtype=complex)
    out[0] = y ** 2 - g.lam0 * (1 + lam * xn ** (2 * d))
    for k, (xi, li) in enumerate(zip(xs, g.lam_i), start=1):
        out[k] = xi ** m - li * (1 + lam * xn ** m)
    inner = sum(li * xi for xi, li in zip(xs, g.lam_i))
    out[-1] = (xn ** m - g.lam_n - g.lam_np * xn ** (m - 1)
               - lam * (2 * g.lam0 * y * xn ** (2 * d - 1) + m * inner * xn ** (m - 1)))
    return out


def gradient_jacobian(g: GParams, lam: float, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(dF/du, dF/dlam)."""
    d, m = g.d, g.m
    y, xs, xn = u[0], u[1:-1], u[-1]
    k = len(u)
    J = np.zeros((k, k), dtype=complex)
    dl = np.zeros(k, dtype=complex)
    J[0, 0] = 2 * y
    J[0, -1] = -g.lam0 * lam * 2 * d * xn ** (2 * d - 1)
    dl[0] = -g.lam0 * xn ** (2 * d)
    for i, (xi, li) in enumerate(zip(xs, g.lam_i), start=1):
        J[i, i] = m * xi ** (m - 1)
        J[i, -1] = -li * lam * m * xn ** (m - 1)
        dl[i] = -li * xn ** m
    inner = sum(li * xi for xi, li in zip(xs, g.lam_i))
    J[-1, 0] = -lam * 2 * g.lam0 * xn ** (2 * d - 1)
    for i, li in enumerate(g.lam_i, start=1):
        J[-1, i] = -lam * m * li * xn ** (m - 1)
    J[-1, -1] = (m * xn ** (m - 1) - g.lam_np * (m - 1) * xn ** (m - 2)
                 - lam * (2 * g.lam0 * y * (2 * d - 1) * xn ** (2 * d - 2)
                          + m * inner * (m - 1) * xn ** (m - 2)))
    dl[-1] = -(2 * g.lam0 * y * xn ** (2 * d - 1) + m * inner * xn ** (m - 1))
    return J, dl


def f_family(g: GParams, lam: float, u) -> complex:
    d, m = g.d, g.m
    y, xs, xn = u[0], u[1:-1], u[-1]
    val = y ** 3 - 3 * g.lam0 * y
    for xi, li in zip(xs, g.lam_i):
        val += xi ** (3 * d) - 3 * d * li * xi
    val += xn ** (3 * d) - 3 * d * g.lam_n * xn - (3 * d / m) * g.lam_np * xn ** m
    val -= 3 * lam * (g.lam0 * y * xn ** (2 * d)
                      + d * sum(li * xi for xi, li in zip(xs, g.lam_i)) * xn ** m)
    return complex(val)


def value_formula(g: GParams, u) -> complex:
    """Critical value predicted from the coordinates alone."""
    m = g.m
    y, xs, xn = u[0], u[1:-1], u[-1]
    return complex(-2 * g.lam0 * y - m * g.lam_n * xn - g.lam_np * xn ** m / m
                   - m * sum(li * xi for xi, li in zip(xs, g.lam_i)))


def seed_points(g: GParams) -> list[np.ndarray]:
    """Critical points at lam = 0, where the system separates."""
    m = g.m
    s = cmath.sqrt(g.lam0)
    ys = [s, -s]
    inner = [_x_roots(complex(li), g.d) for li in g.lam_i]
    last = [complex(r) for r in np.roots([1, -g.lam_np] + [0] * (m - 2) + [-g.lam_n])]
    pts = [[y] for y in ys]
    for roots in inner + [last]:
        pts = [pt + [r] for pt in pts for r in roots]
    out = []
    for pt in pts:
        u = np.array(pt, dtype=complex)
        out.append(_newton(g, 0.0, u, tol=1e-14, maxit=20)[0])
    return out


def distinguished_seed(g: GParams) -> np.ndarray:
    """The seed with y, x_i, x_n all positive real."""
    best = None
    for u in seed_points(g):
        if all(abs(c.imag) < 1e-12 and c.real > 0 for c in u):
            best = u
    if best is None:
        raise ValueError("no positive real critical point at lam = 0")
    return best


def _newton(g: GParams, lam: float, u: np.ndarray, tol: float = 1e-12, maxit: int = 30):
    for _ in range(maxit):
        F = gradient_system(g, lam, u)
        if np.linalg.norm(F) < tol:
            return u, True
        J, _ = gradient_jacobian(g, lam, u)
        try:
            u = u - np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            return u, False
    return u, bool(np.linalg.norm(gradient_system(g, lam, u)) < tol)


@dataclass
class ContinuedPoint:
    seed: np.ndarray
    point: np.ndarray
    value: complex
    residual: float
    ok: bool
    halvings: int = 0

    def to_dict(self) -> dict:
        c = lambda z: [z.real, z.imag]
        return {"seed": [c(z) for z in self.seed], "point": [c(z) for z in self.point],
                "value": c(self.value), "residual": self.residual, "ok": self.ok}


def _track(g: GParams, u: np.ndarray, target: float, step: float, max_halvings: int = 30):
    lam, halvings = 0.0, 0
    while lam < target:
        h = min(step, target - lam)
        J, dl = gradient_jacobian(g, lam, u)
        try:
            tangent = -np.linalg.solve(J, dl)
        except np.linalg.LinAlgError:
            return u, lam, halvings, False
        trial, ok = _newton(g, lam + h, u + h * tangent, maxit=8)
        # a converged step must stay close to its prediction
        if ok and np.linalg.norm(trial - u) < 0.5 * (1 + np.linalg.norm(u)):
            u, lam = trial, lam + h
        else:
            step /= 2
            halvings += 1
            if halvings > max_halvings:
                return u, lam, halvings, False
    return u, lam, halvings, True


def continue_critical_points(g: GParams, lam_target: float, residual_tol: float = 1e-10) -> list[ContinuedPoint]:
    """Track every lam = 0 critical point to lam_target."""
    crit = lambda_crit(g)
    if lam_target < 0 or lam_target >= 0.9 * crit:
        raise ValueError(f"lam_target={lam_target} outside [0, 0.9 lam_crit={0.9 * crit})")
    step = crit / 200
    out = []
    for s in seed_points(g):
        u, lam, halvings, ok = _track(g, s.copy(), lam_target, step)
        if ok:
            u, _ = _newton(g, lam_target, u, tol=1e-13)
        res = float(np.linalg.norm(gradient_system(g, lam_target, u)))
        out.append(ContinuedPoint(s, u, f_family(g, lam_target, u), res,
                                  ok and res < residual_tol, halvings))
    return out


def points_distinct(points: list[ContinuedPoint], tol: float = 1e-8) -> bool:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if np.linalg.norm(points[i].point - points[j].point) < tol:
                return False
    return True


@dataclass
class LargestReport:
    lam: float
    distinguished_value: complex
    positive_real: bool
    max_real: bool
    max_modulus: bool
    all_continued: bool
    extras: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.positive_real and self.max_real and self.max_modulus and self.all_continued


def largest_report(g: GParams, lam_target: float, tol: float = 1e-9) -> LargestReport:
    if not (g.lam0 > 0 and g.lam_n > 0 and g.lam_np >= 0 and all(li > 0 for li in g.lam_i)):
        raise ValueError("precondition: lam0, lam_i, lam_n positive real and lam_n' >= 0")
    pts = continue_critical_points(g, lam_target)
    star = distinguished_seed(g)
    k = min(range(len(pts)), key=lambda j: np.linalg.norm(pts[j].seed - star))
    p = pts[k]
    z_star = -p.value
    others = [q for j, q in enumerate(pts) if j != k]
    positive = all(abs(c.imag) < tol and c.real > 0 for c in p.point)
    max_real = all(z_star.real >= (-q.value).real - tol for q in others)
    max_mod = all(abs(p.value) >= abs(q.value) - tol for q in others)
    return LargestReport(lam_target, p.value, positive, max_real, max_mod,
                         all(q.ok for q in pts) and points_distinct(pts))


def verify_largest(g: GParams, lam_target: float, tol: float = 1e-9) -> bool:
    """The continued positive real critical point has the largest critical value.

    "Largest" is checked both in modulus and as the largest real part of the
    discriminant point z = -f(p); the point itself must stay positive real.
    """
    return largest_report(g, lam_target, tol).ok


def value_identity_residuals(g: GParams, lam_target: float) -> list[float]:
    return [abs(p.value - value_formula(g, p.point)) for p in continue_critical_points(g, lam_target)]


def table_json(p: HLParams) -> str:
    table = closed_form_values(p)
    return json.dumps({"n": p.n, "d": p.d, "v": [float(complex(x).real) for x in p.v],
                       "values": [{"index": list(k), "re": z.real, "im": z.imag}
                                  for k, z in table.items()]})
