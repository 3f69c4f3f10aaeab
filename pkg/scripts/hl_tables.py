"""Closed-form vs brute-force critical values, and family G continuation.

    python scripts/hl_tables.py --n 2 --d 1
"""
import argparse
import random
from dataclasses import dataclass

from wpi import hl
from wpi.suites import sample_g_params


@dataclass
class Config:
    n: int = 1
    d: int = 2
    samples: int = 5
    seed: int = 0


def value_table(cfg: Config) -> None:
    p = hl.HLParams.canonical(cfg.n, cfg.d)
    closed = hl.closed_form_values(p)
    brute = hl.brute_force_values(p)
    print(f"# n={cfg.n} d={cfg.d} v={p.v}")
    print(f"{'index':>10} {'closed form':>28} {'nearest brute force':>28}")
    for idx, z in closed.items():
        b = min(brute, key=lambda w: abs(w - z))
        print(f"{'.'.join(map(str, idx)):>10} {z.real:13.9f}{z.imag:+13.9f}i {b.real:13.9f}{b.imag:+13.9f}i")
    ok, dist = hl.match_multisets(closed.values(), brute, 1e-9)
    worst, counts = hl.circle_residuals(p) if p.n >= 1 else (0.0, {})
    print(f"# match={ok} max distance {dist:.2e}; circle residual {worst:.2e}, points per circle {sorted(set(counts.values()))}")


def family_g(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    print("# family G at lam = 0.5 lam_crit")
    for k in range(cfg.samples):
        g = sample_g_params(rng, 1 + k % 2)
        lam = 0.5 * hl.lambda_crit(g)
        rep = hl.largest_report(g, lam)
        print(f"n={g.n} lam0={g.lam0:.3f} lam_n={g.lam_n:.3f} lam_np={g.lam_np:.3f} "
              f"lam_crit={2 * lam:.6f} f*={rep.distinguished_value.real:.6f} largest={rep.ok}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k}", type=int, default=v)
    cfg = Config(**vars(ap.parse_args()))
    value_table(cfg)
    family_g(cfg)


if __name__ == "__main__":
    main()
