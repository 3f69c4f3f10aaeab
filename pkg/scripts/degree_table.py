"""Degree formulas and the balance check over a range of (n, d).

    python scripts/degree_table.py --n-max 6 --d-max 6
"""
import argparse
from dataclasses import dataclass

from wpi.numerology import formula_table, verify_balance


@dataclass
class Config:
    n_max: int = 4
    d_max: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--d-max", type=int, default=Config.d_max)
    cfg = Config(**vars(ap.parse_args()))
    cols = ["n", "d", "deg_p", "deg_z_p", "deg_q", "wdeg_p", "wdeg_q", "deg_v_q", "deg_c"]
    print(",".join(cols))
    for r in formula_table(range(1, cfg.n_max + 1), range(1, cfg.d_max + 1)):
        print(",".join(str(getattr(r, c)) for c in cols))
    rep = verify_balance(cfg.n_max, cfg.d_max)
    print(f"# {rep['checked']} identities checked, {len(rep['violations'])} violations")


if __name__ == "__main__":
    main()
