"""Relative gap (lambda2 - lambda1)/lambda1 on two-interval domains as s_minus shrinks.

Prints the symmetric and asymmetric domains side by side, optionally over
several lattice spacings to show the values are converged in h.
"""
import argparse

from mixspec.experiments import LAPLACIAN, solve
from mixspec.grid import build_grid

DOMAINS = {
    "symmetric": [(-1.5, -0.5), (0.5, 1.5)],
    "asymmetric": [(-0.75, -0.25), (0.5, 1.5)],
}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--s", type=float, nargs="+", default=[0.5, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01])
    p.add_argument("--n-per-unit", type=int, nargs="+", default=[128, 256])
    args = p.parse_args()

    for n in args.n_per_unit:
        grids = {k: build_grid(d, 1 / n) for k, d in DOMAINS.items()}
        print(f"h = 1/{n}")
        print(f"{'s':>6} " + " ".join(f"{k:>12}" for k in grids))
        for s in args.s:
            gaps = [solve(g, LAPLACIAN, [(s, 1.0)], k=2)[1].gap for g in grids.values()]
            print(f"{s:6.3f} " + " ".join(f"{v:12.5f}" for v in gaps))


if __name__ == "__main__":
    main()
