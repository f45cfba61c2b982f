"""Localization sweep: shrink the minus order onto 0 and print the convergence table.

    python3 scripts/run_localization.py --h 0.001953125 --eps 0.2 0.1 0.05 0.025 0.0125
"""
import argparse

from mixspec.experiments import localization_sweep


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--interval", type=float, nargs=2, default=[0.0, 1.0])
    p.add_argument("--h", type=float, default=1 / 512)
    p.add_argument("--eps", type=float, nargs="+", default=[0.2, 0.1, 0.05, 0.025, 0.0125])
    p.add_argument("--variant", choices=["dirac", "split"], default="dirac")
    args = p.parse_args()

    r = localization_sweep([tuple(args.interval)], [(1.0, 1.0)], args.eps, args.h, variant=args.variant)
    lam0 = r.value("lambda0")
    print(f"lambda0 = {lam0:.10f}")
    print(f"{'eps':>8} {'lambda_eps':>14} {'rel_err':>10} {'|u-u0|':>10}")
    for eps in args.eps:
        lam = r.value(f"eps={eps!r}/lambda")
        print(f"{eps:8.4f} {lam:14.8f} {abs(lam - lam0) / lam0:10.2e} {r.value(f'eps={eps!r}/vector_distance'):10.2e}")
    print(f"verdict: {r.verdict}  {r.criteria}")


if __name__ == "__main__":
    main()
