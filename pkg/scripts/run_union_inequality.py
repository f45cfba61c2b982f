"""Eigenvalue of a two-interval union versus its components, with the mixture scan."""
import argparse

from mixspec.experiments import union_inequality_check


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--s", type=float, nargs="+", default=[0.1, 0.3, 0.5, 0.7, 0.9])
    p.add_argument("--h", type=float, default=1 / 256)
    args = p.parse_args()
    print(f"{'s':>5} {'lambda(O1)':>12} {'lambda(union)':>14} {'drop':>10} {'best mixture':>13} {'verdict':>8}")
    for s in args.s:
        r = union_inequality_check([(-2, -1)], [(1, 2)], s, args.h)
        print(f"{s:5.2f} {r.value('lambda_omega1'):12.6f} {r.value('lambda_union'):14.6f} "
              f"{r.value('drop'):10.3e} {r.value('rq_best_mixture'):13.6f} {r.verdict:>8}")


if __name__ == "__main__":
    main()
