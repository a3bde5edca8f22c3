"""Print how the divided difference of x^d at x0, x0+eps, ..., x0+m*eps
approaches the Taylor coefficient as eps halves.

    python scripts/confluent_table.py --degree 5 --m 2 --x0 1/3
"""

import argparse
from fractions import Fraction

from ncnewton.applications import confluent_limit_check
from ncnewton.polynomial import X


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--degree", type=int, default=4)
    parser.add_argument("--m", type=int, default=2)
    parser.add_argument("--x0", type=Fraction, default=Fraction(1))
    parser.add_argument("--steps", type=int, default=8)
    args = parser.parse_args()

    prev = None
    print(f"{'eps':>8} {'divided difference':>28} {'error':>22} {'ratio':>8}")
    for j in range(1, args.steps + 1):
        eps = Fraction(1, 2 ** j)
        dd, target = confluent_limit_check(X ** args.degree, args.x0, args.m, eps)
        err = abs(dd - target)
        ratio = f"{float(err / prev):.4f}" if prev else ""
        print(f"{str(eps):>8} {str(dd):>28} {float(err):>22.12g} {ratio:>8}")
        prev = err
    print(f"target f^({args.m})(x0)/{args.m}! = {target}")


if __name__ == "__main__":
    main()
