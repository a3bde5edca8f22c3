"""Time the inverse-matrix sum against plain elimination on the seeded corpus.

    python scripts/timing_theorem6.py [--seed N] [--per-order K]
"""

import argparse
import time
from collections import defaultdict

from ncnewton.diffcalc import inverse_via_theorem6
from ncnewton.matrix import invert
from ncnewton.sampling import CorpusConfig, generic_corpus


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=CorpusConfig.seed)
    parser.add_argument("--per-order", type=int, default=CorpusConfig.per_order)
    args = parser.parse_args()
    corpus = generic_corpus(CorpusConfig(seed=args.seed, per_order=args.per_order))

    timings = defaultdict(lambda: [0.0, 0.0, 0])
    for inst in corpus:
        t0 = time.perf_counter()
        Z6 = inverse_via_theorem6(inst.D, inst.n)
        t1 = time.perf_counter()
        Ze = invert(inst.D.leading(inst.n))
        t2 = time.perf_counter()
        assert Z6 == Ze
        row = timings[(inst.ring, inst.n)]
        row[0] += t1 - t0
        row[1] += t2 - t1
        row[2] += 1

    print(f"{'ring':<10}{'n':>3}{'count':>7}{'theorem6 ms':>14}{'elim ms':>10}")
    for (ring, n), (a, b, c) in sorted(timings.items()):
        print(f"{ring:<10}{n:>3}{c:>7}{1000 * a / c:>14.2f}{1000 * b / c:>10.2f}")


if __name__ == "__main__":
    main()
