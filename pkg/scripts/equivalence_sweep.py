#!/usr/bin/env python3
"""Sweep the Sagle-Yamaguti / Mal'tsev equivalence over random algebras.

The two identities are classically equivalent for anticommutative algebras
in characteristic 0.  This experiment stress-tests that claim empirically:
it runs both checks on every catalog algebra and on a seeded batch of
random antisymmetric dim-3 algebras with small integer constants, and
reports any verdict disagreement (exit code 1 if one is found).
"""
import argparse
import random
import sys

from maltsev import Algebra, Vector, check_equivalence
from maltsev.catalog import full_catalog


def random_dim3_algebra(rng: random.Random, index: int) -> Algebra:
    brackets = {
        pair: Vector([rng.randint(-2, 2) for _ in range(3)])
        for pair in ((0, 1), (0, 2), (1, 2))
    }
    return Algebra(f"rand3-{index}", ("e1", "e2", "e3"), brackets)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100,
                        help="number of random algebras (default 100)")
    parser.add_argument("--seed", type=int, default=20260809)
    parser.add_argument("--verbose", action="store_true",
                        help="print one line per algebra")
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    algebras = list(full_catalog())
    algebras += [random_dim3_algebra(rng, i) for i in range(args.count)]

    disagreements = []
    both_hold = 0
    for A in algebras:
        eq = check_equivalence(A)
        if eq.maltsev.holds:
            both_hold += 1
        if args.verbose:
            print(f"{A.name:12s} maltsev={'holds' if eq.maltsev.holds else 'fails':5s} "
                  f"sagle-yamaguti={'holds' if eq.sagle_yamaguti.holds else 'fails':5s} "
                  f"agree={eq.agree}")
        if not eq.agree:
            disagreements.append(eq)

    print(f"\n{len(algebras)} algebras checked "
          f"(catalog {len(full_catalog())} + {args.count} random, seed {args.seed})")
    print(f"both identities hold on {both_hold}, "
          f"verdicts disagree on {len(disagreements)}")
    for eq in disagreements:
        print(f"  DISAGREEMENT on {eq.algebra}: "
              f"maltsev={eq.maltsev.holds} sagle-yamaguti={eq.sagle_yamaguti.holds}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
