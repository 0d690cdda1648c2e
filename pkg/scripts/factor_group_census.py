#!/usr/bin/env python3
"""Census of the square classes eta(R) over similarity maps.

Part 1: Z^2 directions z/|z| with N(z) <= bound, grouped by class.
Part 2: random similarity maps on several rational lattices, showing that
non-identity classes appear only in even dimension and always have order 2.
"""

import argparse
import random
from collections import Counter

from csl.factor_group import class_order, eta_of, eta_of_direction
from csl.gaussian import GaussInt, sos_decompose
from csl.generators import lattices_by_dimension, random_similarity
from csl.verify import DEFAULT_SEED


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=100)
    parser.add_argument("--maps", type=int, default=200)
    parser.add_argument("--seed", type=lambda s: int(s, 16), default=DEFAULT_SEED)
    args = parser.parse_args()

    r = int(args.bound ** 0.5)
    classes = Counter(
        eta_of_direction(sos_decompose(GaussInt(a, b))).squarefree_part
        for a in range(-r, r + 1)
        for b in range(-r, r + 1)
        if 0 < a * a + b * b <= args.bound
    )
    print(f"Z^2 directions with N(z) <= {args.bound}: {len(classes)} square classes")
    for c, n in sorted(classes.items()):
        print(f"  class {c:>4}: {n} directions")

    rng = random.Random(args.seed)
    print(f"\n{args.maps} random similarity maps per lattice")
    for lat in lattices_by_dimension(rng):
        seen = Counter()
        for _ in range(args.maps):
            c = eta_of(random_similarity(rng, lat))
            seen[(c.squarefree_part, class_order(c, lat.dim))] += 1
        nontrivial = sum(n for (c, _), n in seen.items() if c != 1)
        gram = [[str(x) for x in row] for row in lat.gram]
        print(f"  d={lat.dim} gram={gram}: {nontrivial} outside SOC, classes {sorted({c for c, _ in seen})[:10]}")


if __name__ == "__main__":
    main()
