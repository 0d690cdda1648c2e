#!/usr/bin/env python3
"""Table of coincidence rotations of the square lattice up to a given index.

For each rotation: Σ, its factorization, the rotation angle in degrees (for
display only), and the Σ pair recomputed through the lattice-intersection
route as a cross-check.
"""

import argparse
import math

from csl.gaussian import coincidence_index_z2, enumerate_soc_z2, soc_matrix
from csl.lattice import coincidence_index


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-index", type=int, default=50)
    parser.add_argument("--first-quadrant", action="store_true", help="skip the unit multiples (unit_exp != 0)")
    args = parser.parse_args()

    print(f"{'sigma':>6} {'q':>16} {'angle':>9}  factors   check")
    for f in enumerate_soc_z2(args.max_index):
        if args.first_quadrant and f.unit_exp:
            continue
        q = f.reconstruct()
        angle = math.degrees(math.atan2(float(q.imag), float(q.real)))
        pair = coincidence_index(soc_matrix(q))
        sigma = coincidence_index_z2(f)
        check = "ok" if (pair.sigma1, pair.sigma2) == (sigma, sigma) else f"MISMATCH {pair}"
        factors = " ".join(f"{p}^{n}" for p, n in f.factors.items()) or "-"
        print(f"{sigma:>6} {str(q):>16} {angle:>9.3f}  i^{f.unit_exp} {factors:<8} {check}")


if __name__ == "__main__":
    main()
