#!/usr/bin/env python3
"""Tabulate the partial-quotient degrees of the generating series and the
exact irrationality-measure estimates they induce.

Example:
    python scripts/degree_growth.py --max-n 6 --csv degrees.csv
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from wordcf.cf import measure_terms
from wordcf.verify import theta_expansion
from wordcf.words import lengths


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6, help="block depth of the expansion")
    parser.add_argument("--csv", default=None, help="write (n, d_n, nu_n) rows here")
    args = parser.parse_args()

    cf, _ = theta_expansion(args.max_n + 1)
    degrees = cf.degrees()
    terms = measure_terms(degrees)
    ell = lengths(args.max_n)

    print(f"expansion of the depth-{args.max_n + 1} approximant: {len(degrees)} partial quotients")
    print(f"{'n':>4} {'d_n':>6} {'nu_n':>12} {'running max':>12}")
    for i, d in enumerate(degrees, start=1):
        if i <= len(terms):
            term = terms[i - 1]
            print(f"{i:>4} {d:>6} {str(term.estimate):>12} {str(term.running_max):>12}")
        else:
            print(f"{i:>4} {d:>6} {'':>12} {'':>12}")

    print("\nblock boundaries (index 4n): estimate = 2 + d/(2+d) with d = d_{4n+1}")
    for n in range(1, args.max_n + 1):
        d_jump = degrees[4 * n]
        formula = (3 * ell[n] + ell[n - 1] + 1) // 2
        print(
            f"  n={n}: d_{4 * n + 1} = {d_jump} (formula {formula}), "
            f"estimate = {terms[4 * n - 1].estimate}"
        )

    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("n,d,nu,running_max\n")
            for i, d in enumerate(degrees, start=1):
                if i <= len(terms):
                    term = terms[i - 1]
                    fh.write(f"{i},{d},{term.estimate},{term.running_max}\n")
                else:
                    fh.write(f"{i},{d},,\n")
        print(f"\nwrote {args.csv}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
