#!/usr/bin/env python3
"""Explore the continued fraction of the small root of x^4 + x^2 - Tx + 1
over GF(p): certified quotients, coefficient sequence versus the word, and
the (unexplained) exponent sequence.

Example:
    python scripts/quartic_scan.py --p 3 --prec 2000 --k 200
"""

import argparse
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from wordcf.verify import quartic_expansion
from wordcf.words import first_difference_rank, prefix


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--prec", type=int, default=1000)
    parser.add_argument("--k", type=int, default=100, help="coefficients compared against the word")
    args = parser.parse_args()

    expansion = quartic_expansion(args.p, args.prec)
    count = len(expansion.cf.quotients) - 1
    print(f"p = {args.p}, precision {args.prec}: {count} certified partial quotients")
    print(f"all monomials: {'yes' if expansion.monomial else 'no'}")
    if not expansion.monomial:
        return 0

    print(f"coefficient values: {sorted(set(expansion.lambdas))}")
    print(f"exponent histogram: {dict(sorted(Counter(expansion.exponents).items()))}")

    if args.p == 3:
        k = min(args.k, len(expansion.lambdas))
        word = prefix(k).values()
        coeffs = expansion.lambdas[:k]
        try:
            rank = first_difference_rank(coeffs, word)
            verdict = f"first disagreement at rank {rank}"
        except ValueError:
            verdict = f"agree through rank {k}"
        print(f"coefficients vs word prefix: {verdict}")
        print("lambda:", "".join(str(c) for c in coeffs[:80]))
        print("word:  ", "".join(str(v) for v in word[:80]))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
