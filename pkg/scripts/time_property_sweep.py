"""Time the round-trip/duality sweep over all coprime (n, a) up to a bound.

    python3 scripts/time_property_sweep.py --max-n 2000
"""

import argparse
import time
from math import gcd

from wahlflip.dot_diagram import build, dual_from_diagram
from wahlflip.hj_core import dual_chain, evaluate, expand, reverse


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=2000)
    args = parser.parse_args()
    start = time.perf_counter()
    count = failures = 0
    for n in range(2, args.max_n + 1):
        for a in range(1, n):
            if gcd(n, a) != 1:
                continue
            count += 1
            c = expand(n, a)
            d = dual_chain(c)
            v, w = evaluate(c), evaluate(reverse(c))
            ok = (v.num, v.den) == (n, a) and dual_chain(d) == c
            ok = ok and w.num == n and a * w.den % n == 1 and dual_from_diagram(build(c)) == d
            failures += not ok
    elapsed = time.perf_counter() - start
    print(f"{count} pairs, {failures} failures, {elapsed:.1f}s ({1e6 * elapsed / count:.1f} us/pair)")


if __name__ == "__main__":
    main()
