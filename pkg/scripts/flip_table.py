"""Tabulate flip sequences of the end-attached mk1A configuration for every Wahl pair.

    python3 scripts/flip_table.py --max-p 12
"""

import argparse

from wahlflip.hj_core import render_chain
from wahlflip.mmp_flips import flip_sequence
from wahlflip.wahl import wahl_pairs


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-p", type=int, default=10)
    args = parser.parse_args()
    print(f"{'p':>3} {'q':>3}  {'chain':<24} {'steps':>5}  {'params':<28} delta-half")
    for p, q in sorted(wahl_pairs(args.max_p)):
        trace = flip_sequence(p, q)
        params = " ".join(
            f"({s.new_wahl.p},{s.new_wahl.q})" if s.new_wahl else "smooth" for s in trace.steps
        )
        print(
            f"{p:>3} {q:>3}  {render_chain(trace.source.chain):<24} {len(trace.steps):>5}  "
            f"{params:<28} {render_chain(trace.final_chain)}"
        )


if __name__ == "__main__":
    main()
