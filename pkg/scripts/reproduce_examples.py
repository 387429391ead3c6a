"""Print the 49/34 worked example end to end, then the verification report."""

from wahlflip.dot_diagram import build, delta_half, delta_position, render
from wahlflip.hj_core import dual_chain, expand, render_chain
from wahlflip.mmp_flips import bn1_reduction, flip_sequence, render_configuration
from wahlflip.verify import verify_paper


def main() -> int:
    chain = expand(49, 34)
    delta = delta_position(chain)
    print("chain     ", render_chain(chain))
    print("dual      ", render_chain(dual_chain(chain)))
    print("delta     ", (delta.row, delta.col))
    print("delta-half", render_chain(delta_half(chain)))
    print(render(build(chain), delta))
    print()
    trace = flip_sequence(7, 5)
    print(render_configuration(trace.steps[0].before))
    for step in trace.steps:
        tag = f"({step.new_wahl.p},{step.new_wahl.q})" if step.new_wahl else "smooth"
        print(f"{render_configuration(step.after):<20} {tag}")
    print()
    for n in (3, 4, 5):
        report = bn1_reduction(n)
        path = " -> ".join(render_chain(s.before) for s in report.trace.steps)
        print(f"B_{n},1  {report.kind.value:<10} {path} -> {render_chain(report.trace.final)}")
    print()
    results = verify_paper()
    for r in results:
        print("PASS" if r.passed else "FAIL", r.name)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
