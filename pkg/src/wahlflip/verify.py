"""Reproduction checks for every worked example of the 49/34 and B_{n,1} cases.

Checks look functions up through their modules at call time, so a patched
implementation is what gets verified.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dot_diagram, hj_core, mmp_flips, wahl


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _figure_rows():
    trace = mmp_flips.flip_sequence(7, 5)
    rows = [trace.steps[0].before.weights] + [s.after.weights for s in trace.steps]
    params = [
        (s.new_wahl.p, s.new_wahl.q) if s.new_wahl else "smooth" for s in trace.steps
    ]
    return rows, params, trace.final_chain


def _flip(chain):
    return mmp_flips.flip_last(mmp_flips.MK1AData(chain, len(chain)))


CHECKS = [
    ("expand-49/34", lambda: hj_core.expand(49, 34) == (2, 2, 5, 4)),
    ("evaluate-49/34", lambda: str(hj_core.evaluate((2, 2, 5, 4))) == "49/34"),
    ("dual-49/34", lambda: hj_core.dual_chain((2, 2, 5, 4)) == (4, 2, 2, 3, 2, 2)),
    (
        "dot-diagram-49/34",
        lambda: dot_diagram.build((2, 2, 5, 4)).rows == ((1, 1), (1, 1), (1, 4), (4, 3)),
    ),
    (
        "dual-from-diagram-49/34",
        lambda: dot_diagram.dual_from_diagram(dot_diagram.build((2, 2, 5, 4)))
        == (4, 2, 2, 3, 2, 2),
    ),
    (
        "zero-chain-49/34",
        lambda: hj_core.reduce_zero((2, 2, 5, 4, 1, 2, 2, 3, 2, 2, 4)).is_zero,
    ),
    ("symmetric-49/34", lambda: dot_diagram.is_symmetric(dot_diagram.build((2, 2, 5, 4)))),
    (
        "delta-position-49/34",
        lambda: dot_diagram.delta_position((2, 2, 5, 4)) == dot_diagram.DeltaPosition(3, 3),
    ),
    ("delta-half-49/34", lambda: dot_diagram.delta_half((2, 2, 5, 4)) == (2, 2, 4)),
    ("wahl-check-49/34", lambda: wahl.is_class_w((2, 2, 5, 4)).p == 7 and wahl.is_class_w((2, 2, 5, 4)).q == 5),
    ("wahl-check-[4]", lambda: (wahl.is_class_w((4,)).p, wahl.is_class_w((4,)).q) == (2, 1)),
    ("wahl-chain-7-5", lambda: wahl.wahl_chain(7, 5) == (2, 2, 5, 4)),
    ("wahl-chain-2-1", lambda: wahl.wahl_chain(2, 1) == (4,)),
    ("wahl-generate-seed", lambda: wahl.generate(2) == {(4,)}),
    ("flip-49/34", lambda: _flip((2, 2, 5, 4)).chain == (2, 5, 3)),
    ("flip-25/14", lambda: _flip((2, 5, 3)).chain == (5, 2)),
    (
        "flip-9/2-smooth",
        lambda: _flip((5, 2)).smooth and _flip((5, 2)).c_plus_weight == 4,
    ),
    (
        "flip-by-diagram-49/34",
        lambda: mmp_flips.flip_last_by_diagram(mmp_flips.MK1AData((2, 2, 5, 4), 4)).chain
        == (2, 5, 3),
    ),
    (
        "blow-down-figure-row",
        lambda: hj_core.blow_down((2, 2, 5, 4, 1, 2, 2), 4) == (2, 2, 5, 3, 1, 2),
    ),
    (
        "full-configuration-7-5",
        lambda: mmp_flips.full_configuration(7, 5).weights == (2, 2, 5, 4, 1, 2, 2),
    ),
    (
        "oracle-steps-figure",
        lambda: [
            mmp_flips.flip_oracle_step(mmp_flips.parse_configuration(c)).after.weights
            for c in ("2,2,5,4;1;2,2", "2;2,5,3;1;2", "2,2;5,2;1;")
        ]
        == [(2, 2, 5, 3, 1, 2), (2, 2, 5, 2, 1), (2, 2, 4)],
    ),
    (
        "flip-sequence-figure",
        lambda: _figure_rows()
        == (
            [(2, 2, 5, 4, 1, 2, 2), (2, 2, 5, 3, 1, 2), (2, 2, 5, 2, 1), (2, 2, 4)],
            [(5, 3), (3, 1), "smooth"],
            (2, 2, 4),
        ),
    ),
    (
        "delta-half-bn1",
        lambda: all(
            dot_diagram.delta_half((n + 2,) + (2,) * (n - 2)) == (n + 1,)
            for n in range(2, 51)
        ),
    ),
    ("bn1-identity-3", lambda: mmp_flips.bn1_reduction(3).trace.final == (4,)),
    ("bn1-identity-4", lambda: mmp_flips.bn1_reduction(4).trace.final == (4,)),
    ("bn1-kind-3", lambda: wahl.bn1_kind(3) is wahl.NeighborhoodKind.FLIPPING),
    ("bn1-kind-4", lambda: wahl.bn1_kind(4) is wahl.NeighborhoodKind.DIVISORIAL),
]


def verify_paper() -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        try:
            ok = bool(check())
            detail = "" if ok else "mismatch"
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, detail))
    return results
