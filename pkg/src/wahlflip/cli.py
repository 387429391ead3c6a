"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 invalid input, 3 overflow.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dot_diagram, hj_core, mmp_flips, wahl
from .errors import ChainError, ChainOverflow, DisagreementWithFormula
from .verify import verify_paper


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _params(w: wahl.WahlParams | None):
    return {"p": w.p, "q": w.q} if w is not None else "smooth"


def cmd_expand(args, out):
    chain = hj_core.expand(args.n, args.a)
    text = hj_core.render_chain(chain)
    out.write((_dump({"n": args.n, "a": args.a, "chain": text}) if args.json else text) + "\n")


def cmd_evaluate(args, out):
    v = hj_core.evaluate(hj_core.parse_chain(args.chain))
    out.write((_dump({"num": v.num, "den": v.den}) if args.json else str(v)) + "\n")


def cmd_dual(args, out):
    dual = hj_core.render_chain(hj_core.dual_chain(hj_core.parse_chain(args.chain)))
    out.write((_dump({"chain": args.chain, "dual": dual}) if args.json else dual) + "\n")


def cmd_dot_render(args, out):
    chain = hj_core.parse_chain(args.chain)
    diagram = dot_diagram.build(chain)
    try:
        delta = dot_diagram.delta_position(chain)
    except ChainError:
        delta = None
    if args.json:
        out.write(
            _dump(
                {
                    "rows": [{"start_col": s, "len": n} for s, n in diagram.rows],
                    "n_cols": diagram.n_cols,
                    "n_dots": diagram.n_dots,
                    "delta": {"row": delta.row, "col": delta.col} if delta else None,
                }
            )
            + "\n"
        )
    else:
        out.write(dot_diagram.render(diagram, delta) + "\n")


def cmd_wahl_check(args, out):
    w = wahl.is_class_w(hj_core.parse_chain(args.chain))
    out.write((_dump({"p": w.p, "q": w.q}) if args.json else f"{w.p} {w.q}") + "\n")


def cmd_wahl_from_pq(args, out):
    text = hj_core.render_chain(wahl.wahl_chain(args.p, args.q))
    out.write((_dump({"p": args.p, "q": args.q, "chain": text}) if args.json else text) + "\n")


def cmd_wahl_gen(args, out):
    chains = sorted(wahl.generate(args.max_p), key=lambda c: (wahl.is_class_w(c).p, wahl.is_class_w(c).q))
    texts = [hj_core.render_chain(c) for c in chains]
    out.write((_dump(texts) if args.json else "\n".join(texts)) + "\n")


def cmd_delta_half(args, out):
    chain = hj_core.parse_chain(args.chain)
    half = hj_core.render_chain(dot_diagram.delta_half(chain))
    if args.json:
        delta = dot_diagram.delta_position(chain)
        out.write(_dump({"delta": {"row": delta.row, "col": delta.col}, "delta_half": half}) + "\n")
    else:
        out.write(half + "\n")


def cmd_contract(args, out):
    v = mmp_flips.contraction_invariant(mmp_flips.parse_mk1a(args.data))
    out.write((_dump({"num": v.num, "den": v.den}) if args.json else str(v)) + "\n")


def cmd_flip_once(args, out):
    data = mmp_flips.parse_mk1a(args.data)
    result = mmp_flips.flip_last(data)
    by_diagram = mmp_flips.flip_last_by_diagram(data)
    if by_diagram != result:
        raise DisagreementWithFormula(
            f"diagram route gives {list(by_diagram.chain)}, formula {list(result.chain)}"
        )
    text = hj_core.render_chain(result.chain) if result.wahl else "smooth"
    if args.json:
        out.write(
            _dump(
                {
                    "wahl": _params(result.wahl),
                    "chain": text,
                    "c_plus_weight": result.c_plus_weight,
                }
            )
            + "\n"
        )
    else:
        out.write(text + "\n")


def cmd_flip_seq(args, out):
    trace = mmp_flips.flip_sequence(args.p, args.q)
    if args.json:
        out.write(mmp_flips.trace_to_json(trace) + "\n")
        return
    configs = [trace.steps[0].before] + [s.after for s in trace.steps]
    out.write("\n".join(mmp_flips.render_configuration(c) for c in configs) + "\n")


def cmd_bn1(args, out):
    report = mmp_flips.bn1_reduction(args.n)
    chains = [report.contraction] + [s.after for s in report.trace.steps]
    if args.json:
        out.write(
            _dump(
                {
                    "n": report.n,
                    "contraction": hj_core.render_chain(report.contraction),
                    "blow_downs": report.trace.blow_downs,
                    "final": hj_core.render_chain(report.trace.final),
                    "kind": report.kind.value,
                    "statement": report.statement,
                }
            )
            + "\n"
        )
    else:
        lines = [hj_core.render_chain(c) for c in chains]
        lines += [report.kind.value, report.statement]
        out.write("\n".join(lines) + "\n")


def cmd_verify_paper(args, out):
    results = verify_paper()
    if args.json:
        out.write(
            _dump([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results])
            + "\n"
        )
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f" ({r.detail})" if r.detail else "") + "\n")
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"verification failed: {failed[0].name}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(
        prog="wahlflip",
        description="Hirzebruch-Jung chains, Wahl chains and mk1A flip sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("expand", cmd_expand, "continued fraction of n/a")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    add("evaluate", cmd_evaluate, "value of a chain").add_argument("chain")
    add("dual", cmd_dual, "dual chain").add_argument("chain")
    add("dot-render", cmd_dot_render, "ASCII dot diagram").add_argument("chain")
    add("wahl-check", cmd_wahl_check, "recognize a class-W chain").add_argument("chain")
    p = add("wahl-from-pq", cmd_wahl_from_pq, "chain of p^2/(pq-1)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add("wahl-gen", cmd_wahl_gen, "enumerate class-W chains").add_argument(
        "--max-p", type=int, required=True
    )
    add("delta-half", cmd_delta_half, "delta-half chain").add_argument("chain")
    add("contract", cmd_contract, "Delta/Omega of mk1A data").add_argument("data")
    add("flip-once", cmd_flip_once, "flip mk1A data underlined at the end").add_argument("data")
    p = add("flip-seq", cmd_flip_seq, "full flip sequence for (p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add("bn1", cmd_bn1, "B_{n,1} reduction and kind").add_argument("n", type=int)
    add("verify-paper", cmd_verify_paper, "reproduce all worked examples")
    return parser


def run(args: argparse.Namespace, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        status = args.func(args, out)
    except ChainOverflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return 3
    except DisagreementWithFormula as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return 1
    except ChainError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    return status or 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
