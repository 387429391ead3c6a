"""mk1A flips at the level of minimal resolutions.

A flip of the (-1)-curve ``C`` attached to the last curve of a Wahl chain is
computed two ways:

* :func:`flip_last` applies the closed-form chain surgery
  ``[b_1..b_r] -> [b_2..b_i - 1]`` (``i`` the last index with ``b_i >= 3``);
* :func:`flip_oracle_step` blows down ``C`` and every (-1)-curve this creates
  inside the Wahl chain, tracking which curve is which.

:func:`flip_sequence` iterates the oracle from the full configuration
``[b_1..b_r, 1, a_e..a_{j+2}]`` and checks every step against the formula.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .dot_diagram import build, delta_half, delta_position, from_dots
from .errors import (
    AllTwos,
    DisagreementWithFormula,
    IndexOutOfRange,
    MultipleMinusOnes,
    NoMinusOne,
    NotClassW,
    OutOfRange,
    ParseError,
    UnderlineNotLast,
)
from .hj_core import (
    Chain,
    Continuant,
    ReductionTrace,
    blow_down,
    dual_chain,
    evaluate,
    parse_chain,
    reduce_zero,
    render_chain,
)
from .wahl import (
    NeighborhoodKind,
    WahlParams,
    bn1_kind,
    bn1_statement,
    is_class_w,
    wahl_chain,
)

_MK1A_RE = re.compile(r"((?:0|[1-9][0-9]*),)*\*(0|[1-9][0-9]*)(,(0|[1-9][0-9]*))*")


@dataclass(frozen=True)
class MK1AData:
    """A Wahl chain with the curve met by ``C`` marked (1-based ``underline``)."""

    chain: Chain
    underline: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "chain", tuple(self.chain))
        is_class_w(self.chain)
        if not 1 <= self.underline <= len(self.chain):
            raise IndexOutOfRange(
                f"underline {self.underline} outside 1..{len(self.chain)}"
            )

    @property
    def params(self) -> WahlParams:
        return is_class_w(self.chain)


def parse_mk1a(text: str) -> MK1AData:
    """Parse ``"2,2,5,*4"``: the starred entry carries the underline."""
    if not _MK1A_RE.fullmatch(text):
        raise ParseError(f"malformed mk1A data {text!r}")
    parts = text.split(",")
    underline = next(k for k, s in enumerate(parts, 1) if s.startswith("*"))
    return MK1AData(tuple(int(s.lstrip("*")) for s in parts), underline)


def render_mk1a(data: MK1AData) -> str:
    return ",".join(
        ("*" if k == data.underline else "") + str(b)
        for k, b in enumerate(data.chain, 1)
    )


@dataclass(frozen=True)
class ConfigurationChain:
    """A weighted chain split into roles, left to right.

    ``cplus`` are curves produced by earlier flips, ``b_part`` the current
    Wahl chain, ``c`` whether the flipping (-1)-curve is present, ``a_part``
    the remaining dual curves.  ``a_top`` is the dual index of the first
    ``a_part`` entry, when known; it only affects labels.
    """

    cplus: Chain = ()
    b_part: Chain = ()
    c: bool = False
    a_part: Chain = ()
    a_top: int | None = field(default=None, compare=False)

    @property
    def weights(self) -> Chain:
        return self.cplus + self.b_part + ((1,) if self.c else ()) + self.a_part

    @property
    def roles(self) -> tuple[str, ...]:
        top = self.a_top if self.a_top is not None else len(self.a_part)
        return (
            tuple(f"C+{t}" for t in range(1, len(self.cplus) + 1))
            + tuple(f"B{k}" for k in range(1, len(self.b_part) + 1))
            + (("C",) if self.c else ())
            + tuple(f"A{top - k}" for k in range(len(self.a_part)))
        )


def parse_configuration(text: str) -> ConfigurationChain:
    """Parse ``"B;C;A"`` or, with earlier flip curves, ``"C+;B;C;A"``."""
    fields = text.split(";")
    if len(fields) == 3:
        fields.insert(0, "")
    if len(fields) != 4:
        raise ParseError(f"configuration needs 3 or 4 ';'-separated fields: {text!r}")
    cplus, b_part, c, a_part = fields
    if c not in ("", "1"):
        raise ParseError(f"the C field must be '1' or empty, got {c!r}")
    return ConfigurationChain(
        parse_chain(cplus, allow_empty=True),
        parse_chain(b_part, allow_empty=True),
        c == "1",
        parse_chain(a_part, allow_empty=True),
    )


def render_configuration(config: ConfigurationChain) -> str:
    fields = [
        render_chain(config.b_part),
        "1" if config.c else "",
        render_chain(config.a_part),
    ]
    if config.cplus:
        fields.insert(0, render_chain(config.cplus))
    return ";".join(fields)


@dataclass(frozen=True)
class FlipResult:
    """Outcome of one flip: a new Wahl singularity on ``C+``, or smooth."""

    wahl: WahlParams | None
    c_plus_weight: int

    @property
    def chain(self) -> Chain:
        return self.wahl.chain if self.wahl is not None else ()

    @property
    def smooth(self) -> bool:
        return self.wahl is None


@dataclass(frozen=True)
class FlipStep:
    before: ConfigurationChain
    blow_downs: tuple[int, ...]
    intermediate: tuple[Chain, ...]  # weights after each blow-down
    after: ConfigurationChain
    result: FlipResult
    r: int
    i: int

    @property
    def new_wahl(self) -> WahlParams | None:
        return self.result.wahl

    @property
    def c_plus_weight(self) -> int:
        return self.result.c_plus_weight


@dataclass(frozen=True)
class FlipTrace:
    source: WahlParams
    dual: Chain
    delta: tuple[int, int]
    steps: tuple[FlipStep, ...]
    final_chain: Chain


def last_big_index(chain: Chain) -> int:
    """1-based index of the last entry >= 3."""
    for k in range(len(chain), 0, -1):
        if chain[k - 1] >= 3:
            return k
    raise AllTwos(f"chain {list(chain)} has no entry >= 3")


def contraction_invariant(data: MK1AData) -> Continuant:
    """``Delta/Omega`` of the germ obtained by contracting ``C`` and the chain."""
    k = data.underline - 1
    lowered = data.chain[:k] + (data.chain[k] - 1,) + data.chain[k + 1 :]
    return evaluate(lowered)


def flip_last(data: MK1AData) -> FlipResult:
    """Closed-form flip for ``C`` attached to the last curve."""
    chain = data.chain
    r = len(chain)
    if data.underline != r:
        raise UnderlineNotLast(f"underline {data.underline} is not the last index {r}")
    i = last_big_index(chain)
    if i == 1:
        # Nothing survives on C+; its weight is read off the blow-down oracle.
        step = flip_oracle_step(ConfigurationChain(b_part=chain, c=True))
        return FlipResult(None, step.c_plus_weight)
    new = chain[1 : i - 1] + (chain[i - 1] - 1,)
    return FlipResult(is_class_w(new), chain[0])


def flip_last_by_diagram(data: MK1AData) -> FlipResult:
    """The same flip read off the dot diagram.

    Drop the last column; the first row then stands for ``C+`` and the rows
    below it form the diagram of the new Wahl chain.
    """
    chain = data.chain
    if data.underline != len(chain):
        raise UnderlineNotLast(
            f"underline {data.underline} is not the last index {len(chain)}"
        )
    last_big_index(chain)
    diagram = build(chain)
    dots = [(i, j) for i, j in diagram.dots() if j != diagram.n_cols]
    top = [d for d in dots if d[0] == 1]
    rest = [d for d in dots if d[0] != 1]
    if not rest:
        return FlipResult(None, len(top) + 1)
    return FlipResult(is_class_w(from_dots(rest).chain()), len(top) + 1)


def full_configuration(p: int, q: int) -> ConfigurationChain:
    chain = wahl_chain(p, q)
    dual = dual_chain(chain)
    j = delta_position(chain).col
    tail = tuple(reversed(dual[j + 1 :]))
    return ConfigurationChain((), chain, True, tail, a_top=len(dual))


def flip_oracle_step(config: ConfigurationChain) -> FlipStep:
    """Flip ``C`` by iterated blow-down.

    Blows down ``C``, then each (-1)-curve created inside the Wahl part, and
    stops once no (-1)-curve is left or the only one lies in the dual part.
    """
    weights = list(config.weights)
    ones = [k for k, w in enumerate(weights) if w == 1]
    if not ones:
        raise NoMinusOne(f"no (-1)-curve in {list(weights)}")
    if len(ones) > 1:
        raise MultipleMinusOnes(f"several (-1)-curves in {list(weights)}")
    if not config.c:
        raise NoMinusOne("the configuration has no C curve")
    r = len(config.b_part)
    i = last_big_index(config.b_part)

    labels = list(config.roles)
    blow_downs = []
    intermediate = []
    current = tuple(weights)
    k = ones[0]
    while True:
        current = blow_down(current, k)
        del labels[k]
        blow_downs.append(k)
        intermediate.append(current)
        ones = [m for m, w in enumerate(current) if w == 1]
        if len(ones) > 1:
            raise MultipleMinusOnes(f"several (-1)-curves in {list(current)}")
        if not ones or not labels[ones[0]].startswith("B"):
            break
        k = ones[0]

    if len(blow_downs) != r - i + 1:
        raise DisagreementWithFormula(
            f"{len(blow_downs)} blow-downs, expected r-i+1 = {r - i + 1}"
        )

    n_cplus = len(config.cplus)
    b_end = n_cplus + sum(1 for lab in labels if lab.startswith("B"))
    new_cplus = current[: n_cplus + 1]
    new_b = current[n_cplus + 1 : b_end]
    rest = current[b_end:]
    new_c = bool(rest) and rest[0] == 1
    if ones and not new_c:
        raise DisagreementWithFormula(f"stray (-1)-curve in {list(current)}")
    a_top = None
    if config.a_top is not None:
        a_top = config.a_top - 1 if new_c else config.a_top
    after = ConfigurationChain(
        new_cplus, new_b, new_c, rest[1:] if new_c else rest, a_top=a_top
    )
    try:
        wahl = is_class_w(new_b) if new_b else None
    except NotClassW as exc:
        raise DisagreementWithFormula(f"flip left a non-Wahl chain: {exc}") from exc
    return FlipStep(
        config,
        tuple(blow_downs),
        tuple(intermediate),
        after,
        FlipResult(wahl, new_cplus[-1]),
        r,
        i,
    )


def flip_sequence(p: int, q: int) -> FlipTrace:
    source = is_class_w(wahl_chain(p, q))
    config = full_configuration(p, q)
    steps = []
    while config.c:
        step = flip_oracle_step(config)
        formula = flip_last(MK1AData(config.b_part, len(config.b_part)))
        if formula != step.result:
            raise DisagreementWithFormula(
                f"flip of {list(config.b_part)}: oracle gives "
                f"{list(step.result.chain)} (C+ {step.c_plus_weight}), formula gives "
                f"{list(formula.chain)} (C+ {formula.c_plus_weight})"
            )
        steps.append(step)
        config = step.after
    final = config.weights
    target = delta_half(source.chain)
    if final != target:
        raise DisagreementWithFormula(
            f"flip sequence for ({p},{q}) ends at {list(final)}, "
            f"delta-half is {list(target)}"
        )
    delta = delta_position(source.chain)
    return FlipTrace(
        source, dual_chain(source.chain), (delta.row, delta.col), tuple(steps), final
    )


def trace_to_dict(trace: FlipTrace) -> dict:
    return {
        "p": trace.source.p,
        "q": trace.source.q,
        "chain": render_chain(trace.source.chain),
        "dual": render_chain(trace.dual),
        "delta": {"row": trace.delta[0], "col": trace.delta[1]},
        "delta_half": render_chain(trace.final_chain),
        "steps": [
            {
                "before": render_configuration(s.before),
                "blow_downs": list(s.blow_downs),
                "after": render_configuration(s.after),
                "wahl": (
                    {"p": s.new_wahl.p, "q": s.new_wahl.q}
                    if s.new_wahl is not None
                    else "smooth"
                ),
                "c_plus_weight": s.c_plus_weight,
            }
            for s in trace.steps
        ],
    }


def trace_to_json(trace: FlipTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2)


@dataclass(frozen=True)
class Bn1Report:
    n: int
    kind: NeighborhoodKind
    statement: str
    contraction: Chain
    trace: ReductionTrace


def bn1_reduction(n: int) -> Bn1Report:
    """Contract ``C`` on the second curve of ``[n+2, 2, ..., 2]`` down to ``[4]``.

    The contracted chain is ``[n+2, 1, 2, ..., 2]`` with ``n-3`` trailing twos.
    """
    if n < 3:
        raise OutOfRange(f"need n >= 3, got {n}")
    data = MK1AData(wahl_chain(n, 1), 2)
    chain = data.chain
    contraction = chain[:1] + (chain[1] - 1,) + chain[2:]
    trace = reduce_zero(contraction)
    if trace.final != (4,):
        raise DisagreementWithFormula(
            f"[n+2,1,2,...,2] for n={n} reduces to {list(trace.final)}, not [4]"
        )
    return Bn1Report(n, bn1_kind(n), bn1_statement(n), contraction, trace)

