import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import hj_value, projective_value
from wahlflip.dot_diagram import delta_half, delta_position
from wahlflip.errors import (
    AllTwos,
    IndexOutOfRange,
    MultipleMinusOnes,
    NoMinusOne,
    NotClassW,
    OutOfRange,
    ParseError,
    UnderlineNotLast,
)
from wahlflip.hj_core import dual_chain, evaluate, reduce_zero
from wahlflip.mmp_flips import (
    ConfigurationChain,
    MK1AData,
    bn1_reduction,
    contraction_invariant,
    flip_last,
    flip_last_by_diagram,
    flip_oracle_step,
    flip_sequence,
    full_configuration,
    last_big_index,
    parse_configuration,
    parse_mk1a,
    render_configuration,
    render_mk1a,
    trace_to_dict,
    trace_to_json,
)
from wahlflip.wahl import generate, is_class_w, wahl_chain, wahl_pairs

PAIRS_40 = list(wahl_pairs(40))


@pytest.mark.parametrize(
    "chain, underline, expected",
    [((2, 2, 5, 4), 4, "36/25"), ((2, 2, 5, 4), 3, "37/26"), ((4,), 1, "3/1")],
)
def test_contraction_invariant_examples(chain, underline, expected):
    assert str(contraction_invariant(MK1AData(chain, underline))) == expected
    lowered = list(chain)
    lowered[underline - 1] -= 1
    assert hj_value(lowered) == Fraction(expected)


def test_mk1a_validation():
    with pytest.raises(NotClassW):
        MK1AData((2, 3), 2)
    with pytest.raises(IndexOutOfRange):
        MK1AData((2, 2, 5, 4), 5)


@pytest.mark.parametrize(
    "chain, new, pq",
    [((2, 2, 5, 4), (2, 5, 3), (5, 3)), ((2, 5, 3), (5, 2), (3, 1))],
)
def test_flip_last_examples(chain, new, pq):
    result = flip_last(MK1AData(chain, len(chain)))
    assert result.chain == new
    assert (result.wahl.p, result.wahl.q) == pq
    assert result.c_plus_weight == chain[0]


def test_flip_last_smooth():
    result = flip_last(MK1AData((5, 2), 2))
    assert result.smooth
    assert result.c_plus_weight == 4


def test_flip_last_requires_last_underline():
    with pytest.raises(UnderlineNotLast):
        flip_last(MK1AData((2, 2, 5, 4), 3))
    with pytest.raises(UnderlineNotLast):
        flip_last_by_diagram(MK1AData((2, 2, 5, 4), 3))


def test_last_big_index():
    assert last_big_index((2, 2, 5, 4)) == 4
    assert last_big_index((5, 2)) == 1
    with pytest.raises(AllTwos):
        last_big_index((2, 2))


@pytest.mark.parametrize(
    "chain, new",
    [((2, 2, 5, 4), (2, 5, 3)), ((2, 5, 3), (5, 2)), ((4,), ())],
)
def test_flip_by_diagram_examples(chain, new):
    assert flip_last_by_diagram(MK1AData(chain, len(chain))).chain == new


@pytest.mark.parametrize("chain", sorted(generate(40)))
def test_triple_agreement(chain):
    data = MK1AData(chain, len(chain))
    formula = flip_last(data)
    assert flip_last_by_diagram(data) == formula
    w = is_class_w(chain)
    step = flip_oracle_step(full_configuration(w.p, w.q))
    assert step.result.chain == formula.chain
    assert step.result == formula


@pytest.mark.parametrize(
    "p, q, weights, roles",
    [
        (7, 5, (2, 2, 5, 4, 1, 2, 2), ("B1", "B2", "B3", "B4", "C", "A6", "A5")),
        (2, 1, (4, 1), ("B1", "C")),
        (3, 2, (2, 5, 1, 2), ("B1", "B2", "C", "A4")),
    ],
)
def test_full_configuration_examples(p, q, weights, roles):
    config = full_configuration(p, q)
    assert config.weights == weights
    assert config.roles == roles


@pytest.mark.parametrize(
    "text, n_blow_downs, after",
    [
        ("2,2,5,4;1;2,2", 1, (2, 2, 5, 3, 1, 2)),
        ("2;2,5,3;1;2", 1, (2, 2, 5, 2, 1)),
        ("2,2;5,2;1;", 2, (2, 2, 4)),
    ],
)
def test_oracle_step_examples(text, n_blow_downs, after):
    step = flip_oracle_step(parse_configuration(text))
    assert len(step.blow_downs) == n_blow_downs
    assert step.after.weights == after
    assert step.intermediate[-1] == after


def test_oracle_step_relabels():
    step = flip_oracle_step(full_configuration(7, 5))
    assert step.after.roles == ("C+1", "B1", "B2", "B3", "C", "A5")
    assert step.c_plus_weight == 2


def test_oracle_step_errors():
    with pytest.raises(NoMinusOne):
        flip_oracle_step(ConfigurationChain(b_part=(2, 2, 5, 4)))
    with pytest.raises(MultipleMinusOnes):
        flip_oracle_step(ConfigurationChain(b_part=(2, 2, 5, 4), c=True, a_part=(1,)))


def test_flip_sequence_49_34():
    trace = flip_sequence(7, 5)
    rows = [trace.steps[0].before.weights] + [s.after.weights for s in trace.steps]
    assert rows == [
        (2, 2, 5, 4, 1, 2, 2),
        (2, 2, 5, 3, 1, 2),
        (2, 2, 5, 2, 1),
        (2, 2, 4),
    ]
    params = [(s.new_wahl.p, s.new_wahl.q) if s.new_wahl else None for s in trace.steps]
    assert params == [(5, 3), (3, 1), None]
    assert trace.final_chain == (2, 2, 4)
    assert trace.steps[-1].c_plus_weight == 4
    assert trace.steps[-1].after.roles == ("C+1", "C+2", "C+3")


@pytest.mark.parametrize(
    "p, q, n_steps, final",
    [(2, 1, 1, (3,)), (3, 2, 2, (2, 3))],
)
def test_flip_sequence_small(p, q, n_steps, final):
    trace = flip_sequence(p, q)
    assert len(trace.steps) == n_steps
    assert trace.final_chain == final


@pytest.mark.parametrize("p, q", PAIRS_40)
def test_flip_sequence_invariants(p, q):
    trace = flip_sequence(p, q)
    chain = wahl_chain(p, q)
    assert trace.final_chain == delta_half(chain)
    assert len(trace.steps) == len(dual_chain(chain)) - delta_position(chain).col
    value = projective_value(list(full_configuration(p, q).weights))
    last_p = p
    for step in trace.steps:
        assert len(step.blow_downs) == step.r - step.i + 1
        assert step.i == last_big_index(step.before.b_part)
        for inter in step.intermediate:
            assert projective_value(list(inter)) == value
        if step.new_wahl is not None:
            assert is_class_w(step.new_wahl.chain) == step.new_wahl
            assert step.new_wahl.p < last_p
            last_p = step.new_wahl.p
    assert trace.steps[-1].new_wahl is None


@pytest.mark.parametrize("p, q", PAIRS_40)
def test_flip_sequence_against_plain_reduction(p, q):
    # Blowing down (-1)-curves with no bookkeeping lands on the same chain.
    plain = reduce_zero(full_configuration(p, q).weights)
    trace = flip_sequence(p, q)
    assert plain.final == trace.final_chain
    assert len(plain.steps) == sum(len(s.blow_downs) for s in trace.steps)


def test_trace_json_layout():
    data = trace_to_dict(flip_sequence(7, 5))
    assert list(data) == ["p", "q", "chain", "dual", "delta", "delta_half", "steps"]
    assert list(data["steps"][0]) == ["before", "blow_downs", "after", "wahl", "c_plus_weight"]
    assert data["delta"] == {"row": 3, "col": 3}
    assert data["steps"][2]["wahl"] == "smooth"
    assert json.loads(trace_to_json(flip_sequence(7, 5))) == data
    assert trace_to_json(flip_sequence(7, 5)) == trace_to_json(flip_sequence(7, 5))


@pytest.mark.parametrize("text", ["2,2,5,4;1;2,2", "4;1;", "2;2,5,3;1;2", "2,2,4;;;"])
def test_configuration_text_roundtrip(text):
    config = parse_configuration(text)
    assert render_configuration(config) == text
    assert parse_configuration(render_configuration(config)) == config


@pytest.mark.parametrize("text", ["2,2,5,4;1", "2;2;2", "1;2;3;4;5", "2 ;1;2"])
def test_configuration_text_rejects(text):
    with pytest.raises(ParseError):
        parse_configuration(text)


@given(st.sampled_from(PAIRS_40))
def test_trace_configurations_roundtrip(pq):
    for step in flip_sequence(*pq).steps:
        for config in (step.before, step.after):
            assert parse_configuration(render_configuration(config)) == config


@pytest.mark.parametrize("text, underline", [("2,2,5,*4", 4), ("*4", 1), ("2,2,*5,4", 3)])
def test_mk1a_text(text, underline):
    data = parse_mk1a(text)
    assert data.underline == underline
    assert render_mk1a(data) == text


@pytest.mark.parametrize("text", ["2,2,5,4", "*2,*2", "2,2,5,* 4", "2,2,5,4*"])
def test_mk1a_text_rejects(text):
    with pytest.raises(ParseError):
        parse_mk1a(text)


@pytest.mark.parametrize(
    "n, contraction", [(3, (5, 1)), (4, (6, 1, 2)), (5, (7, 1, 2, 2))]
)
def test_bn1_contraction(n, contraction):
    report = bn1_reduction(n)
    assert report.contraction == contraction
    assert report.trace.final == (4,)
    assert contraction_invariant(MK1AData(wahl_chain(n, 1), 2)) == evaluate((4,))
    assert hj_value(list(contraction)) == 4


def test_bn1_range():
    assert all(bn1_reduction(n).trace.final == (4,) for n in range(3, 201))
    with pytest.raises(OutOfRange):
        bn1_reduction(2)


def test_bn1_odd_case_is_single_smooth_flip():
    # For odd n the flip of the end-attached curve on [n+2, 2..2] gives a lone -(n+1) curve;
    # for n = 3 that is the -4 sphere.
    assert flip_last(MK1AData(wahl_chain(3, 1), 2)).c_plus_weight == 4
