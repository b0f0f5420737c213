import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hecke_a2.chartool import (CaseLabel, CentralParams, S3_ORDER, S3Elem, Structure,
                               central_params, classify, classify_all, is_integral, is_ordinary,
                               make_character, matching_cases, ordinarize, predicted_factors,
                               q_factor, s3_act)
from hecke_a2.errors import InconsistentParams, NotIntegral, NotOrdinary
from hecke_a2.gf import field_make
from hecke_a2.sweeps import valuation_triples
from hecke_a2.valnum import PConfig, VUnit
from hecke_a2.zoo import label

F5 = field_make(5)


def chi(e, vals, units=(1, 2, 3), field=F5):
    return make_character(PConfig(field, e), vals, units)


def test_integrality_examples():
    assert is_integral(chi(2, (1, 1, -2)))
    assert is_integral(chi(1, (0, 0, 0)))
    assert not is_integral(chi(1, (2, 0, -2)))


def test_integrality_matches_brute_force():
    # the six conditions, spelled out one valuation at a time
    for e in (1, 2, 3):
        for v in itertools.product(range(-2 * e, 2 * e + 1), repeat=3):
            conds = [sum(v) >= 0, -sum(v) >= 0]
            for i in range(3):
                conds += [e + v[i] >= 0, e - v[i] >= 0]
            for i, j in itertools.combinations(range(3), 2):
                conds += [e + v[i] + v[j] >= 0, e - v[i] - v[j] >= 0]
            assert is_integral(chi(e, v)) == all(conds)


def test_s1_swaps_first_two():
    c = chi(2, (1, 1, -2), (1, 2, 3))
    assert s3_act(S3Elem.S1, c).units == (F5(2), F5(1), F5(3))
    assert s3_act(S3Elem.ONE, c) == c


def test_action_law_exhaustive():
    c = chi(1, (1, 0, -1), (1, 2, 3))
    for w, x in itertools.product(S3_ORDER, repeat=2):
        assert c.act(w * x) == c.act(x).act(w)


def test_word_convention_is_left_action():
    c = chi(1, (1, 0, -1), (1, 2, 3))
    assert c.act(S3Elem.S1S2) == c.act(S3Elem.S2).act(S3Elem.S1)
    # s2 first: (1,2,3) -> (1,3,2), then s1: -> (3,1,2)
    assert c.act(S3Elem.S1S2).units == (F5(3), F5(1), F5(2))


def test_s3_multiplication_table():
    assert S3Elem.S1 * S3Elem.S1 is S3Elem.ONE
    assert S3Elem.S1 * S3Elem.S2 is S3Elem.S1S2
    assert S3Elem.S1S2 * S3Elem.S1 is S3Elem.S1S2S1
    assert S3Elem.S2 * S3Elem.S1 * S3Elem.S2 is S3Elem.S1S2S1
    assert {w.length for w in S3_ORDER} == {0, 1, 2, 3}


def test_ordinarize_examples():
    w, c = ordinarize(chi(2, (1, 1, -2)))
    assert w is S3Elem.ONE
    w, c = ordinarize(chi(2, (-2, 1, 1)))
    assert is_ordinary(c) and sorted(c.vals) == [-2, 1, 1]
    assert ordinarize(chi(1, (0, 0, 0)))[0] is S3Elem.ONE
    with pytest.raises(NotIntegral):
        ordinarize(chi(1, (2, 0, -2)))


def test_q_factor_examples():
    c = chi(2, (1, 1, -2), (3, 2, 1))
    assert q_factor(S3Elem.ONE, c) == VUnit(0, F5(1))
    assert q_factor(S3Elem.S2S1, c) == VUnit(-1, F5(3))
    assert q_factor(S3Elem.S1S2S1, c) == VUnit(-1, F5(3))
    with pytest.raises(NotOrdinary):
        q_factor(S3Elem.ONE, chi(2, (-2, 1, 1)))


def test_q_factor_y2_nonpositive_branch():
    c = chi(2, (2, -1, -1), (3, 2, 1))
    q = c.cfg.q
    assert q_factor(S3Elem.S2, c) == c.y2
    assert q_factor(S3Elem.S1S2S1, c) == q.inv() * c.y1 * c.y2


@pytest.mark.parametrize("e, vals, units, case", [
    (2, (1, 1, -2), (1, 2, 3), 1),
    (2, (2, -1, -1), (1, 2, 3), 2),
    (1, (0, 0, 0), (1, 2, 3), 6),
    (1, (1, 0, -1), (2, 2, 2), 9),
    (1, (1, 0, -1), (1, 2, 3), 3),
    (1, (1, 0, -1), (2, 2, 3), 4),
    (1, (1, 0, -1), (1, 2, 2), 5),
    (3, (1, 1, -2), (1, 2, 3), 7),
    (3, (2, -1, -1), (1, 2, 3), 8),
])
def test_classify_examples(e, vals, units, case):
    lab, rep_chi, w = classify(chi(e, vals, units))
    assert lab == CaseLabel.of(case)
    assert w is S3Elem.ONE and case in matching_cases(rep_chi)


def test_structure_tags():
    assert CaseLabel.of(1).structure is Structure.IRREDUCIBLE
    assert CaseLabel.of(6).structure is Structure.UNISERIAL2
    assert CaseLabel.of(7).structure is Structure.DIRECTSUM2
    assert CaseLabel.of(9).structure is Structure.LENGTH4


def test_classification_total_small():
    f = field_make(3)
    for e in (1, 2, 3):
        for vals in valuation_triples(e):
            for us in itertools.product((1, 2), repeat=3):
                c = chi(e, vals, us, f)
                lab, rep_chi, w = classify(c)
                assert rep_chi == c.act(w)
                assert any(x[0] == lab for x in classify_all(c))


def test_central_params_examples():
    cp = central_params(chi(1, (1, 0, -1), (2, 2, 2)))
    assert cp.as_tuple() == (F5(3), F5(2), F5(4))
    assert cp.stratum == "regular"
    cp = central_params(chi(1, (0, 0, 0), (1, 2, 3)))
    assert cp.as_tuple() == (F5(1), F5(0), F5(0)) and cp.stratum == "supersingular"
    cp = central_params(chi(2, (1, 1, -2), (1, 2, 3)))
    assert cp.y and not cp.y_ and cp.stratum == "singular"


def test_predicted_factors():
    z, y, y_ = F5(3), F5(2), F5(4)
    pred = predicted_factors(CaseLabel.of(9), CentralParams(z, y, y_))
    assert sorted(map(str, pred.factors)) == sorted(
        ["M1(0,2)", "M1(-1,2)", "M2(2)", "M2~(2)"])
    pred = predicted_factors(CaseLabel.of(7), CentralParams(z, F5(0), F5(0)))
    assert pred.structure is Structure.DIRECTSUM2
    assert set(pred.factors) == {label("P3", z), label("P3~", z)}
    pred = predicted_factors(CaseLabel.of(3), CentralParams(F5(1), F5(2), F5(3)))
    assert pred.factors == (label("K6", F5(1), F5(2), F5(3)),)
    pred = predicted_factors(CaseLabel.of(4), CentralParams(F5(4), F5(1), F5(2)))
    assert (pred.sub, pred.quotient) == (label("M3", F5(4), F5(2)), label("M3~", F5(4), F5(2)))
    with pytest.raises(InconsistentParams):
        predicted_factors(CaseLabel.of(1), CentralParams(z, y, y_))


FIELDS = [field_make(2), field_make(3), field_make(5)]


@st.composite
def characters(draw):
    f = draw(st.sampled_from(FIELDS))
    e = draw(st.integers(1, 3))
    vals = draw(st.sampled_from(valuation_triples(e)))
    us = [draw(st.integers(1, f.order - 1)) for _ in range(3)]
    return chi(e, vals, us, f)


@settings(max_examples=200, deadline=None)
@given(characters(), st.sampled_from(S3_ORDER), st.sampled_from(S3_ORDER))
def test_action_and_integrality_invariance(c, w, x):
    assert c.act(w * x) == c.act(x).act(w)
    assert is_integral(c.act(w))
    assert central_params(c.act(w)).as_tuple()[0] == central_params(c).as_tuple()[0]
