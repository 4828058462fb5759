import pytest

from pyknotslopes.bracket import (DP, NAIVE, BracketSweep, BracketValue, OracleBoundExceededError,
                                  SweepTelemetry, bracket, bracket_combination, bracket_dp,
                                  bracket_naive, bracket_naive_partial)
from pyknotslopes.catalog import CATALOG
from pyknotslopes.diagram import PDDiagram, braid_to_pd, mirror, parse_braid
from pyknotslopes.laurent import DELTA, ONE, LaurentPoly
from pyknotslopes.morse import MorseEvent, MorsePresentation, cable, morse_to_pd
from pyknotslopes.states import A, B, is_adequate, v_a, v_b

RIGHT_TREFOIL = LaurentPoly({-7: 1, -3: -1, 5: -1})


def test_unknot_and_empty_diagram():
    value = bracket_naive(PDDiagram.unknot())
    assert value.poly_delta == DELTA
    assert value.poly_circle == ONE

    empty = bracket_naive(PDDiagram.empty())
    assert empty.poly_delta == ONE
    assert empty.poly_circle is None


def test_kink(kink):
    value = bracket_naive(kink)
    assert value.poly_delta == LaurentPoly({1: 1}) * DELTA**2 + LaurentPoly({-1: 1}) * DELTA
    assert value.poly_circle == LaurentPoly({3: -1})


def test_trefoil_both_engines(trefoil, trefoil_morse):
    assert bracket_naive(trefoil).poly_circle == RIGHT_TREFOIL
    assert bracket_dp(trefoil_morse).poly_circle == RIGHT_TREFOIL
    assert bracket(trefoil, engine=DP).poly_circle == RIGHT_TREFOIL
    assert bracket(trefoil_morse, engine=NAIVE).poly_circle == RIGHT_TREFOIL


def test_left_trefoil_from_pd():
    value = bracket(CATALOG["3_1"].diagram(), engine=DP)
    assert value.poly_circle == RIGHT_TREFOIL.invert_variable()


def test_oracle_bound():
    d = CATALOG["P(-2,3,5)"].diagram()
    with pytest.raises(OracleBoundExceededError):
        bracket_naive(d, oracleBound=8)
    with pytest.raises(OracleBoundExceededError):
        bracket(d, engine=NAIVE, oracleBound=9)


def test_unknown_engine(trefoil):
    with pytest.raises(ValueError):
        bracket(trefoil, engine="fast")


def test_from_delta():
    value = BracketValue.from_delta(DELTA * LaurentPoly({3: 2}))
    assert value.poly_circle == LaurentPoly({3: 2})
    assert BracketValue.from_delta(LaurentPoly()).poly_circle == LaurentPoly()


def test_sweep_telemetry(trefoil_morse):
    sweep = BracketSweep(trefoil_morse)
    assert sweep.states()[0].matching == ()
    sweep.run()
    assert sweep.maxWidth == 4
    assert sweep.eventCount == len(trefoil_morse)
    assert 1 <= sweep.supportPeak <= 2

    total = SweepTelemetry()
    total.merge(sweep.telemetry)
    total.merge(sweep.telemetry)
    assert total.eventCount == 2 * len(trefoil_morse)
    assert total.to_json()["maxWidth"] == 4


def test_sweep_snapshot_is_a_matching():
    sweep = BracketSweep(MorsePresentation([MorseEvent.cup(0), MorseEvent.cup(1),
                                            MorseEvent.cap(1), MorseEvent.cap(0)]))
    sweep.step(MorseEvent.cup(0))
    sweep.step(MorseEvent.cup(1))
    (state,) = sweep.states()
    assert state.matching == (3, 2, 1, 0)
    assert state.amplitude == ONE


def test_partial_state_sum(kink):
    assert bracket_naive_partial(kink, {0: A}) == DELTA**2
    assert bracket_naive_partial(kink, {0: B}) == DELTA
    with pytest.raises(ValueError):
        bracket_naive_partial(kink, {1: A})


def test_combination(trefoil_morse):
    terms = [(2, trefoil_morse), (-1, None), (0, trefoil_morse)]
    telemetry = SweepTelemetry()
    total = bracket_combination(terms, telemetry=telemetry)
    assert total == bracket_dp(trefoil_morse).poly_delta * 2 - ONE
    assert telemetry.maxWidth == 4
    assert bracket_combination(terms, threads=3) == total
    assert bracket_combination(terms, engine=NAIVE) == total
    assert bracket_combination([]) == LaurentPoly()


@pytest.mark.parametrize("name", list(CATALOG))
def test_engines_agree_on_catalog(name):
    entry = CATALOG[name]
    naive = bracket_naive(entry.diagram())
    assert bracket_dp(entry.morse()) == naive
    assert bracket(entry.diagram(), engine=DP) == naive


@pytest.mark.parametrize("name, m", [(name, m) for name, entry in CATALOG.items() for m in (2, 3)
                                     if m * m * len(entry.diagram()) <= 14])
def test_engines_agree_on_cables(name, m):
    cabled = cable(CATALOG[name].morse(), m)
    assert len(morse_to_pd(cabled)) == m * m * len(CATALOG[name].diagram())
    assert bracket_dp(cabled) == bracket_naive(morse_to_pd(cabled))


@pytest.mark.parametrize("name", list(CATALOG))
def test_extreme_degrees_of_adequate_diagrams(name):
    d = CATALOG[name].diagram()
    value = bracket_naive(d)
    aAdequate, bAdequate = is_adequate(d)
    if aAdequate:
        assert value.poly_circle.maxdeg == len(d) + 2 * v_a(d) - 2
    if bAdequate:
        assert value.poly_circle.mindeg == -len(d) - 2 * v_b(d) + 2


def test_mirror_inverts_variable(figure_eight):
    d = braid_to_pd(parse_braid("3: 1 1 -2 1"))
    assert bracket_naive(mirror(d)).poly_delta == bracket_naive(d).poly_delta.invert_variable()
    assert bracket_naive(figure_eight).poly_delta == \
        bracket_naive(figure_eight).poly_delta.invert_variable()
