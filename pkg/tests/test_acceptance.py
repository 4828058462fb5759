import random

import pytest

from pyknotslopes.bracket import bracket_dp, bracket_naive, bracket_naive_partial
from pyknotslopes.catalog import CATALOG
from pyknotslopes.diagram import PDDiagram, mirror, stats
from pyknotslopes.jones import JonesCalculator, slope_sequences, verify
from pyknotslopes.laurent import DELTA, ONE, LaurentPoly
from pyknotslopes.morse import (EventKind, MorseEvent, MorsePresentation, braid_to_morse,
                                morse_to_pd)
from pyknotslopes.states import A, B

from conftest import random_braids

SKEIN_BRAIDS = random_braids(200)


def smoothed(m: MorsePresentation, k: int, side: str) -> MorsePresentation:
    """ `m` with its event `k` replaced by the `side` smoothing of that crossing """
    events = list(m.events)
    event = events[k]
    capCup = [MorseEvent.cap(event.position), MorseEvent.cup(event.position)]
    if (event.kind == EventKind.CROSS_POS) == (side == A):
        events[k:k + 1] = []
    else:
        events[k:k + 1] = capCup
    return MorsePresentation(events)


@pytest.mark.parametrize("braid", SKEIN_BRAIDS, ids=str)
def test_skein_relations(braid):
    m = braid_to_morse(braid)
    d = morse_to_pd(m)
    whole = bracket_naive(d).poly_delta
    assert bracket_dp(m).poly_delta == whole

    crossingEvents = [k for k, e in enumerate(m) if e.is_crossing()]
    for i, k in enumerate(crossingEvents):
        smoothA = bracket_naive_partial(d, {i: A})
        smoothB = bracket_naive_partial(d, {i: B})
        assert smoothA == bracket_dp(smoothed(m, k, A)).poly_delta
        assert smoothB == bracket_dp(smoothed(m, k, B)).poly_delta
        assert whole == smoothA.shift(1) + smoothB.shift(-1)


@pytest.mark.parametrize("braid", SKEIN_BRAIDS, ids=str)
def test_circles_and_mirrors(braid):
    m = braid_to_morse(braid)
    d = morse_to_pd(m)
    whole = bracket_naive(d).poly_delta

    extra = PDDiagram(d.crossings, loops=d.loops + 1)
    assert bracket_naive(extra).poly_delta == DELTA * whole
    circled = MorsePresentation(list(m.events) + [MorseEvent.cup(0), MorseEvent.cap(0)])
    assert bracket_dp(circled).poly_delta == DELTA * whole

    assert bracket_naive(mirror(d)).poly_delta == whole.invert_variable()


def test_single_crossing_expansions():
    # antiparallel strands: CrossPos closes into a negative kink
    twist = MorsePresentation([MorseEvent.cup(0), MorseEvent.cross_pos(0), MorseEvent.cap(0)])
    assert bracket_dp(twist).poly_delta == LaurentPoly({1: 1}) * DELTA + LaurentPoly({-1: 1}) * DELTA**2
    assert bracket_dp(twist).poly_delta == LaurentPoly({-3: -1}) * DELTA
    twist = MorsePresentation([MorseEvent.cup(0), MorseEvent.cross_neg(0), MorseEvent.cap(0)])
    assert bracket_dp(twist).poly_delta == LaurentPoly({-1: 1}) * DELTA + LaurentPoly({1: 1}) * DELTA**2
    assert stats(morse_to_pd(twist)).w == 1


def test_random_mixed_presentations_agree():
    rng = random.Random(7)
    for _ in range(25):
        events = [MorseEvent.cup(0), MorseEvent.cup(1), MorseEvent.cup(2)]
        for _ in range(rng.randint(1, 6)):
            kind = rng.choice((MorseEvent.cross_pos, MorseEvent.cross_neg))
            events.append(kind(rng.randint(0, 4)))
        events.extend((MorseEvent.cap(2), MorseEvent.cap(1), MorseEvent.cap(0)))
        m = MorsePresentation(events)
        assert bracket_dp(m) == bracket_naive(morse_to_pd(m))


@pytest.mark.parametrize("n", range(1, 7))
def test_unknot_normalization(n):
    calculator = JonesCalculator()
    assert calculator.colored_jones(PDDiagram.unknot(), n) == ONE


@pytest.mark.slow
def test_trefoil_degrees_up_to_six(trefoil, trefoil_morse):
    calculator = JonesCalculator()
    table = calculator.jones_table(trefoil, 6, trefoil_morse)
    for n in table.colors:
        assert table.jstar(n) == calculator.predict(trefoil, n, A)
        assert table.j(n) == calculator.predict(trefoil, n, B)
    sequences = slope_sequences(table)
    assert 2 * sequences.stableD2jStar == 0
    assert 2 * sequences.stableD2j == 6


@pytest.mark.slow
def test_figure_eight_degrees_up_to_four(figure_eight):
    calculator = JonesCalculator()
    table = calculator.jones_table(figure_eight, 4)
    assert table.J(2) == LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    for n in table.colors:
        assert table.jstar(n) == calculator.predict(figure_eight, n, A)
        assert table.j(n) == calculator.predict(figure_eight, n, B)


@pytest.mark.slow
def test_pretzel_verification():
    entry = CATALOG["P(-2,3,5)"]
    d = entry.diagram()
    verdict = verify(d, 4, morse=entry.morse())

    assert verdict.a_side.adequate
    assert verdict.a_side.passed
    assert verdict.a_side.estimated == -2 * stats(d).c_minus == 0
    assert not verdict.b_side.adequate
    assert abs(verdict.b_side.diagnostic - 15) <= 2
    assert "B side not adequate; diagnostic only" in verdict.notes
    assert verdict.passed
