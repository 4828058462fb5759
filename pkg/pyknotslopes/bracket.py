from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from pyknotslopes.diagram import PDDiagram, UnionFind
from pyknotslopes.laurent import DELTA, ONE, LaurentPoly, NonDivisibleError
from pyknotslopes.morse import EventKind, MorseEvent, MorsePresentation, morse_to_pd, to_morse
from pyknotslopes.states import A, B, SMOOTHING_PAIRS

log = logging.getLogger(__name__)

NAIVE = "naive"
DP = "dp"
ENGINES = (NAIVE, DP)
DEFAULT_ORACLE_BOUND = 16


class OracleBoundExceededError(Exception):
    ...


@dataclass(frozen=True)
class BracketValue:
    """
    Kauffman bracket in both normalizations.

    `poly_delta` gives the empty diagram 1 and every circle a factor of
    delta. `poly_circle` divides one delta back out so that a single circle
    has bracket 1; it is None for the empty diagram.
    """
    poly_delta: LaurentPoly
    poly_circle: Optional[LaurentPoly]

    @classmethod
    def from_delta(cls, polyDelta: LaurentPoly) -> BracketValue:
        try:
            polyCircle = polyDelta.divide_exact(DELTA)
        except (NonDivisibleError, ZeroDivisionError):
            polyCircle = None
        return cls(polyDelta, polyCircle)


@dataclass(frozen=True)
class PlanarMatchingState:
    matching: Tuple[int, ...]  # partner index of every boundary point
    amplitude: LaurentPoly


@dataclass
class SweepTelemetry:
    maxWidth: int = 0
    supportPeak: int = 0
    eventCount: int = 0

    def merge(self, other: SweepTelemetry):
        self.maxWidth = max(self.maxWidth, other.maxWidth)
        self.supportPeak = max(self.supportPeak, other.supportPeak)
        self.eventCount += other.eventCount

    def to_json(self) -> dict:
        return {
            "maxWidth": self.maxWidth,
            "supportPeak": self.supportPeak,
            "eventCount": self.eventCount
        }


def _state_sum(d: PDDiagram, fixed: Mapping[int, str]) -> LaurentPoly:
    free = [i for i in range(len(d)) if i not in fixed]
    labels = d.labels
    tally: Dict[Tuple[int, int], int] = {}

    for choice in product((A, B), repeat=len(free)):
        sides = dict(fixed)
        sides.update(zip(free, choice))

        circles = UnionFind()
        for label in labels:
            circles.add(label)
        for i, crossing in enumerate(d):
            for s, t in SMOOTHING_PAIRS[sides[i]]:
                circles.union(crossing[s], crossing[t])

        count = len({circles.find(label) for label in labels}) + d.loops
        aMinusB = 2*sum(1 for side in sides.values() if side == A) - len(d)
        key = (aMinusB, count)
        tally[key] = tally.get(key, 0) + 1

    result = LaurentPoly()
    deltaPowers: Dict[int, LaurentPoly] = {}
    for (exp, count), multiplicity in tally.items():
        if count not in deltaPowers:
            deltaPowers[count] = DELTA ** count
        result = result + deltaPowers[count].shift(exp) * multiplicity
    return result


def bracket_naive(d: PDDiagram, oracleBound: int = DEFAULT_ORACLE_BOUND) -> BracketValue:
    """ Sum over all 2^c Kauffman states of A^(#A - #B) * delta^(circles) """
    if len(d) > oracleBound:
        raise OracleBoundExceededError(
            f"State-sum oracle is limited to {oracleBound} crossings, diagram has {len(d)}")
    return BracketValue.from_delta(_state_sum(d, {}))


def bracket_naive_partial(d: PDDiagram, fixed: Mapping[int, str],
                          oracleBound: int = DEFAULT_ORACLE_BOUND) -> LaurentPoly:
    """ State sum in the delta normalization with the crossings in `fixed` already smoothed """
    if len(d) - len(fixed) > oracleBound:
        raise OracleBoundExceededError(
            f"State-sum oracle is limited to {oracleBound} free crossings")
    for index, side in fixed.items():
        if not 0 <= index < len(d) or side not in {A, B}:
            raise ValueError(f"Invalid fixed smoothing {index}: {side!r}")

    # A fixed smoothing drops the A^(+-1) weight of that crossing
    offset = sum(1 if side == A else -1 for side in fixed.values())
    return _state_sum(d, fixed).shift(-offset)


Transition = Tuple[Tuple[int, ...], int, int]  # (new matching, A exponent, delta power)


class BracketSweep:
    """
    Kauffman bracket of a Morse presentation by sweeping over its events.

    The sweep keeps a map from noncrossing matchings of the boundary points
    to amplitudes. Every crossing contributes a common factor A^(+-1) that is
    kept in `_shift` instead of being applied to each amplitude.
    """

    def __init__(self, presentation: MorsePresentation):
        self.presentation = presentation
        self.telemetry = SweepTelemetry()
        self._support: Dict[Tuple[int, ...], Dict[int, int]] = {(): {0: 1}}
        self._shift = 0
        self._transitions: Dict[Tuple[Tuple[int, ...], MorseEvent], List[Transition]] = {}
        self._done = False

    @property
    def maxWidth(self) -> int:
        return self.telemetry.maxWidth

    @property
    def supportPeak(self) -> int:
        return self.telemetry.supportPeak

    @property
    def eventCount(self) -> int:
        return self.telemetry.eventCount

    def states(self) -> List[PlanarMatchingState]:
        return [PlanarMatchingState(key, LaurentPoly(amp).shift(self._shift))
                for key, amp in self._support.items()]

    @staticmethod
    def _cup(key: Tuple[int, ...], p: int) -> Tuple[int, ...]:
        moved = [x if x < p else x + 2 for x in key]
        result = moved[:p] + [p + 1, p] + moved[p:]
        return tuple(result)

    @staticmethod
    def _cap(key: Tuple[int, ...], p: int) -> Tuple[Tuple[int, ...], int]:
        if key[p] == p + 1:
            loop = 1
            partners = list(key)
        else:
            loop = 0
            partners = list(key)
            a, b = key[p], key[p + 1]
            partners[a], partners[b] = b, a
        del partners[p:p + 2]
        return tuple(x if x < p else x - 2 for x in partners), loop

    @staticmethod
    def _cap_cup(key: Tuple[int, ...], p: int) -> Tuple[Tuple[int, ...], int]:
        if key[p] == p + 1:
            return key, 1
        partners = list(key)
        a, b = key[p], key[p + 1]
        partners[a], partners[b] = b, a
        partners[p], partners[p + 1] = p + 1, p
        return tuple(partners), 0

    def _transitions_for(self, key: Tuple[int, ...], event: MorseEvent) -> List[Transition]:
        cached = self._transitions.get((key, event))
        if cached is not None:
            return cached

        p = event.position
        if event.kind == EventKind.CUP:
            result = [(self._cup(key, p), 0, 0)]
        elif event.kind == EventKind.CAP:
            newKey, loop = self._cap(key, p)
            result = [(newKey, 0, loop)]
        else:
            # CrossPos = A (id + A^-2 capcup), CrossNeg = A^-1 (id + A^2 capcup)
            newKey, loop = self._cap_cup(key, p)
            exp = -2 if event.kind == EventKind.CROSS_POS else 2
            result = [(key, 0, 0), (newKey, exp, loop)]

        self._transitions[(key, event)] = result
        return result

    def step(self, event: MorseEvent):
        support: Dict[Tuple[int, ...], Dict[int, int]] = {}
        for key, amp in self._support.items():
            for newKey, exp, loops in self._transitions_for(key, event):
                if loops:
                    term = (LaurentPoly(amp) * DELTA**loops).shift(exp).terms
                else:
                    term = {e + exp: c for e, c in amp.items()}
                target = support.setdefault(newKey, {})
                for e, c in term.items():
                    value = target.get(e, 0) + c
                    if value:
                        target[e] = value
                    else:
                        target.pop(e, None)

        self._support = {key: amp for key, amp in support.items() if amp}
        if event.kind == EventKind.CROSS_POS:
            self._shift += 1
        elif event.kind == EventKind.CROSS_NEG:
            self._shift -= 1

        width = len(next(iter(self._support), ()))
        self.telemetry.maxWidth = max(self.telemetry.maxWidth, width)
        self.telemetry.supportPeak = max(self.telemetry.supportPeak, len(self._support))
        self.telemetry.eventCount += 1

    def run(self) -> BracketValue:
        if not self._done:
            for event in self.presentation:
                self.step(event)
            self._done = True
            log.debug("Swept %s: width %d, support peak %d, %d events",
                      self.presentation.name or "presentation", self.maxWidth,
                      self.supportPeak, self.eventCount)

        amp = self._support.get((), {})
        return BracketValue.from_delta(LaurentPoly(amp).shift(self._shift))


def bracket_dp(m: MorsePresentation) -> BracketValue:
    return BracketSweep(m).run()


def bracket(d: Union[PDDiagram, MorsePresentation], engine: str = DP,
            oracleBound: int = DEFAULT_ORACLE_BOUND) -> BracketValue:
    """ Evaluate the bracket of a PD code or Morse presentation with the chosen engine """
    if engine not in ENGINES:
        raise ValueError(f"Unknown bracket engine {engine!r}, expected one of {ENGINES}")

    if engine == NAIVE:
        pd = d if isinstance(d, PDDiagram) else morse_to_pd(d)
        return bracket_naive(pd, oracleBound)

    presentation = d if isinstance(d, MorsePresentation) else to_morse(d)
    return bracket_dp(presentation)


def bracket_combination(terms: Sequence[Tuple[int, Optional[MorsePresentation]]],
                        engine: str = DP, oracleBound: int = DEFAULT_ORACLE_BOUND,
                        threads: int = 1,
                        telemetry: Optional[SweepTelemetry] = None) -> LaurentPoly:
    """
    Linear extension of the bracket in the delta normalization.

    A term with presentation None (or an empty presentation) is the empty
    diagram and contributes its coefficient times 1.
    """
    def evaluate(term: Tuple[int, Optional[MorsePresentation]]) -> Tuple[LaurentPoly, SweepTelemetry]:
        coeff, presentation = term
        if coeff == 0:
            return LaurentPoly(), SweepTelemetry()
        if presentation is None or len(presentation) == 0:
            return ONE * coeff, SweepTelemetry()
        if engine == DP:
            sweep = BracketSweep(presentation)
            return sweep.run().poly_delta * coeff, sweep.telemetry
        return bracket(presentation, engine, oracleBound).poly_delta * coeff, SweepTelemetry()

    if threads > 1 and len(terms) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(evaluate, terms))
    else:
        results = [evaluate(term) for term in terms]

    total = LaurentPoly()
    for value, usage in results:
        total = total + value
        if telemetry is not None:
            telemetry.merge(usage)
    return total
