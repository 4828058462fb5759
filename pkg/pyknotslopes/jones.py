from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Union

from sortedcontainers import SortedDict

from pyknotslopes.bracket import (DEFAULT_ORACLE_BOUND, DP, ENGINES, SweepTelemetry,
                                  bracket_combination)
from pyknotslopes.diagram import DiagramStats, PDDiagram, stats
from pyknotslopes.laurent import LaurentPoly, polynomial_record
from pyknotslopes.morse import MorsePresentation, cable, to_morse
from pyknotslopes.states import (A, B, Slope, boundary_slopes, is_adequate, seifert_state,
                                 state_slope, v_a, v_b)


class InsufficientRangeError(Exception):
    ...


class NotAdequateError(Exception):
    ...


@dataclass(frozen=True)
class ChebyshevExpansion:
    """ S_n(x) = sum of coeffs[m] * x^m """
    n: int
    coeffs: SortedDict

    def evaluate(self, x: LaurentPoly) -> LaurentPoly:
        total = LaurentPoly()
        for m, a in self.coeffs.items():
            total = total + x**m * a
        return total

    def __str__(self) -> str:
        return str(LaurentPoly(dict(self.coeffs), variable="x"))


@lru_cache(maxsize=None)
def _chebyshev_coefficients(n: int) -> tuple:
    previous, current = [1], [0, 1]
    if n == 0:
        return tuple(previous)
    for _ in range(n - 1):
        following = [0] + current
        for m, a in enumerate(previous):
            following[m] -= a
        previous, current = current, following
    return tuple(current)


def chebyshev(n: int) -> ChebyshevExpansion:
    """ Coefficients of S_n from S_0 = 1, S_1 = x, S_{n+1} = x S_n - S_{n-1} """
    if n < 0:
        raise ValueError(f"Chebyshev index must be nonnegative, got {n}")
    coeffs = SortedDict({m: a for m, a in enumerate(_chebyshev_coefficients(n)) if a})
    return ChebyshevExpansion(n, coeffs)


@lru_cache(maxsize=None)
def unknot_normalizer(n: int) -> LaurentPoly:
    """ Cabled bracket of the 0-crossing circle: (-1)^n (A^(2n+2) - A^(-2n-2)) / (A^2 - A^-2) """
    numerator = LaurentPoly({2*n + 2: 1, -2*n - 2: -1})
    value = numerator.divide_exact(LaurentPoly({2: 1, -2: -1}))
    return -value if n % 2 else value


def default_max_n(c: int) -> int:
    if c <= 4:
        return 5
    if c <= 10:
        return 4
    return 3


@dataclass(frozen=True)
class JonesEntry:
    J: LaurentPoly
    jmax: int
    jmin: int

    def to_json(self) -> dict:
        return {
            "J": polynomial_record(self.J),
            "jmax": self.jmax,
            "jmin": self.jmin
        }


@dataclass
class ColoredJonesTable:
    name: str
    entries: SortedDict = field(default_factory=SortedDict)
    telemetry: SweepTelemetry = field(default_factory=SweepTelemetry)

    @property
    def colors(self) -> List[int]:
        return list(self.entries.keys())

    def J(self, n: int) -> LaurentPoly:
        return self.entries[n].J

    def j(self, n: int) -> int:
        return self.entries[n].jmax

    def jstar(self, n: int) -> int:
        return self.entries[n].jmin

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "colors": {str(n): entry.to_json() for n, entry in self.entries.items()},
            "telemetry": self.telemetry.to_json()
        }


def _fraction_json(value: Fraction) -> dict:
    return {"numerator": value.numerator, "denominator": value.denominator}


@dataclass
class SlopeSequences:
    js: SortedDict
    js_star: SortedDict
    d2j: SortedDict
    d2j_star: SortedDict

    @staticmethod
    def _stable(values: SortedDict) -> Optional[int]:
        distinct = set(values.values())
        if len(distinct) == 1:
            return distinct.pop()
        return None

    @property
    def stableD2j(self) -> Optional[int]:
        return self._stable(self.d2j)

    @property
    def stableD2jStar(self) -> Optional[int]:
        return self._stable(self.d2j_star)

    def to_json(self) -> dict:
        return {
            "js": {str(n): _fraction_json(v) for n, v in self.js.items()},
            "js_star": {str(n): _fraction_json(v) for n, v in self.js_star.items()},
            "d2j": {str(n): v for n, v in self.d2j.items()},
            "d2j_star": {str(n): v for n, v in self.d2j_star.items()}
        }


def slope_sequences(t: ColoredJonesTable) -> SlopeSequences:
    colors = t.colors
    if len(colors) < 3:
        raise InsufficientRangeError(
            f"Slope sequences need at least 3 colors, table has {len(colors)}")

    js = SortedDict({n: Fraction(4*t.j(n), n*n) for n in colors})
    jsStar = SortedDict({n: Fraction(4*t.jstar(n), n*n) for n in colors})
    d2j = SortedDict()
    d2jStar = SortedDict()
    for n in colors:
        if n - 1 in t.entries and n + 1 in t.entries:
            d2j[n] = t.j(n + 1) - 2*t.j(n) + t.j(n - 1)
            d2jStar[n] = t.jstar(n + 1) - 2*t.jstar(n) + t.jstar(n - 1)
    if not d2j:
        raise InsufficientRangeError("Slope sequences need three consecutive colors")
    return SlopeSequences(js, jsStar, d2j, d2jStar)


def predict_extreme_degree(stats: DiagramStats, v: int, n_color: int, side: str,
                           adequate: bool = True) -> Union[int, Fraction]:
    """
    Extreme q-degree of J(n_color) forced by an adequate side: the lowest
    degree j* for side A (v = v_A), the highest degree j for side B (v = v_B).
    """
    if not adequate:
        raise NotAdequateError(f"The diagram is not {side}-adequate")
    if side not in {A, B}:
        raise ValueError(f"Side must be 'A' or 'B', got {side!r}")

    n = n_color - 1
    framing = stats.w * (n*n + 2*n)
    if side == A:
        value = Fraction(framing - n*n*stats.c - 2*n*v + 2*n, 4)
    else:
        value = Fraction(framing + n*n*stats.c + 2*n*v - 2*n, 4)
    return int(value) if value.denominator == 1 else value


@dataclass
class SideVerdict:
    side: str
    adequate: bool
    predicted: int
    estimated: Optional[int]
    degreesMatch: Optional[bool]
    diagnostic: Fraction

    @property
    def exact(self) -> bool:
        return self.estimated is not None and self.estimated == self.predicted

    @property
    def passed(self) -> bool:
        if not self.adequate:
            return True
        return self.exact and bool(self.degreesMatch)

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "adequate": self.adequate,
            "gating": self.adequate,
            "predicted": self.predicted,
            "estimated": self.estimated,
            "exact": self.exact,
            "degreesMatch": self.degreesMatch,
            "diagnostic": _fraction_json(self.diagnostic),
            "passed": self.passed
        }


@dataclass
class Verdict:
    name: str
    a_side: SideVerdict
    b_side: SideVerdict
    slopes: tuple
    seifertSlope: Slope
    distinct: Optional[bool]
    notes: List[str] = field(default_factory=list)
    table: Optional[ColoredJonesTable] = None
    sequences: Optional[SlopeSequences] = None

    @property
    def applicable(self) -> bool:
        return self.a_side.adequate or self.b_side.adequate

    @property
    def passed(self) -> bool:
        return self.a_side.passed and self.b_side.passed and self.distinct is not False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "applicable": self.applicable,
            "a_side": self.a_side.to_json(),
            "b_side": self.b_side.to_json(),
            "slopes": {"A": self.slopes[0].to_json(), "B": self.slopes[1].to_json()},
            "seifertSlope": self.seifertSlope.to_json(),
            "distinct": self.distinct,
            "notes": list(self.notes),
            "sequences": self.sequences.to_json() if self.sequences else None,
            "table": self.table.to_json() if self.table else None
        }


# pylint: disable=not-callable


class JonesCalculator:
    """
    Colored Jones polynomials of a knot diagram by Chebyshev cabling.

    Progress is reported through the callbacks: a job is one table (size =
    number of colors), a task is one color (size = number of cable terms).
    """

    def __init__(self, engine: str = DP, oracleBound: int = DEFAULT_ORACLE_BOUND, threads: int = 1):
        if engine not in ENGINES:
            raise ValueError(f"Unknown bracket engine {engine!r}, expected one of {ENGINES}")
        self.engine = engine
        self.oracleBound = oracleBound
        self.threads = max(1, threads)

        self._onJobStart: Callable[[str, int], None] = None
        self._onTaskStart: Callable[[str, int], None] = None
        self._onTaskComplete: Callable[[], None] = None
        self._onJobEnd: Callable[[], None] = None

    # pylint: disable=unused-argument
    @staticmethod
    def __default_callback(*args, **kwargs) -> None:
        return None
    # pylint: enable=unused-argument

    @property
    def onJobStart(self) -> Callable[[str, int], None]:
        if self._onJobStart:
            return self._onJobStart
        return self.__default_callback

    @onJobStart.setter
    def onJobStart(self, callback: Callable[[str, int], None]):
        self._onJobStart = callback

    @property
    def onTaskStart(self) -> Callable[[str, int], None]:
        if self._onTaskStart:
            return self._onTaskStart
        return self.__default_callback

    @onTaskStart.setter
    def onTaskStart(self, callback: Callable[[str, int], None]):
        self._onTaskStart = callback

    @property
    def onTaskComplete(self) -> Callable[[], None]:
        if self._onTaskComplete:
            return self._onTaskComplete
        return self.__default_callback

    @onTaskComplete.setter
    def onTaskComplete(self, callback: Callable[[], None]):
        self._onTaskComplete = callback

    @property
    def onJobEnd(self) -> Callable[[], None]:
        if self._onJobEnd:
            return self._onJobEnd
        return self.__default_callback

    @onJobEnd.setter
    def onJobEnd(self, callback: Callable[[], None]):
        self._onJobEnd = callback

    def cabled_bracket(self, d: MorsePresentation, n: int,
                       telemetry: Optional[SweepTelemetry] = None, threads: Optional[int] = None) -> LaurentPoly:
        """ Sum of a_{n,m} <D^m> over the Chebyshev expansion of S_n, delta normalization """
        terms = [(a, cable(d, m) if m > 0 else None) for m, a in chebyshev(n).coeffs.items()]
        return bracket_combination(
            terms,
            engine=self.engine,
            oracleBound=self.oracleBound,
            threads=self.threads if threads is None else threads,
            telemetry=telemetry
        )

    def colored_jones(self, d: PDDiagram, n_color: int,
                      morse: Optional[MorsePresentation] = None,
                      telemetry: Optional[SweepTelemetry] = None,
                      threads: Optional[int] = None) -> LaurentPoly:
        """
        J(n_color, q) normalized so the unknot has J = 1.

        `morse`, when given, must present the same diagram as `d`.
        """
        d.require_knot()
        if n_color < 1:
            raise ValueError(f"Colors start at 1, got {n_color}")

        n = n_color - 1
        presentation = morse if morse is not None else to_morse(d)
        w = stats(d).w

        framing = LaurentPoly.mono(-1 if (n * w) % 2 else 1, -w * (n*n + 2*n))
        unnormalized = framing * self.cabled_bracket(presentation, n, telemetry, threads)
        return unnormalized.divide_exact(unknot_normalizer(n)).substitute_q()

    def _color_entry(self, d: PDDiagram, n_color: int, morse: MorsePresentation,
                     threads: int) -> tuple:
        telemetry = SweepTelemetry()
        self.onTaskStart(f"J({n_color})", len(chebyshev(n_color - 1).coeffs))
        poly = self.colored_jones(d, n_color, morse, telemetry, threads)
        self.onTaskComplete()
        low, high = poly.degree_bounds()
        return JonesEntry(poly, high, low), telemetry

    def jones_table(self, d: PDDiagram, n_max: int,
                    morse: Optional[MorsePresentation] = None) -> ColoredJonesTable:
        d.require_knot()
        if n_max < 2:
            raise InsufficientRangeError(f"A Jones table needs n_max >= 2, got {n_max}")

        presentation = morse if morse is not None else to_morse(d)
        table = ColoredJonesTable(d.name)
        colors = range(1, n_max + 1)

        self.onJobStart(d.name or "diagram", n_max)
        if self.threads > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                results = list(pool.map(
                    lambda n: self._color_entry(d, n, presentation, 1), colors))
        else:
            results = [self._color_entry(d, n, presentation, 1) for n in colors]

        for n, (entry, telemetry) in zip(colors, results):
            table.entries[n] = entry
            table.telemetry.merge(telemetry)
        self.onJobEnd()
        return table

    def predict(self, d: PDDiagram, n_color: int, side: str) -> Union[int, Fraction]:
        flags = dict(zip((A, B), is_adequate(d)))
        v = v_a(d) if side == A else v_b(d)
        return predict_extreme_degree(stats(d), v, n_color, side, adequate=flags[side])

    def verify(self, d: PDDiagram, n_max: Optional[int] = None,
               morse: Optional[MorsePresentation] = None) -> Verdict:
        """
        Compare the growth of the extreme degrees of J with the slopes of the
        all-A and all-B state surfaces. Only adequate sides are gating.
        """
        d.require_knot()
        st = stats(d)
        if n_max is None:
            n_max = default_max_n(st.c)
        n_max = max(n_max, 3)

        aAdequate, bAdequate = is_adequate(d)
        table = self.jones_table(d, n_max, morse)
        sequences = slope_sequences(table)

        def side_verdict(side: str, adequate: bool) -> SideVerdict:
            if side == A:
                predicted = -2 * st.c_minus
                stable = sequences.stableD2jStar
                extreme, v = table.jstar, v_a(d)
                diagnostic = sequences.js_star[n_max]
            else:
                predicted = 2 * st.c_plus
                stable = sequences.stableD2j
                extreme, v = table.j, v_b(d)
                diagnostic = sequences.js[n_max]

            degreesMatch = None
            if adequate:
                degreesMatch = all(
                    extreme(n) == predict_extreme_degree(st, v, n, side) for n in table.colors)
            return SideVerdict(
                side=side,
                adequate=adequate,
                predicted=predicted,
                estimated=None if stable is None else 2 * stable,
                degreesMatch=degreesMatch,
                diagnostic=diagnostic
            )

        aSide = side_verdict(A, aAdequate)
        bSide = side_verdict(B, bAdequate)

        notes = []
        distinct = None
        if aAdequate and bAdequate and st.c > 0:
            distinct = aSide.estimated != bSide.estimated
            if not distinct:
                notes.append("both adequate sides detect the same slope")
        if not (aAdequate or bAdequate):
            notes.append("no adequate side; slope detection not applicable")
        for sideVerdict in (aSide, bSide):
            if not sideVerdict.adequate:
                notes.append(f"{sideVerdict.side} side not adequate; diagnostic only")
            elif not sideVerdict.passed:
                notes.append(f"{sideVerdict.side} side does not match its state surface slope")

        return Verdict(
            name=d.name,
            a_side=aSide,
            b_side=bSide,
            slopes=boundary_slopes(d),
            seifertSlope=state_slope(d, seifert_state(d)),
            distinct=distinct,
            notes=notes,
            table=table,
            sequences=sequences
        )


def cabled_bracket(d: MorsePresentation, n: int, engine: str = DP,
                   oracleBound: int = DEFAULT_ORACLE_BOUND) -> LaurentPoly:
    return JonesCalculator(engine, oracleBound).cabled_bracket(d, n)


def colored_jones(d: PDDiagram, n_color: int, engine: str = DP,
                  oracleBound: int = DEFAULT_ORACLE_BOUND,
                  morse: Optional[MorsePresentation] = None) -> LaurentPoly:
    return JonesCalculator(engine, oracleBound).colored_jones(d, n_color, morse)


def jones_table(d: PDDiagram, n_max: int, engine: str = DP,
                oracleBound: int = DEFAULT_ORACLE_BOUND,
                morse: Optional[MorsePresentation] = None) -> ColoredJonesTable:
    return JonesCalculator(engine, oracleBound).jones_table(d, n_max, morse)


def verify(d: PDDiagram, n_max: Optional[int] = None, engine: str = DP,
           oracleBound: int = DEFAULT_ORACLE_BOUND,
           morse: Optional[MorsePresentation] = None) -> Verdict:
    return JonesCalculator(engine, oracleBound).verify(d, n_max, morse)


def degree_table(t: ColoredJonesTable) -> Dict[int, tuple]:
    """ (j*(n), j(n)) per color """
    return {n: (t.jstar(n), t.j(n)) for n in t.colors}
