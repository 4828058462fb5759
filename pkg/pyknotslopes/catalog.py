from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from sortedcontainers import SortedDict

from pyknotslopes.diagram import PDDiagram, braid_to_pd, parse_braid, pretzel_name
from pyknotslopes.laurent import LaurentPoly
from pyknotslopes.morse import MorsePresentation, braid_to_morse, morse_to_pd, pretzel_morse, to_morse

BRAID = "braid"
PD = "pd"
PRETZEL = "pretzel"
UNKNOT = "unknot"


class UnknownKnotError(Exception):
    ...


def _q(terms: Dict[int, int]) -> LaurentPoly:
    return LaurentPoly(terms, variable="q")


@dataclass(frozen=True)
class Expected:
    adequacy: Tuple[bool, bool]
    slopes: Tuple[int, int]
    jones2: Optional[LaurentPoly] = None

    def to_json(self) -> dict:
        return {
            "adequacy": {"A": self.adequacy[0], "B": self.adequacy[1]},
            "slopes": {"A": self.slopes[0], "B": self.slopes[1]},
            "jones2": self.jones2.to_json() if self.jones2 is not None else None
        }


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    source: object
    expected: Optional[Expected] = None
    description: str = ""

    def diagram(self) -> PDDiagram:
        if self.kind == UNKNOT:
            return PDDiagram.unknot()
        if self.kind == BRAID:
            return braid_to_pd(parse_braid(self.source), name=self.name)
        if self.kind == PRETZEL:
            return morse_to_pd(pretzel_morse(self.source), name=self.name)
        return PDDiagram(self.source, name=self.name)

    def morse(self) -> MorsePresentation:
        """ Presentation of the same diagram as `diagram()`, narrow where the source allows it """
        if self.kind == BRAID:
            return braid_to_morse(parse_braid(self.source), name=self.name)
        if self.kind == PRETZEL:
            return pretzel_morse(self.source, name=self.name)
        return to_morse(self.diagram())

    def source_text(self) -> str:
        if self.kind == PRETZEL:
            return pretzel_name(self.source)
        if self.kind == PD:
            return str([list(x) for x in self.source])
        if self.kind == UNKNOT:
            return "0-crossing circle"
        return str(self.source)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "source": self.source_text(),
            "description": self.description,
            "expected": self.expected.to_json() if self.expected else None
        }


# Provenance of expected values:
#   adequacy   alternating reduced diagrams are adequate; positive braids with every
#              syllable exponent >= 3 are adequate; the (-2,3,p) pretzel diagram is
#              A-adequate iff p > 0 and B-adequate iff p < 0
#   slopes     (-2c_-, 2c_+) from the crossing signs of each diagram
#   jones2     classical Jones polynomials: torus knots T(2,p), T(3,4) = P(-2,3,3) and
#              T(3,5) = P(-2,3,5) from the torus knot formula, Knot Atlas values for
#              3_1, 4_1 and 5_2 (their PD codes are left-handed, negative exponents)
_ENTRIES = (
    CatalogEntry("unknot", UNKNOT, None,
                 Expected((True, True), (0, 0), _q({0: 1})),
                 "crossingless circle"),
    CatalogEntry("trefoil", BRAID, "2: 1 1 1",
                 Expected((True, True), (0, 6), _q({1: 1, 3: 1, 4: -1})),
                 "right-handed trefoil, closure of s1^3"),
    CatalogEntry("trefoil-left", BRAID, "2: -1 -1 -1",
                 Expected((True, True), (-6, 0), _q({-1: 1, -3: 1, -4: -1})),
                 "left-handed trefoil, closure of s1^-3"),
    CatalogEntry("figure-8", BRAID, "3: 1 -2 1 -2",
                 Expected((True, True), (-4, 4), _q({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})),
                 "figure-eight knot, closure of s1 s2^-1 s1 s2^-1"),
    CatalogEntry("T(2,1)", BRAID, "2: 1",
                 Expected((True, False), (0, 2), _q({0: 1})),
                 "one-crossing unknot kink"),
    CatalogEntry("T(2,5)", BRAID, "2: 1 1 1 1 1",
                 Expected((True, True), (0, 10), _q({2: 1, 4: 1, 5: -1, 6: 1, 7: -1})),
                 "cinquefoil, closure of s1^5"),
    CatalogEntry("T(2,7)", BRAID, "2: 1 1 1 1 1 1 1",
                 Expected((True, True), (0, 14),
                          _q({3: 1, 5: 1, 6: -1, 7: 1, 8: -1, 9: 1, 10: -1})),
                 "closure of s1^7"),
    CatalogEntry("T(2,9)", BRAID, "2: 1 1 1 1 1 1 1 1 1",
                 Expected((True, True), (0, 18),
                          _q({4: 1, 6: 1, 7: -1, 8: 1, 9: -1, 10: 1, 11: -1, 12: 1, 13: -1})),
                 "closure of s1^9"),
    CatalogEntry("P(-2,3,3)", PRETZEL, (-2, 3, 3),
                 Expected((True, False), (0, 16), _q({3: 1, 5: 1, 8: -1})),
                 "pretzel knot, the torus knot T(3,4)"),
    CatalogEntry("P(-2,3,5)", PRETZEL, (-2, 3, 5),
                 Expected((True, False), (0, 20), _q({4: 1, 6: 1, 10: -1})),
                 "pretzel knot, the torus knot T(3,5)"),
    CatalogEntry("P(-2,3,7)", PRETZEL, (-2, 3, 7),
                 Expected((True, False), (0, 24)),
                 "pretzel knot"),
    CatalogEntry("P(-2,3,-5)", PRETZEL, (-2, 3, -5),
                 Expected((False, True), (-10, 10)),
                 "pretzel knot"),
    CatalogEntry("P(3,3,3)", PRETZEL, (3, 3, 3),
                 Expected((True, True), (-18, 0)),
                 "alternating pretzel knot"),
    CatalogEntry("P(3,3,-3,-3,3)", PRETZEL, (3, 3, -3, -3, 3),
                 Expected((True, True), (-18, 12)),
                 "adequate non-alternating pretzel knot"),
    CatalogEntry("s1^3s2^3", BRAID, "3: 1 1 1 2 2 2",
                 Expected((True, True), (0, 12)),
                 "positive braid closure"),
    CatalogEntry("s1^3s2^5", BRAID, "3: 1 1 1 2 2 2 2 2",
                 Expected((True, True), (0, 16)),
                 "positive braid closure"),
    CatalogEntry("3_1", PD, ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)),
                 Expected((True, True), (-6, 0), _q({-4: -1, -3: 1, -1: 1})),
                 "Knot Atlas trefoil"),
    CatalogEntry("4_1", PD, ((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)),
                 Expected((True, True), (-4, 4), _q({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})),
                 "Knot Atlas figure-eight knot"),
    CatalogEntry("5_2", PD, ((1, 4, 2, 5), (3, 8, 4, 9), (5, 10, 6, 1), (9, 6, 10, 7), (7, 2, 8, 3)),
                 Expected((True, True), (-10, 0),
                          _q({-6: -1, -5: 1, -4: -1, -3: 2, -2: -1, -1: 1})),
                 "Knot Atlas three-twist knot"),
)

CATALOG: SortedDict = SortedDict({entry.name: entry for entry in _ENTRIES})


def get_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError as e:
        raise UnknownKnotError(
            f"Unknown catalog knot {name!r}, known: {', '.join(CATALOG)}") from e
