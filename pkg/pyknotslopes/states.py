from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Dict, Iterable, List, Mapping, Tuple

from pyknotslopes.diagram import PDDiagram, UnionFind

A = "A"
B = "B"

# Tuple slots joined by each smoothing of X[a, b, c, d]
SMOOTHING_PAIRS = {
    A: ((0, 1), (2, 3)),
    B: ((0, 3), (1, 2))
}


@dataclass(frozen=True)
class KauffmanState:
    choices: Tuple[str, ...]

    def __post_init__(self):
        choices = tuple(self.choices)
        bad = [c for c in choices if c not in {A, B}]
        if bad:
            raise ValueError(f"Kauffman state choices must be 'A' or 'B', got {bad}")
        object.__setattr__(self, "choices", choices)

    @classmethod
    def all_a(cls, d: PDDiagram) -> KauffmanState:
        return cls((A,) * len(d))

    @classmethod
    def all_b(cls, d: PDDiagram) -> KauffmanState:
        return cls((B,) * len(d))

    @classmethod
    def uniform(cls, d: PDDiagram, side: str) -> KauffmanState:
        return cls((side,) * len(d))

    @classmethod
    def from_string(cls, text: str) -> KauffmanState:
        return cls(tuple(text.strip().upper()))

    @classmethod
    def from_mapping(cls, choice: Mapping[int, str], size: int) -> KauffmanState:
        missing = [i for i in range(size) if i not in choice]
        if missing:
            raise ValueError(f"Kauffman state is missing crossings {missing}")
        return cls(tuple(choice[i] for i in range(size)))

    def __len__(self) -> int:
        return len(self.choices)

    def __getitem__(self, index: int) -> str:
        return self.choices[index]

    def __str__(self) -> str:
        return "".join(self.choices)

    def flipped(self, index: int) -> KauffmanState:
        choices = list(self.choices)
        choices[index] = B if choices[index] == A else A
        return KauffmanState(tuple(choices))

    def count(self, side: str) -> int:
        return self.choices.count(side)

    def to_json(self) -> Dict[str, str]:
        return {str(i): c for i, c in enumerate(self.choices)}


@dataclass(frozen=True)
class StateCircles:
    circle_count: int
    membership: Mapping[int, int]  # arc label -> circle id

    def circle_of(self, label: int) -> int:
        return self.membership[label]


@dataclass(frozen=True)
class StateGraph:
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]

    def loops(self) -> List[int]:
        """ Indices of edges with both ends on one circle """
        return [i for i, (u, v) in enumerate(self.edges) if u == v]

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class StateStats:
    cBplus: int
    cAminus: int


@total_ordering
@dataclass(frozen=True)
class Slope:
    """ Boundary slope p/q in lowest terms; 1/0 is the meridian slope """
    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den < 0:
            num, den = -num, -den
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a slope")
            num = 1
        else:
            g = gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_fraction(cls, value: Fraction) -> Slope:
        return cls(value.numerator, value.denominator)

    @classmethod
    def infinity(cls) -> Slope:
        return cls(1, 0)

    def is_infinite(self) -> bool:
        return self.denominator == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite():
            raise ZeroDivisionError("The slope 1/0 has no rational value")
        return Fraction(self.numerator, self.denominator)

    def __lt__(self, other) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        if self.is_infinite():
            return False
        if other.is_infinite():
            return True
        return self.as_fraction() < other.as_fraction()

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def to_json(self) -> dict:
        return {"numerator": self.numerator, "denominator": self.denominator}


def _circles(d: PDDiagram, choices: Iterable[str]) -> UnionFind:
    circles = UnionFind()
    for label in d.labels:
        circles.add(label)
    for crossing, side in zip(d, choices):
        for i, j in SMOOTHING_PAIRS[side]:
            circles.union(crossing[i], crossing[j])
    return circles


def resolve(d: PDDiagram, state: KauffmanState) -> StateCircles:
    """ Smooth every crossing of `d` as `state` chooses and collect the resulting circles """
    if len(state) != len(d):
        raise ValueError(f"State has {len(state)} choices for {len(d)} crossings")

    circles = _circles(d, state.choices)
    ids: Dict[int, int] = {}
    membership: Dict[int, int] = {}
    for label in d.labels:
        root = circles.find(label)
        membership[label] = ids.setdefault(root, len(ids))

    return StateCircles(circle_count=len(ids) + d.loops, membership=membership)


def state_circle_count(d: PDDiagram, state: KauffmanState) -> int:
    return resolve(d, state).circle_count


def state_graph(d: PDDiagram, state: KauffmanState) -> StateGraph:
    circles = resolve(d, state)
    edges = []
    for crossing, side in zip(d, state.choices):
        (i, _), (j, _) = SMOOTHING_PAIRS[side]
        edges.append((circles.circle_of(crossing[i]), circles.circle_of(crossing[j])))
    return StateGraph(vertex_count=circles.circle_count, edges=tuple(edges))


def loop_witnesses(d: PDDiagram, side: str) -> List[int]:
    """ Crossings whose `side` smoothing joins a circle of the all-`side` state to itself """
    return state_graph(d, KauffmanState.uniform(d, side)).loops()


def is_adequate(d: PDDiagram) -> Tuple[bool, bool]:
    return not loop_witnesses(d, A), not loop_witnesses(d, B)


def v_a(d: PDDiagram) -> int:
    return state_circle_count(d, KauffmanState.all_a(d))


def v_b(d: PDDiagram) -> int:
    return state_circle_count(d, KauffmanState.all_b(d))


def seifert_state(d: PDDiagram) -> KauffmanState:
    """ The oriented smoothing: A at positive crossings, B at negative ones """
    return KauffmanState(tuple(A if d.sign(i) > 0 else B for i in range(len(d))))


def state_stats(d: PDDiagram, state: KauffmanState) -> StateStats:
    cBplus = sum(1 for i, side in enumerate(state.choices) if side == B and d.sign(i) > 0)
    cAminus = sum(1 for i, side in enumerate(state.choices) if side == A and d.sign(i) < 0)
    return StateStats(cBplus=cBplus, cAminus=cAminus)


def state_slope(d: PDDiagram, state: KauffmanState) -> Slope:
    d.require_knot()
    counts = state_stats(d, state)
    return Slope(2*counts.cBplus - 2*counts.cAminus)


def boundary_slopes(d: PDDiagram) -> Tuple[Slope, Slope]:
    """ Slopes of the all-A and all-B state surfaces """
    d.require_knot()
    return (state_slope(d, KauffmanState.all_a(d)),
            state_slope(d, KauffmanState.all_b(d)))
