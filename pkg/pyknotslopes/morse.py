from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Sequence, Tuple

from pyknotslopes.diagram import (BraidWord, PDDiagram, PretzelParameterError,
                                  UnionFind, pretzel_name)


class MorseEventError(Exception):
    ...


class NonPlanarDiagramError(Exception):
    ...


class EventKind(str, Enum):
    CUP = "cup"
    CAP = "cap"
    CROSS_POS = "crosspos"
    CROSS_NEG = "crossneg"


@dataclass(frozen=True)
class MorseEvent:
    """
    One elementary event of a sweep moving upward through the diagram.

    Cup(p) opens two joined points at p, p+1; Cap(p) closes the points
    p, p+1; a crossing acts on the points p, p+1. CrossPos carries its
    over-strand on the SW-NE diagonal, CrossNeg on the SE-NW diagonal.
    """
    kind: EventKind
    position: int

    @classmethod
    def cup(cls, position: int) -> MorseEvent:
        return cls(EventKind.CUP, position)

    @classmethod
    def cap(cls, position: int) -> MorseEvent:
        return cls(EventKind.CAP, position)

    @classmethod
    def cross_pos(cls, position: int) -> MorseEvent:
        return cls(EventKind.CROSS_POS, position)

    @classmethod
    def cross_neg(cls, position: int) -> MorseEvent:
        return cls(EventKind.CROSS_NEG, position)

    def is_crossing(self) -> bool:
        return self.kind in {EventKind.CROSS_POS, EventKind.CROSS_NEG}

    def shifted(self, offset: int) -> MorseEvent:
        return MorseEvent(self.kind, self.position + offset)

    def __str__(self) -> str:
        names = {
            EventKind.CUP: "Cup",
            EventKind.CAP: "Cap",
            EventKind.CROSS_POS: "CrossPos",
            EventKind.CROSS_NEG: "CrossNeg"
        }
        return f"{names[self.kind]}({self.position})"


class MorsePresentation:
    def __init__(self, events: Iterable[MorseEvent] = (), name: str = ""):
        self.name = name
        self._events: Tuple[MorseEvent, ...] = tuple(events)
        self._widths = self._check_widths(self._events)

    def __repr__(self):
        return f"{self.__class__.__name__}<Name: {self.name!r}, Events: {len(self)}, Width: {self.maxWidth}>"

    def __str__(self) -> str:
        return " ".join(str(e) for e in self._events)

    def __len__(self) -> int:
        return len(self._events)

    def __iter__(self):
        return iter(self._events)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MorsePresentation):
            return NotImplemented
        return self._events == other._events

    def __hash__(self) -> int:
        return hash(self._events)

    @property
    def events(self) -> Tuple[MorseEvent, ...]:
        return self._events

    @property
    def widths(self) -> Tuple[int, ...]:
        """ Boundary width after each event, starting from 0 """
        return self._widths

    @property
    def maxWidth(self) -> int:
        return max(self._widths)

    @property
    def crossingCount(self) -> int:
        return sum(1 for e in self._events if e.is_crossing())

    @staticmethod
    def _check_widths(events: Sequence[MorseEvent]) -> Tuple[int, ...]:
        width = 0
        widths = [0]
        for i, event in enumerate(events):
            if not isinstance(event, MorseEvent):
                raise MorseEventError(f"Event {i} is not a MorseEvent: {event!r}")
            if event.kind == EventKind.CUP:
                if not 0 <= event.position <= width:
                    raise MorseEventError(f"{event} at index {i} is outside width {width}")
                width += 2
            else:
                if not 0 <= event.position <= width - 2:
                    raise MorseEventError(f"{event} at index {i} is outside width {width}")
                if event.kind == EventKind.CAP:
                    width -= 2
            widths.append(width)

        if width != 0:
            raise MorseEventError(f"Presentation ends with width {width}")
        return tuple(widths)

    def to_json(self) -> List[List]:
        return [[e.kind.value, e.position] for e in self._events]

    @classmethod
    def from_json(cls, data: Sequence[Sequence], name: str = "") -> MorsePresentation:
        try:
            return cls((MorseEvent(EventKind(kind), int(pos)) for kind, pos in data), name=name)
        except (TypeError, ValueError) as e:
            raise MorseEventError(f"Invalid event list: {e}") from e


def cable(d: MorsePresentation, m: int) -> MorsePresentation:
    """
    Blackboard-framed m-cable: every point becomes m parallel points,
    cups and caps become nested families, crossings m×m grids.
    """
    if m < 1:
        raise MorseEventError(f"Cable size must be positive, got {m}")
    if m == 1:
        return MorsePresentation(d.events, name=d.name)

    events: List[MorseEvent] = []
    for event in d:
        base = m * event.position
        if event.kind == EventKind.CUP:
            events.extend(MorseEvent.cup(base + j) for j in range(m))
        elif event.kind == EventKind.CAP:
            events.extend(MorseEvent.cap(base + j) for j in reversed(range(m)))
        else:
            for k in reversed(range(m)):
                events.extend(MorseEvent(event.kind, base + k + j) for j in range(m))

    name = f"{d.name}^{m}" if d.name else ""
    return MorsePresentation(events, name=name)


def braid_to_morse(b: BraidWord, name: str = "") -> MorsePresentation:
    """ Closed braid: nested cups, the braid on the right half, nested caps """
    s = b.strands
    events = [MorseEvent.cup(i) for i in range(s)]
    for letter in b.letters:
        position = s + abs(letter) - 1
        if letter > 0:
            events.append(MorseEvent.cross_pos(position))
        else:
            events.append(MorseEvent.cross_neg(position))
    events.extend(MorseEvent.cap(i) for i in reversed(range(s)))
    return MorsePresentation(events, name=name or str(b))


def pretzel_morse(params: Sequence[int], name: str = "") -> MorsePresentation:
    """
    Standard pretzel diagram with one vertical twist column per parameter.
    Positive parameters twist with CrossPos, negative ones with CrossNeg.
    """
    params = list(params)
    if len(params) < 2:
        raise PretzelParameterError(
            f"A pretzel diagram needs at least 2 twist regions, got {len(params)}")
    if any(not isinstance(q, int) or q == 0 for q in params):
        raise PretzelParameterError(f"Pretzel parameters must be nonzero integers: {params}")

    k = len(params)
    events = [MorseEvent.cup(0)]
    events.extend(MorseEvent.cup(2*i - 1) for i in range(1, k))
    for i, q in enumerate(params):
        kind = EventKind.CROSS_POS if q > 0 else EventKind.CROSS_NEG
        events.extend(MorseEvent(kind, 2*i) for _ in range(abs(q)))
    events.extend(MorseEvent.cap(2*i - 1) for i in reversed(range(1, k)))
    events.append(MorseEvent.cap(0))
    return MorsePresentation(events, name=name or pretzel_name(params))


class _ParityUnion:
    """ Union-find tracking whether two strand pieces run in the same vertical direction """

    def __init__(self):
        self._parent: List[int] = []
        self._parity: List[int] = []

    def new(self) -> int:
        self._parent.append(len(self._parent))
        self._parity.append(0)
        return len(self._parent) - 1

    def find(self, v: int) -> Tuple[int, int]:
        parity = 0
        root = v
        while self._parent[root] != root:
            parity ^= self._parity[root]
            root = self._parent[root]
        return root, parity

    def union(self, a: int, b: int, different: bool):
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return
        self._parent[rb] = ra
        self._parity[rb] = pa ^ pb ^ int(different)


def morse_to_pd(m: MorsePresentation, name: str = "") -> PDDiagram:
    """
    PD code of the diagram swept out by `m`.

    Every component is oriented so the left leg of its earliest cup runs
    downward, which orients the copies of a cable in parallel.
    """
    edges = UnionFind()
    directions = _ParityUnion()
    points: List[Tuple[int, int]] = []  # (edge, direction variable) per boundary point
    cupLegs: List[int] = []
    crossings: List[Tuple[EventKind, Tuple[int, int, int, int], Tuple[int, int]]] = []
    edgeCount = 0

    def new_edge() -> int:
        nonlocal edgeCount
        edges.add(edgeCount)
        edgeCount += 1
        return edgeCount - 1

    for event in m:
        p = event.position
        if event.kind == EventKind.CUP:
            e = new_edge()
            left, right = directions.new(), directions.new()
            directions.union(left, right, different=True)
            cupLegs.append(left)
            points[p:p] = [(e, left), (e, right)]
        elif event.kind == EventKind.CAP:
            (e1, v1), (e2, v2) = points[p], points[p + 1]
            edges.union(e1, e2)
            directions.union(v1, v2, different=True)
            del points[p:p + 2]
        else:
            (sw, vsw), (se, vse) = points[p], points[p + 1]
            nw, ne = new_edge(), new_edge()
            vnw, vne = directions.new(), directions.new()
            directions.union(vsw, vne, different=False)
            directions.union(vse, vnw, different=False)
            crossings.append((event.kind, (sw, se, ne, nw), (vsw, vse)))
            points[p:p + 2] = [(nw, vnw), (ne, vne)]

    rootDown: Dict[int, int] = {}
    for leg in cupLegs:
        root, parity = directions.find(leg)
        rootDown.setdefault(root, parity)

    def goes_up(v: int) -> bool:
        root, parity = directions.find(v)
        return (rootDown[root] ^ parity) == 1

    raw: List[Tuple[int, int, int, int]] = []
    following: Dict[int, int] = {}
    for kind, (sw, se, ne, nw), (vsw, vse) in crossings:
        sw, se, ne, nw = (edges.find(x) for x in (sw, se, ne, nw))
        swUp, seUp = goes_up(vsw), goes_up(vse)

        if kind == EventKind.CROSS_POS:
            raw.append((se, ne, nw, sw) if seUp else (nw, sw, se, ne))
        else:
            raw.append((sw, se, ne, nw) if swUp else (ne, nw, sw, se))

        if swUp:
            following[sw] = ne
        else:
            following[ne] = sw
        if seUp:
            following[se] = nw
        else:
            following[nw] = se

    labels: Dict[int, int] = {}
    starts = [crossing[0] for crossing in raw] + [x for crossing in raw for x in crossing[1:]]
    for arc in starts:
        while arc not in labels:
            labels[arc] = len(labels) + 1
            arc = following[arc]

    used = {x for crossing in raw for x in crossing}
    loops = len({edges.find(e) for e in range(edgeCount)} - used)

    pd = [tuple(labels[x] for x in crossing) for crossing in raw]
    return PDDiagram(pd, name=name or m.name, loops=loops)


Slot = Tuple[int, int]
Entry = Tuple[Slot, Slot]  # (origin slot, target slot) of a strand crossing the sweep line


class _SweepPlanner:
    """
    Greedy planner turning a PD code into a Morse presentation.

    The boundary holds the strands cut by the sweep line. A crossing can be
    attached when the strands aiming at it sit side by side and hit its
    slots in counterclockwise order; among those the planner takes the one
    leaving the narrowest boundary. When nothing fits, the boundary is
    rotated around the point at infinity.
    """

    def __init__(self, d: PDDiagram):
        self.d = d
        self.events: List[MorseEvent] = []
        self.boundary: List[Entry] = []
        self.done = [False] * len(d)

    def _entry(self, index: int, slot: int) -> Entry:
        return (index, slot), self.d.slot_partner(index, slot)

    def _options(self, boundary: List[Entry]) -> List[Tuple[int, int, int, int]]:
        found: Dict[int, List[int]] = {}
        for pos, (_, (index, _)) in enumerate(boundary):
            if not self.done[index]:
                found.setdefault(index, []).append(pos)

        options = []
        for index, positions in found.items():
            p, k = positions[0], len(positions)
            if positions != list(range(p, p + k)):
                continue
            t = boundary[p][1][1]
            if all(boundary[p + i][1][1] == (t + i) % 4 for i in range(k)):
                options.append((index, p, k, t))
        return options

    def _attach(self, index: int, p: int, k: int, t: int,
                boundary: List[Entry], events: List[MorseEvent]):
        sw, se, ne, nw = t, (t + 1) % 4, (t + 2) % 4, (t + 3) % 4
        kind = EventKind.CROSS_POS if sw % 2 == 1 else EventKind.CROSS_NEG

        if k == 0:
            events.extend((MorseEvent.cup(p), MorseEvent.cup(p + 2), MorseEvent(kind, p + 1)))
            boundary[p:p] = [self._entry(index, s) for s in (sw, nw, ne, se)]
        elif k == 1:
            events.extend((MorseEvent.cup(p + 1), MorseEvent(kind, p)))
            boundary[p:p + 1] = [self._entry(index, s) for s in (nw, ne, se)]
        else:
            events.append(MorseEvent(kind, p))
            boundary[p:p + 2] = [self._entry(index, s) for s in (nw, ne)]

        self._close_adjacent(boundary, events)

    @staticmethod
    def _close_adjacent(boundary: List[Entry], events: List[MorseEvent]):
        closed = True
        while closed:
            closed = False
            for i in range(len(boundary) - 1):
                if boundary[i][1] == boundary[i + 1][0]:
                    events.append(MorseEvent.cap(i))
                    del boundary[i:i + 2]
                    closed = True
                    break

    def _rotate(self):
        # Cup at time zero around the whole history, then cap the rightmost strand into its right leg
        width = len(self.boundary)
        self.events = [MorseEvent.cup(0)] + [e.shifted(1) for e in self.events] + [MorseEvent.cap(width)]
        self.boundary = [self.boundary[-1]] + self.boundary[:-1]

    def _score(self, option: Tuple[int, int, int, int]) -> Tuple[int, int, int]:
        boundary = list(self.boundary)
        self._attach(*option, boundary, [])
        index, p, _, _ = option
        return len(boundary), p, index

    def _start_component(self):
        index = self.done.index(False)
        start = 2 if self.d.slot_partner(index, 0) == (index, 1) else 0
        self._attach(index, 0, 0, start, self.boundary, self.events)
        self.done[index] = True

    def plan(self) -> MorsePresentation:
        rotations = 0
        while True:
            if all(self.done):
                if not self.boundary:
                    break
                if rotations >= len(self.boundary):
                    raise NonPlanarDiagramError(
                        f"Strands {self.boundary} cannot be closed in the plane")
                self._rotate()
                self._close_adjacent(self.boundary, self.events)
                rotations += 1
                continue

            options = self._options(self.boundary)
            if options:
                best = min(options, key=self._score)
                self._attach(*best, self.boundary, self.events)
                self.done[best[0]] = True
                rotations = 0
                continue

            waiting = any(not self.done[index] for _, (index, _) in self.boundary)
            if waiting:
                if rotations >= len(self.boundary):
                    raise NonPlanarDiagramError(
                        f"No crossing of {self.d.name or 'the diagram'} fits the sweep boundary")
                self._rotate()
                self._close_adjacent(self.boundary, self.events)
                rotations += 1
                continue

            self._start_component()

        for _ in range(self.d.loops):
            self.events.extend((MorseEvent.cup(0), MorseEvent.cap(0)))
        return MorsePresentation(self.events, name=self.d.name)


def to_morse(d: PDDiagram) -> MorsePresentation:
    return _SweepPlanner(d).plan()
