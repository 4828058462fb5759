from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pyknotslopes.iohelper import decode_input


class DiagramError(Exception):
    ...


class BraidParseError(DiagramError):
    ...


class PDFormatError(DiagramError):
    ...


class ArcLabelError(DiagramError):
    ...


class ArcSuccessionError(DiagramError):
    ...


class PretzelParameterError(DiagramError):
    ...


class NotAKnotError(DiagramError):
    ...


Crossing = Tuple[int, int, int, int]


class UnionFind:
    """ Union-find over hashable labels, roots are the smallest member """

    def __init__(self):
        self._parent: Dict[int, int] = {}

    def add(self, label: int):
        self._parent.setdefault(label, label)

    def find(self, label: int) -> int:
        root = label
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[label] != root:
            self._parent[label], label = root, self._parent[label]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> List[List[int]]:
        groups: Dict[int, List[int]] = {}
        for label in self._parent:
            groups.setdefault(self.find(label), []).append(label)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


@dataclass(frozen=True)
class DiagramStats:
    c: int
    c_plus: int
    c_minus: int
    w: int
    components: int

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "c_plus": self.c_plus,
            "c_minus": self.c_minus,
            "w": self.w,
            "components": self.components
        }


class PDDiagram:
    """
    Planar diagram code of an oriented link diagram.

    Each crossing is a 4-tuple of arc labels starting at the incoming
    under-strand and proceeding counterclockwise. Arc labels run
    consecutively along each oriented component; `loops` counts
    components with no crossings at all.
    """

    def __init__(self, crossings: Iterable[Sequence[int]] = (), name: str = "", loops: int = 0):
        self.name = name
        self.loops = int(loops)
        self._crossings: Tuple[Crossing, ...] = tuple(
            self._check_crossing(x) for x in crossings)

        if self.loops < 0:
            raise PDFormatError("The loop count cannot be negative")

        self._components: List[Tuple[int, int]] = []
        self._successor: Dict[int, int] = {}
        self._overForward: Tuple[bool, ...] = ()
        self._endpoints: Dict[int, List[Tuple[int, int]]] = {}
        self._analyze()

    def __repr__(self):
        return f"{self.__class__.__name__}<Name: {self.name!r}, Crossings: {len(self)}, Loops: {self.loops}>"

    def __len__(self) -> int:
        return len(self._crossings)

    def __iter__(self):
        return iter(self._crossings)

    def __getitem__(self, index: int) -> Crossing:
        return self._crossings[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PDDiagram):
            return NotImplemented
        return self._crossings == other._crossings and self.loops == other.loops

    def __hash__(self) -> int:
        return hash((self._crossings, self.loops))

    @classmethod
    def unknot(cls) -> PDDiagram:
        return cls((), name="unknot", loops=1)

    @classmethod
    def empty(cls) -> PDDiagram:
        return cls()

    @property
    def crossings(self) -> Tuple[Crossing, ...]:
        return self._crossings

    @property
    def labels(self) -> List[int]:
        return sorted(self._successor)

    @property
    def componentCount(self) -> int:
        return len(self._components) + self.loops

    @property
    def componentRanges(self) -> List[Tuple[int, int]]:
        """ (first label, last label) of every component that has crossings """
        return list(self._components)

    def is_knot(self) -> bool:
        return self.componentCount == 1

    def require_knot(self):
        if not self.is_knot():
            raise NotAKnotError(
                f"Expected a knot diagram, got {self.componentCount} components")

    def successor(self, label: int) -> int:
        return self._successor[label]

    def over_forward(self, index: int) -> bool:
        """ True when the over-strand of crossing `index` runs from its 2nd entry to its 4th """
        return self._overForward[index]

    def sign(self, index: int) -> int:
        return -1 if self._overForward[index] else 1

    def slot_partner(self, index: int, slot: int) -> Tuple[int, int]:
        """ The other (crossing, slot) occurrence of the arc at `slot` of crossing `index` """
        first, second = self._endpoints[self._crossings[index][slot]]
        return second if first == (index, slot) else first

    @staticmethod
    def _check_crossing(crossing: Sequence[int]) -> Crossing:
        if isinstance(crossing, (str, bytes)) or len(crossing) != 4:
            raise PDFormatError(f"Crossing {crossing!r} does not have exactly 4 entries")
        try:
            labels = tuple(int(x) for x in crossing)
        except (TypeError, ValueError) as e:
            raise PDFormatError(f"Crossing {crossing!r} has a non-integer label") from e
        if any(isinstance(x, bool) for x in crossing) or any(x <= 0 for x in labels):
            raise PDFormatError(f"Crossing {crossing!r} has a non-positive label")
        return labels

    def _analyze(self):
        for i, crossing in enumerate(self._crossings):
            for slot, label in enumerate(crossing):
                self._endpoints.setdefault(label, []).append((i, slot))

        bad = sorted(label for label, ends in self._endpoints.items() if len(ends) != 2)
        if bad:
            raise ArcLabelError(
                f"Arc labels {bad} do not appear exactly twice")

        labels = UnionFind()
        for a, b, c, d in self._crossings:
            for label in (a, b, c, d):
                labels.add(label)
            labels.union(a, c)
            labels.union(b, d)

        for group in labels.groups():
            lo, hi = group[0], group[-1]
            if hi - lo + 1 != len(group):
                raise ArcLabelError(
                    f"Component with labels {group} is not numbered consecutively")
            self._components.append((lo, hi))
            for label in group:
                self._successor[label] = label + 1 if label < hi else lo

        self._overForward = self._orient_over_strands()

    def _orient_over_strands(self) -> Tuple[bool, ...]:
        succ = self._successor
        forward: List[Optional[bool]] = []
        for a, b, c, d in self._crossings:
            if c != succ[a]:
                raise ArcSuccessionError(
                    f"Under-strand {a} -> {c} does not follow the arc numbering")
            bd, db = d == succ[b], b == succ[d]
            if bd and not db:
                forward.append(True)
            elif db and not bd:
                forward.append(False)
            elif bd and db:
                forward.append(None)
            else:
                raise ArcSuccessionError(
                    f"Over-strand {b}/{d} does not follow the arc numbering")

        if None not in forward:
            return tuple(forward)

        # Short components number both ways; every arc is entered exactly once
        entered = {a for a, _, _, _ in self._crossings}
        for i, (_, b, _, d) in enumerate(self._crossings):
            if forward[i] is True:
                entered.add(b)
            elif forward[i] is False:
                entered.add(d)

        for i, (_, b, _, d) in enumerate(self._crossings):
            if forward[i] is not None:
                continue
            if b in entered and d not in entered:
                forward[i] = False
            elif d in entered and b not in entered:
                forward[i] = True
            else:
                forward[i] = min(b, d) == b
            entered.add(b if forward[i] else d)

        return tuple(forward)

    def to_json(self) -> dict:
        data = {"crossings": [list(x) for x in self._crossings]}
        if self.name:
            data["name"] = self.name
        if self.loops:
            data["loops"] = self.loops
        return data


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise BraidParseError(f"A braid needs at least one strand, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise BraidParseError(
                    f"Letter {letter} is out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return f"{self.strands}: {' '.join(str(x) for x in self.letters)}".rstrip()

    def permutation(self) -> Tuple[int, ...]:
        """ Final strand position of the strand starting at each position """
        positions = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter) - 1
            positions[i], positions[i + 1] = positions[i + 1], positions[i]
        result = [0] * self.strands
        for final, start in enumerate(positions):
            result[start] = final
        return tuple(result)

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = set()
        cycles = 0
        for start in range(self.strands):
            if start in seen:
                continue
            cycles += 1
            pos = start
            while pos not in seen:
                seen.add(pos)
                pos = perm[pos]
        return cycles


def parse_braid(text: str) -> BraidWord:
    """
    Parse "[strands:] i j k ..." into a braid word.

    Letters may be separated by whitespace or commas. Without an explicit
    strand count the braid uses 1 + max|letter| strands.
    """
    text = text.strip()
    strands = None
    if ":" in text:
        head, text = text.split(":", 1)
        try:
            strands = int(head.strip())
        except ValueError as e:
            raise BraidParseError(f"Invalid strand count {head.strip()!r}") from e

    letters = []
    for token in text.replace(",", " ").split():
        try:
            letter = int(token)
        except ValueError as e:
            raise BraidParseError(f"Invalid braid letter {token!r}") from e
        if letter == 0:
            raise BraidParseError("Braid letters must be nonzero")
        letters.append(letter)

    if strands is None:
        strands = 1 + max((abs(x) for x in letters), default=0)
    return BraidWord(strands, tuple(letters))


def parse_pd(data: Union[bytes, str], name: str = "") -> PDDiagram:
    text = decode_input(data)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise PDFormatError(f"PD input is not valid JSON: {e}") from e

    if isinstance(obj, list):
        obj = {"crossings": obj}
    if not isinstance(obj, dict) or "crossings" not in obj:
        raise PDFormatError("PD input must be an object with a \"crossings\" list")
    if not isinstance(obj["crossings"], list):
        raise PDFormatError("\"crossings\" must be a list")

    loops = obj.get("loops", 0)
    if not isinstance(loops, int) or isinstance(loops, bool):
        raise PDFormatError("\"loops\" must be an integer")

    return PDDiagram(obj["crossings"], name=obj.get("name", name), loops=loops)


def serialize_pd(d: PDDiagram) -> str:
    return json.dumps(d.to_json())


def braid_to_pd(b: BraidWord, name: str = "") -> PDDiagram:
    """
    PD code of the closed braid with every strand oriented upward.

    Components are numbered in order of first appearance, starting
    from the incoming under-strand of the earliest crossing that has
    not been numbered yet.
    """
    position = list(range(b.strands))
    nextArc = b.strands
    raw: List[Crossing] = []
    forward: Dict[int, int] = {}  # incoming arc -> outgoing arc

    for letter in b.letters:
        left = abs(letter) - 1
        right = left + 1
        leftIn, rightIn = position[left], position[right]
        leftOut, rightOut = nextArc, nextArc + 1
        nextArc += 2

        if letter > 0:
            raw.append((rightIn, rightOut, leftOut, leftIn))
        else:
            raw.append((leftIn, rightIn, rightOut, leftOut))

        forward[leftIn] = rightOut
        forward[rightIn] = leftOut
        position[left], position[right] = leftOut, rightOut

    arcs = UnionFind()
    for arc in range(nextArc):
        arcs.add(arc)
    for start, end in enumerate(position):
        arcs.union(start, end)

    touched = set()
    for letter in b.letters:
        touched.update((abs(letter) - 1, abs(letter)))
    loops = b.strands - len(touched)

    following = {arcs.find(k): arcs.find(v) for k, v in forward.items()}
    labels: Dict[int, int] = {}
    # under-strands first, then components that only ever pass over
    starts = [crossing[0] for crossing in raw] + [x for crossing in raw for x in crossing[1:]]
    for start in starts:
        arc = arcs.find(start)
        while arc not in labels:
            labels[arc] = len(labels) + 1
            arc = following[arc]

    crossings = [tuple(labels[arcs.find(x)] for x in crossing) for crossing in raw]
    return PDDiagram(crossings, name=name or str(b), loops=loops)


def pretzel_pd(params: Sequence[int], name: str = "") -> PDDiagram:
    from pyknotslopes.morse import morse_to_pd, pretzel_morse

    return morse_to_pd(pretzel_morse(params), name=name or pretzel_name(params))


def pretzel_name(params: Sequence[int]) -> str:
    return f"P({','.join(str(x) for x in params)})"


def crossing_signs(d: PDDiagram) -> List[int]:
    return [d.sign(i) for i in range(len(d))]


def stats(d: PDDiagram) -> DiagramStats:
    signs = crossing_signs(d)
    cPlus = signs.count(1)
    cMinus = signs.count(-1)
    return DiagramStats(
        c=len(d),
        c_plus=cPlus,
        c_minus=cMinus,
        w=cPlus - cMinus,
        components=d.componentCount
    )


def mirror(d: PDDiagram) -> PDDiagram:
    """ Swap over and under at every crossing, keeping the orientation """
    crossings = []
    for i, (a, b, c, e) in enumerate(d):
        if d.over_forward(i):
            crossings.append((b, c, e, a))
        else:
            crossings.append((e, a, b, c))
    name = f"mirror({d.name})" if d.name else ""
    return PDDiagram(crossings, name=name, loops=d.loops)


def is_alternating(d: PDDiagram) -> bool:
    """ True when over and under passages alternate along every component """
    passage: Dict[int, str] = {}
    for i, (a, b, _, e) in enumerate(d):
        passage[a] = "under"
        passage[b if d.over_forward(i) else e] = "over"

    for lo, hi in d.componentRanges:
        sequence = [passage[label] for label in range(lo, hi + 1)]
        for i, kind in enumerate(sequence):
            if kind == sequence[(i + 1) % len(sequence)]:
                return False
    return True