"""Legendrian front projections as words of cusp and crossing events.

A front is read left to right. The strands present at any moment form a
stack numbered from 1 at the top. Three events act on the stack:

``L i``
    a left cusp born at position ``i``; two new strands occupy ``i, i+1``.
``X i``
    the strands at ``i`` and ``i+1`` cross and swap places.
``R i``
    the strands at ``i`` and ``i+1`` meet in a right cusp and end.

At a crossing the strand moving down (from ``i`` to ``i+1``) has the smaller
slope and is drawn in front.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

__all__ = [
    "FrontEvent",
    "FrontDiagram",
    "OrientedFront",
    "ClassicalInvariants",
    "Violation",
    "FrontError",
    "MalformedFrontError",
    "MultiComponentError",
    "validate",
    "check",
    "orient",
    "reverse_orientation",
    "classical_invariants",
    "stabilize",
    "connect_sum",
    "braid_front",
    "load_front",
]

KINDS = ("L", "X", "R")


@dataclass(frozen=True)
class FrontEvent:
    kind: str
    i: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown event kind {self.kind!r}")
        if not isinstance(self.i, int) or isinstance(self.i, bool):
            raise TypeError("event position must be an int")

    def __str__(self) -> str:
        return f"{self.kind}{self.i}"


@dataclass(frozen=True)
class FrontDiagram:
    name: str
    events: tuple[FrontEvent, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    @classmethod
    def from_word(cls, word: str, name: str = "") -> FrontDiagram:
        """Build from a compact word such as ``"L1 X1 R1"``."""
        events = []
        for tok in word.split():
            events.append(FrontEvent(tok[0].upper(), int(tok[1:])))
        return cls(name, tuple(events))

    @property
    def word(self) -> str:
        return " ".join(str(e) for e in self.events)

    @classmethod
    def from_dict(cls, data: dict) -> FrontDiagram:
        # events may also be given as a word, e.g. "L1 X1 R1"
        try:
            raw = data["events"]
            if isinstance(raw, str):
                return cls.from_word(raw, str(data.get("name", "")))
            events = tuple(FrontEvent(e["t"], e["i"]) for e in raw)
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedFrontError([Violation("parse", None, f"bad front object: {exc}")])
        return cls(str(data.get("name", "")), events)

    def to_dict(self) -> dict:
        return {"name": self.name, "events": [{"t": e.kind, "i": e.i} for e in self.events]}

    def count(self, kind: str) -> int:
        return sum(1 for e in self.events if e.kind == kind)

    def __len__(self) -> int:
        return len(self.events)


def load_front(path: str | Path) -> FrontDiagram:
    with open(path) as fh:
        data = json.load(fh)
    if "front" in data:
        data = data["front"]
    return FrontDiagram.from_dict(data)


@dataclass(frozen=True)
class Violation:
    code: str
    index: int | None
    message: str

    def to_dict(self) -> dict:
        return {"code": self.code, "index": self.index, "message": self.message}


class FrontError(ValueError):
    """A front word that does not describe a single closed Legendrian knot."""

    code = "invalid-front"

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))

    def to_dict(self) -> dict:
        return {"error": self.code, "violations": [v.to_dict() for v in self.violations]}


class MalformedFrontError(FrontError):
    code = "malformed-front"


class MultiComponentError(FrontError):
    code = "multi-component"


class _Trace:
    """Segments of a front and how events connect them.

    A segment is a piece of strand between two consecutive events it takes
    part in. ``start[s]``/``end[s]`` are event indices, ``pos[s]`` the stack
    position right after the segment is born.
    """

    def __init__(self, events: tuple[FrontEvent, ...]):
        self.start: list[int] = []
        self.end: list[int] = []
        self.pos: list[int] = []
        self.ins: dict[int, tuple[int, int]] = {}
        self.outs: dict[int, tuple[int, int]] = {}
        stack: list[int] = []

        def new(k, p):
            self.start.append(k)
            self.end.append(-1)
            self.pos.append(p)
            return len(self.start) - 1

        for k, ev in enumerate(events):
            i = ev.i - 1
            if ev.kind == "L":
                top, bot = new(k, ev.i), new(k, ev.i + 1)
                stack[i:i] = [top, bot]
                self.outs[k] = (top, bot)
            elif ev.kind == "X":
                up_in, lo_in = stack[i], stack[i + 1]
                self.end[up_in] = self.end[lo_in] = k
                up_out, lo_out = new(k, ev.i), new(k, ev.i + 1)
                stack[i], stack[i + 1] = up_out, lo_out
                self.ins[k] = (up_in, lo_in)
                self.outs[k] = (up_out, lo_out)
            else:
                top, bot = stack[i], stack[i + 1]
                self.end[top] = self.end[bot] = k
                del stack[i : i + 2]
                self.ins[k] = (top, bot)
        self.events = events

    def __len__(self) -> int:
        return len(self.start)

    def step(self, seg: int, d: int) -> tuple[int, int]:
        """Next (segment, direction) along the knot after traversing ``seg``."""
        if d > 0:
            k = self.end[seg]
            if self.events[k].kind == "X":
                up_in, lo_in = self.ins[k]
                up_out, lo_out = self.outs[k]
                return (lo_out if seg == up_in else up_out), 1
            top, bot = self.ins[k]
            return (bot if seg == top else top), -1
        k = self.start[seg]
        if self.events[k].kind == "X":
            up_in, lo_in = self.ins[k]
            up_out, lo_out = self.outs[k]
            return (up_in if seg == lo_out else lo_in), -1
        top, bot = self.outs[k]
        return (bot if seg == top else top), 1

    def walk(self, seg: int, d: int) -> list[tuple[int, int]]:
        path = [(seg, d)]
        cur = self.step(seg, d)
        while cur != (seg, d):
            path.append(cur)
            cur = self.step(*cur)
        return path


def validate(diagram: FrontDiagram) -> list[Violation]:
    """Return every violated front invariant; an empty list means valid."""
    out: list[Violation] = []
    events = diagram.events
    if not events:
        return [Violation("empty", None, "front has no events")]
    s = 0
    structural = True
    for k, ev in enumerate(events):
        if ev.kind == "L":
            ok = 1 <= ev.i <= s + 1
            limit = s + 1
        else:
            ok = 1 <= ev.i <= s - 1
            limit = s - 1
        if not ok:
            structural = False
            out.append(
                Violation(
                    "position",
                    k,
                    f"event {k} ({ev}) needs 1 <= i <= {limit} with {s} strands",
                )
            )
            continue
        s += {"L": 2, "X": 0, "R": -2}[ev.kind]
    if s != 0:
        structural = False
        out.append(Violation("unclosed", len(events), f"strand count ends at {s}, not 0"))
    nl, nr = diagram.count("L"), diagram.count("R")
    if nl != nr:
        structural = False
        out.append(Violation("cusp-count", None, f"{nl} left cusps but {nr} right cusps"))
    if structural:
        tr = _Trace(events)
        seen = set()
        comps = 0
        for seg in range(len(tr)):
            if seg in seen:
                continue
            comps += 1
            seen.update(sg for sg, _ in tr.walk(seg, 1))
        if comps != 1:
            out.append(
                Violation("multi-component", None, f"front closes up into {comps} components")
            )
    return out


def check(diagram: FrontDiagram) -> None:
    """Raise a :class:`FrontError` subclass if ``diagram`` is not a valid knot front."""
    violations = validate(diagram)
    if not violations:
        return
    if all(v.code == "multi-component" for v in violations):
        raise MultiComponentError(violations)
    raise MalformedFrontError(violations)


@dataclass(frozen=True)
class OrientedFront:
    """A valid front together with a direction of travel.

    ``directions[s]`` is +1 when segment ``s`` is traversed left to right.
    ``cusp_tags`` maps the event index of every cusp to ``"up"``/``"down"``
    and ``crossing_signs`` maps every crossing to its sign.
    """

    diagram: FrontDiagram
    directions: tuple[int, ...]
    cusp_tags: dict[int, str] = field(compare=False)
    crossing_signs: dict[int, int] = field(compare=False)
    reversed: bool = False

    @cached_property
    def trace(self) -> _Trace:
        return _Trace(self.diagram.events)

    @property
    def name(self) -> str:
        return self.diagram.name

    def path(self) -> list[tuple[int, int]]:
        """Segments in traversal order, starting at the canonical segment."""
        tr = self.trace
        first = tr.outs[0][0]
        return tr.walk(first, self.directions[first])

    @cached_property
    def invariants(self) -> ClassicalInvariants:
        return classical_invariants(self)


def _decorate(diagram: FrontDiagram, tr: _Trace, directions: list[int], rev: bool) -> OrientedFront:
    tags: dict[int, str] = {}
    signs: dict[int, int] = {}
    for k, ev in enumerate(diagram.events):
        if ev.kind == "L":
            top, _ = tr.outs[k]
            # leaving on the top branch means we came up through the cusp
            tags[k] = "up" if directions[top] > 0 else "down"
        elif ev.kind == "R":
            top, _ = tr.ins[k]
            tags[k] = "down" if directions[top] > 0 else "up"
        else:
            up_in, lo_in = tr.ins[k]
            signs[k] = 1 if directions[up_in] == directions[lo_in] else -1
    return OrientedFront(diagram, tuple(directions), tags, signs, rev)


def orient(diagram: FrontDiagram) -> OrientedFront:
    """Canonical orientation: the upper strand born at the first left cusp runs rightwards."""
    check(diagram)
    tr = _Trace(diagram.events)
    directions = [0] * len(tr)
    for seg, d in tr.walk(tr.outs[0][0], 1):
        directions[seg] = d
    return _decorate(diagram, tr, directions, False)


def reverse_orientation(f: OrientedFront) -> OrientedFront:
    directions = [-d for d in f.directions]
    return _decorate(f.diagram, f.trace, directions, not f.reversed)


def _with_orientation(diagram: FrontDiagram, rev: bool) -> OrientedFront:
    f = orient(diagram)
    return reverse_orientation(f) if rev else f


@dataclass(frozen=True)
class ClassicalInvariants:
    writhe: int
    tb: int
    r: int
    left_cusps: int
    right_cusps: int

    def to_dict(self) -> dict:
        return {
            "writhe": self.writhe,
            "tb": self.tb,
            "r": self.r,
            "left_cusps": self.left_cusps,
            "right_cusps": self.right_cusps,
        }


def classical_invariants(f: OrientedFront) -> ClassicalInvariants:
    """Writhe, Thurston-Bennequin and rotation numbers of an oriented front.

    ``tb = writhe - #right cusps`` and
    ``r = #(upward right cusps) - #(downward left cusps)``.
    """
    events = f.diagram.events
    writhe = sum(f.crossing_signs.values())
    right = [k for k, e in enumerate(events) if e.kind == "R"]
    left = [k for k, e in enumerate(events) if e.kind == "L"]
    up_right = sum(1 for k in right if f.cusp_tags[k] == "up")
    down_left = sum(1 for k in left if f.cusp_tags[k] == "down")
    return ClassicalInvariants(writhe, writhe - len(right), up_right - down_left, len(left), len(right))


def stabilize(f: OrientedFront, sign: int) -> OrientedFront:
    """Add a zigzag right after the first left cusp.

    The zigzag sits on the upper strand born at the first left cusp. It
    lowers tb by one and shifts r by ``sign``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    events = list(f.diagram.events)
    i = events[0].i
    d = f.directions[f.trace.outs[0][0]]
    # zigzag opening upward on a rightward strand raises r; flip for leftward
    if sign * d > 0:
        zig = [FrontEvent("L", i), FrontEvent("R", i + 1)]
    else:
        zig = [FrontEvent("L", i + 1), FrontEvent("R", i)]
    new = FrontDiagram(f.diagram.name, tuple(events[:1] + zig + events[1:]))
    return _with_orientation(new, f.reversed)


def _shift(events, offset: int) -> list[FrontEvent]:
    return [FrontEvent(e.kind, e.i + offset) for e in events]


def connect_sum(f1: OrientedFront, f2: OrientedFront, name: str | None = None) -> OrientedFront:
    """Legendrian connected sum, joining a right cusp of ``f1`` to the first left cusp of ``f2``.

    The splice site is the first right cusp of ``f1`` whose traversal matches
    the orientation of ``f2`` at its first left cusp. When ``f1`` has no such
    cusp, a Legendrian swallowtail is first added on a suitable strand of
    ``f1`` to produce one; this does not change tb or r.
    """
    tr1 = f1.trace
    need = f2.directions[f2.trace.outs[0][0]]
    events1 = list(f1.diagram.events)
    site = None
    for k, ev in enumerate(events1):
        if ev.kind == "R" and f1.directions[tr1.ins[k][0]] == need:
            site = k
            break
    if site is None:
        # swallowtail L(p+1) X(p) R(p+1) on a segment running in direction `need`
        seg = next(s for s in range(len(tr1)) if f1.directions[s] == need)
        k = tr1.start[seg]
        p = tr1.pos[seg]
        gadget = [FrontEvent("L", p + 1), FrontEvent("X", p), FrontEvent("R", p + 1)]
        events1 = events1[: k + 1] + gadget + events1[k + 1 :]
        site = k + 3
    offset = events1[site].i - 1
    body = _shift(f2.diagram.events[1:], offset)
    events = events1[:site] + body + events1[site + 1 :]
    label = name if name is not None else f"{f1.name}#{f2.name}"
    return _with_orientation(FrontDiagram(label, tuple(events)), f1.reversed)


def _negative_runs(word):
    """Split a braid word into positive letters and maximal runs of inverses.

    A run ``-k, -(k+1), ...`` moves one strand down under its neighbours and
    ``-k, -(k-1), ...`` moves one strand up over them; either kind needs a
    single zigzag in the front.
    """
    out = []
    t = 0
    while t < len(word):
        g = word[t]
        if g > 0:
            out.append((g,))
            t += 1
            continue
        run = [g]
        step = 0
        while t + len(run) < len(word):
            nxt = word[t + len(run)]
            d = -nxt - (-run[-1])
            if nxt > 0 or abs(d) != 1 or (step and d != step):
                break
            step = d
            run.append(nxt)
        out.append(tuple(run))
        t += len(run)
    return out


def braid_front(word, strands: int, name: str = "") -> FrontDiagram:
    """Front of the Legendrian closure of a braid.

    ``word`` lists generators ``k`` (for sigma_k) or ``-k`` (its inverse).
    The closure is drawn as ``strands`` nested eyes whose lower halves carry
    the braid. A positive generator is a single crossing. Inverse generators
    are drawn with a zigzag whose backward branch passes under (or over) the
    neighbouring strands; a run of consecutive inverses moving the same
    strand shares one zigzag, so it costs a single extra right cusp.
    """
    n = strands
    if n < 1:
        raise ValueError("need at least one strand")
    for g in word:
        if not 1 <= abs(g) < n:
            raise ValueError(f"generator {g} out of range for {n} strands")
    events = [FrontEvent("L", k) for k in range(1, n + 1)]
    for run in _negative_runs(list(word)):
        if run[0] > 0:
            events.append(FrontEvent("X", n + run[0]))
            continue
        m = len(run)
        if m == 1 or run[1] < run[0]:
            # strand at n+k goes down, its backward branch passing under
            p = n - run[0]
            events.append(FrontEvent("L", p + m + 1))
            events += [FrontEvent("X", j) for j in range(p + m, p, -1)]
            events.append(FrontEvent("R", p))
        else:
            # strand below n+k goes up, its backward branch passing over
            top = n - run[0] - m + 1
            events.append(FrontEvent("L", top))
            events += [FrontEvent("X", j) for j in range(top + 1, top + m + 1)]
            events.append(FrontEvent("R", top + m + 1))
    events += [FrontEvent("R", k) for k in range(n, 0, -1)]
    return FrontDiagram(name, tuple(events))
