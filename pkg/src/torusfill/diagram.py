"""Combinatorial Lagrangian projections.

A diagram is a 4-valent planar map given by a rotation system.  Each crossing
has four half-edge slots numbered 0..3 counterclockwise; quadrant ``q`` is the
corner between slot ``q`` and slot ``q + 1``.  The two strands through a
crossing occupy opposite slots, and the positive quadrants are an opposite
pair.  Edges are oriented along the link and carry base points.

Only the (2, n) torus family is built here, optionally with some of its
degree-0 crossings pinched (resolved by the oriented smoothing).  For each
band crossing the slots are 0 = upper right, 1 = upper left, 2 = lower left,
3 = lower right, with both strands running left to right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import ChordId, make_alphabet
from .errors import DiagramError, UsageError
from .laurent import VariableContext


@dataclass(frozen=True)
class BasePoint:
    var: int
    exponent: int  # contribution when crossed along the link orientation

    def contribution(self, forward: bool) -> int:
        return self.exponent if forward else -self.exponent


@dataclass(frozen=True)
class Crossing:
    label: str
    grading: int
    incoming: tuple  # the two slots where strands enter; each exits at slot + 2
    positive: tuple = (1, 3)

    @property
    def outgoing(self) -> tuple:
        return tuple((s + 2) % 4 for s in self.incoming)

    def quadrant_sign(self, q: int) -> int:
        return 1 if q % 4 in self.positive else -1


@dataclass(frozen=True)
class Edge:
    tail: tuple  # (crossing index, slot)
    head: tuple
    base_points: tuple = ()


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple  # (edge index, forward) with the face on the left
    corners: tuple  # (crossing index, quadrant), in boundary order
    bounded: bool


@dataclass(frozen=True, eq=False)
class LagrangianDiagram:
    name: str
    crossings: tuple
    edges: tuple
    ctx: VariableContext
    outer_quadrants: frozenset
    slot_edge: dict = field(init=False, repr=False)
    faces: tuple = field(init=False, repr=False)
    components: tuple = field(init=False, repr=False)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "slot_edge", _slot_map(self.crossings, self.edges))
        set_(self, "components", _components(self))
        set_(self, "faces", _trace_faces(self))
        self.validate()

    # lookups

    @property
    def alphabet(self) -> tuple:
        return make_alphabet(ChordId(c.label, c.grading) for c in self.crossings)

    def crossing_index(self, label: str) -> int:
        for i, c in enumerate(self.crossings):
            if c.label == label:
                return i
        raise UsageError(f"no crossing {label!r} in {self.name}")

    def departing_dart(self, crossing: int, slot: int) -> tuple:
        e, is_tail = self.slot_edge[(crossing, slot)]
        return (e, is_tail)

    def dart_end(self, dart) -> tuple:
        e, fwd = dart
        edge = self.edges[e]
        return edge.head if fwd else edge.tail

    def dart_start(self, dart) -> tuple:
        e, fwd = dart
        edge = self.edges[e]
        return edge.tail if fwd else edge.head

    def dart_weight(self, dart) -> list:
        e, fwd = dart
        exps = [0] * self.ctx.arity
        for bp in self.edges[e].base_points:
            exps[bp.var] += bp.contribution(fwd)
        return exps

    def bounded_faces(self) -> list:
        return [f for f in self.faces if f.bounded]

    def quadrant_face(self) -> dict:
        return {corner: f.index for f in self.faces for corner in f.corners}

    def dart_face(self) -> dict:
        return {d: f.index for f in self.faces for d in f.darts}

    # validation

    def validate(self) -> None:
        for c in self.crossings:
            if len(set(c.incoming)) != 2 or (c.incoming[0] - c.incoming[1]) % 2 == 0:
                raise DiagramError(f"{c.label}: incoming slots {c.incoming} must be adjacent")
            p, q = sorted(x % 4 for x in c.positive)
            if q - p != 2:
                raise DiagramError(f"{c.label}: positive quadrants {c.positive} are not opposite")
        for i, e in enumerate(self.edges):
            tc, ts = e.tail
            hc, hs = e.head
            if ts not in self.crossings[tc].outgoing:
                raise DiagramError(f"edge {i} leaves {self.crossings[tc].label} by an incoming slot")
            if hs not in self.crossings[hc].incoming:
                raise DiagramError(f"edge {i} enters {self.crossings[hc].label} by an outgoing slot")
            for bp in e.base_points:
                if not 0 <= bp.var < self.ctx.arity or bp.exponent not in (1, -1):
                    raise DiagramError(f"edge {i} carries a malformed base point {bp}")
        for comp in self.components:
            if not any(self.edges[e].base_points for e in comp):
                raise DiagramError(f"{self.name}: a link component carries no base point")
        V, E, F = len(self.crossings), len(self.edges), len(self.faces)
        pieces = self.graph_pieces()
        if V - E + F != 2 * pieces:
            raise DiagramError(f"{self.name}: rotation system is not planar (V-E+F={V - E + F})")
        unbounded = [f for f in self.faces if not f.bounded]
        if len(unbounded) != pieces:
            raise DiagramError(f"{self.name}: {len(unbounded)} outer faces for {pieces} pieces")

    def graph_pieces(self) -> int:
        """Connected components of the projection as a graph (not link components)."""
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            parent[find(e.tail[0])] = find(e.head[0])
        return len({find(x) for x in range(len(self.crossings))})

    def euler_characteristic(self) -> int:
        """V - E + F counting the plane's unbounded region once; 1 + graph_pieces()."""
        return len(self.crossings) - len(self.edges) + len(self.bounded_faces()) + 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "variables": list(self.ctx.names),
            "crossings": [
                {"label": c.label, "grading": c.grading, "incoming": list(c.incoming),
                 "positive_quadrants": list(c.positive)}
                for c in self.crossings
            ],
            "edges": [
                {"tail": [self.crossings[e.tail[0]].label, e.tail[1]],
                 "head": [self.crossings[e.head[0]].label, e.head[1]],
                 "base_points": [[self.ctx.names[b.var], b.exponent] for b in e.base_points]}
                for e in self.edges
            ],
            "faces": [
                {"bounded": f.bounded,
                 "corners": [[self.crossings[c].label, q] for c, q in f.corners]}
                for f in self.faces
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _slot_map(crossings, edges) -> dict:
    slot_edge = {}
    for i, e in enumerate(edges):
        for end, is_tail in ((e.tail, True), (e.head, False)):
            if end in slot_edge:
                raise DiagramError(f"slot {end} is used twice")
            slot_edge[end] = (i, is_tail)
    for c in range(len(crossings)):
        for s in range(4):
            if (c, s) not in slot_edge:
                raise DiagramError(f"slot {s} of {crossings[c].label} is unattached")
    return slot_edge


def _components(d: LagrangianDiagram) -> tuple:
    """Edge sets of the link components, following each strand through crossings."""
    seen = set()
    comps = []
    for start in range(len(d.edges)):
        if start in seen:
            continue
        comp = []
        e = start
        while e not in seen:
            seen.add(e)
            comp.append(e)
            c, s = d.edges[e].head
            e, _ = d.slot_edge[(c, (s + 2) % 4)]
        comps.append(tuple(comp))
    return tuple(comps)


def _trace_faces(d: LagrangianDiagram) -> tuple:
    # keep the face on the left: on arriving at slot k, leave by slot k - 1
    unvisited = {(e, fwd) for e in range(len(d.edges)) for fwd in (True, False)}
    order = sorted(unvisited, key=lambda x: (x[0], not x[1]))
    faces = []
    for start in order:
        if start not in unvisited:
            continue
        darts, corners = [], []
        dart = start
        while True:
            unvisited.discard(dart)
            darts.append(dart)
            c, k = d.dart_end(dart)
            q = (k - 1) % 4
            corners.append((c, q))
            dart = d.departing_dart(c, q)
            if dart == start:
                break
            if dart not in unvisited:
                raise DiagramError("inconsistent rotation system: face walk does not close")
        bounded = not any(cq in d.outer_quadrants for cq in corners)
        faces.append(Face(len(faces), tuple(darts), tuple(corners), bounded))
    return tuple(faces)


def build_band(n: int, pinched: Iterable[int] = (), name: str | None = None) -> LagrangianDiagram:
    """The (2, n) torus diagram with the crossings in ``pinched`` resolved.

    Unpinched crossings keep their labels ``b<k>``; the right-cusp crossings are
    ``a1`` (upper, carrying the base point ``s0`` on its kink) and ``a2``.  A
    pinched crossing ``k`` leaves the variable ``s<k>`` on the upper strand and
    its inverse on the lower strand.
    """
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    pinched = sorted(set(pinched))
    if any(not 1 <= k <= n for k in pinched):
        raise UsageError(f"pinched crossings {pinched} out of range 1..{n}")
    live = [k for k in range(1, n + 1) if k not in pinched]
    ctx = VariableContext(("s0",) + tuple(f"s{k}" for k in pinched))

    crossings = [Crossing(f"b{k}", 0, incoming=(1, 2)) for k in live]
    a1, a2 = len(crossings), len(crossings) + 1
    crossings.append(Crossing("a1", 1, incoming=(2, 3)))
    crossings.append(Crossing("a2", 1, incoming=(1, 0)))
    index = {k: i for i, k in enumerate(live)}

    edges = [
        Edge((a1, 0), (a1, 3), (BasePoint(0, 1),)),  # kink at a1, traversed clockwise
        Edge((a2, 3), (a2, 0)),  # kink at a2, traversed counterclockwise
    ]

    def track(source, sink, in_slot, out_slot, sign):
        pending = []
        for k in range(1, n + 1):
            if k in index:
                edges.append(Edge(source, (index[k], in_slot), tuple(pending)))
                source, pending = (index[k], out_slot), []
            else:
                pending.append(BasePoint(ctx.index(f"s{k}"), sign))
        edges.append(Edge(source, sink, tuple(pending)))

    # upper: leaves a1 to the upper left, around the left cap, then rightwards
    track((a1, 1), (a1, 2), in_slot=1, out_slot=0, sign=1)
    # lower: leaves a2 to the lower left, around the left cap, then rightwards
    track((a2, 2), (a2, 1), in_slot=2, out_slot=3, sign=-1)

    if name is None:
        name = f"torus(2,{n})" if not pinched else f"torus(2,{n}) pinched at {pinched}"
    return LagrangianDiagram(
        name=name,
        crossings=tuple(crossings),
        edges=tuple(edges),
        ctx=ctx,
        outer_quadrants=frozenset({(a1, 0), (a2, 2)}),
    )


def build_torus_2n(n: int) -> LagrangianDiagram:
    if n < 1 or n % 2 == 0:
        raise UsageError(f"build_torus_2n needs a positive odd n, got {n}")
    return build_band(n)


def build_final_unknot(n: int) -> LagrangianDiagram:
    """The diagram left after pinching every degree-0 crossing: two kinked unknots."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    return build_band(n, range(1, n + 1), name=f"final unlink (n={n})")
