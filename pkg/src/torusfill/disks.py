"""Rigid disk enumeration and the Chekanov-Eliashberg differential.

Disks are unions of bounded faces (each face used at most once).  A union is
an admissible immersed-free disk when it is connected with Euler
characteristic 1 and, at every crossing it touches, it covers exactly one
quadrant (a corner) or two adjacent quadrants (the boundary runs straight
through) or all four (an interior point).  Exactly one corner may be
positive; the negative corners, read counterclockwise from it, form the word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .algebra import AlgebraElement, extend_derivation
from .diagram import LagrangianDiagram
from .errors import DGAError
from .laurent import VariableContext

_ADMISSIBLE = {0b0000, 0b0001, 0b0010, 0b0100, 0b1000,
               0b0011, 0b0110, 0b1100, 0b1001, 0b1111}


@dataclass(frozen=True)
class DiskClass:
    positive_corner: str
    negative_word: tuple
    weight: tuple
    faces: frozenset

    def rigidity(self, gradings: Mapping[str, int]) -> int:
        """Moduli dimension; zero for a rigid disk."""
        return gradings[self.positive_corner] - sum(gradings[b] for b in self.negative_word) - 1


@lru_cache(maxsize=64)
def all_disks(d: LagrangianDiagram) -> tuple:
    """Every embedded disk with one positive corner, regardless of grading."""
    faces = d.bounded_faces()
    m = len(faces)
    pos = {f.index: i for i, f in enumerate(faces)}
    dart_face = d.dart_face()

    corner_bits = []
    neighbours = []
    edge_sets = []
    for f in faces:
        bits: dict = {}
        for c, q in f.corners:
            bits[c] = bits.get(c, 0) | (1 << q)
        corner_bits.append(bits)
        nb = 0
        for e, fwd in f.darts:
            other = dart_face[(e, not fwd)]
            if other in pos:
                nb |= 1 << pos[other]
        neighbours.append(nb)
        edge_sets.append({e for e, _ in f.darts})

    disks = []
    for mask in range(1, 1 << m):
        members = [i for i in range(m) if mask >> i & 1]
        # connectivity
        reach = 1 << members[0]
        frontier = reach
        while frontier:
            grow = 0
            i = 0
            f = frontier
            while f:
                if f & 1:
                    grow |= neighbours[i]
                f >>= 1
                i += 1
            grow &= mask & ~reach
            reach |= grow
            frontier = grow
        if reach != mask:
            continue

        cover: dict = {}
        for i in members:
            for c, b in corner_bits[i].items():
                cover[c] = cover.get(c, 0) | b
        if any(b not in _ADMISSIBLE for b in cover.values()):
            continue
        corners = [(c, b.bit_length() - 1) for c, b in cover.items() if b & (b - 1) == 0]
        positives = [(c, q) for c, q in corners if d.crossings[c].quadrant_sign(q) > 0]
        if len(positives) != 1:
            continue

        edges = set().union(*(edge_sets[i] for i in members))
        if len(cover) - len(edges) + len(members) != 1:
            continue

        in_u = {faces[i].index for i in members}
        word, weight = _walk_boundary(d, positives[0], cover, in_u, dart_face)
        c0 = positives[0][0]
        disks.append(DiskClass(d.crossings[c0].label, word, tuple(weight),
                               frozenset(faces[i].index for i in members)))
    return tuple(disks)


def _walk_boundary(d, start_corner, cover, in_u, dart_face):
    c0, q0 = start_corner
    start = d.departing_dart(c0, q0)
    boundary = {dart for dart, f in dart_face.items()
                if f in in_u and dart_face[(dart[0], not dart[1])] not in in_u}
    weight = [0] * d.ctx.arity
    word = []
    dart = start
    walked = set()
    while True:
        if dart not in boundary or dart in walked:
            raise DGAError(f"boundary walk from {d.crossings[c0].label} left the disk boundary")
        walked.add(dart)
        for i, e in enumerate(d.dart_weight(dart)):
            weight[i] += e
        c, k = d.dart_end(dart)
        bits = cover[c]
        assert bits >> ((k - 1) % 4) & 1
        if bits >> ((k - 2) % 4) & 1:
            out = (k - 2) % 4
        else:
            out = (k - 1) % 4
            if (c, out) != (c0, q0):
                if d.crossings[c].quadrant_sign(out) > 0:
                    raise DGAError("second positive corner met on boundary walk")
                word.append(d.crossings[c].label)
        dart = d.departing_dart(c, out)
        if dart == start:
            break
    if walked != boundary:
        raise DGAError("disk boundary is not a single closed walk")
    return tuple(word), weight


def enumerate_rigid_disks(d: LagrangianDiagram, a: str) -> list:
    d.crossing_index(a)
    gradings = {c.label: c.grading for c in d.crossings}
    return [u for u in all_disks(d) if u.positive_corner == a and u.rigidity(gradings) == 0]


@dataclass(frozen=True)
class DGA:
    chords: tuple
    ctx: VariableContext
    differential: dict = field(hash=False)

    def d(self, x: AlgebraElement) -> AlgebraElement:
        return extend_derivation(self.differential, x)

    def generator(self, label: str) -> AlgebraElement:
        return AlgebraElement.generator(self.ctx, self.chords, label)

    def __str__(self) -> str:
        return "\n".join(f"d({c.label}) = {self.differential[c.label]}" for c in self.chords)

    def to_json(self) -> dict:
        return {
            "variables": list(self.ctx.names),
            "chords": [{"label": c.label, "grading": c.grading} for c in self.chords],
            "differential": {c.label: self.differential[c.label].to_json() for c in self.chords},
        }


@dataclass
class DGACheck:
    passed: bool
    failures: list

    def __bool__(self):
        return self.passed


def check_dga(g: DGA) -> DGACheck:
    failures = []
    for c in g.chords:
        dc = g.differential[c.label]
        bad = sorted(gr for gr in dc.gradings() if gr != c.grading - 1)
        if bad:
            failures.append(f"d({c.label}) has terms of degree {bad}, expected {c.grading - 1}")
        dd = g.d(dc)
        if not dd.is_zero():
            failures.append(f"d(d({c.label})) = {dd}")
    return DGACheck(not failures, failures)


def differential(d: LagrangianDiagram) -> DGA:
    alphabet = d.alphabet
    gradings = {c.label: c.grading for c in alphabet}
    diff = {}
    for c in alphabet:
        terms = []
        for u in enumerate_rigid_disks(d, c.label):
            assert u.rigidity(gradings) == 0
            terms.append((u.weight, [d.crossing_index(b) for b in u.negative_word]))
        # crossings and alphabet share one order, so crossing indices are word letters
        diff[c.label] = AlgebraElement(d.ctx, alphabet, terms)
    g = DGA(alphabet, d.ctx, diff)
    report = check_dga(g)
    if not report:
        raise DGAError(f"{d.name}: " + "; ".join(report.failures))
    return g
