"""Invariant vectors, the commuting-pinch relation and the Catalan classification."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np
import sympy

from .errors import DGAError, ResourceGuardError, UsageError
from .filling import (Augmentation, Permutation, closed_form_augmentation, lift_even,
                      s_set)
from .diagram import build_torus_2n
from .laurent import LaurentPoly, substitute

MAX_N = 10


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def invariant_vector(sigma: Permutation) -> tuple:
    return tuple(len(s_set(sigma, i)) + 1 for i in range(1, sigma.n + 1))


def equivalent(s1: Permutation, s2: Permutation) -> bool:
    if s1.n != s2.n:
        raise UsageError(f"permutations of different sizes: {s1.n} and {s2.n}")
    return invariant_vector(s1) == invariant_vector(s2)


def relation_neighbors(sigma: Permutation) -> set:
    """Permutations one legal adjacent swap away."""
    seq = sigma.seq
    out = set()
    for p in range(len(seq) - 1):
        i, j = sorted(seq[p:p + 2])
        if any(i < k < j for k in seq[p + 2:]):
            swapped = list(seq)
            swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
            out.add(Permutation(tuple(swapped)))
    return out


def bfs_partition(n: int) -> set:
    """Orbits of the relation, found by breadth-first search.  Test oracle only."""
    seen = set()
    blocks = set()
    for p in permutations(range(1, n + 1)):
        start = Permutation(p)
        if start in seen:
            continue
        block = {start}
        queue = deque([start])
        while queue:
            for nb in relation_neighbors(queue.popleft()):
                if nb not in block:
                    block.add(nb)
                    queue.append(nb)
        seen |= block
        blocks.add(frozenset(block))
    return blocks


def invariant_partition(n: int) -> set:
    buckets: dict = {}
    for p in permutations(range(1, n + 1)):
        sigma = Permutation(p)
        buckets.setdefault(invariant_vector(sigma), set()).add(sigma)
    return {frozenset(b) for b in buckets.values()}


# --- vectorised bucketing -------------------------------------------------


def permutation_array(n: int) -> np.ndarray:
    """All permutations of 0..n-1 as rows, in lexicographic order."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, n + 1):
        blocks = []
        for first in range(m):
            rest = perms + (perms >= first)
            col = np.full((len(perms), 1), first, dtype=np.int8)
            blocks.append(np.hstack([col, rest.astype(np.int8)]))
        perms = np.vstack(blocks)
    return perms


def invariant_array(perms: np.ndarray) -> np.ndarray:
    """Row-wise C vectors for a block of 0-based permutations."""
    rows, n = perms.shape
    pos = np.empty_like(perms)
    pos[np.arange(rows)[:, None], perms] = np.arange(n, dtype=perms.dtype)
    counts = np.ones((rows, n), dtype=np.int8)
    for i in range(n):
        for direction in (range(i + 1, n), range(i - 1, -1, -1)):
            # j counts iff it was pinched before i and after everything between them
            barrier = np.full(rows, -1, dtype=np.int8)
            for j in direction:
                q = pos[:, j]
                counts[:, i] += (q > barrier) & (q < pos[:, i])
                np.maximum(barrier, q, out=barrier)
    return counts


def lifted_invariant_array(counts: np.ndarray) -> np.ndarray:
    """C vectors of the lifted permutations, by the transport formula."""
    out = np.hstack([counts, np.ones((len(counts), 1), dtype=counts.dtype)])
    out[:, -2] += 1
    return out


def _keys(counts: np.ndarray) -> np.ndarray:
    width = max(int(counts.max()).bit_length(), 1)
    if width * counts.shape[1] > 63:
        _, keys = np.unique(counts, axis=0, return_inverse=True)
        return keys.ravel()
    keys = np.zeros(len(counts), dtype=np.int64)
    for col in range(counts.shape[1]):
        keys = (keys << width) | counts[:, col].astype(np.int64)
    return keys


@dataclass
class ClassRecord:
    rep: Permutation
    C: tuple
    aug: Augmentation | None = None
    lifted: Permutation | None = None
    lifted_C: tuple | None = None

    def to_json(self) -> dict:
        out = {"rep": list(self.rep.seq), "C": list(self.C),
               "aug": self.aug.to_json() if self.aug is not None else None}
        if self.lifted is not None:
            out["lifted"] = list(self.lifted.seq)
            out["lifted_C"] = list(self.lifted_C)
        return out


@dataclass
class ClassReport:
    n: int
    classes: list
    catalan: int = field(init=False)
    augmentations_distinct: bool | None = None

    def __post_init__(self):
        self.catalan = catalan(self.n)

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def passed(self) -> bool:
        return self.count == self.catalan and self.augmentations_distinct is not False

    def summary(self) -> str:
        return f"{self.count} classes (Catalan C_{self.n} = {self.catalan})"

    def to_json(self) -> dict:
        return {"n": self.n, "catalan": self.catalan,
                "classes": [c.to_json() for c in self.classes]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data) -> "ClassReport":
        records = []
        for c in data["classes"]:
            aug = Augmentation.from_json(c["aug"]) if c.get("aug") is not None else None
            rec = ClassRecord(Permutation(tuple(c["rep"])), tuple(c["C"]), aug)
            if "lifted" in c:
                rec.lifted = Permutation(tuple(c["lifted"]))
                rec.lifted_C = tuple(c["lifted_C"])
            records.append(rec)
        report = cls(int(data["n"]), records)
        if report.catalan != data["catalan"]:
            raise UsageError("catalan field does not match n")
        return report


def enumerate_classes(n: int, force: bool = False, with_augmentations: bool = True) -> ClassReport:
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    if n > MAX_N and not force:
        raise ResourceGuardError(f"n={n} means {math.factorial(n)} permutations; pass force to run")
    perms = permutation_array(n)
    counts = invariant_array(perms)
    even = n % 2 == 0
    keyed = lifted_invariant_array(counts) if even else counts
    _, first = np.unique(_keys(keyed), return_index=True)
    first.sort()  # rows are in lex order, so this orders classes by representative

    classes = []
    for row in first:
        rep = Permutation(tuple(int(v) + 1 for v in perms[row]))
        rec = ClassRecord(rep, tuple(int(c) for c in counts[row]))
        if even:
            rec.lifted = lift_even(rep)
            rec.lifted_C = tuple(int(c) for c in keyed[row])
        elif with_augmentations:
            rec.aug = closed_form_augmentation(rep)
        classes.append(rec)

    report = ClassReport(n, classes)
    if with_augmentations and not even:
        report.augmentations_distinct = len({c.aug for c in classes}) == len(classes)
    return report


# --- distinctness ---------------------------------------------------------


@dataclass
class DistinctnessReport:
    n: int
    classes: int
    pairs: int
    invariant_collisions: list
    term_count_collisions: list
    term_count_mismatches: list

    @property
    def passed(self) -> bool:
        return not (self.invariant_collisions or self.term_count_collisions
                    or self.term_count_mismatches)

    def summary(self) -> str:
        verdict = "all separated" if self.passed else "VIOLATIONS"
        return (f"{self.classes} classes, {self.pairs} pairs, {verdict} "
                f"({len(self.invariant_collisions)} C collisions, "
                f"{len(self.term_count_collisions)} term-count collisions)")


def assert_nonnegative_gradings(n: int) -> None:
    """Homotopic augmentations are equal only when no chord has negative degree."""
    d = build_torus_2n(n)
    neg = [c.label for c in d.crossings if c.grading < 0]
    if neg:
        raise DGAError(f"negative-degree chords {neg}: equality no longer decides homotopy")


def _collisions(items) -> list:
    groups: dict = {}
    for rep, key in items:
        groups.setdefault(key, []).append(rep)
    return [tuple(g) for g in groups.values() if len(g) > 1]


def distinctness_report(n: int) -> DistinctnessReport:
    if n % 2 == 0 or not 1 <= n <= 9:
        raise UsageError(f"distinctness is checked for odd n <= 9, got {n}")
    assert_nonnegative_gradings(n)
    report = enumerate_classes(n)
    recs = report.classes
    mismatches = [r.rep for r in recs if r.aug.term_counts() != r.C]
    return DistinctnessReport(
        n=n,
        classes=len(recs),
        pairs=len(recs) * (len(recs) - 1) // 2,
        invariant_collisions=_collisions((r.rep, r.C) for r in recs),
        term_count_collisions=_collisions((r.rep, r.aug.term_counts()) for r in recs),
        term_count_mismatches=mismatches,
    )


def class_uniformity(n: int) -> list:
    """Permutations whose augmentation differs from their class representative's."""
    reps: dict = {}
    bad = []
    for p in permutations(range(1, n + 1)):
        sigma = Permutation(p)
        aug = closed_form_augmentation(sigma)
        key = invariant_vector(sigma)
        if key not in reps:
            reps[key] = aug
        elif reps[key] != aug:
            bad.append(sigma)
    return bad


def distinct_pairs(augs) -> bool:
    return all(a != b for a, b in combinations(augs, 2))


# --- basis change ---------------------------------------------------------


def apply_basis_change(eps: Augmentation, M) -> Augmentation:
    """Apply the automorphism s_i -> prod_j s_j^M[j][i] of the coefficient ring."""
    k = eps.ctx.arity
    mat = sympy.Matrix(M)
    if mat.shape != (k, k):
        raise UsageError(f"basis change must be {k}x{k}, got {mat.shape[0]}x{mat.shape[1]}")
    if any(not x.is_integer for x in mat):
        raise UsageError("basis change must have integer entries")
    if abs(mat.det()) != 1:
        raise UsageError(f"basis change has determinant {mat.det()}, not unimodular")
    images = {i: LaurentPoly.monomial(eps.ctx, [int(mat[j, i]) for j in range(k)])
              for i in range(k)}
    new = {label: substitute(p, images, eps.ctx) for label, p in eps.images.items()}
    return Augmentation(eps.n, eps.sigma, eps.ctx, new)
