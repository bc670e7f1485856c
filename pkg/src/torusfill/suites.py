"""Verification suites shared by the ``verify`` command and the acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .classify import (bfs_partition, catalan, class_uniformity, distinctness_report,
                       enumerate_classes, invariant_partition, invariant_vector)
from .diagram import build_final_unknot, build_torus_2n
from .disks import check_dga, differential
from .filling import (Permutation, augmentation_by_pinching, closed_form_augmentation,
                      lift_even)
from .algebra import AlgebraElement
from .laurent import LaurentPoly

EXHAUSTIVE_MAX = 7
SAMPLE_SIZE = 1000
SEED = 20240601


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def permutations_for(n: int, sample: int = SAMPLE_SIZE, seed: int = SEED) -> list:
    """Every permutation for small n, otherwise a seeded sample."""
    if n <= EXHAUSTIVE_MAX:
        return [Permutation(p) for p in permutations(range(1, n + 1))]
    rng = random.Random(seed)
    out = []
    for _ in range(sample):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        out.append(Permutation(tuple(p)))
    return out


def expected_final_differential(n: int) -> dict:
    d = build_final_unknot(n)
    ctx, alphabet = d.ctx, d.alphabet
    prod = LaurentPoly.monomial(ctx, [0] + [1] * n)
    return {
        "a1": AlgebraElement.scalar(prod + LaurentPoly.var(ctx, "s0", -1), alphabet),
        "a2": AlgebraElement.scalar(prod + LaurentPoly.one(ctx), alphabet),
    }


def dga_suite(n: int) -> SuiteResult:
    g = differential(build_torus_2n(n))
    report = check_dga(g)
    return SuiteResult(f"d^2 = 0 and degree -1 on torus(2,{n})", report.passed,
                       "; ".join(report.failures))


def final_unknot_suite(n: int) -> SuiteResult:
    g = differential(build_final_unknot(n))
    want = expected_final_differential(n)
    bad = [a for a in ("a1", "a2") if g.differential[a] != want[a]]
    return SuiteResult(f"final unlink differential, n={n}", not bad,
                       ", ".join(f"d({a}) = {g.differential[a]}" for a in bad))


def augmentation_suite(n: int, sigmas=None) -> SuiteResult:
    """epsilon o d = 0, closed form = pinching, term counts = C."""
    sigmas = permutations_for(n) if sigmas is None else sigmas
    g = differential(build_torus_2n(n))
    da = [g.differential["a1"], g.differential["a2"]]
    failures = []
    for sigma in sigmas:
        closed = closed_form_augmentation(sigma)
        if closed != augmentation_by_pinching(sigma):
            failures.append(f"{sigma}: closed form differs from pinching")
        if any(not closed(x).is_zero() for x in da):
            failures.append(f"{sigma}: e o d != 0")
        if closed.term_counts() != invariant_vector(sigma):
            failures.append(f"{sigma}: term counts {closed.term_counts()} != C")
    how = "all" if n <= EXHAUSTIVE_MAX else "sampled"
    detail = f"{len(sigmas)} permutations ({how})"
    if failures:
        detail += "; " + "; ".join(failures[:5])
    return SuiteResult(f"augmentation properties, n={n}", not failures, detail)


def catalan_suite(n: int, force: bool = False) -> SuiteResult:
    report = enumerate_classes(n, force=force)
    return SuiteResult(f"class count, n={n}", report.passed, report.summary())


def distinctness_suite(n: int) -> SuiteResult:
    report = distinctness_report(n)
    return SuiteResult(f"distinct augmentations, n={n}", report.passed, report.summary())


def uniformity_suite(n: int) -> SuiteResult:
    bad = class_uniformity(n)
    return SuiteResult(f"one augmentation per class, n={n}", not bad,
                       f"{len(bad)} permutations disagree with their class")


def relation_suite(n: int) -> SuiteResult:
    same = bfs_partition(n) == invariant_partition(n)
    return SuiteResult(f"relation orbits = invariant classes, n={n}", same)


def lift_suite(n: int) -> SuiteResult:
    """Transport of C under lift_even, and injectivity on classes."""
    failures = []
    classes_seen = {}
    for sigma in permutations_for(n):
        c = invariant_vector(sigma)
        lifted = lift_even(sigma)
        cl = invariant_vector(lifted)
        want = c[:-1] + (c[-1] + 1, 1)
        if cl != want:
            failures.append(f"{sigma}: lifted C {cl}, expected {want}")
        prev = classes_seen.setdefault(cl, c)
        if prev != c:
            failures.append(f"{sigma}: lift merges classes {prev} and {c}")
    count = len(classes_seen)
    if n <= EXHAUSTIVE_MAX and count != catalan(n):
        failures.append(f"{count} lifted classes, expected {catalan(n)}")
    return SuiteResult(f"even-n lift, n={n}", not failures,
                       f"{count} lifted classes" + ("; " + "; ".join(failures[:5]) if failures else ""))


def verify_all(n: int, force: bool = False) -> list:
    results = []
    if n % 2:
        results.append(dga_suite(n))
    if n <= 8:
        results.append(final_unknot_suite(n))
    if n % 2:
        results.append(augmentation_suite(n))
    results.append(catalan_suite(n, force=force))
    if n % 2 and n <= 9:
        results.append(distinctness_suite(n))
    if n <= EXHAUSTIVE_MAX:
        results.append(relation_suite(n))
        if n % 2:
            results.append(uniformity_suite(n))
    if n % 2 == 0:
        results.append(lift_suite(n))
    return results
