import json
from itertools import permutations

import numpy as np
import pytest

from torusfill.classify import (ClassReport, apply_basis_change, bfs_partition, catalan,
                                class_uniformity, distinctness_report, enumerate_classes,
                                equivalent, invariant_array, invariant_partition,
                                invariant_vector, lifted_invariant_array, permutation_array,
                                relation_neighbors)
from torusfill.errors import ResourceGuardError, UsageError
from torusfill.filling import Permutation, closed_form_augmentation, filling_context, lift_even
from torusfill.laurent import LaurentPoly

S = Permutation

C3 = {(1, 2, 3): (1, 2, 2), (1, 3, 2): (1, 3, 1), (2, 1, 3): (2, 1, 3),
      (2, 3, 1): (3, 1, 2), (3, 2, 1): (2, 2, 1)}


@pytest.mark.parametrize("rep", sorted(C3))
def test_invariant_vectors_n3(rep):
    assert invariant_vector(S(rep)) == C3[rep]


def test_first_pinch_has_count_one():
    for p in permutations(range(1, 6)):
        assert invariant_vector(S(p))[p[0] - 1] == 1


def test_equivalence():
    assert equivalent(S((1, 3, 2)), S((3, 1, 2)))
    assert not equivalent(S((1, 2, 3)), S((2, 1, 3)))
    assert equivalent(S((2, 1)), S((2, 1)))
    with pytest.raises(UsageError):
        equivalent(S((1, 2)), S((1, 2, 3)))


def test_relation_neighbors():
    assert relation_neighbors(S((1, 3, 2))) == {S((3, 1, 2))}
    assert relation_neighbors(S((1, 2, 3))) == set()
    for p in permutations(range(1, 6)):
        for q in relation_neighbors(S(p)):
            assert S(p) in relation_neighbors(q)


def test_bfs_orbit_of_132():
    blocks = bfs_partition(3)
    assert frozenset({S((1, 3, 2)), S((3, 1, 2))}) in blocks
    assert len(blocks) == 5


@pytest.mark.parametrize("n", range(1, 7))
def test_bfs_partition_equals_invariant_partition(n):
    assert bfs_partition(n) == invariant_partition(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_vectorised_invariants_match_scalar(n):
    perms = permutation_array(n)
    lex = [tuple(int(v) + 1 for v in row) for row in perms]
    assert lex == list(permutations(range(1, n + 1)))
    counts = invariant_array(perms)
    for row, p in zip(counts, lex):
        assert tuple(int(c) for c in row) == invariant_vector(S(p))


@pytest.mark.parametrize("n", [2, 4, 6])
def test_lift_transport_formula(n):
    perms = permutation_array(n)
    lifted = lifted_invariant_array(invariant_array(perms))
    for row, p in zip(lifted, perms):
        direct = invariant_vector(lift_even(S(tuple(int(v) + 1 for v in p))))
        assert tuple(int(c) for c in row) == direct


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132), (7, 429)])
def test_catalan_counts(n, count):
    assert catalan(n) == count
    report = enumerate_classes(n)
    assert report.count == count
    assert report.passed


def test_class_report_n3():
    report = enumerate_classes(3)
    assert [r.rep.seq for r in report.classes] == sorted(C3)
    assert [r.C for r in report.classes] == [C3[k] for k in sorted(C3)]
    assert report.summary() == "5 classes (Catalan C_3 = 5)"
    assert report.augmentations_distinct


def test_even_report_carries_lifts():
    report = enumerate_classes(2)
    assert [(r.rep.seq, r.lifted.seq, r.lifted_C) for r in report.classes] == [
        ((1, 2), (3, 1, 2), (1, 3, 1)),
        ((2, 1), (3, 2, 1), (2, 2, 1)),
    ]
    assert all(r.aug is None for r in report.classes)


def test_class_report_json_round_trip():
    report = enumerate_classes(3)
    text = report.dumps()
    back = ClassReport.from_json(json.loads(text))
    assert back.dumps() == text


def test_resource_guard():
    with pytest.raises(ResourceGuardError):
        enumerate_classes(11)
    with pytest.raises(UsageError):
        enumerate_classes(0)


@pytest.mark.parametrize("n", [3, 5])
def test_distinctness(n):
    report = distinctness_report(n)
    assert report.passed
    assert report.pairs == catalan(n) * (catalan(n) - 1) // 2


def test_distinctness_needs_odd_n():
    with pytest.raises(UsageError):
        distinctness_report(4)


@pytest.mark.parametrize("n", [3, 5])
def test_one_augmentation_per_class(n):
    assert class_uniformity(n) == []


def test_basis_change_identity_and_swap():
    eps = closed_form_augmentation(S((1, 2, 3)))
    assert apply_basis_change(eps, [[1, 0], [0, 1]]) == eps
    swapped = apply_basis_change(eps, [[0, 1], [1, 0]])
    assert swapped.images["b2"] == LaurentPoly.parse("s1 + s2^-1", filling_context(3))


def test_basis_change_rejects_non_unimodular():
    eps = closed_form_augmentation(S((1, 2, 3)))
    with pytest.raises(UsageError):
        apply_basis_change(eps, [[2, 0], [0, 1]])
    with pytest.raises(UsageError):
        apply_basis_change(eps, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_basis_change_keeps_term_counts():
    rng = np.random.default_rng(7)
    for p in permutations(range(1, 6)):
        eps = closed_form_augmentation(S(p))
        # random product of elementary matrices
        m = np.eye(4, dtype=int)
        for _ in range(6):
            i, j = rng.choice(4, size=2, replace=False)
            e = np.eye(4, dtype=int)
            e[i, j] = rng.integers(-2, 3)
            m = m @ e
        assert apply_basis_change(eps, m.tolist()).term_counts() == eps.term_counts()
